#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "riemcurv/hermitian.hpp"

using namespace riemcurv;

namespace {

const ExactScalar kSymbolic = ExactScalar::lambda();

ExactScalar pi_pow(long e) { return ExactScalar::pi_power(e); }

// Independent route for the tilde-Delta -> C conversion, via the squared
// coordinates: tilde_Delta_{2m+2p, p}   = pi^(m+p) (m+p)!/((2m)!(2p+1)!)
//                                         xi^2m (eta/lambda - xi^2)^p,
//              tilde_Delta_{2m+2p+1, p} = (pi/2)(pi/4)^(m+p)
//                                         (2m+2p+1)!/((m+p)!(2m+1)!(2p+1)!)
//                                         xi^(2m+1) (eta/lambda - xi^2)^p.
RElement tilde_via_bar_coordinates(unsigned k, unsigned p, long order) {
    unsigned m = (k - 2 * p) / 2;
    const Alphabet& a = Alphabet::xi_eta();
    GradedSeries eta_over_lambda =
        GradedSeries::variable(a, order, "eta")
            .scaled(ExactScalar::lambda_power(HalfInt::whole(-1)));
    GradedSeries xi_sq = GradedSeries::variable(a, order, "xi").pow(2);
    GradedSeries barred = (eta_over_lambda - xi_sq).pow(p);
    GradedSeries xi_front(a, order);
    ExactScalar scale;
    if (k % 2 == 0) {
        xi_front.add_term(Monomial({2 * m, 0}), ExactScalar(1));
        Rat c = factorial(m + p) / (factorial(2 * m) * factorial(2 * p + 1));
        scale = ExactScalar::monomial(c, static_cast<long>(m + p), 0);
    } else {
        xi_front.add_term(Monomial({2 * m + 1, 0}), ExactScalar(1));
        Rat d = factorial(2 * m + 2 * p + 1) /
                (factorial(m + p) * factorial(2 * m + 1) * factorial(2 * p + 1));
        Rat c = d / (Rat(2) * rat_pow(Rat(4), m + p));
        scale = ExactScalar::monomial(c, static_cast<long>(m + p) + 1, 0);
    }
    return RElement(xi_front * barred).scaled(scale);
}

}  // namespace

TEST_CASE("delta and tilde-delta are mutually inverse triangular systems") {
    // top index: only the diagonal term survives
    for (unsigned k = 0; k <= 8; ++k) {
        unsigned top = k / 2;
        HermitianElement e = HermitianElement::basis_element(k, top, HermBasis::Delta, k);
        HermitianElement t = delta_to_tilde(e);
        CHECK(t.coeff(k, top) == ExactScalar(1));
        CHECK(t.render().size() == 1);
    }

    // tilde_Delta_{4,1} expands as Delta_{4,1} + 2 Delta_{4,2}
    HermitianElement t41 = HermitianElement::basis_element(4, 1, HermBasis::TildeDelta, 4);
    HermitianElement d = tilde_to_delta(t41);
    CHECK(d.coeff(4, 1) == ExactScalar(1));
    CHECK(d.coeff(4, 2) == ExactScalar(2));
    CHECK(d.render().size() == 2);

    for (unsigned k = 0; k <= 9; ++k)
        for (unsigned q = 0; 2 * q <= k; ++q) {
            HermitianElement e = HermitianElement::basis_element(k, q, HermBasis::Delta, k);
            CHECK(tilde_to_delta(delta_to_tilde(e)).agrees_with(e));
            HermitianElement f =
                HermitianElement::basis_element(k, q, HermBasis::TildeDelta, k);
            CHECK(delta_to_tilde(tilde_to_delta(f)).agrees_with(f));
        }

    CHECK_THROWS_AS(delta_to_tilde(t41), std::invalid_argument);
}

TEST_CASE("the O and P transforms on single monomials") {
    const Alphabet& ZY = Alphabet::zy();
    GradedSeries one = GradedSeries::constant(ZY, 6, ExactScalar(1));
    CHECK(O_transform(one).coeff(Monomial({0, 0})) == ExactScalar(1));
    CHECK(P_transform(one).coeff(Monomial({0, 0})) == ExactScalar(1));

    GradedSeries z = GradedSeries::variable(ZY, 6, "z");
    CHECK(O_transform(z).coeff(Monomial({1, 0})) ==
          ExactScalar::monomial(make_rat(1, 2), 1, 0));
    CHECK(P_transform(z).coeff(Monomial({1, 0})) ==
          ExactScalar::monomial(make_rat(1, 4), 1, 0));
}

TEST_CASE("generating functions") {
    CHECK(genfun_g(0, 8).coeff(Monomial({0, 0})) == ExactScalar(1));
    CHECK(genfun_h(0, 8).coeff(Monomial({0, 0})) == ExactScalar(1));
    // leading z coefficient of g_k is binom(2k, k)
    for (unsigned k = 1; k <= 4; ++k) {
        CHECK(genfun_g(k, 10).coeff(Monomial({k, 0})) == ExactScalar(binom(2 * k, k)));
        CHECK(genfun_h(k, 10).coeff(Monomial({k, 0})) == ExactScalar(1));
    }
}

TEST_CASE("lipschitz-killing elements through the generating functions") {
    HermitianElement l0 = lk_in_tilde_delta(0, kSymbolic, 8);
    CHECK(l0.coeff(0, 0) == ExactScalar(1));

    HermitianElement l1 = lk_in_tilde_delta(1, kSymbolic, 8);
    CHECK(l1.coeff(1, 0) == ExactScalar(2) * pi_pow(-1));

    // two independent routes into the tilde-Delta basis
    for (unsigned k = 0; k <= 6; ++k)
        CHECK(lk_in_tilde_delta(k, kSymbolic, 10)
                  .agrees_with(tilde_from_C(lk_bar(k, 10), kSymbolic, 10)));

    // also with a numeric curvature
    for (unsigned k = 0; k <= 4; ++k)
        CHECK(lk_in_tilde_delta(k, ExactScalar(make_rat(2, 3)), 8)
                  .agrees_with(tilde_from_C(lk_bar(k, 8), ExactScalar(make_rat(2, 3)), 8)));

    // the generating-function route is regular at lambda = 0
    HermitianElement flat = lk_in_tilde_delta(2, ExactScalar(), 8);
    CHECK(flat.coeff(2, 0) == ExactScalar(2) * pi_pow(-1));
}

TEST_CASE("conversion between the C and tilde-Delta bases") {
    CHECK(tilde_from_C(RElement::basis_element(0, 0, 4), kSymbolic, 4).coeff(0, 0) ==
          ExactScalar(1));

    // C_31 = (8 lambda / pi^2) (tilde_30 + tilde_31)
    HermitianElement c31 = tilde_from_C(RElement::basis_element(3, 1, 3), kSymbolic, 3);
    ExactScalar expected = ExactScalar::monomial(Rat(8), -2, 2);
    CHECK(c31.coeff(3, 0) == expected);
    CHECK(c31.coeff(3, 1) == expected);

    for (unsigned k = 0; k <= 12; ++k)
        for (unsigned q = 0; 2 * q <= k; ++q) {
            HermitianElement e =
                HermitianElement::basis_element(k, q, HermBasis::TildeDelta, k);
            CHECK(tilde_from_C(C_from_tilde(e, kSymbolic, k), kSymbolic, k).agrees_with(e));
            RElement r = RElement::basis_element(k, q, k);
            CHECK(C_from_tilde(tilde_from_C(r, kSymbolic, k), kSymbolic, k).agrees_with(r));
        }

    CHECK_THROWS_AS(tilde_from_C(RElement::basis_element(2, 1, 2), ExactScalar(), 2),
                    MathDomainError);
    CHECK_THROWS_AS(C_from_tilde(HermitianElement::basis_element(
                                     2, 1, HermBasis::TildeDelta, 2),
                                 ExactScalar(), 2),
                    MathDomainError);
}

TEST_CASE("conversion agrees with the squared-coordinate route") {
    for (unsigned k = 0; k <= 9; ++k)
        for (unsigned p = 0; 2 * p <= k; ++p) {
            HermitianElement e =
                HermitianElement::basis_element(k, p, HermBasis::TildeDelta, k);
            CHECK(C_from_tilde(e, kSymbolic, k)
                      .agrees_with(tilde_via_bar_coordinates(k, p, k)));
        }
}

TEST_CASE("conversion matrices are triangular with nonzero diagonal") {
    for (unsigned k = 0; k <= 12; ++k) {
        auto m = c_in_tilde_matrix(k, kSymbolic);
        for (size_t j = 0; j < m.size(); ++j) {
            CHECK_FALSE(m[j][j].is_zero());
            for (size_t p = j + 1; p < m.size(); ++p) CHECK(m[j][p].is_zero());
        }
        // product against the inverse matrix is the identity
        auto inv = tilde_in_c_matrix(k, kSymbolic);
        for (size_t j = 0; j < m.size(); ++j)
            for (size_t i = 0; i < m.size(); ++i) {
                ExactScalar dot;
                for (size_t p = 0; p < m.size(); ++p) dot += m[j][p] * inv[p][i];
                CHECK(dot == (i == j ? ExactScalar(1) : ExactScalar()));
            }
    }
}

TEST_CASE("closed form of the t action") {
    HermitianElement e = HermitianElement::basis_element(0, 0, HermBasis::TildeDelta, 5);
    HermitianElement acted = t_lambda_act_closed(e, kSymbolic, 5);
    CHECK(acted.coeff(1, 0) == ExactScalar(2) * pi_pow(-1));
    CHECK(acted.coeff(3, 0) == ExactScalar::monomial(Rat(1), -2, 2));
    CHECK(acted.coeff(3, 1) == ExactScalar::monomial(Rat(1), -2, 2));
    CHECK(acted.coeff(5, 0) == ExactScalar::monomial(make_rat(3, 2), -3, 4));
    CHECK(acted.coeff(5, 1) == ExactScalar::monomial(make_rat(9, 10), -3, 4));
    CHECK(acted.coeff(5, 2) == ExactScalar::monomial(make_rat(3, 2), -3, 4));

    // output is supported in degrees k + 2l + 1 only
    HermitianElement e21 = HermitianElement::basis_element(2, 1, HermBasis::TildeDelta, 9);
    for (const auto& term : t_lambda_act_closed(e21, kSymbolic, 9).render())
        CHECK((term.k - 3) % 2 == 0);

    CHECK(t_lambda_act_closed(HermitianElement(6, HermBasis::TildeDelta), kSymbolic, 6)
              .is_zero());
}

TEST_CASE("closed form agrees with the route through the C basis") {
    for (unsigned k = 0; k <= 5; ++k)
        for (unsigned p = 0; 2 * p <= k; ++p) {
            long out = static_cast<long>(k) + 7;
            HermitianElement e =
                HermitianElement::basis_element(k, p, HermBasis::TildeDelta, out);
            CHECK(t_lambda_act_closed(e, kSymbolic, out)
                      .agrees_with(t_lambda_act_via_C(e, kSymbolic, out)));
        }
    // and on a mixed element with numeric curvature
    HermitianElement mix(9, HermBasis::TildeDelta);
    mix.add_term(2, 1, ExactScalar(make_rat(3, 7)));
    mix.add_term(4, 0, pi_pow(1));
    mix.add_term(3, 1, ExactScalar(-2));
    ExactScalar lam(make_rat(5, 2));
    CHECK(t_lambda_act_closed(mix, lam, 9).agrees_with(t_lambda_act_via_C(mix, lam, 9)));

    CHECK_THROWS_AS(t_lambda_act_via_C(mix, ExactScalar(), 9), MathDomainError);
}

TEST_CASE("the closed form transports the lipschitz-killing recursion") {
    for (unsigned k = 0; k <= 5; ++k) {
        HermitianElement lhs = t_lambda_act_closed(
            tilde_from_C(lk_bar(k, 10), kSymbolic, 10), kSymbolic, 10);
        CHECK(lhs.agrees_with(tilde_from_C(lk_bar(k + 1, 10), kSymbolic, 10)));
    }
}
