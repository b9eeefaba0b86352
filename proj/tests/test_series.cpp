#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "riemcurv/series.hpp"
#include "riemcurv/series_json.hpp"

using namespace riemcurv;

namespace {

const Alphabet& XE = Alphabet::xi_eta();

GradedSeries xi(long order) { return GradedSeries::variable(XE, order, "xi"); }
GradedSeries eta(long order) { return GradedSeries::variable(XE, order, "eta"); }
GradedSeries one(const Alphabet& a, long order) {
    return GradedSeries::constant(a, order, ExactScalar(1));
}

// simple deterministic generator for property checks
struct Lcg {
    std::uint64_t s = 0x9e3779b97f4a7c15ull;
    long next(long lo, long hi) {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return lo + static_cast<long>((s >> 33) % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

GradedSeries random_series(Lcg& rng, const Alphabet& a, long order, int terms,
                           bool zero_constant = false) {
    GradedSeries s(a, order);
    for (int t = 0; t < terms; ++t) {
        std::vector<unsigned> exps(a.size());
        long budget = order;
        for (size_t i = 0; i < a.size(); ++i) {
            long w = a.var(i).weight;
            exps[i] = static_cast<unsigned>(rng.next(0, std::min(budget / w, 3L)));
            budget -= static_cast<long>(exps[i]) * w;
        }
        if (zero_constant) {
            bool all_zero = true;
            for (unsigned e : exps) all_zero = all_zero && e == 0;
            if (all_zero) exps[0] = 1;
        }
        s.add_term(Monomial(std::move(exps)), ExactScalar(make_rat(rng.next(-9, 9), rng.next(1, 7))));
    }
    return s;
}

}  // namespace

TEST_CASE("addition") {
    GradedSeries f = one(XE, 8) + xi(8);
    CHECK((f + xi(8)).coeff(Monomial({1, 0})) == ExactScalar(2));
    CHECK(f + GradedSeries(XE, 8) == f);
    GradedSeries quarter_eta = eta(8).scaled(make_rat(1, 4));
    CHECK((quarter_eta + (-quarter_eta)).is_zero());
}

TEST_CASE("multiplication") {
    CHECK((xi(8) * xi(8)).coeff(Monomial({2, 0})) == ExactScalar(1));
    Lcg rng;
    GradedSeries f = random_series(rng, XE, 8, 6);
    CHECK(f * one(XE, 8) == f);
    // telescoping: (1 - eta/4) * sum_j (eta/4)^j = 1 up to order
    GradedSeries quarter_eta = eta(12).scaled(make_rat(1, 4));
    GradedSeries geometric = binomial_power(quarter_eta, HalfInt::whole(-1));
    GradedSeries telescoped = binomial_power(quarter_eta, HalfInt::whole(1)) * geometric;
    CHECK(telescoped == one(XE, 12));
}

TEST_CASE("alphabet mismatch is rejected") {
    GradedSeries f(XE, 4);
    GradedSeries g(Alphabet::xyz(), 4);
    CHECK_THROWS_AS(f + g, std::invalid_argument);
    CHECK_THROWS_AS(f * g, std::invalid_argument);
}

TEST_CASE("binomial power reproduces the Maclaurin coefficient tables") {
    const Alphabet& X = Alphabet::univariate_x();
    GradedSeries x = GradedSeries::variable(X, 10, "x");

    GradedSeries half = binomial_power(x, HalfInt::halves(-1));
    GradedSeries three_half = binomial_power(x, HalfInt::halves(-3));
    for (unsigned j = 0; j <= 10; ++j) {
        Rat c = binom(2 * j, j) / rat_pow(Rat(4), j);
        CHECK(half.coeff(Monomial({j})) == ExactScalar(c));
        CHECK(three_half.coeff(Monomial({j})) == ExactScalar(Rat(2 * j + 1) * c));
    }

    CHECK(binomial_power(GradedSeries(X, 6), HalfInt::halves(7)) == one(X, 6));
    CHECK(binomial_power(x, HalfInt::whole(1)) == one(X, 10) - x);
    CHECK_THROWS_AS(binomial_power(one(X, 6), HalfInt::halves(-1)), std::invalid_argument);
}

TEST_CASE("binomial power is multiplicative in the exponent") {
    Lcg rng;
    for (int trial = 0; trial < 6; ++trial) {
        GradedSeries u = random_series(rng, XE, 8, 4, /*zero_constant=*/true);
        HalfInt r = HalfInt::halves(rng.next(-5, 5));
        HalfInt s = HalfInt::halves(rng.next(-5, 5));
        CHECK(binomial_power(u, r) * binomial_power(u, s) == binomial_power(u, r + s));
    }
}

TEST_CASE("substitution") {
    const Alphabet& T = Alphabet::xyz();
    long n = 10;
    GradedSeries quarter_z = GradedSeries::variable(T, n, "z").scaled(make_rat(1, 4));
    GradedSeries x_img =
        GradedSeries::variable(T, n, "x") * binomial_power(quarter_z, HalfInt::halves(-1));
    GradedSeries y_img =
        GradedSeries::variable(T, n, "y") * binomial_power(quarter_z, HalfInt::whole(-1));

    GradedSeries xi_sq = xi(n) * xi(n);
    GradedSeries image = substitute(xi_sq, {{"xi", x_img}, {"eta", y_img}});
    GradedSeries expected = GradedSeries::variable(T, n, "x") *
                            GradedSeries::variable(T, n, "x") *
                            binomial_power(quarter_z, HalfInt::whole(-1));
    CHECK(image == expected);

    // geometric expansion of eta -> y (1 - z/4)^-1
    GradedSeries eta_img = substitute(eta(n), {{"xi", x_img}, {"eta", y_img}});
    CHECK(eta_img.coeff(Monomial({0, 1, 0})) == ExactScalar(1));
    CHECK(eta_img.coeff(Monomial({0, 1, 1})) == ExactScalar(make_rat(1, 4)));
    CHECK(eta_img.coeff(Monomial({0, 1, 2})) == ExactScalar(make_rat(1, 16)));

    // identity substitution
    Lcg rng;
    GradedSeries f = random_series(rng, XE, 8, 5);
    CHECK(substitute(f, {{"xi", xi(8)}, {"eta", eta(8)}}) == f);

    // degree-dropping image is rejected
    CHECK_THROWS_AS(substitute(eta(8), {{"xi", xi(8)}, {"eta", xi(8)}}),
                    std::invalid_argument);
}

TEST_CASE("substitution is a ring homomorphism") {
    Lcg rng;
    const Alphabet& T = Alphabet::xyz();
    long n = 8;
    GradedSeries quarter_z = GradedSeries::variable(T, n, "z").scaled(make_rat(1, 4));
    std::map<std::string, GradedSeries> images{
        {"xi", GradedSeries::variable(T, n, "x") *
                   binomial_power(quarter_z, HalfInt::halves(-1))},
        {"eta", GradedSeries::variable(T, n, "y") *
                    binomial_power(quarter_z, HalfInt::whole(-1))}};
    for (int trial = 0; trial < 6; ++trial) {
        GradedSeries f = random_series(rng, XE, n, 4);
        GradedSeries g = random_series(rng, XE, n, 4);
        CHECK(substitute(f * g, images) == substitute(f, images) * substitute(g, images));
        CHECK(substitute(f + g, images) == substitute(f, images) + substitute(g, images));
    }
}

TEST_CASE("coefficient extraction") {
    GradedSeries geometric =
        binomial_power(eta(12).scaled(make_rat(1, 4)), HalfInt::whole(-1));
    CHECK(geometric.coeff(Monomial({0, 2})) == ExactScalar(make_rat(1, 16)));
    CHECK(geometric.coeff(Monomial({1, 0})).is_zero());
    CHECK(one(XE, 6).coeff(Monomial({0, 0})) == ExactScalar(1));
    CHECK_THROWS_AS(geometric.coeff(Monomial({0, 7})), std::invalid_argument);
}

TEST_CASE("multiplication is associative and commutative up to truncation") {
    Lcg rng;
    for (int trial = 0; trial < 4; ++trial) {
        GradedSeries f = random_series(rng, XE, 9, 5);
        GradedSeries g = random_series(rng, XE, 9, 5);
        GradedSeries h = random_series(rng, XE, 9, 5);
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
    }
}

TEST_CASE("serial and parallel kernels agree") {
    Lcg rng;
    for (int trial = 0; trial < 4; ++trial) {
        GradedSeries f = random_series(rng, Alphabet::xyz(), 14, 40);
        GradedSeries g = random_series(rng, Alphabet::xyz(), 14, 40);
        CHECK(GradedSeries::mul_serial(f, g) == GradedSeries::mul_parallel(f, g));
    }
}

TEST_CASE("derivative") {
    const Alphabet& ZY = Alphabet::zy();
    GradedSeries z = GradedSeries::variable(ZY, 10, "z");
    GradedSeries y = GradedSeries::variable(ZY, 10, "y");
    GradedSeries f = z.pow(3) * y + z.pow(2);
    GradedSeries df = derivative(f, "z");
    CHECK(df.coeff(Monomial({2, 1})) == ExactScalar(3));
    CHECK(df.coeff(Monomial({1, 0})) == ExactScalar(2));
    CHECK(df.order() == 8);

    // Leibniz rule
    Lcg rng;
    GradedSeries a = random_series(rng, ZY, 10, 5);
    GradedSeries b = random_series(rng, ZY, 10, 5);
    CHECK(derivative(a * b, "y") == derivative(a, "y") * b + a * derivative(b, "y"));
}

TEST_CASE("truncation bookkeeping") {
    GradedSeries f = xi(8);
    GradedSeries g = eta(4);
    CHECK((f * g).order() == 4);
    CHECK((f + g).order() == 4);
    CHECK(f.truncated(3).order() == 3);

    // equality is checked through the joint order only
    GradedSeries a = binomial_power(eta(12).scaled(make_rat(1, 4)), HalfInt::whole(-1));
    GradedSeries b = binomial_power(eta(6).scaled(make_rat(1, 4)), HalfInt::whole(-1));
    CHECK(a.agrees_with(b));
    CHECK(a != b);
}

TEST_CASE("json round trip") {
    Lcg rng;
    for (int trial = 0; trial < 5; ++trial) {
        GradedSeries f = random_series(rng, Alphabet::xyz(), 9, 6);
        GradedSeries back = series_from_json(series_to_json(f));
        CHECK(back == f);
    }
    // scalar coefficients with pi and lambda survive the trip
    GradedSeries s(XE, 5);
    s.add_term(Monomial({1, 2}), ExactScalar::monomial(make_rat(-7, 3), 2, -1));
    CHECK(series_from_json(series_to_json(s)) == s);
}
