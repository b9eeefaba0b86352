#include "riemcurv/hermitian.hpp"

namespace riemcurv {

HermitianElement HermitianElement::basis_element(unsigned k, unsigned q, HermBasis basis,
                                                 long order) {
    if (2 * q > k) throw std::invalid_argument("HermitianElement: need 2q <= k");
    HermitianElement e(order, basis);
    e.add_term(k, q, ExactScalar(1));
    return e;
}

void HermitianElement::add_term(unsigned k, unsigned q, const ExactScalar& c) {
    if (2 * q > k) throw std::invalid_argument("HermitianElement: need 2q <= k");
    if (static_cast<long>(k) > order_ || c.is_zero()) return;
    auto key = std::make_pair(k, q);
    auto it = coeffs_.find(key);
    if (it == coeffs_.end()) {
        coeffs_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

ExactScalar HermitianElement::coeff(unsigned k, unsigned q) const {
    if (static_cast<long>(k) > order_)
        throw std::invalid_argument("HermitianElement: degree exceeds truncation order");
    auto it = coeffs_.find({k, q});
    return it == coeffs_.end() ? ExactScalar() : it->second;
}

std::vector<HermTerm> HermitianElement::render() const {
    std::vector<HermTerm> out;
    out.reserve(coeffs_.size());
    for (const auto& [kq, c] : coeffs_) out.push_back({kq.first, kq.second, c});
    return out;
}

HermitianElement HermitianElement::scaled(const ExactScalar& c) const {
    HermitianElement out(order_, basis_);
    for (const auto& [kq, v] : coeffs_) out.add_term(kq.first, kq.second, v * c);
    return out;
}

HermitianElement operator+(const HermitianElement& a, const HermitianElement& b) {
    if (a.basis_ != b.basis_) throw std::invalid_argument("HermitianElement: basis mismatch");
    HermitianElement out(std::min(a.order_, b.order_), a.basis_);
    for (const auto& [kq, v] : a.coeffs_) out.add_term(kq.first, kq.second, v);
    for (const auto& [kq, v] : b.coeffs_) out.add_term(kq.first, kq.second, v);
    return out;
}

HermitianElement operator-(const HermitianElement& a, const HermitianElement& b) {
    if (a.basis_ != b.basis_) throw std::invalid_argument("HermitianElement: basis mismatch");
    HermitianElement out(std::min(a.order_, b.order_), a.basis_);
    for (const auto& [kq, v] : a.coeffs_) out.add_term(kq.first, kq.second, v);
    for (const auto& [kq, v] : b.coeffs_) out.add_term(kq.first, kq.second, -v);
    return out;
}

bool HermitianElement::agrees_with(const HermitianElement& o) const {
    if (basis_ != o.basis_) return false;
    long bound = std::min(order_, o.order_);
    for (const auto& [kq, v] : coeffs_)
        if (static_cast<long>(kq.first) <= bound && !(o.coeff(kq.first, kq.second) == v))
            return false;
    for (const auto& [kq, v] : o.coeffs_)
        if (static_cast<long>(kq.first) <= bound && !(coeff(kq.first, kq.second) == v))
            return false;
    return true;
}

HermitianElement delta_to_tilde(const HermitianElement& e) {
    if (e.basis() != HermBasis::Delta)
        throw std::invalid_argument("delta_to_tilde: element is not in the Delta basis");
    HermitianElement out(e.order(), HermBasis::TildeDelta);
    for (const auto& [kq, v] : e.coeffs()) {
        auto [k, q] = kq;
        for (unsigned l = 0; 2 * (q + l) <= k; ++l) {
            Rat c = binom(q + l, q);
            if (l % 2 == 1) c = -c;
            out.add_term(k, q + l, v * ExactScalar(c));
        }
    }
    return out;
}

HermitianElement tilde_to_delta(const HermitianElement& e) {
    if (e.basis() != HermBasis::TildeDelta)
        throw std::invalid_argument("tilde_to_delta: element is not in the tilde-Delta basis");
    HermitianElement out(e.order(), HermBasis::Delta);
    for (const auto& [kq, v] : e.coeffs()) {
        auto [k, l] = kq;
        for (unsigned j = 0; 2 * (l + j) <= k; ++j)
            out.add_term(k, l + j, v * ExactScalar(binom(l + j, l)));
    }
    return out;
}

namespace {

void require_zy(const GradedSeries& f, const char* who) {
    if (!(f.alphabet() == Alphabet::zy()))
        throw std::invalid_argument(std::string(who) + ": series must live over {z, y}");
}

}  // namespace

GradedSeries O_transform(const GradedSeries& f) {
    require_zy(f, "O_transform");
    return transform_terms(
        f, Alphabet::xib_etab(), f.order(),
        [](const Monomial& mono, const ExactScalar& c) {
            unsigned m = mono[0], p = mono[1];
            Rat factor = binom(m + p, p) /
                         (Rat(2 * p + 1) * binom(2 * p, p) * binom(2 * m, m));
            ExactScalar scale =
                ExactScalar::monomial(factor, static_cast<long>(m + p), 0);
            return std::make_pair(mono, c * scale);
        });
}

GradedSeries P_transform(const GradedSeries& f) {
    require_zy(f, "P_transform");
    return transform_terms(
        f, Alphabet::xib_etab(), f.order(),
        [](const Monomial& mono, const ExactScalar& c) {
            unsigned m = mono[0], p = mono[1];
            Rat factor = Rat(2 * (m + p) + 1) * binom(2 * (m + p), m + p) * binom(m + p, p) /
                         (Rat(2 * m + 1) * Rat(2 * p + 1) * binom(2 * m, m) * binom(2 * p, p));
            factor /= rat_pow(Rat(4), static_cast<long>(m + p));
            ExactScalar scale =
                ExactScalar::monomial(factor, static_cast<long>(m + p), 0);
            return std::make_pair(mono, c * scale);
        });
}

namespace {

GradedSeries one_minus_4var_pow(long order, const std::string& var, HalfInt r) {
    GradedSeries four_v = GradedSeries::variable(Alphabet::zy(), order, var).scaled(Rat(4));
    return binomial_power(four_v, r);
}

}  // namespace

GradedSeries genfun_g(unsigned k, long order) {
    GradedSeries z_k(Alphabet::zy(), order);
    z_k.add_term(Monomial({k, 0}), ExactScalar(binom(2 * k, k)));
    return z_k * one_minus_4var_pow(order, "z", HalfInt::halves(-2 * static_cast<long>(k) - 1)) *
           one_minus_4var_pow(order, "y", HalfInt::halves(-3));
}

GradedSeries genfun_h(unsigned k, long order) {
    GradedSeries z_k(Alphabet::zy(), order);
    z_k.add_term(Monomial({k, 0}), ExactScalar(1));
    return z_k * one_minus_4var_pow(order, "z", HalfInt::halves(-2 * static_cast<long>(k) - 3)) *
           one_minus_4var_pow(order, "y", HalfInt::halves(-3));
}

HermitianElement L_map(const GradedSeries& f, long order) {
    require_zy(f, "L_map");
    HermitianElement out(order, HermBasis::TildeDelta);
    for (const auto& [mono, c] : f.terms()) {
        unsigned m = mono[0], p = mono[1];
        out.add_term(2 * m + 2 * p, p, c * ExactScalar(factorial(m) * factorial(p)));
    }
    return out;
}

HermitianElement M_map(const GradedSeries& f, long order) {
    require_zy(f, "M_map");
    HermitianElement out(order, HermBasis::TildeDelta);
    for (const auto& [mono, c] : f.terms()) {
        unsigned m = mono[0], p = mono[1];
        out.add_term(2 * m + 2 * p + 1, p, c * ExactScalar(factorial(m) * factorial(p)));
    }
    return out;
}

HermitianElement lk_in_tilde_delta(unsigned k, const ExactScalar& lambda, long order) {
    unsigned m = k / 2;
    bool odd = (k % 2 == 1);
    long zy_order = odd ? order - 1 : order;
    if (zy_order < 0) return HermitianElement(order, HermBasis::TildeDelta);
    GradedSeries gen = odd ? genfun_h(m, zy_order) : genfun_g(m, zy_order);

    // Scale term z^a y^b by the composite of the argument substitution
    // (z, y) -> (lambda z/4pi, lambda y/4pi) and the outer prefactor
    // (4/lambda)^m resp. (2/pi)(16/lambda)^m. The net lambda power a+b-m
    // is nonnegative because z^m divides the generating function.
    GradedSeries scaled_gen(Alphabet::zy(), zy_order);
    for (const auto& [mono, c] : gen.terms()) {
        unsigned a = mono[0], b = mono[1];
        ExactScalar factor = lambda.pow_int(static_cast<long>(a + b) - static_cast<long>(m));
        if (odd) {
            Rat r = rat_pow(Rat(16), m) / rat_pow(Rat(4), a + b) * 2;
            factor *= ExactScalar::monomial(r, -static_cast<long>(a + b) - 1, 0);
        } else {
            Rat r = rat_pow(Rat(4), static_cast<long>(m) - static_cast<long>(a + b));
            factor *= ExactScalar::monomial(r, -static_cast<long>(a + b), 0);
        }
        scaled_gen.add_term(mono, c * factor);
    }
    return odd ? M_map(scaled_gen, order) : L_map(scaled_gen, order);
}

namespace {

void require_invertible_curvature(const ExactScalar& lambda, const char* who) {
    if (lambda.is_zero())
        throw MathDomainError(std::string(who) + ": curvature must be nonzero");
    if (!lambda.is_monomial())
        throw MathDomainError(std::string(who) + ": curvature must be a single term");
}

// (2/pi)^ceil(k/2) or its inverse
ExactScalar two_over_pi_pow(unsigned k, int sign) {
    long e = static_cast<long>((k + 1) / 2);
    if (sign < 0)
        return ExactScalar::monomial(rat_pow(Rat(2), -e), e, 0);
    return ExactScalar::monomial(rat_pow(Rat(2), e), -e, 0);
}

}  // namespace

HermitianElement tilde_from_C(const RElement& e, const ExactScalar& lambda, long order) {
    require_invertible_curvature(lambda, "tilde_from_C");
    long bound = std::min(order, e.order());
    HermitianElement out(bound, HermBasis::TildeDelta);
    for (const auto& term : e.render()) {
        unsigned k = term.k, j = term.p;
        if (static_cast<long>(k) > bound) continue;
        ExactScalar common = term.coeff * two_over_pi_pow(k, +1) * lambda.pow_int(j) *
                             ExactScalar(Rat(1) / double_factorial(k));
        for (unsigned p = 0; p <= j; ++p) {
            Rat c = binom(j, p) * factorial(k - 2 * p) * factorial(2 * p + 1);
            out.add_term(k, p, common * ExactScalar(c));
        }
    }
    return out;
}

RElement C_from_tilde(const HermitianElement& e, const ExactScalar& lambda, long order) {
    require_invertible_curvature(lambda, "C_from_tilde");
    if (e.basis() != HermBasis::TildeDelta)
        throw std::invalid_argument("C_from_tilde: element is not in the tilde-Delta basis");
    long bound = std::min(order, e.order());
    GradedSeries s(Alphabet::xi_eta(), bound);
    for (const auto& [kq, v] : e.coeffs()) {
        auto [k, p] = kq;
        if (static_cast<long>(k) > bound) continue;
        ExactScalar common =
            v * two_over_pi_pow(k, -1) *
            ExactScalar(double_factorial(k) / (factorial(k - 2 * p) * factorial(2 * p + 1)));
        for (unsigned j = 0; j <= p; ++j) {
            Rat c = binom(p, j);
            if ((p - j) % 2 == 1) c = -c;
            s.add_term(Monomial({k - 2 * j, j}),
                       common * ExactScalar(c) * lambda.pow_int(-static_cast<long>(j)));
        }
    }
    return RElement(std::move(s));
}

HermitianElement t_lambda_act_closed(const HermitianElement& e, const ExactScalar& lambda,
                                     long order) {
    if (e.basis() != HermBasis::TildeDelta)
        throw std::invalid_argument("t_lambda_act_closed: element is not in the tilde-Delta basis");
    long bound = std::min(order, e.order() + 1);
    HermitianElement out(bound, HermBasis::TildeDelta);
    for (const auto& [kp, v] : e.coeffs()) {
        auto [k, p] = kp;
        // (2 omega_{k-1} / omega_k) (k-1)!! = (2/pi if k even, 1 if odd) k!!
        ExactScalar even_odd = (k % 2 == 0)
                                   ? ExactScalar::monomial(Rat(2), -1, 0)
                                   : ExactScalar(1);
        ExactScalar pre =
            v * even_odd *
            ExactScalar(double_factorial(k) / (factorial(k - 2 * p) * factorial(2 * p + 1)));
        for (unsigned l = 0; static_cast<long>(k + 2 * l + 1) <= bound; ++l) {
            for (unsigned q = p; q <= p + l && 2 * q <= k + 2 * l + 1; ++q) {
                Rat c = factorial(k + 2 * l - 2 * q + 1) * factorial(2 * q + 1) /
                        double_factorial(static_cast<long>(k) + 2 * l + 1) * binom(2 * l, l) *
                        binom(l, q - p) / rat_pow(Rat(8), l);
                ExactScalar term = ExactScalar::monomial(c, -static_cast<long>(l), 0) *
                                   lambda.pow_int(l);
                out.add_term(k + 2 * l + 1, q, pre * term);
            }
        }
    }
    return out;
}

HermitianElement t_lambda_act_via_C(const HermitianElement& e, const ExactScalar& lambda,
                                    long order) {
    require_invertible_curvature(lambda, "t_lambda_act_via_C");
    long bound = std::min(order, e.order() + 1);
    RElement in_c = C_from_tilde(e, lambda, bound);
    return tilde_from_C(t_act(in_c), lambda, bound);
}

std::vector<std::vector<ExactScalar>> c_in_tilde_matrix(unsigned k, const ExactScalar& lambda) {
    require_invertible_curvature(lambda, "c_in_tilde_matrix");
    unsigned n = k / 2 + 1;
    std::vector<std::vector<ExactScalar>> m(n, std::vector<ExactScalar>(n));
    for (unsigned j = 0; j < n; ++j) {
        HermitianElement row =
            tilde_from_C(RElement::basis_element(k, j, k), lambda, k);
        for (unsigned p = 0; p < n; ++p) m[j][p] = row.coeff(k, p);
    }
    return m;
}

std::vector<std::vector<ExactScalar>> tilde_in_c_matrix(unsigned k, const ExactScalar& lambda) {
    require_invertible_curvature(lambda, "tilde_in_c_matrix");
    unsigned n = k / 2 + 1;
    std::vector<std::vector<ExactScalar>> m(n, std::vector<ExactScalar>(n));
    for (unsigned p = 0; p < n; ++p) {
        RElement row = C_from_tilde(
            HermitianElement::basis_element(k, p, HermBasis::TildeDelta, k), lambda, k);
        for (unsigned j = 0; j < n; ++j) m[p][j] = row.coeff(k, j);
    }
    return m;
}

}  // namespace riemcurv
