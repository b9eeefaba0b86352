#include "riemcurv/sphere.hpp"

namespace riemcurv {

void SphereElement::add_term(unsigned k, const ExactScalar& c) {
    if (static_cast<long>(k) > order_ || c.is_zero()) return;
    auto it = coeffs_.find(k);
    if (it == coeffs_.end()) {
        coeffs_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

ExactScalar SphereElement::coeff(unsigned k) const {
    if (static_cast<long>(k) > order_)
        throw std::invalid_argument("SphereElement: degree exceeds truncation order");
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? ExactScalar() : it->second;
}

SphereElement SphereElement::scaled(const ExactScalar& c) const {
    SphereElement out(order_);
    for (const auto& [k, v] : coeffs_) out.add_term(k, v * c);
    return out;
}

SphereElement operator+(const SphereElement& a, const SphereElement& b) {
    SphereElement out(std::min(a.order_, b.order_));
    for (const auto& [k, v] : a.coeffs_) out.add_term(k, v);
    for (const auto& [k, v] : b.coeffs_) out.add_term(k, v);
    return out;
}

SphereElement operator-(const SphereElement& a, const SphereElement& b) {
    SphereElement out(std::min(a.order_, b.order_));
    for (const auto& [k, v] : a.coeffs_) out.add_term(k, v);
    for (const auto& [k, v] : b.coeffs_) out.add_term(k, -v);
    return out;
}

bool SphereElement::agrees_with(const SphereElement& o) const {
    long bound = std::min(order_, o.order_);
    for (const auto& [k, v] : coeffs_)
        if (static_cast<long>(k) <= bound && !(o.coeff(k) == v)) return false;
    for (const auto& [k, v] : o.coeffs_)
        if (static_cast<long>(k) <= bound && !(coeff(k) == v)) return false;
    return true;
}

ExactScalar tau_eval(unsigned k, unsigned j, const ExactScalar& lambda) {
    if (lambda.is_zero()) throw MathDomainError("tau_eval: lambda must be nonzero");
    if (lambda.is_rational() && lambda.as_rational() < 0)
        throw MathDomainError("tau_eval: lambda must be positive");
    if (k != j) return ExactScalar();
    ExactScalar lam_pow = lambda.pow_half(HalfInt::halves(-static_cast<long>(k)));
    return ExactScalar(rat_pow(Rat(2), static_cast<long>(k) + 1)) * lam_pow;
}

namespace {

// (lambda/denom)^e with lambda the symbol
ExactScalar lambda_over(long denom, unsigned long e) {
    return ExactScalar::monomial(rat_pow(Rat(denom), -static_cast<long>(e)), 0,
                                 2 * static_cast<long>(e));
}

}  // namespace

SphereElement phi_in_tau(unsigned k, long order) {
    SphereElement out(order);
    for (unsigned j = 0; static_cast<long>(k) + 2 * j <= order; ++j)
        out.add_term(k + 2 * j, lambda_over(4, j));
    return out;
}

SphereElement t_power_in_tau(unsigned k, long order) {
    SphereElement out(order);
    for (unsigned j = 0; static_cast<long>(k) + 2 * j <= order; ++j) {
        // binom(k/2 + j, j)
        Rat c = gen_binomial(HalfInt::halves(static_cast<long>(k) + 2 * static_cast<long>(j)), j);
        out.add_term(k + 2 * j, ExactScalar(c) * lambda_over(4, j));
    }
    return out;
}

SphereElement t_act_tau(const SphereElement& e) {
    SphereElement out(e.order());
    for (const auto& [k, v] : e.coeffs())
        for (unsigned j = 0; static_cast<long>(k) + 2 * j + 1 <= e.order(); ++j)
            out.add_term(k + 2 * j + 1, v * ExactScalar(binom(2 * j, j)) * lambda_over(16, j));
    return out;
}

SphereElement poly_in_t_to_tau(const GradedSeries& q, long order) {
    if (!(q.alphabet() == Alphabet::univariate_x()))
        throw std::invalid_argument("poly_in_t_to_tau: q must be univariate in x");
    const Alphabet& ax = Alphabet::univariate_x();
    GradedSeries u(ax, order);
    u.add_term(Monomial({2}), ExactScalar::monomial(make_rat(1, 4), 0, 2));  // lambda x^2 / 4
    GradedSeries x_image =
        GradedSeries::variable(ax, order, "x") * binomial_power(u, HalfInt::halves(-1));
    GradedSeries expanded =
        binomial_power(u, HalfInt::whole(-1)) * substitute(q.truncated(order), {{"x", x_image}});
    SphereElement out(expanded.order());
    for (const auto& [m, c] : expanded.terms()) out.add_term(m[0], c);
    return out;
}

SphereElement globalize_on_sphere(const RElement& e, long order) {
    SphereElement out(std::min(order, e.order()));
    for (const auto& [m, c] : e.series().terms()) {
        unsigned k = m[0] + 2 * m[1];
        out.add_term(k, c * ExactScalar::lambda_power(HalfInt::whole(m[1])));
    }
    return out;
}

ExactScalar IntrinsicVolumeVector::at(unsigned j) const {
    auto it = mu.find(j);
    return it == mu.end() ? ExactScalar() : it->second;
}

namespace {

// (R + sign*r)^e as coefficients in r, by iterated polynomial multiplication
std::vector<Rat> binomial_poly(const Rat& radius, int sign, unsigned e) {
    std::vector<Rat> poly{Rat(1)};
    for (unsigned i = 0; i < e; ++i) {
        std::vector<Rat> next(poly.size() + 1, Rat(0));
        for (size_t d = 0; d < poly.size(); ++d) {
            next[d] += poly[d] * radius;
            next[d + 1] += poly[d] * Rat(sign);
        }
        poly = std::move(next);
    }
    return poly;
}

}  // namespace

IntrinsicVolumeVector sphere_intrinsic_volumes(unsigned n, const Rat& radius, long order) {
    if (radius <= 0) throw std::invalid_argument("sphere_intrinsic_volumes: radius must be > 0");
    // Tube of radius r about S^n_R in R^{n+1}: the shell between the spheres
    // of radius R-r and R+r.
    auto outer = binomial_poly(radius, +1, n + 1);
    auto inner = binomial_poly(radius, -1, n + 1);
    IntrinsicVolumeVector out;
    for (unsigned j = 0; j <= n && static_cast<long>(j) <= order; ++j) {
        unsigned rpow = n + 1 - j;
        ExactScalar shell_coeff = ExactScalar(outer[rpow] - inner[rpow]) * omega(n + 1);
        ExactScalar mu_j = shell_coeff * omega(rpow).inverse();
        if (!mu_j.is_zero()) out.mu.emplace(j, mu_j);
    }
    return out;
}

CrossCheckResult t_power_eval_crosscheck(unsigned k, unsigned j, const Rat& lambda) {
    if (lambda <= 0) throw MathDomainError("t_power_eval_crosscheck: lambda must be > 0");
    CrossCheckResult out;

    SphereElement tk = t_power_in_tau(k, j);
    out.via_tau = (tk.coeff(j) * tau_eval(j, j, ExactScalar::lambda())).eval_lambda(lambda);

    auto root = rat_sqrt(lambda);
    if (!root)
        throw MathDomainError("t_power_eval_crosscheck: lambda has no exact square root");
    Rat radius = Rat(1) / *root;
    IntrinsicVolumeVector mu = sphere_intrinsic_volumes(j, radius);
    out.via_tubes = ExactScalar(factorial(k)) * omega(k) * mu.at(k) *
                    ExactScalar::pi_power(-static_cast<long>(k));

    out.equal = out.via_tau == out.via_tubes;
    return out;
}

}  // namespace riemcurv
