#include "riemcurv/immersion.hpp"

namespace riemcurv {

RelElement::RelElement(GradedSeries series, RelBasis basis)
    : series_(std::move(series)), basis_(basis) {
    if (!(series_.alphabet() == Alphabet::xyz()))
        throw std::invalid_argument("RelElement: series must live over {x, y, z}");
}

RelElement RelElement::basis_element(unsigned k, unsigned p, unsigned l, RelBasis basis,
                                     long order) {
    if (2 * p + 2 * l > k)
        throw std::invalid_argument("RelElement: need 2p + 2l <= k");
    GradedSeries s(Alphabet::xyz(), order);
    s.add_term(Monomial({k - 2 * p - 2 * l, p, l}), ExactScalar(1));
    return {std::move(s), basis};
}

ExactScalar RelElement::coeff(unsigned k, unsigned p, unsigned l) const {
    if (2 * p + 2 * l > k)
        throw std::invalid_argument("RelElement: need 2p + 2l <= k");
    return series_.coeff(Monomial({k - 2 * p - 2 * l, p, l}));
}

std::vector<RelTerm> RelElement::render() const {
    std::vector<RelTerm> out;
    out.reserve(series_.terms().size());
    for (const auto& [m, c] : series_.terms())
        out.push_back({m[0] + 2 * m[1] + 2 * m[2], m[1], m[2], c});
    return out;
}

RelElement operator+(const RelElement& a, const RelElement& b) {
    if (a.basis_ != b.basis_) throw std::invalid_argument("RelElement: basis mismatch");
    return {a.series_ + b.series_, a.basis_};
}

RelElement operator-(const RelElement& a, const RelElement& b) {
    if (a.basis_ != b.basis_) throw std::invalid_argument("RelElement: basis mismatch");
    return {a.series_ - b.series_, a.basis_};
}

bool RelElement::agrees_with(const RelElement& o) const {
    return basis_ == o.basis_ && series_.agrees_with(o.series_);
}

namespace {

RelElement shear_z_by_y(const RelElement& e, RelBasis from, RelBasis to, int sign) {
    if (e.basis() != from)
        throw std::invalid_argument("basis change: element is in the wrong basis");
    const Alphabet& a = Alphabet::xyz();
    long order = e.order();
    GradedSeries y = GradedSeries::variable(a, order, "y");
    GradedSeries z_image = GradedSeries::variable(a, order, "z");
    if (sign > 0)
        z_image += y;
    else
        z_image -= y;
    GradedSeries s = substitute(e.series(), {{"x", GradedSeries::variable(a, order, "x")},
                                             {"y", y},
                                             {"z", z_image}});
    return {std::move(s), to};
}

}  // namespace

RelElement c_to_gamma(const RelElement& e) {
    return shear_z_by_y(e, RelBasis::C, RelBasis::Gamma, -1);
}

RelElement gamma_to_c(const RelElement& e) {
    return shear_z_by_y(e, RelBasis::Gamma, RelBasis::C, +1);
}

namespace {

// (1 - z/4)^r over {x, y, z}
GradedSeries one_minus_quarter_z_pow(long order, HalfInt r) {
    GradedSeries quarter_z =
        GradedSeries::variable(Alphabet::xyz(), order, "z").scaled(make_rat(1, 4));
    return binomial_power(quarter_z, r);
}

}  // namespace

RelElement immersion_pullback(const RElement& e, long order) {
    const Alphabet& a = Alphabet::xyz();
    long n = std::min(order, e.order());
    GradedSeries x_image =
        GradedSeries::variable(a, n, "x") * one_minus_quarter_z_pow(n, HalfInt::halves(-1));
    GradedSeries y_image =
        GradedSeries::variable(a, n, "y") * one_minus_quarter_z_pow(n, HalfInt::whole(-1));
    GradedSeries body =
        substitute(e.series().truncated(n), {{"xi", x_image}, {"eta", y_image}});
    return {one_minus_quarter_z_pow(n, HalfInt::whole(-1)) * body, RelBasis::C};
}

RElement totally_geodesic_specialize(const RelElement& e) {
    if (e.basis() != RelBasis::C)
        throw std::invalid_argument("totally_geodesic_specialize: element must be in the C basis");
    const Alphabet& target = Alphabet::xi_eta();
    long order = e.order();
    GradedSeries s = substitute(e.series(), {{"x", GradedSeries::variable(target, order, "xi")},
                                             {"y", GradedSeries::variable(target, order, "eta")},
                                             {"z", GradedSeries(target, order)}});
    return RElement(std::move(s));
}

bool lk_invariance_check(unsigned k, long order) {
    RelElement transported = c_to_gamma(immersion_pullback(lk_bar(k, order), order));
    GradedSeries expected(Alphabet::xyz(), order);
    expected.add_term(Monomial({k, 0, 0}), ExactScalar(1));
    expected = expected * one_minus_quarter_z_pow(order, HalfInt::halves(-static_cast<long>(k) - 2));
    return transported.series().agrees_with(expected);
}

SphereElement sphere_in_sphere_specialize(const RelElement& e, const ExactScalar& lambda,
                                          const ExactScalar& mu) {
    if (e.basis() != RelBasis::C)
        throw std::invalid_argument("sphere_in_sphere_specialize: element must be in the C basis");
    ExactScalar excess = mu - lambda;  // the Gauss-equation factor mu - lambda
    SphereElement out(e.order());
    for (const auto& [m, c] : e.series().terms()) {
        unsigned k = m[0] + 2 * m[1] + 2 * m[2];
        out.add_term(k, c * lambda.pow_int(m[1]) * excess.pow_int(m[2]));
    }
    return out;
}

}  // namespace riemcurv
