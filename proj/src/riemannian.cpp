#include "riemcurv/riemannian.hpp"

namespace riemcurv {

namespace {

GradedSeries one_minus_quarter_eta_pow(long order, HalfInt r) {
    GradedSeries quarter_eta =
        GradedSeries::variable(Alphabet::xi_eta(), order, "eta").scaled(make_rat(1, 4));
    return binomial_power(quarter_eta, r);
}

}  // namespace

RElement::RElement(GradedSeries series) : series_(std::move(series)) {
    if (!(series_.alphabet() == Alphabet::xi_eta()))
        throw std::invalid_argument("RElement: series must live over {xi, eta}");
}

RElement RElement::zero(long order) {
    return RElement(GradedSeries(Alphabet::xi_eta(), order));
}

RElement RElement::basis_element(unsigned k, unsigned p, long order) {
    if (2 * p > k) throw std::invalid_argument("basis_element: need 2p <= k");
    GradedSeries s(Alphabet::xi_eta(), order);
    s.add_term(Monomial({k - 2 * p, p}), ExactScalar(1));
    return RElement(std::move(s));
}

ExactScalar RElement::coeff(unsigned k, unsigned p) const {
    if (2 * p > k) throw std::invalid_argument("coeff: need 2p <= k");
    return series_.coeff(Monomial({k - 2 * p, p}));
}

std::vector<CTerm> RElement::render() const {
    std::vector<CTerm> out;
    out.reserve(series_.terms().size());
    for (const auto& [m, c] : series_.terms())
        out.push_back({m[0] + 2 * m[1], m[1], c});
    return out;
}

RElement operator+(const RElement& a, const RElement& b) {
    return RElement(a.series_ + b.series_);
}

RElement operator-(const RElement& a, const RElement& b) {
    return RElement(a.series_ - b.series_);
}

RElement lk_bar(unsigned k, long order) {
    GradedSeries xi_k(Alphabet::xi_eta(), order);
    xi_k.add_term(Monomial({k, 0}), ExactScalar(1));
    HalfInt r = HalfInt::halves(-static_cast<long>(k) - 2);  // -k/2 - 1
    return RElement(xi_k * one_minus_quarter_eta_pow(order, r));
}

RElement lk_normalized(unsigned k, long order) {
    ExactScalar factor =
        ExactScalar::pi_power(static_cast<long>(k)) * (omega(k) * ExactScalar(factorial(k))).inverse();
    return lk_bar(k, order).scaled(factor);
}

RElement t_act(const RElement& e) {
    long order = e.order();
    GradedSeries xi = GradedSeries::variable(Alphabet::xi_eta(), order, "xi");
    return RElement(e.series() * xi * one_minus_quarter_eta_pow(order, HalfInt::halves(-1)));
}

RElement t_power_act(unsigned i, const RElement& e) {
    long order = e.order();
    GradedSeries xi_i(Alphabet::xi_eta(), order);
    xi_i.add_term(Monomial({i, 0}), ExactScalar(1));
    HalfInt r = HalfInt::halves(-static_cast<long>(i));  // -i/2
    return RElement(e.series() * xi_i * one_minus_quarter_eta_pow(order, r));
}

}  // namespace riemcurv
