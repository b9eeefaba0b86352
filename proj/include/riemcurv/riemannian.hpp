#pragma once

#include <vector>

#include "riemcurv/series.hpp"

namespace riemcurv {

/// One rendered basis coefficient of an element of R.
struct CTerm {
    unsigned k = 0;
    unsigned p = 0;
    ExactScalar coeff;
};

/// Element of the space R of Riemannian curvature measures, stored through
/// the encoding C_{kp} <-> xi^(k-2p) eta^p. The weighted degree of the
/// monomial equals the degree k of the basis element, so series truncation
/// is exactly degree truncation in R.
class RElement {
public:
    explicit RElement(GradedSeries series);

    const GradedSeries& series() const { return series_; }
    long order() const { return series_.order(); }

    static RElement zero(long order);
    /// The basis element C_{kp}; requires 2p <= k.
    static RElement basis_element(unsigned k, unsigned p, long order);
    ExactScalar coeff(unsigned k, unsigned p) const;

    /// Coefficients as (k, p, coeff) triples in graded order.
    std::vector<CTerm> render() const;

    RElement operator-() const { return RElement(-series_); }
    friend RElement operator+(const RElement& a, const RElement& b);
    friend RElement operator-(const RElement& a, const RElement& b);
    RElement scaled(const ExactScalar& c) const { return RElement(series_.scaled(c)); }
    bool agrees_with(const RElement& o) const { return series_.agrees_with(o.series_); }

private:
    GradedSeries series_;
};

/// The Lipschitz-Killing element with unit leading coefficient:
/// xi^k (1 - eta/4)^(-k/2-1), i.e. sum_j binom(k/2+j, j) 4^-j C_{k+2j, j}.
RElement lk_bar(unsigned k, long order);

/// The classical normalization pi^k/(k! omega_k) times lk_bar(k).
RElement lk_normalized(unsigned k, long order);

/// The action of the Lipschitz-Killing generator t: multiplication of the
/// encoding by xi (1 - eta/4)^(-1/2).
RElement t_act(const RElement& e);

/// The action of t^i in closed form: multiplication by xi^i (1 - eta/4)^(-i/2).
RElement t_power_act(unsigned i, const RElement& e);

}  // namespace riemcurv
