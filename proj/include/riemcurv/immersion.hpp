#pragma once

#include "riemcurv/sphere.hpp"

namespace riemcurv {

enum class RelBasis { C, Gamma };

/// One rendered basis coefficient of a relative element.
struct RelTerm {
    unsigned k = 0;
    unsigned p = 0;
    unsigned l = 0;
    ExactScalar coeff;
};

/// Element of the space of relative Riemannian curvature measures, stored
/// through x^(k-2p-2l) y^p z^l. The same series is read as C_{kpl}
/// coefficients or Gamma_{kpl} coefficients depending on the basis flag.
class RelElement {
public:
    RelElement(GradedSeries series, RelBasis basis);

    const GradedSeries& series() const { return series_; }
    RelBasis basis() const { return basis_; }
    long order() const { return series_.order(); }

    static RelElement basis_element(unsigned k, unsigned p, unsigned l, RelBasis basis,
                                    long order);
    ExactScalar coeff(unsigned k, unsigned p, unsigned l) const;
    std::vector<RelTerm> render() const;

    friend RelElement operator+(const RelElement& a, const RelElement& b);
    friend RelElement operator-(const RelElement& a, const RelElement& b);
    RelElement scaled(const ExactScalar& c) const { return {series_.scaled(c), basis_}; }
    bool agrees_with(const RelElement& o) const;

private:
    GradedSeries series_;
    RelBasis basis_;
};

/// Basis change C -> Gamma (the substitution z -> z - y on encodings).
RelElement c_to_gamma(const RelElement& e);
/// Inverse basis change Gamma -> C (z -> z + y).
RelElement gamma_to_c(const RelElement& e);

/// Pullback of an element of R under an arbitrary isometric immersion:
/// xi^k eta^p -> (1-z/4)^-1 (x(1-z/4)^-1/2)^k (y(1-z/4)^-1)^p.
RelElement immersion_pullback(const RElement& e, long order);

/// Restriction to totally geodesic immersions: z = 0, x -> xi, y -> eta.
/// Left inverse of immersion_pullback.
RElement totally_geodesic_specialize(const RelElement& e);

/// Whether the Lipschitz-Killing element of degree k is immersion-invariant
/// up to the given order: its pullback, read in the Gamma basis, must be
/// x^k (1-z/4)^(-k/2-1).
bool lk_invariance_check(unsigned k, long order);

/// Evaluation on a subsphere of curvature mu inside a sphere of curvature
/// lambda: C_{kpl} -> lambda^p (mu-lambda)^l tau_k on the ambient sphere.
SphereElement sphere_in_sphere_specialize(const RelElement& e, const ExactScalar& lambda,
                                          const ExactScalar& mu);

}  // namespace riemcurv
