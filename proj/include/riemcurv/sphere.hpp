#pragma once

#include <map>
#include <vector>

#include "riemcurv/riemannian.hpp"

namespace riemcurv {

/// Invariant valuation on a round sphere, written in the tau basis
/// (tau_k = globalized C_{k0}). Coefficients carry the curvature lambda
/// symbolically, so identities hold as polynomial identities in lambda.
class SphereElement {
public:
    explicit SphereElement(long order) : order_(order) {}

    long order() const { return order_; }
    const std::map<unsigned, ExactScalar>& coeffs() const { return coeffs_; }

    /// Accumulate into the tau_k coefficient; silently truncates k > order.
    void add_term(unsigned k, const ExactScalar& c);
    ExactScalar coeff(unsigned k) const;

    SphereElement scaled(const ExactScalar& c) const;
    friend SphereElement operator+(const SphereElement& a, const SphereElement& b);
    friend SphereElement operator-(const SphereElement& a, const SphereElement& b);
    bool agrees_with(const SphereElement& o) const;
    bool is_zero() const { return coeffs_.empty(); }

private:
    long order_;
    std::map<unsigned, ExactScalar> coeffs_;
};

/// tau_k evaluated on the j-sphere of curvature lambda:
/// delta_j^k * 2 * (2/sqrt(lambda))^k. lambda may be the symbol or a
/// positive rational; zero curvature is rejected.
ExactScalar tau_eval(unsigned k, unsigned j, const ExactScalar& lambda);

/// phi^k = sum_j (lambda/4)^j tau_{k+2j}.
SphereElement phi_in_tau(unsigned k, long order);

/// t^k = sum_j binom(k/2+j, j) (lambda/4)^j tau_{k+2j}.
SphereElement t_power_in_tau(unsigned k, long order);

/// t . tau_k = sum_j binom(2j, j) (lambda/16)^j tau_{k+2j+1}, extended linearly.
SphereElement t_act_tau(const SphereElement& e);

/// For a univariate series q, the expansion of q(t):
/// sum_j [x^j]( (1-lambda x^2/4)^-1 q(x (1-lambda x^2/4)^-1/2) ) tau_j.
SphereElement poly_in_t_to_tau(const GradedSeries& q, long order);

/// Globalization on a sphere of curvature lambda: C_{kp} -> lambda^p tau_k.
SphereElement globalize_on_sphere(const RElement& e, long order);

/// Intrinsic volumes of a round sphere, solved from the euclidean tube
/// (Steiner) expansion of the region between two concentric spheres.
struct IntrinsicVolumeVector {
    std::map<unsigned, ExactScalar> mu;
    ExactScalar at(unsigned j) const;
};

/// mu_j(S^n_R) for j = 0..min(n, order), exactly. Matches the polynomial
/// identity omega_{n+1} ((R+r)^{n+1} - (R-r)^{n+1}) =
/// sum_j mu_j omega_{n+1-j} r^{n+1-j}.
IntrinsicVolumeVector sphere_intrinsic_volumes(unsigned n, const Rat& radius,
                                               long order = 256);

struct CrossCheckResult {
    ExactScalar via_tau;    // t^k expanded in tau, evaluated on S^j_lambda
    ExactScalar via_tubes;  // k! omega_k mu_k(S^j) / pi^k from the tube oracle
    bool equal = false;
};

/// Evaluates t^k on S^j of curvature lambda along two independent routes.
/// Requires lambda > 0 with a rational square root where odd exponents
/// demand one.
CrossCheckResult t_power_eval_crosscheck(unsigned k, unsigned j, const Rat& lambda);

}  // namespace riemcurv
