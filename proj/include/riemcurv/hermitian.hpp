#pragma once

#include <map>
#include <vector>

#include "riemcurv/riemannian.hpp"

namespace riemcurv {

enum class HermBasis { Delta, TildeDelta };

struct HermTerm {
    unsigned k = 0;
    unsigned q = 0;
    ExactScalar coeff;
};

/// Invariant angular curvature measure on the stable complex space form
/// (the infinite-rank model: indices range over 2q <= k with no upper
/// dimension bound), written in the Delta or tilde-Delta basis.
class HermitianElement {
public:
    HermitianElement(long order, HermBasis basis) : order_(order), basis_(basis) {}

    long order() const { return order_; }
    HermBasis basis() const { return basis_; }
    const std::map<std::pair<unsigned, unsigned>, ExactScalar>& coeffs() const {
        return coeffs_;
    }

    static HermitianElement basis_element(unsigned k, unsigned q, HermBasis basis, long order);
    void add_term(unsigned k, unsigned q, const ExactScalar& c);
    ExactScalar coeff(unsigned k, unsigned q) const;
    std::vector<HermTerm> render() const;

    HermitianElement scaled(const ExactScalar& c) const;
    friend HermitianElement operator+(const HermitianElement& a, const HermitianElement& b);
    friend HermitianElement operator-(const HermitianElement& a, const HermitianElement& b);
    bool agrees_with(const HermitianElement& o) const;
    bool is_zero() const { return coeffs_.empty(); }

private:
    long order_;
    HermBasis basis_;
    std::map<std::pair<unsigned, unsigned>, ExactScalar> coeffs_;
};

/// Re-expresses a Delta-basis element in the tilde-Delta basis
/// (tilde_Delta_{kl} = sum_j binom(l+j, l) Delta_{k,l+j}, inverted).
HermitianElement delta_to_tilde(const HermitianElement& e);
HermitianElement tilde_to_delta(const HermitianElement& e);

/// Coefficientwise transforms between bivariate series carrying exponential
/// generating functions and the squared coordinates:
///   O: z^m y^p -> pi^(m+p) binom(m+p,p) / ((2p+1) binom(2p,p) binom(2m,m)) xib^m etab^p
///   P: z^m y^p -> (pi/4)^(m+p) (2m+2p+1) binom(2m+2p,m+p) binom(m+p,p)
///                 / ((2m+1)(2p+1) binom(2m,m) binom(2p,p)) xib^m etab^p
GradedSeries O_transform(const GradedSeries& f);
GradedSeries P_transform(const GradedSeries& f);

/// g_k = binom(2k,k) z^k (1-4z)^(-k-1/2) (1-4y)^(-3/2)
GradedSeries genfun_g(unsigned k, long order);
/// h_k = z^k (1-4z)^(-k-3/2) (1-4y)^(-3/2)
GradedSeries genfun_h(unsigned k, long order);

/// The graded maps carrying exponential generating functions to elements:
/// L: z^m y^p -> m! p! tilde_Delta_{2m+2p, p} (degree 0),
/// M: z^m y^p -> m! p! tilde_Delta_{2m+2p+1, p} (degree 1).
HermitianElement L_map(const GradedSeries& f, long order);
HermitianElement M_map(const GradedSeries& f, long order);

/// The Lipschitz-Killing element of degree k on the space form of curvature
/// lambda, expanded in the tilde-Delta basis through the exponential
/// generating functions g/h.
HermitianElement lk_in_tilde_delta(unsigned k, const ExactScalar& lambda, long order);

/// Coordinates of an element of R in the tilde-Delta basis, substituting
///   C_{kj} = (2/pi)^ceil(k/2) (lambda^j / k!!)
///            sum_p binom(j,p) (k-2p)! (2p+1)! tilde_Delta_{kp}.
/// Rejects lambda = 0, where the correspondence degenerates.
HermitianElement tilde_from_C(const RElement& e, const ExactScalar& lambda, long order);

/// Inverse conversion:
///   tilde_Delta_{kp} = (pi/2)^ceil(k/2) k!!/((k-2p)!(2p+1)!)
///                      sum_j (-1)^(p-j) lambda^-j binom(p,j) C_{kj}.
RElement C_from_tilde(const HermitianElement& e, const ExactScalar& lambda, long order);

/// The action of the Lipschitz-Killing generator in closed form:
/// t . tilde_Delta_{kp} = pre(k,p) sum_{l>=0, q>=p}
///     (k+2l-2q+1)! (2q+1)! / (k+2l+1)!! (lambda/8pi)^l binom(2l,l)
///     binom(l, q-p) tilde_Delta_{k+2l+1, q},
/// pre(k,p) = (2/pi if k even else 1) * k!!/((k-2p)!(2p+1)!).
HermitianElement t_lambda_act_closed(const HermitianElement& e, const ExactScalar& lambda,
                                     long order);

/// Independent route for the same action: convert to the C basis, act there,
/// convert back. Rejects lambda = 0.
HermitianElement t_lambda_act_via_C(const HermitianElement& e, const ExactScalar& lambda,
                                    long order);

/// Per-degree conversion matrix: entry [j][p] is the coefficient of
/// tilde_Delta_{kp} in C_{kj}. Lower triangular with nonzero diagonal.
std::vector<std::vector<ExactScalar>> c_in_tilde_matrix(unsigned k, const ExactScalar& lambda);
/// Entry [p][j] is the coefficient of C_{kj} in tilde_Delta_{kp}.
std::vector<std::vector<ExactScalar>> tilde_in_c_matrix(unsigned k, const ExactScalar& lambda);

}  // namespace riemcurv
