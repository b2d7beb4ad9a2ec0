#ifndef XOPKIT_NUMERICS_HPP
#define XOPKIT_NUMERICS_HPP

// Floating-point evidence: Gauss quadrature for orthogonality and a
// finite-difference Schroedinger solver for the spectra.

#include <optional>
#include <string>
#include <vector>

#include "xopkit/classical.hpp"
#include "xopkit/families.hpp"

namespace xop {

struct QuadratureRule {
  ClassicalKind kind;
  int order = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
  /// Nodes whose weight underflowed to zero and were removed.
  int dropped = 0;
};

/// Golub-Welsch rule for the weight (1-x)^a (1+x)^b on [-1,1] or
/// x^alpha e^{-x} on [0,inf). Throws std::domain_error for order < 1 or
/// parameters <= -1.
QuadratureRule gauss_rule(const ClassicalKind& kind, int order);

/// Sum of w_i f(x_i).
template <class F>
double integrate(const QuadratureRule& rule, F&& f) {
  double s = 0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * f(rule.nodes[i]);
  return s;
}

struct OrthogonalityResult {
  std::vector<std::vector<double>> gram;       // G_nm
  std::vector<std::vector<double>> residual;   // |G_nm| / sqrt(G_nn G_mm), zero on the diagonal
  double max_offdiag = 0;
  std::vector<double> diag_ratio;              // G_nn / G_00
};

/// Gram matrix of P_{ell,n}, n <= nmax, for the exceptional weight: the
/// classical weight of the banded basis is the rule's weight and 1/xi^2 is
/// folded into the integrand.
OrthogonalityResult orthogonality_residual(const FamilyParams& p, int nmax, int order);

struct SpectrumResult {
  std::vector<double> eigenvalues;  // ascending
  int grid = 0;
  double lo = 0;
  double hi = 0;
  int order = 2;  // discretization order
};

/// Coefficients c of c/x^2 (radial, at x = 0) or of c/sin^2 x and
/// c/cos^2 x (trig, at x = 0 and pi/2) in the potential of one side.
struct EndpointCouplings {
  Rational at_zero;
  std::optional<Rational> at_half_pi;
};
EndpointCouplings endpoint_couplings(const FamilyParams& p, Tier side);

/// All endpoint couplings on both sides are >= 3/4, so neither endpoint admits
/// a second square-integrable solution and the Dirichlet-truncated grid
/// converges at O(h^2). Below 3/4 the truncation error decays only like a
/// fractional power of the cutoff.
bool dirichlet_truncation_valid(const FamilyParams& p);

/// Lowest `levels` eigenvalues of -d^2/dx^2 + V on a uniform grid with
/// Dirichlet ends, second order central differences. Side plus or minus.
/// Throws std::invalid_argument for grid < 1000 or side os.
SpectrumResult fd_spectrum(const FamilyParams& p, Tier side, int grid, int levels);

}  // namespace xop

#endif  // XOPKIT_NUMERICS_HPP
