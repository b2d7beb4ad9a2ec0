#ifndef XOPKIT_CLASSICAL_HPP
#define XOPKIT_CLASSICAL_HPP

#include <stdexcept>
#include <string>
#include <variant>

#include "xopkit/ratpoly.hpp"
#include "xopkit/report.hpp"

namespace xop {

struct LaguerreKind {
  Rational alpha;
};

struct JacobiKind {
  Rational a;
  Rational b;
};

using ClassicalKind = std::variant<LaguerreKind, JacobiKind>;

/// Raised when the three-term Jacobi recurrence hits a vanishing denominator.
class DegenerateParameters : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// L_n^{(alpha)} from the three-term recurrence. Defined for every alpha.
UniPoly laguerre(int n, const Rational& alpha);

/// P_n^{(a,b)} from the three-term recurrence.
/// Throws DegenerateParameters when 2k+a+b in {0,-1,-2} is met on the way
/// (or the degree would drop).
UniPoly jacobi(int n, const Rational& a, const Rational& b);

/// P_n^{(a,b)} = sum_k C(n+a, n-k) C(n+b, k) ((x-1)/2)^k ((x+1)/2)^(n-k).
/// Polynomial-valued for all parameters, including the twisted ones.
UniPoly jacobi_hypergeometric(int n, const Rational& a, const Rational& b);

/// Recurrence when nondegenerate, hypergeometric sum otherwise.
UniPoly jacobi_any(int n, const Rational& a, const Rational& b);

/// Three-term recurrence coefficients: A_n P_{n+1} + B_n P_n + C_n P_{n-1} = x P_n.
struct Recurrence3 {
  Rational a;
  Rational b;
  Rational c;
};

Recurrence3 laguerre_recurrence(int n, const Rational& alpha);
Recurrence3 jacobi_recurrence(int n, const Rational& a, const Rational& b);

/// Row n of the basis polynomials of `kind`.
UniPoly classical_poly(const ClassicalKind& kind, int n);
Recurrence3 classical_recurrence(const ClassicalKind& kind, int n);

/// h_n / h_0 for the orthogonality measure of `kind`.
/// Throws std::domain_error outside alpha > -1 (a, b > -1).
Rational norm_ratio(const ClassicalKind& kind, int n);

/// Exact checks of the ODE, recurrence, differentiation / Christoffel /
/// Geronimus formulas and parity for every n <= nmax.
Report verify_classical_identities(const ClassicalKind& kind, int nmax, bool perturb = false);

std::string describe(const ClassicalKind& kind);

}  // namespace xop

#endif  // XOPKIT_CLASSICAL_HPP
