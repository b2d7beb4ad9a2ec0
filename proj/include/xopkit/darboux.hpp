#ifndef XOPKIT_DARBOUX_HPP
#define XOPKIT_DARBOUX_HPP

// Closed-form quantum mechanics on quasi-rational functions.
//
// A radial quasi-rational function is e^{s x^2/2} x^c R(eta) with eta = x^2;
// a trigonometric one is (sin x)^c (cos x)^d R(eta) with eta = cos 2x.
// d/dx, multiplication and the Darboux operators map the class to itself,
// so every identity below is decided by exact rational-function equality.

#include <optional>
#include <string>

#include "xopkit/families.hpp"
#include "xopkit/ratpoly.hpp"
#include "xopkit/report.hpp"

namespace xop {

enum class Coordinate { radial, trig };

Coordinate coordinate_of(Family f);

struct QuasiRational {
  Coordinate kind = Coordinate::radial;
  int gauss = 0;   // s in e^{s x^2/2}; radial only
  Rational c = 0;  // power of x (radial) or of sin x (trig)
  Rational d = 0;  // power of cos x; trig only
  RationalFunction body;

  bool is_zero() const { return body.is_zero(); }

  static QuasiRational zero(Coordinate k) { return {k, 0, 0, 0, RationalFunction()}; }
  static QuasiRational of(Coordinate k, const RationalFunction& body) { return {k, 0, 0, 0, body}; }
};

QuasiRational operator*(const QuasiRational& a, const QuasiRational& b);
QuasiRational operator*(const Rational& k, QuasiRational a);
/// Sum of two functions whose prefactor exponents differ by even integers.
/// Throws std::invalid_argument otherwise.
QuasiRational operator+(const QuasiRational& a, const QuasiRational& b);
QuasiRational operator-(const QuasiRational& a, const QuasiRational& b);
QuasiRational operator-(QuasiRational a);
QuasiRational divide(const QuasiRational& a, const QuasiRational& b);

/// Multiplier x (radial) or sin x cos x (trig) raised to `power`.
QuasiRational coordinate_power(Coordinate k, int power);

/// Exact d/dx by the chain rule through eta(x).
QuasiRational qr_derivative(const QuasiRational& f);

/// f == k * g for some constant k; returns k. Both zero gives k = 1.
std::optional<Rational> proportionality(const QuasiRational& f, const QuasiRational& g);

/// Rational function of eta equal to f, when the prefactor is trivial
/// (no Gaussian, even integer powers). Throws std::invalid_argument otherwise.
RationalFunction to_rational_function(const QuasiRational& f);

/// Numerical value at the physical coordinate x.
double evaluate(const QuasiRational& f, double x);

/// W(x) = s x^2/2 + c log x + log R(eta) (radial) or
/// c log sin x + d log cos x + log R(eta) (trig).
struct Prepotential {
  Coordinate kind = Coordinate::radial;
  int gauss = 0;
  Rational c = 0;
  Rational d = 0;
  RationalFunction log_arg = RationalFunction(Rational(1));
};

/// W_ell of the Darboux pair for the family.
Prepotential prepotential(const FamilyParams& p);
/// w_ell of the Hamiltonian whose spectrum is the Fuchsian (os) one.
Prepotential os_prepotential(const FamilyParams& p);
/// Groundstate prepotential of the radial oscillator / DPT potential.
Prepotential radial_groundstate(const Rational& g);
Prepotential dpt_groundstate(const Rational& g, const Rational& h);
/// Groundstate prepotential of H^{(+)}_ell, i.e. the undeformed system
/// with its shifted couplings.
Prepotential plus_groundstate(const FamilyParams& p);

/// dW/dx as a quasi-rational function.
QuasiRational prepotential_derivative(const Prepotential& w);
/// e^{sign * W}.
QuasiRational exp_prepotential(const Prepotential& w, int sign);

/// A = d/dx - W', A^dagger = -d/dx - W'.
QuasiRational apply_a(const Prepotential& w, const QuasiRational& f);
QuasiRational apply_adag(const Prepotential& w, const QuasiRational& f);

enum class DarbouxDir { A, Adag };
QuasiRational apply_darboux(const FamilyParams& p, const QuasiRational& f, DarbouxDir dir);

/// (W')^2 + sign * W'' as a rational function of eta.
RationalFunction factorized_potential(const Prepotential& w, int sign);

/// plus: (W')^2 + W''; minus: (W')^2 - W''; os: (w')^2 + w''.
RationalFunction potential(const FamilyParams& p, Tier side);

/// x^2 + g(g-1)/x^2 - 1 - 2g in eta.
RationalFunction radial_potential(const Rational& g);
/// g(g-1)/sin^2 + h(h-1)/cos^2 - (g+h)^2 in eta.
RationalFunction dpt_potential(const Rational& g, const Rational& h);

/// Closed form of the partner potential in terms of xi (not via the os prepotential).
RationalFunction explicit_partner_potential(const FamilyParams& p);
/// Explicit p^2-free form of H^{(+)}.
RationalFunction explicit_plus_potential(const FamilyParams& p);

Report verify_hamiltonian_identities(const FamilyParams& p, bool perturb = false);

/// Eigenfunction phi^{(+)}_{ell,n} of H^{(+)}.
QuasiRational phi_plus(const FamilyParams& p, int n);
/// phi^{(-)}_{ell,n} = A phi^{(+)}_{ell,n}.
QuasiRational phi_minus(const FamilyParams& p, int n);
/// psi_ell = (groundstate prefactor) / xi.
QuasiRational psi(const FamilyParams& p);

/// Annihilation of e^{+W} by A and e^{-W} by A^dagger, the A^dagger A round
/// trip, intertwining, and the non-normalizability exponents.
Report verify_darboux_pair(const FamilyParams& p, int nmax, bool perturb = false);

Report shape_invariance_check(const FamilyParams& p, bool perturb = false);
/// Classical layer only: radial oscillator (h ignored) or DPT.
Report shape_invariance_classical(Coordinate kind, const Rational& g, const Rational& h, bool perturb = false);

enum class LadderDir { raise, lower };

struct LadderResult {
  QuasiRational image;
  std::optional<Rational> constant;  // image = constant * target; nullopt if not proportional
  Rational expected;                 // closed-form value of the constant
};

/// Classical ladder operators on phi_n of the radial oscillator (coupling g)
/// or the DPT potential (g, h).
LadderResult ladder_action_classical(Coordinate kind, const Rational& g, const Rational& h, int n, LadderDir dir);

/// A_ell a^{(+-)} A_ell^dagger on phi^{(-)}_n, compared with phi^{(-)}_{n+-1}.
LadderResult ladder_action_deformed(const FamilyParams& p, int n, LadderDir dir);

Report verify_ladders(const FamilyParams& p, int nmax, bool perturb = false);

}  // namespace xop

#endif  // XOPKIT_DARBOUX_HPP
