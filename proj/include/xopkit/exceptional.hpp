#ifndef XOPKIT_EXCEPTIONAL_HPP
#define XOPKIT_EXCEPTIONAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "xopkit/families.hpp"
#include "xopkit/ratpoly.hpp"
#include "xopkit/report.hpp"

namespace xop {

/// Exceptional polynomial P_{ell,n}(eta) in the standard normalization.
/// Degree n + ell.
UniPoly exceptional_poly(const FamilyParams& p, int n);

/// Other closed forms of the same polynomial (L1 and J1 only): the
/// derivative form built on pi = xi_ell, and the form over the shifted
/// classical basis. Each agrees with exceptional_poly up to a constant.
struct AlternateForm {
  std::string name;
  UniPoly poly;
};
std::vector<AlternateForm> alternate_forms(const FamilyParams& p, int n);

/// Image of Q under the second order Fuchsian operator whose eigenfunctions
/// are the P_{ell,n}. `perturb` flips the sign of the xi(lambda+delta) term.
RationalFunction fuchsian_apply(const FamilyParams& p, const UniPoly& q, bool perturb = false);

Report verify_sl_eigen(const FamilyParams& p, int nmax, bool perturb = false);

/// Constant c with A phi+_n = c psi_ell P_{ell,n}, or nothing if the two are
/// not proportional.
std::optional<Rational> darboux_constant(const FamilyParams& p, int n);

/// A phi+_n proportional to psi_ell P_{ell,n}, and the alternate forms
/// proportional to P_{ell,n}.
Report verify_match_darboux(const FamilyParams& p, int nmax, bool perturb = false);

/// xi^2 eta^j maps to a polynomial of degree <= j + 2 ell for j <= jmax, while
/// some bare monomial eta^j has a non-polynomial image. `perturb` lowers the
/// multiplier to xi^1.
Report invariant_subspace_check(const FamilyParams& p, int jmax, bool perturb = false);

/// deg P_{ell,n} = n + ell, so no degree below ell occurs.
Report verify_degree_structure(const FamilyParams& p, int nmax, bool perturb = false);

}  // namespace xop

#endif  // XOPKIT_EXCEPTIONAL_HPP
