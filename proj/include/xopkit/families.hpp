#ifndef XOPKIT_FAMILIES_HPP
#define XOPKIT_FAMILIES_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "xopkit/classical.hpp"
#include "xopkit/ratpoly.hpp"
#include "xopkit/report.hpp"

namespace xop {

enum class Family { L1, L2, J1, J2 };

std::string_view to_string(Family f);
/// Accepts "L1", "L2", "J1", "J2". Throws std::invalid_argument otherwise.
Family parse_family(std::string_view text);

inline bool is_laguerre(Family f) { return f == Family::L1 || f == Family::L2; }
inline bool is_jacobi(Family f) { return !is_laguerre(f); }

/// Family tag, deformation degree and couplings. h is ignored for L1/L2.
struct FamilyParams {
  Family family = Family::L1;
  int ell = 1;
  Rational g = 1;
  Rational h = 0;

  /// Couplings shifted by k * delta: g -> g+k (and h -> h+k for J).
  FamilyParams shifted(int k) const;
};

std::string describe(const FamilyParams& p);

class InvalidParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Error message of the first violated constraint, or nothing when valid.
std::optional<std::string> violation(const FamilyParams& p);
/// Throws InvalidParameters naming the violated constraint.
void validate(const FamilyParams& p);

/// Deformation polynomial xi_ell(eta; lambda). For J families the twisted
/// Jacobi parameters leave the orthogonality range, so the hypergeometric
/// sum is used.
UniPoly xi(const FamilyParams& p);

/// xi_ell at lambda + delta.
inline UniPoly xi_shifted(const FamilyParams& p) { return xi(p.shifted(1)); }

/// Physical interval of eta: (0, inf) for L, (-1, 1) for J.
struct EtaInterval {
  Rational lo;
  std::optional<Rational> hi;  // empty for +inf
};
EtaInterval physical_interval(Family f);

/// Printed positive expansion of (sign) * xi_ell, rewritten in eta.
UniPoly xi_positive_expansion(const FamilyParams& p);

struct XiStructure {
  Report report;
  int sign = 0;         // xi == sign * positive expansion (0 if neither)
  int formula_sign = 0;  // the sign the closed formula assigns
  int roots_inside = -1;
};

/// Compares xi with the positive sum and counts its roots on the open
/// physical interval.
XiStructure xi_structure_check(const FamilyParams& p);

enum class Tier { plus, minus, os };

std::string_view to_string(Tier t);
Tier parse_tier(std::string_view text);

/// Energy of level n. Tier minus equals tier plus.
Rational eigenvalue(const FamilyParams& p, int n, Tier tier);

/// Constant separating the plus/minus spectrum from the Fuchsian (os) spectrum.
Rational os_shift(const FamilyParams& p);

/// Coefficient data of the Fuchsian operator.
struct SLCoeffs {
  UniPoly c1;  // at lambda + ell*delta
  UniPoly c2;
  Rational d1;
  UniPoly d2;
  Rational etilde;  // at lambda + delta
};

SLCoeffs sl_coeffs(const FamilyParams& p);

/// Classical basis of the undeformed problem: L_n^{(g+ell-3/2)} for L1,
/// P_n^{(g+ell-3/2, h+ell+1/2)} for J1 and the mirrored choices for L2, J2.
ClassicalKind undeformed_basis(const FamilyParams& p);

}  // namespace xop

#endif  // XOPKIT_FAMILIES_HPP
