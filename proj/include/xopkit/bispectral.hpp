#ifndef XOPKIT_BISPECTRAL_HPP
#define XOPKIT_BISPECTRAL_HPP

// Banded expansions between the exceptional polynomials and a classical
// basis, and the (4 ell + 1)-diagonal recurrence they imply.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "xopkit/classical.hpp"
#include "xopkit/families.hpp"
#include "xopkit/ratpoly.hpp"
#include "xopkit/report.hpp"

namespace xop {

/// Square truncation of a semi-infinite matrix, stored sparsely.
class BandMatrix {
 public:
  BandMatrix() = default;
  BandMatrix(int dim, int declared_bandwidth) : dim_(dim), declared_(declared_bandwidth) {}

  int dim() const { return dim_; }
  int declared_bandwidth() const { return declared_; }
  /// Largest |row - col| over stored entries; -1 when empty.
  int bandwidth() const;
  bool within_declared_band() const { return bandwidth() <= declared_; }

  Rational at(int row, int col) const;
  /// Zero values erase the entry; indices outside the truncation are dropped.
  void set(int row, int col, const Rational& v);
  const std::map<std::pair<int, int>, Rational>& entries() const { return entries_; }

  friend BandMatrix operator*(const BandMatrix& a, const BandMatrix& b);
  friend BandMatrix operator+(const BandMatrix& a, const BandMatrix& b);
  friend BandMatrix operator*(const Rational& k, const BandMatrix& a);

  static BandMatrix identity(int dim);

 private:
  int dim_ = 0;
  int declared_ = 0;
  std::map<std::pair<int, int>, Rational> entries_;
};

/// Rows r < rows and columns c < cols agree.
bool equal_on_block(const BandMatrix& a, const BandMatrix& b, int rows, int cols);

/// "row,col,num,den" with one line per stored entry.
std::string to_csv(const BandMatrix& m);

/// Classical basis in which the exceptional polynomials are banded.
struct ShiftedBasis {
  ClassicalKind kind;
  int offset_a = 0;  // shift of the first parameter against undeformed_basis
  int offset_b = 0;  // shift of the second (Jacobi only)
  int candidates = 0;  // how many offsets in the search window were banded
};

/// Searches parameter offsets in [-radius, radius] for the basis in which
/// P_{ell,n} has support [n-ell, n+ell] for n <= probe.
ShiftedBasis discover_basis(const FamilyParams& p, int radius = 2, int probe = 6);

/// Coefficients of q in a basis with one polynomial per degree, by
/// descending elimination. Index s runs 0..deg q.
std::vector<Rational> expand_in_basis(const UniPoly& q, const ClassicalKind& basis);

/// Expansion over {P_{ell,s}}: coefficient map and the part of q of degree
/// below ell that no P_{ell,s} can absorb.
struct ExceptionalExpansion {
  std::map<int, Rational> coeffs;
  UniPoly remainder;
};
ExceptionalExpansion expand_in_exceptional(const FamilyParams& p, const UniPoly& q);

/// Row n of Xi: P_{ell,n} over the shifted basis.
std::map<int, Rational> expand_xhat(const FamilyParams& p, const ShiftedBasis& basis, int n);

/// Row n of H: xi^2 B_n over {P_{ell,s}}. Throws std::domain_error
/// "expansion does not exist" when the overdetermined system is inconsistent.
std::map<int, Rational> expand_pi2_classical(const FamilyParams& p, const ShiftedBasis& basis, int n);

struct BispectralMatrices {
  ShiftedBasis basis;
  BandMatrix xi;      // Xi
  BandMatrix h;       // H
  BandMatrix k;       // direct expansion of xi^2 P_{ell,n}
  BandMatrix xi_h;    // Xi H
  BandMatrix h_xi;    // H Xi
  BandMatrix pi2_j;   // xi^2 evaluated at the Jacobi matrix of the basis
};

/// Truncations of size N. Rows whose band reaches past N are incomplete in
/// the products; compare only interior blocks.
BispectralMatrices bispectral_matrices(const FamilyParams& p, int N);

/// K from the direct expansion.
BandMatrix k_matrix(const FamilyParams& p, int N);

/// Tridiagonal matrix of the three-term recurrence of the basis.
BandMatrix jacobi_matrix(const ClassicalKind& basis, int N);

/// u(M) by Horner's rule on the truncation.
BandMatrix poly_of_matrix(const UniPoly& u, const BandMatrix& m);

struct NormRatios {
  Report report;
  std::vector<Rational> hhat_ratio;  // hhat_s / hhat_0 for s <= smax
};

/// Mirror relation hhat_s eta_{ns} = h_n xi_{sn}: the ratio is the same for
/// every n in the band of s and defines hhat_s / hhat_0, which must be positive.
NormRatios norm_ratio_consistency(const FamilyParams& p, int smax, bool perturb = false);

/// pi^2(J) = H Xi and K = Xi H on interior blocks, with band checks.
Report jacobi_operator_factor_check(const FamilyParams& p, int N, bool perturb = false);

/// Band supports, K two ways, recurrence residuals and pointwise evaluation.
Report verify_bispectral(const FamilyParams& p, int N, bool perturb = false);

}  // namespace xop

#endif  // XOPKIT_BISPECTRAL_HPP
