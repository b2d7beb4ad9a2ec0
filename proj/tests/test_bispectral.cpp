#include <doctest.h>

#include "xopkit/bispectral.hpp"
#include "xopkit/exceptional.hpp"

using namespace xop;

namespace {
const FamilyParams kL1{Family::L1, 1, 2, 0};
}

TEST_CASE("band matrix storage") {
  BandMatrix m(4, 1);
  m.set(0, 0, 2);
  m.set(1, 0, Rational(1, 3));
  m.set(5, 5, 7);  // outside, dropped
  m.set(2, 2, 0);  // zero, not stored
  CHECK(m.entries().size() == 2);
  CHECK(m.at(1, 0) == Rational(1, 3));
  CHECK(m.at(3, 3) == 0);
  CHECK(m.bandwidth() == 1);
  CHECK(to_csv(m) == "row,col,num,den\n0,0,2,1\n1,0,1,3\n");
  const BandMatrix sq = m * m;
  CHECK(sq.at(1, 0) == Rational(2, 3));
  CHECK(equal_on_block(BandMatrix::identity(4) * m, m, 4, 4));
}

TEST_CASE("banded basis discovery is unique") {
  for (Family f : {Family::L1, Family::L2, Family::J1, Family::J2})
    for (int ell = 1; ell <= 2; ++ell) {
      const FamilyParams p{f, ell, f == Family::J2 ? Rational(1) : Rational(3), f == Family::J2 ? Rational(3) : Rational(1)};
      CAPTURE(describe(p));
      const ShiftedBasis b = discover_basis(p);
      CHECK(b.candidates == 1);
    }
  const ShiftedBasis l1 = discover_basis(kL1);
  REQUIRE(std::holds_alternative<LaguerreKind>(l1.kind));
  CHECK(std::get<LaguerreKind>(l1.kind).alpha == Rational(5, 2));
  CHECK(l1.offset_a == 1);
}

TEST_CASE("expansion of the exceptional polynomials") {
  const ShiftedBasis b = discover_basis(kL1);
  const auto row = expand_xhat(kL1, b, 0);
  CHECK(row.at(0) == 7);
  CHECK(row.at(1) == -1);
  CHECK(row.size() == 2);
  for (int n = 0; n <= 10; ++n) {
    for (const auto& [s, v] : expand_xhat(kL1, b, n)) {
      CHECK(s >= 0);
      CHECK(std::abs(s - n) <= 1);
    }
    for (const auto& [s, v] : expand_pi2_classical(kL1, b, n)) CHECK(std::abs(s - n) <= 1);
  }
}

TEST_CASE("xi^2 times the first classical polynomial lies in the exceptional span") {
  const ExceptionalExpansion e = expand_in_exceptional(kL1, pow(xi(kL1), 2));
  CHECK(e.remainder.is_zero());
  UniPoly sum;
  for (const auto& [s, v] : e.coeffs) sum += v * exceptional_poly(kL1, s);
  CHECK(sum == pow(xi(kL1), 2));
}

TEST_CASE("recurrence matrices") {
  for (int ell = 1; ell <= 3; ++ell) {
    const FamilyParams p{Family::J1, ell, Rational(5, 2), Rational(1, 2)};
    const BispectralMatrices m = bispectral_matrices(p, 12);
    CHECK(m.k.bandwidth() <= 2 * ell);
    CHECK(m.xi.bandwidth() <= ell);
    CHECK(m.h.bandwidth() <= ell);
    CHECK(equal_on_block(m.k, m.xi_h, 12 - ell, 12 - ell));
    CHECK(equal_on_block(m.pi2_j, m.h_xi, 12 - 2 * ell, 12 - 2 * ell));
  }
  CHECK(jacobi_operator_factor_check(kL1, 10).all_passed());
  CHECK_FALSE(jacobi_operator_factor_check(kL1, 10, true).all_passed());
}

TEST_CASE("mirror norm ratios") {
  const NormRatios r = norm_ratio_consistency(kL1, 6);
  CHECK(r.report.all_passed());
  REQUIRE(r.hhat_ratio.size() == 7);
  CHECK(r.hhat_ratio[0] == 1);
  for (const auto& q : r.hhat_ratio) CHECK(q > 0);
  CHECK_FALSE(norm_ratio_consistency(kL1, 6, true).report.all_passed());
}

TEST_CASE("full bispectral verification") {
  CHECK(verify_bispectral(FamilyParams{Family::L2, 2, Rational(-1, 4), 0}, 12).all_passed());
  CHECK(verify_bispectral(FamilyParams{Family::J2, 3, 1, 3}, 12).all_passed());
  CHECK_FALSE(verify_bispectral(kL1, 12, true).all_passed());
}
