#include <doctest.h>

#include "xopkit/exceptional.hpp"

using namespace xop;

namespace {
const FamilyParams kL1{Family::L1, 1, 2, 0};
const FamilyParams kJ1{Family::J1, 1, 3, 1};
}  // namespace

TEST_CASE("exceptional polynomials at low degree") {
  CHECK(exceptional_poly(kL1, 0) == UniPoly{Rational(7, 2), 1});
  // the defining Laguerre factor is L_1^{(3/2)} = 5/2 - eta
  CHECK(exceptional_poly(kL1, 1) == UniPoly{Rational(45, 4), 0, -1});
  CHECK(exceptional_poly(kJ1, 0) == UniPoly{Rational(7, 2), 1});
}

TEST_CASE("degree structure") {
  for (Family f : {Family::L1, Family::L2, Family::J1, Family::J2})
    for (int ell = 1; ell <= 3; ++ell) {
      const FamilyParams p{f, ell, f == Family::J2 ? Rational(1) : Rational(3), f == Family::J2 ? Rational(3) : Rational(1)};
      CAPTURE(describe(p));
      for (int n = 0; n <= 5; ++n) CHECK(exceptional_poly(p, n).degree() == n + ell);
      CHECK(verify_degree_structure(p, 5).all_passed());
      CHECK_FALSE(verify_degree_structure(p, 5, true).all_passed());
    }
}

TEST_CASE("alternate closed forms agree") {
  for (const FamilyParams& p : {kL1, FamilyParams{Family::L1, 2, Rational(3, 2), 0}, kJ1})
    for (int n = 0; n <= 4; ++n) {
      const UniPoly ref = exceptional_poly(p, n);
      for (const AlternateForm& a : alternate_forms(p, n)) {
        CAPTURE(a.name);
        CAPTURE(n);
        // proportional: same monic polynomial
        CHECK(monic(a.poly) == monic(ref));
      }
    }
}

TEST_CASE("Fuchsian eigen-equation") {
  for (int n = 0; n <= 8; ++n) {
    const UniPoly q = exceptional_poly(kL1, n);
    CHECK(fuchsian_apply(kL1, q) == RationalFunction(eigenvalue(kL1, n, Tier::os) * q));
  }
  CHECK(verify_sl_eigen(kL1, 8).all_passed());
  CHECK(verify_sl_eigen(FamilyParams{Family::J1, 2, 3, 1}, 6).all_passed());
  CHECK_FALSE(verify_sl_eigen(kL1, 3, true).all_passed());
}

TEST_CASE("the operator does not preserve plain polynomial spaces") {
  const RationalFunction img = fuchsian_apply(kL1, UniPoly{1});
  CHECK_FALSE(img.is_polynomial());
  const UniPoly x2 = pow(xi(kL1), 2);
  const RationalFunction inv = fuchsian_apply(kL1, x2);
  REQUIRE(inv.is_polynomial());
  CHECK(inv.num().degree() <= 2);
}

TEST_CASE("invariant subspaces") {
  CHECK(invariant_subspace_check(kL1, 6).all_passed());
  CHECK(invariant_subspace_check(FamilyParams{Family::J1, 2, 3, 1}, 4).all_passed());
  CHECK_FALSE(invariant_subspace_check(kL1, 6, true).all_passed());
}

TEST_CASE("match with the Darboux image") {
  const auto c0 = darboux_constant(kL1, 0);
  REQUIRE(c0);
  CHECK(*c0 == -2);
  CHECK(darboux_constant(FamilyParams{Family::L2, 1, 2, 0}, 1));
  CHECK(darboux_constant(FamilyParams{Family::J2, 1, 1, 3}, 2));
  CHECK(verify_match_darboux(kJ1, 6).all_passed());
  CHECK_FALSE(verify_match_darboux(kJ1, 3, true).all_passed());
}
