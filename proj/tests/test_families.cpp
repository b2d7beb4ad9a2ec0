#include <doctest.h>

#include "xopkit/families.hpp"

using namespace xop;

namespace {
FamilyParams L(Family f, int ell, Rational g) { return {f, ell, g, 0}; }
FamilyParams J(Family f, int ell, Rational g, Rational h) { return {f, ell, g, h}; }
}  // namespace

TEST_CASE("parameter validation") {
  CHECK_NOTHROW(validate(L(Family::L1, 1, 2)));
  CHECK_NOTHROW(validate(L(Family::L2, 3, Rational(-1, 4))));
  CHECK_THROWS_AS(validate(J(Family::J1, 1, 1, 1)), InvalidParameters);
  REQUIRE(violation(J(Family::J1, 1, 1, 1)));
  CHECK(violation(J(Family::J1, 1, 1, 1))->find("requires g>h") != std::string::npos);
  CHECK(violation(L(Family::L1, 0, 2)));
  CHECK_FALSE(violation(J(Family::J2, 1, 1, 3)));
}

TEST_CASE("family tags round-trip") {
  for (Family f : {Family::L1, Family::L2, Family::J1, Family::J2}) CHECK(parse_family(to_string(f)) == f);
  CHECK_THROWS(parse_family("L3"));
}

TEST_CASE("deformation polynomial") {
  CHECK(xi(L(Family::L1, 1, 2)) == UniPoly{Rational(5, 2), 1});
  CHECK(xi(L(Family::L2, 1, 2)) == UniPoly{Rational(-5, 2), -1});
  CHECK(xi(J(Family::J1, 1, 3, 1)) == UniPoly{Rational(5, 2), 1});
  CHECK(xi_shifted(J(Family::J1, 1, 3, 1)) == UniPoly{Rational(7, 2), 1});
  // L2 of degree 2 at g = 2
  CHECK(xi(L(Family::L1, 2, 2)) == UniPoly{Rational(63, 8), Rational(9, 2), Rational(1, 2)});
}

TEST_CASE("positive expansion and zero-freeness") {
  const XiStructure l1 = xi_structure_check(L(Family::L1, 2, 2));
  CHECK(l1.report.all_passed());
  CHECK(l1.roots_inside == 0);
  CHECK(xi_positive_expansion(L(Family::L1, 2, 2)) == UniPoly{Rational(63, 8), Rational(9, 2), Rational(1, 2)});

  const XiStructure j1 = xi_structure_check(J(Family::J1, 1, 3, 1));
  CHECK(j1.report.all_passed());
  CHECK(j1.roots_inside == 0);

  const XiStructure l2 = xi_structure_check(L(Family::L2, 1, 2));
  CHECK(l2.report.all_passed());
  CHECK(l2.sign == -1);
  CHECK(xi_positive_expansion(L(Family::L2, 1, 2)) == UniPoly{Rational(5, 2), 1});

  for (Family f : {Family::L1, Family::L2, Family::J1, Family::J2})
    for (int ell = 1; ell <= 3; ++ell) {
      const FamilyParams p = is_jacobi(f) ? J(f, ell, Rational(7, 2), Rational(3, 2)) : L(f, ell, Rational(3, 2));
      const FamilyParams q = f == Family::J2 ? J(f, ell, Rational(3, 2), Rational(7, 2)) : p;
      CAPTURE(describe(q));
      CHECK(xi_structure_check(q).roots_inside == 0);
    }
}

TEST_CASE("eigenvalues") {
  CHECK(eigenvalue(L(Family::L1, 1, 2), 3, Tier::os) == 12);
  CHECK(eigenvalue(L(Family::L1, 3, Rational(5, 2)), 3, Tier::os) == 12);
  CHECK(eigenvalue(J(Family::J1, 2, 3, 1), 1, Tier::os) == 36);
  CHECK(eigenvalue(L(Family::L1, 1, 2), 0, Tier::plus) == 14);
  for (int n = 0; n < 4; ++n) CHECK(eigenvalue(J(Family::J1, 1, 3, 1), n, Tier::plus) == 4 * n * (n + 6) + 27);
  const FamilyParams p = J(Family::J2, 2, 1, 3);
  for (int n = 0; n < 5; ++n) {
    CHECK(eigenvalue(p, n, Tier::minus) == eigenvalue(p, n, Tier::plus));
    CHECK(eigenvalue(p, n, Tier::plus) - eigenvalue(p, n, Tier::os) == os_shift(p));
  }
  CHECK(parse_tier("minus") == Tier::minus);
}

TEST_CASE("Fuchsian coefficients") {
  const SLCoeffs l1 = sl_coeffs(L(Family::L1, 2, 2));
  CHECK(l1.d1 == 1);
  CHECK(l1.d2 == UniPoly{1});
  CHECK(l1.etilde == -8);
  CHECK(sl_coeffs(J(Family::J1, 2, 3, 1)).etilde == 24);
  const SLCoeffs l2 = sl_coeffs(L(Family::L2, 1, 2));
  CHECK(l2.d1 == Rational(5, 2));
  CHECK(l2.d2 == UniPoly{0, -1});
}

TEST_CASE("undeformed basis") {
  const auto b = undeformed_basis(L(Family::L1, 1, 2));
  REQUIRE(std::holds_alternative<LaguerreKind>(b));
  CHECK(std::get<LaguerreKind>(b).alpha == Rational(3, 2));
  const auto j = undeformed_basis(J(Family::J1, 1, 3, 1));
  REQUIRE(std::holds_alternative<JacobiKind>(j));
  CHECK(std::get<JacobiKind>(j).a == Rational(5, 2));
  CHECK(std::get<JacobiKind>(j).b == Rational(5, 2));
}
