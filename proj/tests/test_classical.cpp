#include <doctest.h>

#include "xopkit/classical.hpp"

using namespace xop;

TEST_CASE("Laguerre polynomials") {
  const Rational a(3, 2);
  CHECK(laguerre(0, a) == UniPoly{1});
  CHECK(laguerre(1, a) == UniPoly{a + 1, -1});
  CHECK(laguerre(2, a) == UniPoly{(a + 1) * (a + 2) / 2, -(a + 2), Rational(1, 2)});
  CHECK(laguerre(1, Rational(3, 2)) == UniPoly{Rational(5, 2), -1});
}

TEST_CASE("Jacobi polynomials") {
  CHECK(jacobi(0, 1, 2) == UniPoly{1});
  CHECK(jacobi(1, 1, 2) == UniPoly{Rational(-1, 2), Rational(5, 2)});
  const Rational a(5, 2), b(-7, 3);
  CHECK(jacobi(1, a, b) == UniPoly{(a - b) / 2, (a + b + 2) / 2});
  // the hypergeometric sum agrees with the recurrence where both exist
  for (int n = 0; n <= 6; ++n) CHECK(jacobi_hypergeometric(n, a, b) == jacobi(n, a, b));
}

TEST_CASE("Jacobi at parameters where the recurrence degenerates") {
  // a + b = -2 makes the n = 0 step divide by zero
  CHECK_THROWS_AS(jacobi(2, Rational(-1, 2), Rational(-3, 2)), DegenerateParameters);
  CHECK(jacobi_any(2, Rational(-1, 2), Rational(-3, 2)) == jacobi_hypergeometric(2, Rational(-1, 2), Rational(-3, 2)));
}

TEST_CASE("three-term recurrence reproduces the polynomials") {
  const ClassicalKind kinds[] = {LaguerreKind{Rational(1, 2)}, JacobiKind{1, 2}, JacobiKind{Rational(5, 2), Rational(1, 2)}};
  for (const auto& k : kinds) {
    for (int n = 1; n <= 6; ++n) {
      const Recurrence3 r = classical_recurrence(k, n);
      const UniPoly lhs = r.a * classical_poly(k, n + 1) + r.b * classical_poly(k, n) + r.c * classical_poly(k, n - 1);
      CHECK(lhs == UniPoly::x() * classical_poly(k, n));
    }
  }
}

TEST_CASE("norm ratios") {
  CHECK(norm_ratio(LaguerreKind{Rational(1, 2)}, 0) == 1);
  CHECK(norm_ratio(LaguerreKind{Rational(1, 2)}, 2) == Rational(15, 8));
  // exact closed form; a 64-node Gauss-Legendre integration gives the same
  CHECK(norm_ratio(JacobiKind{1, 2}, 1) == 1);
}

TEST_CASE("classical identity suite") {
  for (const ClassicalKind& k : {ClassicalKind{LaguerreKind{0}}, ClassicalKind{LaguerreKind{Rational(5, 2)}},
                                 ClassicalKind{JacobiKind{1, 2}}, ClassicalKind{JacobiKind{Rational(-1, 2), Rational(7, 2)}}}) {
    CAPTURE(describe(k));
    const Report ok = verify_classical_identities(k, 8);
    CHECK(ok.size() > 0);
    CHECK(ok.all_passed());
    CHECK_FALSE(verify_classical_identities(k, 8, true).all_passed());
  }
}
