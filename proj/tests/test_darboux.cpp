#include <doctest.h>

#include <cmath>

#include "xopkit/darboux.hpp"
#include "xopkit/exceptional.hpp"

using namespace xop;

namespace {
const FamilyParams kL1{Family::L1, 1, 2, 0};
const FamilyParams kJ1{Family::J1, 1, 3, 1};

QuasiRational radial(int gauss, Rational c, const RationalFunction& body) { return {Coordinate::radial, gauss, c, 0, body}; }
QuasiRational trig(Rational c, Rational d, const RationalFunction& body) { return {Coordinate::trig, 0, c, d, body}; }
}  // namespace

TEST_CASE("quasi-rational derivatives") {
  // d/dx e^{-x^2/2} = -x e^{-x^2/2}
  const QuasiRational gauss = radial(-1, 0, Rational(1));
  const auto k = proportionality(qr_derivative(gauss), radial(-1, 1, Rational(1)));
  REQUIRE(k);
  CHECK(*k == -1);

  const auto k2 = proportionality(qr_derivative(radial(0, 2, Rational(1))), radial(0, 1, Rational(1)));
  REQUIRE(k2);
  CHECK(*k2 == 2);

  // d/dx (sin x cos x) = cos 2x = eta
  const QuasiRational d = qr_derivative(trig(1, 1, Rational(1)));
  CHECK(to_rational_function(d) == RationalFunction(UniPoly::x()));
}

TEST_CASE("quasi-rational evaluation matches the closed form") {
  const QuasiRational f = radial(-1, 3, RationalFunction(UniPoly{1, 2}));
  const double x = 0.7;
  CHECK(evaluate(f, x) == doctest::Approx(std::exp(-x * x / 2) * x * x * x * (1 + 2 * x * x)));
  const QuasiRational t = trig(2, 1, RationalFunction(UniPoly{0, 1}));
  CHECK(evaluate(t, x) == doctest::Approx(std::sin(x) * std::sin(x) * std::cos(x) * std::cos(2 * x)));
}

TEST_CASE("sums align exponents that differ by even integers") {
  const QuasiRational a = trig(3, 1, Rational(1));
  const QuasiRational b = trig(1, 1, Rational(1));
  const double x = 0.4;
  CHECK(evaluate(a + b, x) == doctest::Approx(evaluate(a, x) + evaluate(b, x)));
  CHECK_THROWS_AS(trig(1, 1, Rational(1)) + trig(2, 1, Rational(1)), std::invalid_argument);
}

TEST_CASE("A annihilates e^{+W}") {
  for (const FamilyParams& p : {kL1, kJ1, FamilyParams{Family::L2, 2, 2, 0}, FamilyParams{Family::J2, 2, 1, 3}}) {
    CAPTURE(describe(p));
    const QuasiRational e = exp_prepotential(prepotential(p), +1);
    CHECK(apply_darboux(p, e, DarbouxDir::A).is_zero());
    CHECK(apply_darboux(p, exp_prepotential(prepotential(p), -1), DarbouxDir::Adag).is_zero());
  }
}

TEST_CASE("plus-side eigenfunctions") {
  const QuasiRational l = phi_plus(kL1, 0);
  CHECK(l.gauss == -1);
  CHECK(l.c == 2);
  CHECK(proportionality(l, radial(-1, 2, Rational(1))));

  const QuasiRational j = phi_plus(kJ1, 0);
  CHECK(proportionality(j, trig(3, 3, Rational(1))));

  for (const FamilyParams& p : {kL1, kJ1, FamilyParams{Family::L2, 1, 2, 0}, FamilyParams{Family::J2, 1, 1, 3}})
    for (int n = 0; n <= 3; ++n) {
      CAPTURE(describe(p));
      CAPTURE(n);
      const QuasiRational f = phi_plus(p, n);
      const QuasiRational round = apply_darboux(p, apply_darboux(p, f, DarbouxDir::A), DarbouxDir::Adag);
      const auto k = proportionality(round, f);
      REQUIRE(k);
      CHECK(*k == eigenvalue(p, n, Tier::plus));
    }
}

TEST_CASE("Darboux image of the groundstate") {
  const QuasiRational img = apply_darboux(kL1, phi_plus(kL1, 0), DarbouxDir::A);
  const QuasiRational target = psi(kL1) * QuasiRational::of(Coordinate::radial, RationalFunction(UniPoly{Rational(7, 2), 1}));
  const auto k = proportionality(img, target);
  REQUIRE(k);
  CHECK(*k == -2);
}

TEST_CASE("potentials") {
  const RationalFunction v = potential(kL1, Tier::plus);
  // eta + 2/eta + 2g+6l-1
  CHECK(v == RationalFunction(UniPoly{2, 9, 1}, UniPoly{0, 1}));

  // coefficient of 1/sin^2 x: 2(1 - eta)^{-1} * (g+l-1)(g+l-2) with sin^2 = (1 - eta)/2
  const RationalFunction vj = potential(kJ1, Tier::plus);
  const RationalFunction residue = vj * RationalFunction(UniPoly{Rational(1, 2), Rational(-1, 2)});
  CHECK(residue(1) == 6);

  CHECK(potential(kL1, Tier::minus) - potential(kL1, Tier::os) == RationalFunction(Rational(14)));
  const FamilyParams j2{Family::J2, 1, 1, 3};
  CHECK(potential(j2, Tier::minus) - potential(j2, Tier::os) == RationalFunction(Rational(27)));
  CHECK(explicit_partner_potential(kL1) == potential(kL1, Tier::minus));
}

TEST_CASE("Hamiltonian identities") {
  for (const FamilyParams& p : {FamilyParams{Family::L1, 2, Rational(3, 2), 0}, FamilyParams{Family::L2, 1, 0, 0},
                                FamilyParams{Family::J2, 1, 1, 3}, FamilyParams{Family::J1, 3, Rational(5, 2), Rational(1, 2)}}) {
    CAPTURE(describe(p));
    CHECK(verify_hamiltonian_identities(p).all_passed());
    CHECK_FALSE(verify_hamiltonian_identities(p, true).all_passed());
    CHECK(verify_darboux_pair(p, 4).all_passed());
  }
}

TEST_CASE("shape invariance") {
  const Report r = shape_invariance_classical(Coordinate::radial, 2, 0);
  CHECK(r.all_passed());
  CHECK(shape_invariance_classical(Coordinate::trig, 3, 1).all_passed());
  CHECK_FALSE(shape_invariance_classical(Coordinate::trig, 3, 1, true).all_passed());
  CHECK(shape_invariance_check(FamilyParams{Family::L1, 2, Rational(3, 2), 0}).all_passed());
  CHECK(shape_invariance_check(FamilyParams{Family::J2, 2, 1, 3}).all_passed());
}

TEST_CASE("classical ladder constants") {
  const LadderResult down = ladder_action_classical(Coordinate::radial, 2, 0, 1, LadderDir::lower);
  REQUIRE(down.constant);
  CHECK(*down.constant == Rational(-5, 2));
  CHECK(down.expected == Rational(-5, 2));

  const LadderResult up = ladder_action_classical(Coordinate::radial, 2, 0, 0, LadderDir::raise);
  REQUIRE(up.constant);
  CHECK(*up.constant == -1);

  // 4 (n+a)(n+b)/(2n+a+b) with a = 5/2, b = 1/2, n = 1
  const LadderResult dpt = ladder_action_classical(Coordinate::trig, 3, 1, 1, LadderDir::lower);
  REQUIRE(dpt.constant);
  CHECK(*dpt.constant == Rational(21, 5));
  CHECK(dpt.expected == Rational(21, 5));
}

TEST_CASE("deformed ladders") {
  for (const FamilyParams& p : {kL1, kJ1}) {
    CAPTURE(describe(p));
    for (int n = 1; n <= 3; ++n) {
      const LadderResult up = ladder_action_deformed(p, n, LadderDir::raise);
      const LadderResult down = ladder_action_deformed(p, n, LadderDir::lower);
      REQUIRE(up.constant);
      REQUIRE(down.constant);
      CHECK(*up.constant != 0);
      CHECK(*down.constant != 0);
    }
    CHECK(verify_ladders(p, 4).all_passed());
    CHECK_FALSE(verify_ladders(p, 4, true).all_passed());
  }
}
