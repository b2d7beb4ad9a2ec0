#include <doctest.h>

#include <random>

#include "xopkit/ratpoly.hpp"

using namespace xop;

namespace {
const UniPoly eta = UniPoly::x();
const UniPoly one = UniPoly::constant(1);
}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/2") == Rational(3, 2));
  CHECK(parse_rational("-1/4") == Rational(-1, 4));
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK(to_string(make_rational(-3, 6)) == "-1/2");
}

TEST_CASE("pochhammer and binomial") {
  CHECK(pochhammer(Rational(3, 2), 2) == Rational(15, 4));
  CHECK(pochhammer(5, 0) == 1);
  CHECK(binomial(Rational(1, 2), 2) == Rational(-1, 8));
  CHECK(factorial(5) == 120);
}

TEST_CASE("polynomial arithmetic") {
  CHECK((one + eta) * (one - eta) == one - eta * eta);
  CHECK(pow(eta, 3).derivative() == UniPoly::monomial(3, 2));
  const DivRem qr = divrem(eta * eta + one, eta);
  CHECK(qr.quotient == eta);
  CHECK(qr.remainder == one);
  CHECK_THROWS(divrem(eta, UniPoly()));
  CHECK(UniPoly().degree() == -1);
  CHECK((eta - eta).is_zero());
}

TEST_CASE("gcd and square-free part") {
  const UniPoly a = (eta - one) * (eta + UniPoly::constant(2));
  const UniPoly b = (eta - one) * (eta - UniPoly::constant(3));
  CHECK(gcd(a, b) == eta - one);
  CHECK(square_free(pow(eta - one, 3) * (eta + one)) == monic((eta - one) * (eta + one)));
}

TEST_CASE("composition and evaluation") {
  const UniPoly p{1, 2, 3};  // 1 + 2x + 3x^2
  CHECK(p(Rational(1, 2)) == Rational(11, 4));
  CHECK(p.eval(0.5) == doctest::Approx(2.75));
  CHECK(p.compose_affine(-1, 0) == UniPoly{1, -2, 3});
  CHECK(p.compose(eta + one) == UniPoly{6, 8, 3});
}

TEST_CASE("rational function normalization") {
  CHECK(rf_normalize(eta * eta - one, eta - one) == RationalFunction(eta + one));
  const RationalFunction r = rf_normalize(UniPoly{0, 2}, UniPoly{2});
  CHECK(r.num() == eta);
  CHECK(r.den() == one);
  CHECK(r.den().leading() == 1);
  CHECK_THROWS(rf_normalize(eta, UniPoly()));
}

TEST_CASE("rational function cancellation law (seeded)") {
  const unsigned seed = 20261019;
  INFO("seed " << seed);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coef(-9, 9);
  auto random_poly = [&](int deg) {
    std::vector<Rational> c;
    for (int k = 0; k < deg; ++k) c.push_back(coef(rng));
    const int lead = coef(rng);
    c.push_back(lead == 0 ? 1 : lead);
    return UniPoly(c);
  };
  for (int trial = 0; trial < 40; ++trial) {
    const UniPoly xi = random_poly(1 + trial % 3);
    const UniPoly q = random_poly(trial % 4);
    const RationalFunction r = rf_normalize(xi * q, xi);
    CHECK(r.is_polynomial());
    CHECK(r.num() == q);
    const RationalFunction s = RationalFunction(q, xi);
    CHECK((s * RationalFunction(xi)).num() == q);
    CHECK(((s + s) - s - s).is_zero());
  }
}

TEST_CASE("Sturm root counting") {
  CHECK(count_roots_in_interval(eta * eta - one, -2, 2) == 2);
  CHECK(count_roots_in_interval(eta * eta - one, -1, 1) == 0);
  CHECK(count_roots_in_interval(eta * eta - one, -1, 1, Interval::closed) == 2);
  CHECK(count_roots_in_interval(UniPoly{Rational(5, 2), 1}, 0, 1000000) == 0);
  CHECK(count_roots_in_interval(UniPoly{Rational(5, 2), 1}, -1, 1) == 0);
  CHECK(count_roots_above(UniPoly{-2, 0, 1}, 0) == 1);
  CHECK(count_roots_in_interval(pow(eta - UniPoly::constant(Rational(1, 3)), 2) * (eta + one), -2, 2) == 2);
}
