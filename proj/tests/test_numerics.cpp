#include <doctest.h>

#include <cmath>

#include "xopkit/bispectral.hpp"
#include "xopkit/numerics.hpp"

using namespace xop;

TEST_CASE("two-point Gauss-Legendre") {
  const QuadratureRule r = gauss_rule(JacobiKind{0, 0}, 2);
  REQUIRE(r.nodes.size() == 2);
  CHECK(r.nodes[0] == doctest::Approx(-1 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(r.nodes[1] == doctest::Approx(1 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(r.weights[0] == doctest::Approx(1).epsilon(1e-14));
  CHECK(r.weights[1] == doctest::Approx(1).epsilon(1e-14));
}

TEST_CASE("Gauss rules integrate polynomials exactly") {
  const QuadratureRule lag = gauss_rule(LaguerreKind{0}, 8);
  CHECK(std::abs(integrate(lag, [](double x) { return x; }) - 1.0) < 1e-13);
  // Beta integral 2^4 B(2,3) = 4/3
  const QuadratureRule jac = gauss_rule(JacobiKind{1, 2}, 4);
  CHECK(std::abs(integrate(jac, [](double) { return 1.0; }) - 4.0 / 3) < 1e-13);
  // Gamma(7/2) for x^{5/2} e^{-x}: int x^{5/2} e^{-x} = 15 sqrt(pi) / 8
  const QuadratureRule half = gauss_rule(LaguerreKind{Rational(5, 2)}, 10);
  CHECK(std::abs(integrate(half, [](double) { return 1.0; }) - 15 * std::sqrt(M_PI) / 8) < 1e-12);
  CHECK_THROWS_AS(gauss_rule(LaguerreKind{-1}, 4), std::domain_error);
  CHECK_THROWS_AS(gauss_rule(JacobiKind{0, 0}, 0), std::domain_error);
}

TEST_CASE("exceptional orthogonality") {
  const FamilyParams j1{Family::J1, 1, 3, 1};
  const OrthogonalityResult r = orthogonality_residual(j1, 6, 200);
  CHECK(r.max_offdiag < 1e-10);
  for (int n = 0; n <= 6; ++n) CHECK(r.gram[n][n] > 0);

  const NormRatios exact = norm_ratio_consistency(j1, 6);
  for (int n = 0; n <= 6; ++n) {
    const double want = exact.hhat_ratio[n].get_d();
    CHECK(std::abs(r.diag_ratio[n] - want) <= 1e-8 * std::abs(want));
  }

  const OrthogonalityResult l = orthogonality_residual(FamilyParams{Family::L2, 2, Rational(-1, 4), 0}, 6, 300);
  CHECK(l.max_offdiag < 1e-6);
}

TEST_CASE("residuals shrink with quadrature order") {
  const FamilyParams p{Family::L1, 3, Rational(3, 2), 0};
  const double r10 = orthogonality_residual(p, 6, 10).max_offdiag;
  const double r100 = orthogonality_residual(p, 6, 100).max_offdiag;
  CHECK(r100 < r10);
}

TEST_CASE("finite-difference spectrum") {
  const FamilyParams l1{Family::L1, 1, 2, 0};
  const SpectrumResult plus = fd_spectrum(l1, Tier::plus, 4000, 4);
  const SpectrumResult minus = fd_spectrum(l1, Tier::minus, 4000, 4);
  const double exact[] = {14, 18, 22, 26};
  for (int n = 0; n < 4; ++n) {
    CHECK(std::abs(plus.eigenvalues[n] - exact[n]) < 1e-2 * exact[n]);
    CHECK(std::abs(minus.eigenvalues[n] - exact[n]) < 1e-2 * exact[n]);
  }
  const SpectrumResult j = fd_spectrum(FamilyParams{Family::J1, 1, 3, 1}, Tier::plus, 2000, 4);
  const double ej[] = {27, 55, 91, 135};
  for (int n = 0; n < 4; ++n) CHECK(std::abs(j.eigenvalues[n] - ej[n]) < 1e-2 * ej[n]);

  CHECK_THROWS_AS(fd_spectrum(l1, Tier::plus, 999, 4), std::invalid_argument);
  CHECK_THROWS_AS(fd_spectrum(l1, Tier::os, 2000, 4), std::invalid_argument);
}

TEST_CASE("endpoint couplings decide where Dirichlet truncation is valid") {
  // plus side of L1 at g=2, l=1: (g+l-1)(g+l-2) = 2
  CHECK(endpoint_couplings(FamilyParams{Family::L1, 1, 2, 0}, Tier::plus).at_zero == 2);
  // minus side of L2: (g+l)(g+l-1), which is -3/16 at g=-1/4, l=1
  const FamilyParams weak{Family::L2, 1, Rational(-1, 4), 0};
  CHECK(endpoint_couplings(weak, Tier::minus).at_zero == Rational(-3, 16));
  CHECK_FALSE(dirichlet_truncation_valid(weak));
  CHECK(dirichlet_truncation_valid(FamilyParams{Family::L2, 2, Rational(-1, 4), 0}));
  const EndpointCouplings j = endpoint_couplings(FamilyParams{Family::J1, 1, 3, 1}, Tier::plus);
  CHECK(j.at_zero == 6);
  REQUIRE(j.at_half_pi);
  CHECK(dirichlet_truncation_valid(FamilyParams{Family::J1, 1, 3, 1}));
}

TEST_CASE("finite-difference error falls by about 4 when the grid doubles") {
  const FamilyParams p{Family::J2, 2, 1, 3};
  double err[2] = {0, 0};
  for (int k = 0; k < 2; ++k) {
    const SpectrumResult s = fd_spectrum(p, Tier::minus, 2000 << k, 4);
    for (int n = 0; n < 4; ++n) err[k] += std::abs(s.eigenvalues[n] - eigenvalue(p, n, Tier::plus).get_d());
  }
  CHECK(err[0] / err[1] > 3);
  CHECK(err[0] / err[1] < 5);
}
