#include "xopkit/numerics.hpp"

#include <Eigen/Dense>
#include <lapacke.h>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "xopkit/bispectral.hpp"
#include "xopkit/darboux.hpp"
#include "xopkit/exceptional.hpp"

namespace xop {

namespace {

// Monic recurrence p_{n+1} = (x - alpha_n) p_n - beta_n p_{n-1}.
void monic_jacobi(double a, double b, int order, Eigen::VectorXd& diag, Eigen::VectorXd& sub) {
  diag.resize(order);
  sub.resize(std::max(order - 1, 0));
  for (int n = 0; n < order; ++n) {
    const double s = 2.0 * n + a + b;
    diag[n] = n == 0 ? (b - a) / (a + b + 2) : (b * b - a * a) / (s * (s + 2));
  }
  for (int n = 1; n < order; ++n) {
    const double s = 2.0 * n + a + b;
    const double beta = n == 1 ? 4 * (1 + a) * (1 + b) / ((2 + a + b) * (2 + a + b) * (3 + a + b))
                               : 4.0 * n * (n + a) * (n + b) * (n + a + b) / (s * s * (s + 1) * (s - 1));
    sub[n - 1] = std::sqrt(beta);
  }
}

void monic_laguerre(double alpha, int order, Eigen::VectorXd& diag, Eigen::VectorXd& sub) {
  diag.resize(order);
  sub.resize(std::max(order - 1, 0));
  for (int n = 0; n < order; ++n) diag[n] = 2.0 * n + alpha + 1;
  for (int n = 1; n < order; ++n) sub[n - 1] = std::sqrt(n * (n + alpha));
}

}  // namespace

QuadratureRule gauss_rule(const ClassicalKind& kind, int order) {
  if (order < 1) throw std::domain_error("quadrature order must be positive");
  Eigen::VectorXd diag;
  Eigen::VectorXd sub;
  double log_mu0 = 0;
  if (const auto* l = std::get_if<LaguerreKind>(&kind)) {
    const double alpha = l->alpha.get_d();
    if (!(alpha > -1)) throw std::domain_error("Laguerre weight requires alpha > -1");
    monic_laguerre(alpha, order, diag, sub);
    log_mu0 = std::lgamma(alpha + 1);
  } else {
    const auto& j = std::get<JacobiKind>(kind);
    const double a = j.a.get_d();
    const double b = j.b.get_d();
    if (!(a > -1) || !(b > -1)) throw std::domain_error("Jacobi weight requires a > -1 and b > -1");
    monic_jacobi(a, b, order, diag, sub);
    log_mu0 = (a + b + 1) * std::log(2.0) + std::lgamma(a + 1) + std::lgamma(b + 1) - std::lgamma(a + b + 2);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("tridiagonal eigen-solve failed");

  // Weights from the Christoffel numbers 1/sum_k p_k(x)^2 of the orthonormal
  // polynomials; eigenvector components would carry absolute errors that
  // swamp the tiny weights far out on the Laguerre axis.
  QuadratureRule rule{kind, order, {}, {}, 0};
  for (int i = 0; i < order; ++i) {
    const double x = es.eigenvalues()[i];
    double prev = 0;
    double cur = std::exp(-0.5 * log_mu0);
    double sum = cur * cur;
    double log_scale = 0;  // prev and cur are stored divided by e^{log_scale}, sum by its square
    for (int k = 0; k + 1 < order; ++k) {
      const double back = k == 0 ? 0.0 : sub[k - 1];
      const double next = ((x - diag[k]) * cur - back * prev) / sub[k];
      prev = cur;
      cur = next;
      sum += cur * cur;
      if (std::abs(cur) > 1e100) {
        prev *= 1e-100;
        cur *= 1e-100;
        sum *= 1e-200;
        log_scale += 100 * std::log(10.0);
      }
    }
    const double w = std::exp(-std::log(sum) - 2 * log_scale);
    if (!(w > 0)) {
      ++rule.dropped;
      continue;
    }
    rule.nodes.push_back(es.eigenvalues()[i]);
    rule.weights.push_back(w);
  }
  return rule;
}

namespace {

std::vector<double> to_double(const UniPoly& p) {
  std::vector<double> c;
  for (const auto& q : p.coefficients()) c.push_back(q.get_d());
  return c;
}

double horner(const std::vector<double>& c, double x) {
  double s = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * x + *it;
  return s;
}

}  // namespace

OrthogonalityResult orthogonality_residual(const FamilyParams& p, int nmax, int order) {
  validate(p);
  const ShiftedBasis basis = discover_basis(p);
  const QuadratureRule rule = gauss_rule(basis.kind, order);
  const std::vector<double> x = to_double(xi(p));
  std::vector<std::vector<double>> polys;
  for (int n = 0; n <= nmax; ++n) polys.push_back(to_double(exceptional_poly(p, n)));

  // values at the nodes, each divided by xi
  std::vector<std::vector<double>> vals(nmax + 1, std::vector<double>(rule.nodes.size()));
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double t = rule.nodes[i];
    const double xv = horner(x, t);
    for (int n = 0; n <= nmax; ++n) vals[n][i] = horner(polys[n], t) / xv;
  }

  OrthogonalityResult out;
  out.gram.assign(nmax + 1, std::vector<double>(nmax + 1));
  for (int n = 0; n <= nmax; ++n)
    for (int m = 0; m <= n; ++m) {
      double s = 0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * vals[n][i] * vals[m][i];
      out.gram[n][m] = out.gram[m][n] = s;
    }
  out.residual.assign(nmax + 1, std::vector<double>(nmax + 1, 0.0));
  for (int n = 0; n <= nmax; ++n) {
    out.diag_ratio.push_back(out.gram[n][n] / out.gram[0][0]);
    for (int m = 0; m <= nmax; ++m) {
      if (m == n) continue;
      const double r = std::abs(out.gram[n][m]) / std::sqrt(out.gram[n][n] * out.gram[m][m]);
      out.residual[n][m] = r;
      out.max_offdiag = std::max(out.max_offdiag, r);
    }
  }
  return out;
}

EndpointCouplings endpoint_couplings(const FamilyParams& p, Tier side) {
  validate(p);
  const RationalFunction v = potential(p, side);
  // c / x^2 at x = 0 is c / eta; c / sin^2 x is 2c / (1 - eta); c / cos^2 x is 2c / (1 + eta)
  if (is_laguerre(p.family)) return {(v * RationalFunction(UniPoly::x()))(0), std::nullopt};
  const Rational at_zero = (v * RationalFunction(UniPoly{Rational(1, 2), Rational(-1, 2)}))(1);
  const Rational at_half_pi = (v * RationalFunction(UniPoly{Rational(1, 2), Rational(1, 2)}))(-1);
  return {at_zero, at_half_pi};
}

bool dirichlet_truncation_valid(const FamilyParams& p) {
  for (Tier side : {Tier::plus, Tier::minus}) {
    const EndpointCouplings c = endpoint_couplings(p, side);
    if (c.at_zero < Rational(3, 4)) return false;
    if (c.at_half_pi && *c.at_half_pi < Rational(3, 4)) return false;
  }
  return true;
}

SpectrumResult fd_spectrum(const FamilyParams& p, Tier side, int grid, int levels) {
  validate(p);
  if (grid < 1000) throw std::invalid_argument("grid must be at least 1000");
  if (side == Tier::os) throw std::invalid_argument("side must be plus or minus");
  if (levels < 1 || levels >= grid) throw std::invalid_argument("levels out of range");
  const RationalFunction v = potential(p, side);
  const std::vector<double> vn = to_double(v.num());
  const std::vector<double> vd = to_double(v.den());
  const bool radial = is_laguerre(p.family);

  SpectrumResult out;
  out.grid = grid;
  if (radial) {
    const double emax = eigenvalue(p, levels - 1, Tier::plus).get_d();
    out.hi = std::max(8.0, 2 * std::sqrt(emax));
    out.lo = out.hi / grid;
  } else {
    const double half_pi = std::numbers::pi / 2;
    out.lo = half_pi / grid;
    out.hi = half_pi - out.lo;
  }
  const double h = (out.hi - out.lo) / grid;
  const int m = grid - 1;  // interior nodes
  std::vector<double> diag(m);
  std::vector<double> sub(m - 1, -1.0 / (h * h));
  for (int i = 0; i < m; ++i) {
    const double x = out.lo + (i + 1) * h;
    const double eta = radial ? x * x : std::cos(2 * x);
    diag[i] = 2.0 / (h * h) + horner(vn, eta) / horner(vd, eta);
  }
  // bisection for the lowest `levels` eigenvalues only
  lapack_int found = 0;
  std::vector<double> w(m);
  std::vector<lapack_int> ifail(m);
  const lapack_int info = LAPACKE_dstevx(LAPACK_COL_MAJOR, 'N', 'I', m, diag.data(), sub.data(), 0, 0, 1, levels,
                                         2 * LAPACKE_dlamch('S'), &found, w.data(), nullptr, 1, ifail.data());
  if (info != 0 || found != levels) throw std::runtime_error("tridiagonal eigen-solve failed");
  out.eigenvalues.assign(w.begin(), w.begin() + levels);
  return out;
}

}  // namespace xop
