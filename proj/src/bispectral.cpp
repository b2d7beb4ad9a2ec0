#include "xopkit/bispectral.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "xopkit/exceptional.hpp"

namespace xop {

// ------------------------------------------------------------- BandMatrix

int BandMatrix::bandwidth() const {
  int w = -1;
  for (const auto& [rc, v] : entries_) w = std::max(w, std::abs(rc.first - rc.second));
  return w;
}

Rational BandMatrix::at(int row, int col) const {
  auto it = entries_.find({row, col});
  return it == entries_.end() ? Rational(0) : it->second;
}

void BandMatrix::set(int row, int col, const Rational& v) {
  if (row < 0 || col < 0 || row >= dim_ || col >= dim_) return;
  if (sgn(v) == 0) entries_.erase({row, col});
  else entries_[{row, col}] = v;
}

BandMatrix operator*(const BandMatrix& a, const BandMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("dimension mismatch");
  BandMatrix out(a.dim_, a.declared_ + b.declared_);
  std::map<std::pair<int, int>, Rational> acc;
  for (const auto& [ra, va] : a.entries_) {
    auto it = b.entries_.lower_bound({ra.second, 0});
    for (; it != b.entries_.end() && it->first.first == ra.second; ++it)
      acc[{ra.first, it->first.second}] += va * it->second;
  }
  for (const auto& [rc, v] : acc) out.set(rc.first, rc.second, v);
  return out;
}

BandMatrix operator+(const BandMatrix& a, const BandMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("dimension mismatch");
  BandMatrix out(a.dim_, std::max(a.declared_, b.declared_));
  out.entries_ = a.entries_;
  for (const auto& [rc, v] : b.entries_) out.set(rc.first, rc.second, out.at(rc.first, rc.second) + v);
  return out;
}

BandMatrix operator*(const Rational& k, const BandMatrix& a) {
  BandMatrix out(a.dim_, a.declared_);
  for (const auto& [rc, v] : a.entries_) out.set(rc.first, rc.second, k * v);
  return out;
}

BandMatrix BandMatrix::identity(int dim) {
  BandMatrix m(dim, 0);
  for (int i = 0; i < dim; ++i) m.set(i, i, 1);
  return m;
}

bool equal_on_block(const BandMatrix& a, const BandMatrix& b, int rows, int cols) {
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (a.at(r, c) != b.at(r, c)) return false;
  return true;
}

std::string to_csv(const BandMatrix& m) {
  std::ostringstream os;
  os << "row,col,num,den\n";
  for (const auto& [rc, v] : m.entries())
    os << rc.first << ',' << rc.second << ',' << v.get_num().get_str() << ',' << v.get_den().get_str() << '\n';
  return os.str();
}

// -------------------------------------------------------------- expansions

std::vector<Rational> expand_in_basis(const UniPoly& q, const ClassicalKind& basis) {
  std::vector<Rational> out(std::max(q.degree() + 1, 0));
  UniPoly rem = q;
  while (!rem.is_zero()) {
    const int d = rem.degree();
    const UniPoly b = classical_poly(basis, d);
    if (b.degree() != d) throw std::domain_error("basis polynomial of degree " + std::to_string(d) + " degenerates");
    const Rational c = rem.leading() / b.leading();
    out[d] = c;
    rem -= c * b;
  }
  return out;
}

namespace {

ClassicalKind offset_kind(const FamilyParams& p, int da, int db) {
  ClassicalKind k = undeformed_basis(p);
  if (auto* l = std::get_if<LaguerreKind>(&k)) {
    l->alpha += da;
  } else {
    auto& j = std::get<JacobiKind>(k);
    j.a += da;
    j.b += db;
  }
  return k;
}

bool banded_in(const FamilyParams& p, const ClassicalKind& kind, int probe) {
  try {
    for (int n = 0; n <= probe; ++n) {
      const auto c = expand_in_basis(exceptional_poly(p, n), kind);
      for (int s = 0; s < n - p.ell; ++s)
        if (sgn(c[s]) != 0) return false;
    }
  } catch (const std::domain_error&) {
    return false;
  }
  return true;
}

// P_{ell,s} for s = 0.. on demand.
class ExceptionalCache {
 public:
  explicit ExceptionalCache(const FamilyParams& p) : p_(p) {}
  const UniPoly& operator[](int s) {
    while (static_cast<int>(polys_.size()) <= s) polys_.push_back(exceptional_poly(p_, static_cast<int>(polys_.size())));
    return polys_[s];
  }

 private:
  FamilyParams p_;
  std::vector<UniPoly> polys_;
};

ExceptionalExpansion expand_cached(ExceptionalCache& cache, int ell, const UniPoly& q) {
  ExceptionalExpansion out;
  UniPoly rem = q;
  while (!rem.is_zero() && rem.degree() >= ell) {
    const int s = rem.degree() - ell;
    const UniPoly& e = cache[s];
    const Rational c = rem.leading() / e.leading();
    out.coeffs[s] = c;
    rem -= c * e;
  }
  out.remainder = rem;
  return out;
}

std::map<int, Rational> nonzero(const std::vector<Rational>& v) {
  std::map<int, Rational> out;
  for (int s = 0; s < static_cast<int>(v.size()); ++s)
    if (sgn(v[s]) != 0) out[s] = v[s];
  return out;
}

bool support_within(const std::map<int, Rational>& row, int n, int width) {
  for (const auto& [s, v] : row)
    if (std::abs(s - n) > width && sgn(v) != 0) return false;
  return true;
}

std::string describe_basis(const ShiftedBasis& b) {
  std::ostringstream os;
  os << describe(b.kind) << " offset (" << b.offset_a;
  if (std::holds_alternative<JacobiKind>(b.kind)) os << "," << b.offset_b;
  os << ")";
  return os.str();
}

}  // namespace

ShiftedBasis discover_basis(const FamilyParams& p, int radius, int probe) {
  validate(p);
  ShiftedBasis found{undeformed_basis(p)};
  const int bspan = is_jacobi(p.family) ? radius : 0;
  for (int da = -radius; da <= radius; ++da) {
    for (int db = -bspan; db <= bspan; ++db) {
      const ClassicalKind k = offset_kind(p, da, db);
      if (!banded_in(p, k, probe)) continue;
      if (found.candidates == 0) {
        found.kind = k;
        found.offset_a = da;
        found.offset_b = db;
      }
      ++found.candidates;
    }
  }
  if (found.candidates == 0) throw std::runtime_error("no banded classical basis found for " + describe(p));
  return found;
}

ExceptionalExpansion expand_in_exceptional(const FamilyParams& p, const UniPoly& q) {
  ExceptionalCache cache(p);
  return expand_cached(cache, p.ell, q);
}

std::map<int, Rational> expand_xhat(const FamilyParams& p, const ShiftedBasis& basis, int n) {
  return nonzero(expand_in_basis(exceptional_poly(p, n), basis.kind));
}

std::map<int, Rational> expand_pi2_classical(const FamilyParams& p, const ShiftedBasis& basis, int n) {
  const ExceptionalExpansion e = expand_in_exceptional(p, pow(xi(p), 2) * classical_poly(basis.kind, n));
  if (!e.remainder.is_zero()) throw std::domain_error("expansion does not exist");
  return e.coeffs;
}

BandMatrix jacobi_matrix(const ClassicalKind& basis, int N) {
  BandMatrix j(N, 1);
  for (int n = 0; n < N; ++n) {
    const Recurrence3 r = classical_recurrence(basis, n);
    j.set(n, n + 1, r.a);
    j.set(n, n, r.b);
    j.set(n, n - 1, r.c);
  }
  return j;
}

BandMatrix poly_of_matrix(const UniPoly& u, const BandMatrix& m) {
  BandMatrix acc(m.dim(), 0);
  for (int k = u.degree(); k >= 0; --k) acc = acc * m + u.coeff(k) * BandMatrix::identity(m.dim());
  BandMatrix out(m.dim(), std::max(u.degree(), 0) * m.declared_bandwidth());
  for (const auto& [rc, v] : acc.entries()) out.set(rc.first, rc.second, v);
  return out;
}

namespace {

BandMatrix k_from_cache(ExceptionalCache& cache, const FamilyParams& p, int N) {
  const UniPoly x2 = pow(xi(p), 2);
  BandMatrix k(N, 2 * p.ell);
  for (int n = 0; n < N; ++n) {
    const ExceptionalExpansion e = expand_cached(cache, p.ell, x2 * cache[n]);
    if (!e.remainder.is_zero()) throw std::domain_error("expansion does not exist");
    for (const auto& [s, v] : e.coeffs) k.set(n, s, v);
  }
  return k;
}

}  // namespace

BandMatrix k_matrix(const FamilyParams& p, int N) {
  validate(p);
  ExceptionalCache cache(p);
  return k_from_cache(cache, p, N);
}

BispectralMatrices bispectral_matrices(const FamilyParams& p, int N) {
  validate(p);
  BispectralMatrices m;
  m.basis = discover_basis(p);
  const int l = p.ell;
  ExceptionalCache cache(p);
  const UniPoly x2 = pow(xi(p), 2);
  m.xi = BandMatrix(N, l);
  m.h = BandMatrix(N, l);
  for (int n = 0; n < N; ++n) {
    for (const auto& [s, v] : nonzero(expand_in_basis(cache[n], m.basis.kind))) m.xi.set(n, s, v);
    const ExceptionalExpansion e = expand_cached(cache, l, x2 * classical_poly(m.basis.kind, n));
    if (!e.remainder.is_zero()) throw std::domain_error("expansion does not exist");
    for (const auto& [s, v] : e.coeffs) m.h.set(n, s, v);
  }
  m.k = k_from_cache(cache, p, N);
  m.xi_h = m.xi * m.h;
  m.h_xi = m.h * m.xi;
  m.pi2_j = poly_of_matrix(x2, jacobi_matrix(m.basis.kind, N));
  return m;
}

NormRatios norm_ratio_consistency(const FamilyParams& p, int smax, bool perturb) {
  validate(p);
  NormRatios out{Report("mirror", describe(p)), {}};
  const ShiftedBasis basis = discover_basis(p);
  const int l = p.ell;
  std::vector<std::map<int, Rational>> xi_rows;
  std::vector<std::map<int, Rational>> eta_rows;
  for (int n = 0; n <= smax + l; ++n) {
    xi_rows.push_back(expand_xhat(p, basis, n));
    eta_rows.push_back(expand_pi2_classical(p, basis, n));
  }
  auto entry = [](const std::map<int, Rational>& row, int k) {
    auto it = row.find(k);
    return it == row.end() ? Rational(0) : it->second;
  };
  std::vector<Rational> r(smax + 1);
  for (int s = 0; s <= smax; ++s) {
    bool consistent = true;
    bool have = false;
    for (int n = std::max(0, s - l); n <= s + l; ++n) {
      const Rational eta = entry(eta_rows[n], s);
      const Rational xis = entry(xi_rows[s], n);
      // the mirror relation forces both zero or both nonzero
      if (sgn(eta) == 0 || sgn(xis) == 0) {
        consistent = consistent && sgn(eta) == 0 && sgn(xis) == 0;
        continue;
      }
      Rational hn = norm_ratio(basis.kind, n);
      if (perturb && n == 1) hn += Rational(1, 1000);
      const Rational ratio = hn * xis / eta;
      if (!have) {
        r[s] = ratio;
        have = true;
      } else if (ratio != r[s]) {
        consistent = false;
      }
    }
    out.report.check("mirror ratio independent of n", consistent && have, s, have ? r[s].get_str() : "no entries");
  }
  for (int s = 0; s <= smax; ++s) {
    const Rational q = sgn(r[0]) != 0 ? r[s] / r[0] : Rational(0);
    out.hhat_ratio.push_back(q);
    out.report.check("hhat_s / hhat_0 positive", sgn(q) > 0, s, q.get_str());
  }
  return out;
}

Report jacobi_operator_factor_check(const FamilyParams& p, int N, bool perturb) {
  validate(p);
  Report rep("factor", describe(p) + " N=" + std::to_string(N));
  const int l = p.ell;
  if (N <= 2 * l) throw std::invalid_argument("N must exceed 2*ell");
  BispectralMatrices m = bispectral_matrices(p, N);
  if (perturb) m.pi2_j.set(0, 0, m.pi2_j.at(0, 0) + Rational(1, 1000));
  const int inner = N - 2 * l;
  rep.check("pi^2(J) has at most 4 ell + 1 diagonals", m.pi2_j.bandwidth() <= 2 * l);
  rep.check("pi^2(J) = H Xi on interior block", equal_on_block(m.pi2_j, m.h_xi, inner, inner), -1,
            "rows and columns < " + std::to_string(inner));
  rep.check("K = Xi H on interior block", equal_on_block(m.k, m.xi_h, N - l, N), -1,
            "rows < " + std::to_string(N - l));
  rep.check("refactorization changes the operator", !equal_on_block(m.k, m.pi2_j, inner, inner));
  return rep;
}

Report verify_bispectral(const FamilyParams& p, int N, bool perturb) {
  validate(p);
  Report rep("bispectral", describe(p) + " N=" + std::to_string(N));
  const int l = p.ell;
  BispectralMatrices m = bispectral_matrices(p, N);
  rep.check("banded classical basis is unique", m.basis.candidates == 1, -1, describe_basis(m.basis));
  if (perturb) m.k.set(0, 0, m.k.at(0, 0) + Rational(1, 1000));

  ExceptionalCache cache(p);
  const UniPoly x2 = pow(xi(p), 2);
  for (int n = 0; n < N; ++n) {
    // rows recomputed without truncation for the support checks
    const auto xrow = expand_xhat(p, m.basis, n);
    rep.check("Xi row support |n-s| <= ell", support_within(xrow, n, l), n);
    std::map<int, Rational> hrow;
    bool exists = true;
    try {
      hrow = expand_pi2_classical(p, m.basis, n);
    } catch (const std::domain_error&) {
      exists = false;
    }
    rep.check("xi^2 B_n expansion exists", exists, n);
    rep.check("H row support |n-s| <= ell", exists && support_within(hrow, n, l), n);
    const ExceptionalExpansion krow = expand_cached(cache, l, x2 * cache[n]);
    rep.check("K row support |n-s| <= 2 ell", krow.remainder.is_zero() && support_within(krow.coeffs, n, 2 * l), n);
  }
  rep.check("Xi declared band", m.xi.within_declared_band());
  rep.check("H declared band", m.h.within_declared_band());
  rep.check("K has at most 4 ell + 1 diagonals", m.k.bandwidth() <= 2 * l, -1, "bandwidth " + std::to_string(m.k.bandwidth()));

  const Rational eta0(1, 3);
  for (int n = 0; n + 2 * l < N; ++n) {
    UniPoly rhs;
    for (int s = std::max(0, n - 2 * l); s <= n + 2 * l; ++s) rhs += m.k.at(n, s) * cache[s];
    const UniPoly lhs = x2 * cache[n];
    rep.check("recurrence xi^2 P_n = sum K_ns P_s", lhs == rhs, n);
    rep.check("recurrence at eta = 1/3", lhs(eta0) == rhs(eta0), n);
  }
  rep.check("K = Xi H on interior block", equal_on_block(m.k, m.xi_h, N - l, N));
  rep.merge(jacobi_operator_factor_check(p, N, perturb));
  rep.merge(norm_ratio_consistency(p, std::max(0, N - 2 * l - 1), perturb).report);
  return rep;
}

}  // namespace xop
