#include "xopkit/classical.hpp"

#include <sstream>

namespace xop {

namespace {

const UniPoly kX = UniPoly::x();

bool vanishes(const Rational& q) { return sgn(q) == 0; }

}  // namespace

UniPoly laguerre(int n, const Rational& alpha) {
  if (n < 0) return {};
  UniPoly prev;
  UniPoly cur = UniPoly::constant(1);
  // (k+1) L_{k+1} = (2k+alpha+1-x) L_k - (k+alpha) L_{k-1}
  for (int k = 0; k < n; ++k) {
    UniPoly next = (UniPoly{Rational(2 * k + 1 + alpha), -1} * cur - Rational(k + alpha) * prev) *
                   Rational(1, k + 1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Recurrence3 laguerre_recurrence(int n, const Rational& alpha) {
  return {Rational(-(n + 1)), Rational(2 * n + alpha + 1), Rational(-(n + alpha))};
}

Recurrence3 jacobi_recurrence(int n, const Rational& a, const Rational& b) {
  const Rational s = 2 * n + a + b;
  if (vanishes(s + 1) || vanishes(s + 2) || (n > 0 && vanishes(s)))
    throw DegenerateParameters("degenerate Jacobi parameters");
  Recurrence3 r;
  r.a = 2 * (n + 1) * (n + a + b + 1) / ((s + 1) * (s + 2));
  if (n == 0) {
    // B_0 and C_0 carry a removable (a+b) factor.
    r.b = (b - a) / (s + 2);
    r.c = 0;
  } else {
    r.b = (b * b - a * a) / (s * (s + 2));
    r.c = 2 * (n + a) * (n + b) / (s * (s + 1));
  }
  return r;
}

UniPoly jacobi(int n, const Rational& a, const Rational& b) {
  if (n < 0) return {};
  UniPoly prev;
  UniPoly cur = UniPoly::constant(1);
  for (int k = 0; k < n; ++k) {
    Recurrence3 r = jacobi_recurrence(k, a, b);
    if (vanishes(r.a)) throw DegenerateParameters("degenerate Jacobi parameters");
    UniPoly next = ((kX - UniPoly::constant(r.b)) * cur - r.c * prev) * Rational(1 / r.a);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

UniPoly jacobi_hypergeometric(int n, const Rational& a, const Rational& b) {
  if (n < 0) return {};
  const UniPoly xm = UniPoly{Rational(-1, 2), Rational(1, 2)};
  const UniPoly xp = UniPoly{Rational(1, 2), Rational(1, 2)};
  UniPoly sum;
  for (int k = 0; k <= n; ++k) {
    Rational c = binomial(n + a, n - k) * binomial(n + b, k);
    if (vanishes(c)) continue;
    sum += c * (pow(xm, k) * pow(xp, n - k));
  }
  return sum;
}

UniPoly jacobi_any(int n, const Rational& a, const Rational& b) {
  try {
    return jacobi(n, a, b);
  } catch (const DegenerateParameters&) {
    return jacobi_hypergeometric(n, a, b);
  }
}

UniPoly classical_poly(const ClassicalKind& kind, int n) {
  if (const auto* l = std::get_if<LaguerreKind>(&kind)) return laguerre(n, l->alpha);
  const auto& j = std::get<JacobiKind>(kind);
  return jacobi_any(n, j.a, j.b);
}

Recurrence3 classical_recurrence(const ClassicalKind& kind, int n) {
  if (const auto* l = std::get_if<LaguerreKind>(&kind)) return laguerre_recurrence(n, l->alpha);
  const auto& j = std::get<JacobiKind>(kind);
  return jacobi_recurrence(n, j.a, j.b);
}

Rational norm_ratio(const ClassicalKind& kind, int n) {
  if (const auto* l = std::get_if<LaguerreKind>(&kind)) {
    if (!(l->alpha > -1)) throw std::domain_error("Laguerre norm requires alpha > -1");
    return pochhammer(l->alpha + 1, n) / factorial(n);
  }
  const auto& j = std::get<JacobiKind>(kind);
  if (!(j.a > -1) || !(j.b > -1)) throw std::domain_error("Jacobi norm requires a > -1 and b > -1");
  // h_n = 2^{a+b+1} G(n+a+1) G(n+b+1) / (n! (2n+a+b+1) G(n+a+b+1)); the ratio
  // collapses to Pochhammer symbols. G(n+a+b+1)/G(a+b+1) is rewritten through
  // G(n+a+b+2)/G(a+b+2) so that a+b+1 = 0 needs no special case.
  const Rational ab = j.a + j.b;
  const Rational num = pochhammer(j.a + 1, n) * pochhammer(j.b + 1, n);
  const Rational den = factorial(n) * pochhammer(ab + 2, n);
  if (n == 0) return 1;
  return num / den * (ab + 1 + n) / (2 * n + ab + 1);
}

std::string describe(const ClassicalKind& kind) {
  std::ostringstream os;
  if (const auto* l = std::get_if<LaguerreKind>(&kind)) {
    os << "Laguerre(alpha=" << l->alpha.get_str() << ")";
  } else {
    const auto& j = std::get<JacobiKind>(kind);
    os << "Jacobi(a=" << j.a.get_str() << ",b=" << j.b.get_str() << ")";
  }
  return os.str();
}

namespace {

void laguerre_identities(Report& rep, const Rational& alpha, int nmax, bool perturb) {
  const Rational bump = perturb ? Rational(1, 1000) : Rational(0);
  for (int n = 0; n <= nmax; ++n) {
    const UniPoly l = laguerre(n, alpha);
    rep.check("degree", l.degree() == n, n);
    rep.check("leading coefficient (-1)^n/n!", l.leading() == Rational(n % 2 ? -1 : 1) / factorial(n), n);
    // x L'' + (alpha+1-x) L' + n L = 0
    const UniPoly ode = kX * l.derivative().derivative() + UniPoly{alpha + 1 + bump, -1} * l.derivative() +
                        Rational(n) * l;
    rep.check("Laguerre ODE", ode.is_zero(), n, to_string(ode));

    const auto r = laguerre_recurrence(n, alpha);
    const UniPoly rec = r.a * laguerre(n + 1, alpha) + r.b * l + r.c * laguerre(n - 1, alpha) - kX * l;
    rep.check("three-term recurrence", rec.is_zero(), n);

    const UniPoly diff = l.derivative() + laguerre(n - 1, alpha + 1);
    rep.check("differentiation formula", diff.is_zero(), n);

    const UniPoly ger = l - laguerre(n, alpha + 1) + laguerre(n - 1, alpha + 1);
    rep.check("Geronimus transformation", ger.is_zero(), n);
  }
}

void jacobi_identities(Report& rep, const Rational& a, const Rational& b, int nmax, bool perturb) {
  const Rational bump = perturb ? Rational(1, 1000) : Rational(0);
  for (int n = 0; n <= nmax; ++n) {
    const UniPoly p = jacobi_any(n, a, b);
    rep.check("degree", p.degree() == n, n);
    // (1-x^2) P'' + (b-a-(a+b+2)x) P' + n(n+a+b+1) P = 0
    const UniPoly ode = UniPoly{1, 0, -1} * p.derivative().derivative() +
                        UniPoly{b - a, -(a + b + 2) + bump} * p.derivative() + Rational(n * (n + a + b + 1)) * p;
    rep.check("Jacobi ODE", ode.is_zero(), n, to_string(ode));

    try {
      const UniPoly rp = jacobi(n, a, b);
      rep.check("recurrence equals hypergeometric sum", rp == jacobi_hypergeometric(n, a, b), n);
    } catch (const DegenerateParameters&) {
      // only the hypergeometric construction exists here
    }

    try {
      const auto r = jacobi_recurrence(n, a, b);
      const UniPoly rec = r.a * jacobi_any(n + 1, a, b) + r.b * p + r.c * jacobi_any(n - 1, a, b) - kX * p;
      rep.check("three-term recurrence", rec.is_zero(), n);
    } catch (const DegenerateParameters&) {
    }

    const Rational s = 2 * n + a + b;
    // Christoffel: (2n+a+b+1)(1+x) P^{(a,b)} = 2(n+1) P_{n+1}^{(a,b-1)} + 2(n+b) P_n^{(a,b-1)}
    const UniPoly ct = Rational(s + 1) * (UniPoly{1, 1} * p) - Rational(2 * (n + 1)) * jacobi_any(n + 1, a, b - 1) -
                       Rational(2 * (n + b)) * jacobi_any(n, a, b - 1);
    rep.check("Christoffel transformation", ct.is_zero(), n);

    // Geronimus: (2n+a+b+1) P^{(a,b)} = (n+a+b+1) P_n^{(a+1,b)} - (n+b) P_{n-1}^{(a+1,b)}
    const UniPoly gt = Rational(s + 1) * p - Rational(n + a + b + 1) * jacobi_any(n, a + 1, b) +
                       Rational(n + b) * jacobi_any(n - 1, a + 1, b);
    rep.check("Geronimus transformation", gt.is_zero(), n);

    // (1+x) P^{(a,b)} = alpha_n P_{n+1}^{(a+1,b-1)} + beta_n P_n^{(a+1,b-1)} + gamma_n P_{n-1}^{(a+1,b-1)}
    if (sgn(s) != 0 && sgn(s + 1) != 0 && sgn(s + 2) != 0) {
      const Rational al = 2 * (n + 1) * (n + a + b + 1) / ((s + 1) * (s + 2));
      const Rational be = 2 * (a + b) * (n + b) / (s * (s + 2));
      const Rational ga = -2 * (n + b) * (n + b - 1) / (s * (s + 1));
      const UniPoly onex = UniPoly{1, 1} * p - al * jacobi_any(n + 1, a + 1, b - 1) -
                           be * jacobi_any(n, a + 1, b - 1) - ga * jacobi_any(n - 1, a + 1, b - 1);
      rep.check("(1+x) expansion", onex.is_zero(), n);
    }

    // P_n^{(a,b)}(-x) = (-1)^n P_n^{(b,a)}(x)
    const UniPoly mirrored = p.compose_affine(-1, 0) - Rational(n % 2 ? -1 : 1) * jacobi_any(n, b, a);
    rep.check("parity", mirrored.is_zero(), n);
  }
}

}  // namespace

Report verify_classical_identities(const ClassicalKind& kind, int nmax, bool perturb) {
  Report rep("classical", describe(kind));
  if (const auto* l = std::get_if<LaguerreKind>(&kind)) {
    laguerre_identities(rep, l->alpha, nmax, perturb);
  } else {
    const auto& j = std::get<JacobiKind>(kind);
    jacobi_identities(rep, j.a, j.b, nmax, perturb);
  }
  return rep;
}

}  // namespace xop
