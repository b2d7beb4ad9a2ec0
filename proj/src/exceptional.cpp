#include "xopkit/exceptional.hpp"

#include "xopkit/darboux.hpp"

namespace xop {

namespace {

const Rational kHalf(1, 2);

std::optional<Rational> poly_ratio(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero() || a.degree() != b.degree()) return std::nullopt;
  const Rational k = a.leading() / b.leading();
  if (a == k * b) return k;
  return std::nullopt;
}

}  // namespace

UniPoly exceptional_poly(const FamilyParams& p, int n) {
  validate(p);
  const int l = p.ell;
  const Rational g = p.g;
  const Rational h = p.h;
  const UniPoly x0 = xi(p);
  const UniPoly x1 = xi_shifted(p);
  switch (p.family) {
    case Family::L1: {
      const UniPoly b = laguerre(n, g + l - 3 * kHalf);
      return x1 * b - x0 * b.derivative();
    }
    case Family::L2: {
      const UniPoly b = laguerre(n, g + l + kHalf);
      return (Rational(g + kHalf) * (x1 * b) + UniPoly::x() * x0 * b.derivative()) * Rational(1 / (n + g + kHalf));
    }
    case Family::J1: {
      const UniPoly b = jacobi_any(n, g + l - 3 * kHalf, h + l + kHalf);
      return (Rational(h + kHalf) * (x1 * b) + UniPoly{1, 1} * x0 * b.derivative()) * Rational(1 / (n + h + kHalf));
    }
    case Family::J2: {
      const UniPoly b = jacobi_any(n, g + l + kHalf, h + l - 3 * kHalf);
      return (Rational(g + kHalf) * (x1 * b) - UniPoly{1, -1} * x0 * b.derivative()) * Rational(1 / (n + g + kHalf));
    }
  }
  return {};
}

std::vector<AlternateForm> alternate_forms(const FamilyParams& p, int n) {
  validate(p);
  const UniPoly pi = xi(p);
  const UniPoly dpi = pi.derivative();
  const int l = p.ell;
  std::vector<AlternateForm> out;
  if (p.family == Family::L1) {
    const Rational a = p.g + l - 3 * kHalf;
    const UniPoly b = laguerre(n, a);
    out.push_back({"derivative form", pi * b.derivative() - (pi + dpi) * b});
    // Rewriting L'^{(a)} and L^{(a)} over L^{(a+1)}: the L_{n-1} term enters with a plus sign.
    out.push_back({"shifted-basis form", dpi * laguerre(n - 1, a + 1) - (dpi + pi) * laguerre(n, a + 1)});
  } else if (p.family == Family::J1) {
    const Rational a = p.g + l - 3 * kHalf;
    const Rational b = p.h + l + kHalf;
    const UniPoly q = jacobi_any(n, a, b);
    const UniPoly onex{1, 1};
    out.push_back({"derivative form", pi * (onex * q.derivative() + b * q) - dpi * onex * q});
    out.push_back({"shifted-basis form", Rational(b + n) * (pi * jacobi_any(n, a + 1, b - 1)) - dpi * onex * q});
  }
  return out;
}

RationalFunction fuchsian_apply(const FamilyParams& p, const UniPoly& q, bool perturb) {
  const SLCoeffs s = sl_coeffs(p);
  const RationalFunction x0(xi(p));
  const RationalFunction c2(s.c2);
  const RationalFunction first = RationalFunction(s.c1) - RationalFunction(Rational(2)) * c2 * x0.derivative() / x0;
  RationalFunction zeroth = RationalFunction(Rational(2 * s.d1)) * c2 / RationalFunction(s.d2) *
                            RationalFunction(xi_shifted(p).derivative()) / x0;
  if (perturb) zeroth = -zeroth;
  zeroth += RationalFunction(Rational(s.etilde / 4));
  const RationalFunction inner =
      c2 * RationalFunction(q.derivative().derivative()) + first * RationalFunction(q.derivative()) + zeroth * RationalFunction(q);
  return RationalFunction(Rational(-4)) * inner;
}

Report verify_sl_eigen(const FamilyParams& p, int nmax, bool perturb) {
  validate(p);
  Report rep("sl", describe(p));
  for (int n = 0; n <= nmax; ++n) {
    const UniPoly pn = exceptional_poly(p, n);
    const RationalFunction residual = fuchsian_apply(p, pn, perturb) - RationalFunction(eigenvalue(p, n, Tier::os) * pn);
    rep.check("Fuchsian eigen-equation", residual.is_zero(), n, residual.is_zero() ? "" : to_string(residual, "eta"));
  }
  return rep;
}

std::optional<Rational> darboux_constant(const FamilyParams& p, int n) {
  const QuasiRational expected = psi(p) * QuasiRational::of(coordinate_of(p.family), RationalFunction(exceptional_poly(p, n)));
  return proportionality(phi_minus(p, n), expected);
}

Report verify_match_darboux(const FamilyParams& p, int nmax, bool perturb) {
  validate(p);
  Report rep("darboux-match", describe(p));
  for (int n = 0; n <= nmax; ++n) {
    UniPoly pn = exceptional_poly(p, n);
    if (perturb) pn += UniPoly::constant(Rational(1, 1000));
    const QuasiRational target = psi(p) * QuasiRational::of(coordinate_of(p.family), RationalFunction(pn));
    const auto c = proportionality(phi_minus(p, n), target);
    rep.check("A phi+ proportional to psi P", c && sgn(*c) != 0, n, c ? "constant " + c->get_str() : "not proportional");
    for (const auto& form : alternate_forms(p, n)) {
      const auto k = poly_ratio(form.poly, pn);
      rep.check(form.name + " proportional to P", k.has_value(), n, k ? "constant " + k->get_str() : "not proportional");
    }
  }
  return rep;
}

Report invariant_subspace_check(const FamilyParams& p, int jmax, bool perturb) {
  validate(p);
  Report rep("invariant", describe(p));
  const UniPoly x2 = pow(xi(p), perturb ? 1 : 2);
  bool bare_escapes = false;
  for (int j = 0; j <= jmax; ++j) {
    const UniPoly mono = UniPoly::monomial(1, j);
    const RationalFunction img = fuchsian_apply(p, x2 * mono);
    rep.check("xi^2 eta^j image is polynomial", img.is_polynomial(), j, to_string(img, "eta"));
    rep.check("xi^2 eta^j image degree <= j + 2 ell", img.is_polynomial() && img.num().degree() <= j + 2 * p.ell, j);
    if (!fuchsian_apply(p, mono).is_polynomial()) bare_escapes = true;
  }
  rep.check("some bare eta^j has non-polynomial image", bare_escapes);
  return rep;
}

Report verify_degree_structure(const FamilyParams& p, int nmax, bool perturb) {
  validate(p);
  Report rep("degree", describe(p));
  const int shift = perturb ? 1 : 0;
  for (int n = 0; n <= nmax; ++n) {
    const UniPoly pn = exceptional_poly(p, n);
    rep.check("deg P = n + ell", pn.degree() == n + p.ell + shift, n, "degree " + std::to_string(pn.degree()));
    rep.check("degree not below ell", pn.degree() >= p.ell, n);
  }
  return rep;
}

}  // namespace xop
