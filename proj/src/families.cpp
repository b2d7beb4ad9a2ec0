#include "xopkit/families.hpp"

#include <sstream>

namespace xop {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::L1: return "L1";
    case Family::L2: return "L2";
    case Family::J1: return "J1";
    case Family::J2: return "J2";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  if (text == "L1") return Family::L1;
  if (text == "L2") return Family::L2;
  if (text == "J1") return Family::J1;
  if (text == "J2") return Family::J2;
  throw std::invalid_argument("unknown family '" + std::string(text) + "' (expected L1, L2, J1 or J2)");
}

std::string_view to_string(Tier t) {
  switch (t) {
    case Tier::plus: return "plus";
    case Tier::minus: return "minus";
    case Tier::os: return "os";
  }
  return "?";
}

Tier parse_tier(std::string_view text) {
  if (text == "plus") return Tier::plus;
  if (text == "minus") return Tier::minus;
  if (text == "os") return Tier::os;
  throw std::invalid_argument("unknown tier '" + std::string(text) + "'");
}

FamilyParams FamilyParams::shifted(int k) const {
  FamilyParams q = *this;
  q.g += k;
  if (is_jacobi(family)) q.h += k;
  return q;
}

std::string describe(const FamilyParams& p) {
  std::ostringstream os;
  os << to_string(p.family) << " ell=" << p.ell << " g=" << p.g.get_str();
  if (is_jacobi(p.family)) os << " h=" << p.h.get_str();
  return os.str();
}

std::optional<std::string> violation(const FamilyParams& p) {
  if (p.ell < 1) return "requires ell>=1";
  switch (p.family) {
    case Family::L1:
      if (!(p.g > Rational(1, 2))) return "requires g>1/2";
      break;
    case Family::L2:
      if (!(p.g > Rational(-1, 2))) return "requires g>-1/2";
      break;
    case Family::J1:
      if (!(p.g > p.h)) return "requires g>h";
      if (!(p.h > 0)) return "requires h>0";
      break;
    case Family::J2:
      if (!(p.h > p.g)) return "requires h>g";
      if (!(p.g > 0)) return "requires g>0";
      break;
  }
  return std::nullopt;
}

void validate(const FamilyParams& p) {
  if (auto v = violation(p)) throw InvalidParameters(*v);
}

UniPoly xi(const FamilyParams& p) {
  const int l = p.ell;
  const Rational half(1, 2);
  switch (p.family) {
    case Family::L1: return laguerre(l, p.g + l - 3 * half).compose_affine(-1, 0);
    case Family::L2: return laguerre(l, -p.g - l - half);
    case Family::J1: return jacobi_hypergeometric(l, p.g + l - 3 * half, -p.h - l - half);
    case Family::J2: return jacobi_hypergeometric(l, -p.g - l - half, p.h + l - 3 * half);
  }
  return {};
}

EtaInterval physical_interval(Family f) {
  if (is_laguerre(f)) return {0, std::nullopt};
  return {-1, Rational(1)};
}

UniPoly xi_positive_expansion(const FamilyParams& p) {
  const int l = p.ell;
  const Rational half(1, 2);
  UniPoly sum;
  switch (p.family) {
    case Family::L1:
      for (int k = 0; k <= l; ++k)
        sum += UniPoly::monomial(pochhammer(p.g + l + k - half, l - k) / (factorial(k) * factorial(l - k)), k);
      break;
    case Family::L2:
      for (int k = 0; k <= l; ++k)
        sum += UniPoly::monomial(pochhammer(p.g + half, l - k) / (factorial(k) * factorial(l - k)), k);
      break;
    case Family::J1:
    case Family::J2: {
      // J1 in (cos x)^2 = (1+eta)/2, J2 in (sin x)^2 = (1-eta)/2
      const bool j1 = p.family == Family::J1;
      const Rational& near = j1 ? p.h : p.g;
      const Rational& far = j1 ? p.g : p.h;
      const UniPoly trig = j1 ? UniPoly{half, half} : UniPoly{half, -half};
      for (int k = 0; k <= l; ++k) {
        Rational c = pochhammer(Rational(l - k + 1), k) * pochhammer(far - near + l - 1, k) /
                     (factorial(k) * pochhammer(near + l - k + half, k));
        sum += c * pow(trig, k);
      }
      sum *= pochhammer(near + half, l) / factorial(l);
      break;
    }
  }
  return sum;
}

XiStructure xi_structure_check(const FamilyParams& p) {
  XiStructure out{Report("families", describe(p))};
  const UniPoly x = xi(p);
  const UniPoly e = xi_positive_expansion(p);
  out.formula_sign = (p.family == Family::L1 || p.ell % 2 == 0) ? 1 : -1;
  if (x == e) out.sign = 1;
  else if (x == -e) out.sign = -1;
  out.report.check("xi matches the positive expansion up to sign", out.sign != 0, -1,
                   "empirical sign " + std::to_string(out.sign) + ", formula sign " +
                       std::to_string(out.formula_sign));
  out.report.check("deg xi = ell", x.degree() == p.ell);

  const auto range = physical_interval(p.family);
  out.roots_inside = range.hi ? count_roots_in_interval(x, range.lo, *range.hi, Interval::open)
                              : count_roots_above(x, range.lo);
  out.report.check("xi zero-free on physical interval", out.roots_inside == 0, -1,
                   std::to_string(out.roots_inside) + " roots");
  if (p.family == Family::L1) {
    bool positive = true;
    for (const auto& c : x.coefficients()) positive = positive && sgn(c) > 0;
    out.report.check("L1 coefficients positive", positive);
  }
  return out;
}

Rational os_shift(const FamilyParams& p) {
  const int l = p.ell;
  switch (p.family) {
    case Family::L1: return 2 * (2 * p.g + 4 * l - 1);
    case Family::L2: return 2 * (2 * p.g + 1);
    case Family::J1: return (2 * p.g + 4 * l - 1) * (2 * p.h + 1);
    case Family::J2: return (2 * p.h + 4 * l - 1) * (2 * p.g + 1);
  }
  return 0;
}

Rational eigenvalue(const FamilyParams& p, int n, Tier tier) {
  Rational os = is_laguerre(p.family) ? Rational(4 * n) : Rational(4 * n * (n + p.g + p.h + 2 * p.ell));
  if (tier == Tier::os) return os;
  return os + os_shift(p);
}

SLCoeffs sl_coeffs(const FamilyParams& p) {
  const int l = p.ell;
  const Rational half(1, 2);
  SLCoeffs s;
  if (is_laguerre(p.family)) {
    s.c1 = UniPoly{p.g + l + half, -1};
    s.c2 = UniPoly::x();
  } else {
    // h - g - (g+h+1) eta at (g+ell, h+ell)
    s.c1 = UniPoly{p.h - p.g, -(p.g + p.h + 2 * l + 1)};
    s.c2 = UniPoly{1, 0, -1};
  }
  switch (p.family) {
    case Family::L1:
      s.d1 = 1;
      s.d2 = UniPoly::constant(1);
      s.etilde = -4 * l;
      break;
    case Family::L2:
      s.d1 = p.g + half;
      s.d2 = UniPoly{0, -1};
      s.etilde = 4 * l;
      break;
    case Family::J1:
      s.d1 = p.h + half;
      s.d2 = UniPoly{-1, -1};
      s.etilde = 4 * l * (l + p.g - p.h - 1);
      break;
    case Family::J2:
      s.d1 = p.g + half;
      s.d2 = UniPoly{1, -1};
      s.etilde = 4 * l * (l - p.g + p.h - 1);
      break;
  }
  return s;
}

ClassicalKind undeformed_basis(const FamilyParams& p) {
  const int l = p.ell;
  const Rational half(1, 2);
  switch (p.family) {
    case Family::L1: return LaguerreKind{p.g + l - 3 * half};
    case Family::L2: return LaguerreKind{p.g + l + half};
    case Family::J1: return JacobiKind{p.g + l - 3 * half, p.h + l + half};
    case Family::J2: return JacobiKind{p.g + l + half, p.h + l - 3 * half};
  }
  return LaguerreKind{0};
}

}  // namespace xop
