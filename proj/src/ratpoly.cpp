#include "xopkit/ratpoly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace xop {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return std::invalid_argument("not a rational number: '" + s + "'"); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    return std::all_of(t.begin() + static_cast<long>(i), t.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+') throw bad();
  mpz_class n(num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw bad();
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational pochhammer(const Rational& z, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= z + i;
  return r;
}

Rational factorial(int k) {
  Rational r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

Rational binomial(const Rational& z, int k) {
  if (k < 0) return 0;
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= z - i;
  return r / factorial(k);
}

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, int k) {
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::x() { return monomial(1, 1); }

void UniPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational UniPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational UniPoly::leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

Rational UniPoly::operator()(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

double UniPoly::eval(double at) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + it->get_d();
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::compose_affine(const Rational& a, const Rational& b) const {
  return compose(UniPoly{b, a});
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
  UniPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= inner;
    acc += constant(*it);
  }
  return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(out));
}

UniPoly& UniPoly::operator*=(const UniPoly& o) { return *this = *this * o; }

UniPoly& UniPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& q : coeffs_) q *= c;
  return *this;
}

UniPoly operator-(UniPoly a) {
  for (auto& q : a.coeffs_) q = -q;
  return a;
}

DivRem divrem(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("zero divisor");
  if (a.degree() < b.degree()) return {UniPoly{}, a};
  std::vector<Rational> rem = a.coefficients();
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const int db = b.degree();
  const Rational lb = b.leading();
  const auto& bc = b.coefficients();
  for (int k = a.degree(); k >= db; --k) {
    const Rational c = rem[static_cast<std::size_t>(k)] / lb;
    quo[static_cast<std::size_t>(k - db)] = c;
    if (sgn(c) == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= c * bc[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly monic(const UniPoly& p) {
  if (p.is_zero()) return p;
  return p * Rational(1 / p.leading());
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly u = a;
  UniPoly v = b;
  while (!v.is_zero()) {
    UniPoly r = divrem(u, v).remainder;
    u = std::move(v);
    v = monic(r);
  }
  return monic(u);
}

UniPoly pow(const UniPoly& p, int k) {
  UniPoly r = UniPoly::constant(1);
  for (int i = 0; i < k; ++i) r *= p;
  return r;
}

UniPoly square_free(const UniPoly& p) {
  if (p.degree() <= 0) return p;
  return divrem(p, gcd(p, p.derivative())).quotient;
}

std::string to_string(const UniPoly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    Rational c = p.coeff(k);
    if (sgn(c) == 0) continue;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    Rational a = abs(c);
    if (k == 0 || a != 1) os << a.get_str();
    if (k > 0) {
      if (a != 1) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

// ------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(const UniPoly& p) : num_(p), den_(UniPoly::constant(1)) {}

RationalFunction::RationalFunction(const Rational& c)
    : num_(UniPoly::constant(c)), den_(UniPoly::constant(1)) {}

RationalFunction::RationalFunction(const UniPoly& num, const UniPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = UniPoly::constant(1);
    return;
  }
  if (den_.degree() > 0) {
    UniPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divrem(num_, g).quotient;
      den_ = divrem(den_, g).quotient;
    }
  }
  const Rational lead = den_.leading();
  if (lead != 1) {
    const Rational inv = 1 / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

Rational RationalFunction::operator()(const Rational& at) const {
  Rational d = den_(at);
  if (sgn(d) == 0) throw std::domain_error("pole");
  return num_(at) / d;
}

double RationalFunction::eval(double at) const { return num_.eval(at) / den_.eval(at); }

RationalFunction RationalFunction::derivative() const {
  return {num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_};
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational function");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

RationalFunction operator-(RationalFunction a) {
  a.num_ = -a.num_;
  return a;
}

RationalFunction rf_normalize(const UniPoly& num, const UniPoly& den) { return {num, den}; }

std::string to_string(const RationalFunction& f, std::string_view var) {
  if (f.is_polynomial()) return to_string(f.num(), var);
  return "(" + to_string(f.num(), var) + ")/(" + to_string(f.den(), var) + ")";
}

// ------------------------------------------------------------ root counts

Rational cauchy_bound(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("zero polynomial has no root bound");
  Rational m = 0;
  const Rational lead = abs(p.leading());
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, Rational(abs(p.coeff(k)) / lead));
  return m + 1;
}

namespace {

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
  std::vector<UniPoly> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    UniPoly r = divrem(chain[chain.size() - 2], chain.back()).remainder;
    chain.push_back(-r);
  }
  chain.pop_back();
  return chain;
}

int sign_variations(const std::vector<UniPoly>& chain, const Rational& at) {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain) {
    int s = sgn(q(at));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int count_roots_in_interval(const UniPoly& p, const Rational& lo, const Rational& hi, Interval kind) {
  if (p.is_zero()) throw std::domain_error("zero polynomial has infinitely many roots");
  if (!(lo < hi)) throw std::invalid_argument("empty interval");
  UniPoly q = square_free(p);
  int endpoint_roots = 0;
  // Strip endpoint roots so the chain is evaluated away from zeros of q.
  for (const Rational* end : {&lo, &hi}) {
    if (sgn(q(*end)) == 0) {
      q = divrem(q, UniPoly{-*end, 1}).quotient;
      ++endpoint_roots;
    }
  }
  if (q.degree() <= 0) return kind == Interval::closed ? endpoint_roots : 0;
  const auto chain = sturm_chain(q);
  const int inner = sign_variations(chain, lo) - sign_variations(chain, hi);
  return inner + (kind == Interval::closed ? endpoint_roots : 0);
}

int count_roots_above(const UniPoly& p, const Rational& lo) {
  Rational hi = std::max(cauchy_bound(p), Rational(abs(lo) + 1));
  return count_roots_in_interval(p, lo, hi, Interval::open);
}

}  // namespace xop
