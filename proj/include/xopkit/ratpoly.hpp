#ifndef XOPKIT_RATPOLY_HPP
#define XOPKIT_RATPOLY_HPP

// Exact substrate: GMP rationals, dense univariate polynomials over Q,
// reduced rational functions and Sturm root counting.

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace xop {

using Rational = mpq_class;

/// Builds num/den in canonical form. Throws std::domain_error on den == 0.
Rational make_rational(long num, long den = 1);

/// Parses "3/2", "-1/4" or "7". Throws std::invalid_argument on bad input.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

/// Rising factorial (z)_k.
Rational pochhammer(const Rational& z, int k);

/// Generalized binomial z(z-1)...(z-k+1)/k!, zero for k < 0.
Rational binomial(const Rational& z, int k);

Rational factorial(int k);

/// Dense polynomial in one variable, coefficients lowest degree first.
/// The zero polynomial has an empty coefficient list; otherwise the last
/// stored coefficient is nonzero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<Rational> coeffs);

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, int k);
  /// The variable itself.
  static UniPoly x();

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  /// Coefficient of x^k; zero outside the stored range.
  Rational coeff(int k) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Leading coefficient, zero for the zero polynomial.
  Rational leading() const;

  Rational operator()(const Rational& at) const;
  double eval(double at) const;

  UniPoly derivative() const;
  /// p(a*x + b).
  UniPoly compose_affine(const Rational& a, const Rational& b) const;
  UniPoly compose(const UniPoly& inner) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  friend UniPoly operator-(UniPoly a);

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

struct DivRem {
  UniPoly quotient;
  UniPoly remainder;
};

/// a = q*b + r with deg r < deg b. Throws std::domain_error("zero divisor").
DivRem divrem(const UniPoly& a, const UniPoly& b);

/// Scales to leading coefficient one; the zero polynomial maps to itself.
UniPoly monic(const UniPoly& p);

/// Monic greatest common divisor; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

UniPoly pow(const UniPoly& p, int k);

/// Square-free part p / gcd(p, p').
UniPoly square_free(const UniPoly& p);

std::string to_string(const UniPoly& p, std::string_view var = "x");

/// Quotient of polynomials kept reduced: gcd(num, den) = 1 and den monic.
class RationalFunction {
 public:
  RationalFunction() : den_(UniPoly::constant(1)) {}
  RationalFunction(const UniPoly& p);  // NOLINT(google-explicit-constructor)
  RationalFunction(const Rational& c);  // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error if den is the zero polynomial.
  RationalFunction(const UniPoly& num, const UniPoly& den);

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return is_polynomial() && num_.is_constant(); }

  Rational operator()(const Rational& at) const;
  double eval(double at) const;

  RationalFunction derivative() const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend RationalFunction operator-(RationalFunction a);

  /// Cross-multiplied equality.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

 private:
  void normalize();

  UniPoly num_;
  UniPoly den_;
};

/// Same as the constructor, kept as a named entry point.
RationalFunction rf_normalize(const UniPoly& num, const UniPoly& den);

std::string to_string(const RationalFunction& f, std::string_view var = "x");

enum class Interval { open, closed };

/// 1 + max |a_k / a_n|: every real root has absolute value below it.
Rational cauchy_bound(const UniPoly& p);

/// Number of distinct real roots of p in (lo, hi) or [lo, hi], computed
/// exactly with a Sturm sequence of the square-free part.
/// Throws std::domain_error for p == 0 and std::invalid_argument for lo >= hi.
int count_roots_in_interval(const UniPoly& p, const Rational& lo, const Rational& hi,
                            Interval kind = Interval::open);

/// Roots in (lo, +inf), using the Cauchy bound as the right endpoint.
int count_roots_above(const UniPoly& p, const Rational& lo);

}  // namespace xop

#endif  // XOPKIT_RATPOLY_HPP
