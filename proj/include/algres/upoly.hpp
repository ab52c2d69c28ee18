#pragma once

#include <string>
#include <utility>
#include <vector>

#include "algres/rational.hpp"

namespace algres {

/// Dense univariate polynomial over Q in one indeterminate (t by default).
/// Coefficients are stored lowest power first with no trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  UPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  UPoly(long c) : UPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  explicit UPoly(std::vector<Rational> coeffs);

  static UPoly monomial(const Rational& c, int power);
  static UPoly t() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  /// Lowest power with a nonzero coefficient, -1 for zero.
  int order() const;
  Rational coeff(int power) const;
  const Rational& leading() const { return c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(const Rational& x) const;
  UPoly derivative() const;
  UPoly monic() const;
  /// Drops all terms of degree >= n.
  UPoly truncated(int n) const;
  UPoly pow(unsigned k) const;
  /// p(q(t)).
  UPoly compose(const UPoly& inner) const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const UPoly& o);
  UPoly& operator*=(const Rational& s);

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(UPoly a, const UPoly& b) { return a *= b; }
  friend UPoly operator*(UPoly a, const Rational& s) { return a *= s; }
  friend UPoly operator*(const Rational& s, UPoly a) { return a *= s; }
  UPoly operator-() const;
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Euclidean division; throws InputError on a zero divisor.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);

/// Power series k-th root: r with r^k = p mod t^n. p must have the shape
/// a * t^(k*e) * (1 + higher terms) with a an exact k-th power in Q.
/// Returns false when no such rational root exists.
bool series_root(const UPoly& p, unsigned k, int n, UPoly& root);

/// Number of distinct real roots of p in the half-open interval (a, b], via a
/// Sturm sequence of the square-free part. Throws InputError if p is zero.
int sturm_count(const UPoly& p, const Rational& a, const Rational& b);

/// Distinct real roots in the closed interval [a, b].
int real_roots_in_closed(const UPoly& p, const Rational& a, const Rational& b);

}  // namespace algres
