#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "algres/rational.hpp"
#include "algres/upoly.hpp"

namespace algres {

/// Exponent vector x_1^e_1 ... x_m^e_m. Ordered graded-lexicographically:
/// total degree first, then the exponent vectors compared lexicographically.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps);

  static Monomial variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return e_.size(); }
  int operator[](std::size_t i) const { return e_[i]; }
  const std::vector<int>& exponents() const { return e_; }
  int total_degree() const;
  int weighted_degree(std::span<const int> weights) const;
  bool is_one() const { return total_degree() == 0; }

  Monomial operator*(const Monomial& o) const;
  /// Exponent of x_i lowered by one; nullopt when x_i does not divide.
  std::optional<Monomial> lowered(std::size_t i) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<int> e_;
};

/// All monomials in nvars variables whose weighted degree equals `degree`,
/// in increasing grlex order.
std::vector<Monomial> monomials_of_weighted_degree(std::span<const int> weights, int degree);

/// Multivariate polynomial over Q in x_1..x_m.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t i);
  static Polynomial term(const Monomial& m, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Polynomial pow(unsigned k) const;
  Polynomial derivative(std::size_t i) const;

  /// Replaces x_i by images[i] (univariate in t) and expands.
  UPoly substitute(std::span<const UPoly> images) const;
  /// Replaces x_i by images[i]; the result lives in the images' ring.
  Polynomial compose(std::span<const Polynomial> images) const;
  Rational evaluate(std::span<const Rational> point) const;

  /// Weighted-homogeneous decomposition: degree -> part.
  std::map<int, Polynomial> weighted_parts(std::span<const int> weights) const;
  /// Weighted degree if the polynomial is nonzero and weighted homogeneous.
  std::optional<int> weighted_degree(std::span<const int> weights) const;
  /// Smallest total degree of a term (order of vanishing at 0); -1 for zero.
  int order() const;

  /// Same polynomial viewed in more (or equally many) variables.
  Polynomial embedded(std::size_t nvars) const;
  /// Drops every term involving x_i for i >= keep and reduces to `keep` variables.
  Polynomial restricted(std::size_t keep) const;

  /// Terms in decreasing grlex order, e.g. "-x1*x3 + x2^2".
  std::string to_string() const;
  std::string to_string(const std::function<std::string(std::size_t)>& var_name) const;

 private:
  std::size_t nvars_ = 0;
  TermMap terms_;
};

std::string monomial_to_string(const Monomial& m,
                               const std::function<std::string(std::size_t)>& var_name);
std::string default_var_name(std::size_t i);

}  // namespace algres
