#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "algres/matrix.hpp"
#include "algres/polynomial.hpp"

namespace algres {

/// Grading of the ambient coordinates x_1..x_m. The first s entries are the
/// curve weights lambda_1 < ... < lambda_s; the remaining m - s coordinates
/// are off the curve and get weight lambda_s + 1.
class Weights {
 public:
  Weights(std::vector<int> lambda, std::size_t ambient);
  explicit Weights(std::vector<int> lambda) : Weights(lambda, lambda.size()) {}

  const std::vector<int>& lambda() const { return lambda_; }
  const std::vector<int>& all() const { return all_; }
  std::size_t curve_dim() const { return lambda_.size(); }
  std::size_t ambient() const { return all_.size(); }
  int operator[](std::size_t i) const { return all_[i]; }

 private:
  std::vector<int> lambda_;
  std::vector<int> all_;
};

/// Increasing 0-based index tuple (i_1 < ... < i_k) naming dx_{i_1} ^ ... ^ dx_{i_k}.
using IndexTuple = std::vector<int>;

/// Polynomial k-form sum_I g_I dx_I in m variables.
class DifferentialForm {
 public:
  using TermMap = std::map<IndexTuple, Polynomial>;

  DifferentialForm() = default;
  DifferentialForm(std::size_t nvars, int degree);

  static DifferentialForm function(const Polynomial& g);
  /// coef * dx_{idx[0]} ^ dx_{idx[1]} ^ ...; indices in any order, sorted with sign.
  static DifferentialForm basic(std::size_t nvars, std::vector<int> idx, const Polynomial& coef);
  static DifferentialForm basic(std::size_t nvars, std::vector<int> idx, const Rational& c = 1);

  std::size_t nvars() const { return nvars_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  Polynomial coefficient(const IndexTuple& idx) const;
  /// Adds g dx_idx; idx must be increasing.
  void add_term(const IndexTuple& idx, const Polynomial& g);

  DifferentialForm& operator+=(const DifferentialForm& o);
  DifferentialForm& operator-=(const DifferentialForm& o);
  DifferentialForm& operator*=(const Rational& s);
  DifferentialForm operator-() const;
  friend DifferentialForm operator+(DifferentialForm a, const DifferentialForm& b) { return a += b; }
  friend DifferentialForm operator-(DifferentialForm a, const DifferentialForm& b) { return a -= b; }
  friend DifferentialForm operator*(const Rational& s, DifferentialForm a) { return a *= s; }
  friend DifferentialForm operator*(DifferentialForm a, const Rational& s) { return a *= s; }
  /// Multiplication by a function.
  friend DifferentialForm operator*(const Polynomial& g, const DifferentialForm& w);
  friend bool operator==(const DifferentialForm&, const DifferentialForm&) = default;

  /// Quasi-degree when nonzero and quasi-homogeneous.
  std::optional<int> quasi_degree(const Weights& w) const;
  /// Same form in more variables.
  DifferentialForm embedded(std::size_t nvars) const;
  /// Drops every term whose coefficient or differential involves x_i, i >= keep.
  DifferentialForm restricted(std::size_t keep) const;

  /// e.g. "x1*dx1^dx3 - 2*x2*dx1^dx2"; a 0-form prints as its polynomial.
  std::string to_string() const;

 private:
  std::size_t nvars_ = 0;
  int degree_ = 0;
  TermMap terms_;
};

/// Quasi-degree of the monomial form x^a dx_I.
int quasi_degree(const Monomial& m, const IndexTuple& idx, const Weights& w);

/// Vector field sum_i X_i d/dx_i.
class VectorField {
 public:
  VectorField() = default;
  explicit VectorField(std::vector<Polynomial> components);
  static VectorField zero(std::size_t nvars);
  static VectorField euler(const Weights& w);

  std::size_t nvars() const { return c_.size(); }
  const std::vector<Polynomial>& components() const { return c_; }
  const Polynomial& operator[](std::size_t i) const { return c_[i]; }
  bool is_zero() const;

  VectorField& operator+=(const VectorField& o);
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator*(const Rational& s, const VectorField& v);
  friend VectorField operator*(const Polynomial& g, const VectorField& v);
  friend bool operator==(const VectorField&, const VectorField&) = default;

  /// delta with X_i weighted homogeneous of degree delta + w_i (zero components allowed).
  std::optional<int> quasi_degree(const Weights& w) const;
  /// Derivation X(g).
  Polynomial apply(const Polynomial& g) const;

  /// e.g. "4*x2*d/dx1 + 5*x3*d/dx2".
  std::string to_string() const;

 private:
  std::vector<Polynomial> c_;
};

/// Polynomial map from R^source to R^target fixing the origin.
class PolyMap {
 public:
  PolyMap() = default;
  PolyMap(std::size_t source, std::vector<Polynomial> components);
  static PolyMap identity(std::size_t n);
  static PolyMap scaling(const Weights& w, const Rational& c);

  std::size_t source() const { return source_; }
  std::size_t target() const { return c_.size(); }
  const std::vector<Polynomial>& components() const { return c_; }
  const Polynomial& operator[](std::size_t i) const { return c_[i]; }

  /// (this o inner)(x) = this(inner(x)).
  PolyMap compose(const PolyMap& inner) const;
  /// Jacobian at 0, target x source.
  QMatrix linear_part() const;
  bool has_invertible_linear_part() const;
  friend bool operator==(const PolyMap&, const PolyMap&) = default;
  std::string to_string() const;

 private:
  std::size_t source_ = 0;
  std::vector<Polynomial> c_;
};

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b);
DifferentialForm ext_der(const DifferentialForm& w);
DifferentialForm interior(const VectorField& x, const DifferentialForm& w);
DifferentialForm lie_derivative(const VectorField& x, const DifferentialForm& w);
DifferentialForm pullback(const PolyMap& phi, const DifferentialForm& w);
std::map<int, DifferentialForm> graded_parts(const DifferentialForm& w, const Weights& wt);

/// Lie bracket [X, Y] of vector fields.
VectorField bracket(const VectorField& x, const VectorField& y);

}  // namespace algres
