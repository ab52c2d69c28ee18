#pragma once

#include <optional>
#include <string>
#include <vector>

#include "algres/rational.hpp"

namespace algres {

using QVector = std::vector<Rational>;

bool is_zero(const QVector& v);
QVector operator+(const QVector& a, const QVector& b);
QVector operator-(const QVector& a, const QVector& b);
QVector operator*(const Rational& s, const QVector& v);
std::string to_string(const QVector& v);

/// Dense rows x cols matrix over Q.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols);
  static QMatrix from_columns(const std::vector<QVector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  QVector row(std::size_t r) const;
  QVector column(std::size_t c) const;

  QMatrix operator*(const QMatrix& o) const;
  QVector operator*(const QVector& v) const;
  QMatrix transposed() const;
  friend bool operator==(const QMatrix&, const QMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

struct RrefResult {
  QMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  /// One vector per free column; M * v = 0.
  std::vector<QVector> kernel;
};

RrefResult rref(const QMatrix& m);
std::size_t rank(const QMatrix& m);

/// Some x with m * x = b (free variables 0), or nullopt when inconsistent.
std::optional<QVector> solve(const QMatrix& m, const QVector& b);

/// Row space kept in reduced echelon form, grown one vector at a time.
/// Pivot columns are the leftmost nonzero entries; reduce() returns the
/// canonical representative of v modulo the span.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  /// Returns true when v was independent of the current span.
  bool insert(QVector v);
  QVector reduce(QVector v) const;
  bool contains(const QVector& v) const { return is_zero(reduce(v)); }
  bool is_pivot(std::size_t col) const;
  /// Columns that are not pivots, increasing.
  std::vector<std::size_t> free_columns() const;
  const std::vector<QVector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  std::size_t dim_;
  std::vector<QVector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace algres
