#include "algres/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace algres {

bool is_zero(const QVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

QVector operator+(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw InputError("vector length mismatch");
  QVector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

QVector operator-(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw InputError("vector length mismatch");
  QVector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

QVector operator*(const Rational& s, const QVector& v) {
  QVector r(v);
  for (auto& x : r) x *= s;
  return r;
}

std::string to_string(const QVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows, std::size_t cols) {
  QMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVector>& columns, std::size_t rows) {
  QMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw InputError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

QVector QMatrix::row(std::size_t r) const {
  return QVector(a_.begin() + static_cast<long>(r * cols_),
                 a_.begin() + static_cast<long>((r + 1) * cols_));
}

QVector QMatrix::column(std::size_t c) const {
  QVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows_) throw InputError("matrix product dimension mismatch");
  QMatrix p(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& x = (*this)(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += x * o(k, j);
    }
  return p;
}

QVector QMatrix::operator*(const QVector& v) const {
  if (v.size() != cols_) throw InputError("matrix-vector dimension mismatch");
  QVector r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (v[k] != 0) r[i] += (*this)(i, k) * v[k];
  return r;
}

QMatrix QMatrix::transposed() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::string QMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) os << algres::to_string(row(i)) << "\n";
  return os.str();
}

RrefResult rref(const QMatrix& m) {
  RrefResult res;
  QMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (a(r, j) != 0) a(i, j) -= f * a(r, j);
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : res.pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    QVector v(a.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < res.pivots.size(); ++i) v[res.pivots[i]] = -a(i, f);
    res.kernel.push_back(std::move(v));
  }
  res.reduced = std::move(a);
  return res;
}

std::size_t rank(const QMatrix& m) { return rref(m).rank; }

std::optional<QVector> solve(const QMatrix& m, const QVector& b) {
  if (b.size() != m.rows()) throw InputError("right-hand side length mismatch");
  QMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  RrefResult r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == m.cols()) return std::nullopt;
  QVector x(m.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = r.reduced(i, m.cols());
  return x;
}

QVector EchelonBasis::reduce(QVector v) const {
  if (v.size() != dim_) throw InputError("vector length mismatch in echelon basis");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational f = v[pivots_[i]];
    if (f == 0) continue;
    const QVector& row = rows_[i];
    for (std::size_t j = pivots_[i]; j < dim_; ++j)
      if (row[j] != 0) v[j] -= f * row[j];
  }
  return v;
}

bool EchelonBasis::insert(QVector v) {
  v = reduce(std::move(v));
  auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
  if (it == v.end()) return false;
  std::size_t p = static_cast<std::size_t>(it - v.begin());
  Rational inv = 1 / v[p];
  for (std::size_t j = p; j < dim_; ++j) v[j] *= inv;
  for (auto& row : rows_) {
    const Rational f = row[p];
    if (f == 0) continue;
    for (std::size_t j = p; j < dim_; ++j)
      if (v[j] != 0) row[j] -= f * v[j];
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, p);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

bool EchelonBasis::is_pivot(std::size_t col) const {
  return std::binary_search(pivots_.begin(), pivots_.end(), col);
}

std::vector<std::size_t> EchelonBasis::free_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < dim_; ++c)
    if (!is_pivot(c)) out.push_back(c);
  return out;
}

}  // namespace algres
