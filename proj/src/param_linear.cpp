#include "algres/param_linear.hpp"

#include <algorithm>

namespace algres {

bool ParamSolution::feasible_on_unit_interval() const {
  return feasible && std::all_of(poles_in_unit_interval.begin(), poles_in_unit_interval.end(),
                                 [](int n) { return n == 0; });
}

ParamSolution solve_param_linear(const std::vector<std::vector<UPoly>>& a,
                                 const std::vector<UPoly>& b) {
  std::vector<std::vector<RatFunc>> ra;
  ra.reserve(a.size());
  for (const auto& row : a) ra.emplace_back(row.begin(), row.end());
  return solve_param_linear(ra, std::vector<RatFunc>(b.begin(), b.end()));
}

ParamSolution solve_param_linear(const std::vector<std::vector<RatFunc>>& a,
                                 const std::vector<RatFunc>& b) {
  if (a.size() != b.size()) throw InputError("system has " + std::to_string(a.size()) +
                                             " rows but " + std::to_string(b.size()) +
                                             " right-hand sides");
  std::size_t rows = a.size();
  std::size_t cols = rows == 0 ? 0 : a[0].size();
  for (const auto& row : a)
    if (row.size() != cols) throw InputError("ragged coefficient matrix");

  std::vector<std::vector<RatFunc>> m(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    m[i] = a[i];
    m[i].push_back(b[i]);
  }

  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    RatFunc inv = RatFunc(1) / m[r][c];
    for (std::size_t j = c; j <= cols; ++j)
      if (!m[r][j].is_zero()) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      RatFunc f = m[i][c];
      for (std::size_t j = c; j <= cols; ++j)
        if (!m[r][j].is_zero()) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }

  ParamSolution out;
  for (std::size_t i = r; i < rows; ++i)
    if (!m[i][cols].is_zero()) return out;
  out.feasible = true;
  out.solution.assign(cols, RatFunc());
  for (std::size_t i = 0; i < pivots.size(); ++i) out.solution[pivots[i]] = m[i][cols];
  for (const auto& x : out.solution)
    out.poles_in_unit_interval.push_back(
        x.is_polynomial() ? 0 : real_roots_in_closed(x.den(), Rational(0), Rational(1)));
  return out;
}

}  // namespace algres
