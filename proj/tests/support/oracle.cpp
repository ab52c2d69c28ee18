#include "oracle.hpp"

#include <gmpxx.h>

#include <map>

namespace algres::oracle {

namespace {

using Exps = std::vector<int>;
/// (i, j, exponents) with i < j, for x^e dx_i^dx_j.
using Key = std::tuple<int, int, Exps>;
using Row = std::map<Key, mpq_class>;

void enumerate(const std::vector<int>& w, std::size_t i, int left, Exps& cur, std::vector<Exps>& out) {
  if (i == w.size()) {
    if (left == 0) out.push_back(cur);
    return;
  }
  for (int e = 0; e * w[i] <= left; ++e) {
    cur[i] = e;
    enumerate(w, i + 1, left - e * w[i], cur, out);
  }
  cur[i] = 0;
}

std::vector<Exps> monomials(const std::vector<int>& w, int deg) {
  std::vector<Exps> out;
  if (deg < 0) return out;
  Exps cur(w.size(), 0);
  enumerate(w, 0, deg, cur, out);
  return out;
}

void add(Row& row, int i, int j, const Exps& e, const mpq_class& c) {
  if (i == j) return;
  mpq_class v = i < j ? c : mpq_class(-c);
  Key k{std::min(i, j), std::max(i, j), e};
  row[k] += v;
  if (row[k] == 0) row.erase(k);
}

/// d(x^e dx_i) = sum_k e_k x^(e - 1_k) dx_k^dx_i.
void add_d(Row& row, const Exps& e, int i, const mpq_class& c) {
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    Exps lowered = e;
    --lowered[k];
    add(row, static_cast<int>(k), i, lowered, c * e[k]);
  }
}

std::size_t rank(std::vector<std::vector<mpq_class>> m) {
  std::size_t r = 0;
  std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t q = 0; q < m.size(); ++q) {
      if (q == r || m[q][c] == 0) continue;
      mpq_class f = m[q][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[q][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

}  // namespace

std::size_t dim_V2(const std::vector<int>& lambda, int d) {
  std::size_t n = 0;
  int s = static_cast<int>(lambda.size());
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j) n += monomials(lambda, d - lambda[i] - lambda[j]).size();
  return n;
}

std::size_t dim_A2(const std::vector<int>& lambda, int d) {
  int s = static_cast<int>(lambda.size());
  std::map<Key, std::size_t> column;
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j)
      for (const auto& e : monomials(lambda, d - lambda[i] - lambda[j])) column.emplace(Key{i, j, e}, column.size());
  if (column.empty()) return 0;

  std::vector<Row> gens;
  for (int i = 0; i < s; ++i) {
    for (int j = i + 1; j < s; ++j) {
      auto ms = monomials(lambda, d - lambda[i] - lambda[j]);
      for (std::size_t a = 0; a < ms.size(); ++a)
        for (std::size_t b = a + 1; b < ms.size(); ++b) {
          Row r;
          add(r, i, j, ms[a], 1);
          add(r, i, j, ms[b], -1);
          gens.push_back(r);
        }
    }
    auto ms = monomials(lambda, d - lambda[i]);
    for (std::size_t a = 0; a < ms.size(); ++a)
      for (std::size_t b = a + 1; b < ms.size(); ++b) {
        Row r;
        add_d(r, ms[a], i, 1);
        add_d(r, ms[b], i, -1);
        if (!r.empty()) gens.push_back(r);
      }
  }
  std::vector<std::vector<mpq_class>> m;
  for (const auto& g : gens) {
    std::vector<mpq_class> row(column.size(), 0);
    for (const auto& [k, v] : g) row[column.at(k)] = v;
    m.push_back(std::move(row));
  }
  return column.size() - rank(std::move(m));
}

}  // namespace algres::oracle
