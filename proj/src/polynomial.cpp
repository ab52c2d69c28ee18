#include "algres/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace algres {

Monomial::Monomial(std::vector<int> exps) : e_(std::move(exps)) {
  for (int x : e_)
    if (x < 0) throw InputError("negative exponent in monomial");
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i) {
  Monomial m(nvars);
  m.e_.at(i) = 1;
  return m;
}

int Monomial::total_degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }

int Monomial::weighted_degree(std::span<const int> weights) const {
  int d = 0;
  for (std::size_t i = 0; i < e_.size(); ++i) d += e_[i] * weights[i];
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

std::optional<Monomial> Monomial::lowered(std::size_t i) const {
  if (e_[i] == 0) return std::nullopt;
  Monomial r(*this);
  --r.e_[i];
  return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da <=> db;
  return a.e_ <=> b.e_;
}

namespace {

void enumerate(std::span<const int> w, std::size_t i, int remaining, std::vector<int>& cur,
               std::vector<Monomial>& out) {
  if (i == w.size()) {
    if (remaining == 0) out.emplace_back(cur);
    return;
  }
  for (int e = 0; e * w[i] <= remaining; ++e) {
    cur[i] = e;
    enumerate(w, i + 1, remaining - e * w[i], cur, out);
  }
  cur[i] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_weighted_degree(std::span<const int> weights, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  std::vector<int> cur(weights.size(), 0);
  enumerate(weights, 0, degree, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  Polynomial p(nvars);
  p.add_term(Monomial::variable(nvars, i), 1);
  return p;
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
  Polynomial p(m.nvars());
  p.add_term(m, c);
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.nvars() != nvars_) throw InputError("monomial has the wrong number of variables");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw InputError("adding polynomials in different rings");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw InputError("subtracting polynomials in different rings");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (o.nvars_ != nvars_) throw InputError("multiplying polynomials in different rings");
  Polynomial r(nvars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial r = constant(nvars_, 1);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

Polynomial Polynomial::derivative(std::size_t i) const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) {
    int e = m[i];
    if (e == 0) continue;
    r.add_term(*m.lowered(i), c * e);
  }
  return r;
}

UPoly Polynomial::substitute(std::span<const UPoly> images) const {
  if (images.size() != nvars_)
    throw InputError("substitution needs " + std::to_string(nvars_) + " images, got " +
                     std::to_string(images.size()));
  UPoly r;
  for (const auto& [m, c] : terms_) {
    UPoly term(c);
    for (std::size_t i = 0; i < nvars_ && !term.is_zero(); ++i)
      if (m[i] > 0) term *= images[i].pow(static_cast<unsigned>(m[i]));
    r += term;
  }
  return r;
}

Polynomial Polynomial::compose(std::span<const Polynomial> images) const {
  if (images.size() != nvars_)
    throw InputError("composition needs " + std::to_string(nvars_) + " images, got " +
                     std::to_string(images.size()));
  std::size_t target = images.empty() ? 0 : images[0].nvars();
  for (const auto& im : images)
    if (im.nvars() != target) throw InputError("composition images live in different rings");
  Polynomial r(target);
  std::vector<std::vector<Polynomial>> powers(nvars_);
  for (const auto& [m, c] : terms_) {
    Polynomial term = constant(target, c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      int e = m[i];
      if (e == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(constant(target, 1));
      while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
      term = term * cache[static_cast<std::size_t>(e)];
    }
    r += term;
  }
  return r;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw InputError("evaluation point has the wrong dimension");
  Rational r = 0;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (int k = 0; k < m[i]; ++k) v *= point[i];
    r += v;
  }
  return r;
}

std::map<int, Polynomial> Polynomial::weighted_parts(std::span<const int> weights) const {
  std::map<int, Polynomial> parts;
  for (const auto& [m, c] : terms_) {
    auto [it, _] = parts.try_emplace(m.weighted_degree(weights), nvars_);
    it->second.add_term(m, c);
  }
  return parts;
}

std::optional<int> Polynomial::weighted_degree(std::span<const int> weights) const {
  if (terms_.empty()) return std::nullopt;
  int d = terms_.begin()->first.weighted_degree(weights);
  for (const auto& [m, c] : terms_)
    if (m.weighted_degree(weights) != d) return std::nullopt;
  return d;
}

int Polynomial::order() const {
  if (terms_.empty()) return -1;
  return terms_.begin()->first.total_degree();
}

Polynomial Polynomial::embedded(std::size_t nvars) const {
  if (nvars < nvars_) throw InputError("cannot embed into fewer variables");
  Polynomial r(nvars);
  for (const auto& [m, c] : terms_) {
    std::vector<int> e = m.exponents();
    e.resize(nvars, 0);
    r.add_term(Monomial(std::move(e)), c);
  }
  return r;
}

Polynomial Polynomial::restricted(std::size_t keep) const {
  Polynomial r(keep);
  for (const auto& [m, c] : terms_) {
    bool off = false;
    for (std::size_t i = keep; i < nvars_; ++i) off = off || m[i] != 0;
    if (off) continue;
    std::vector<int> e(m.exponents().begin(), m.exponents().begin() + static_cast<long>(keep));
    r.add_term(Monomial(std::move(e)), c);
  }
  return r;
}

std::string default_var_name(std::size_t i) { return "x" + std::to_string(i + 1); }

std::string monomial_to_string(const Monomial& m,
                               const std::function<std::string(std::size_t)>& var_name) {
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += var_name(i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

std::string Polynomial::to_string() const { return to_string(default_var_name); }

std::string Polynomial::to_string(const std::function<std::string(std::size_t)>& var_name) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    std::string mono = monomial_to_string(m, var_name);
    if (mono.empty()) {
      os << algres::to_string(mag);
    } else {
      if (mag != 1) os << algres::to_string(mag) << "*";
      os << mono;
    }
  }
  return os.str();
}

}  // namespace algres
