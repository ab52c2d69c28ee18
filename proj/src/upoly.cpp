#include "algres/upoly.hpp"

#include <sstream>

namespace algres {

UPoly::UPoly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(const Rational& c, int power) {
  UPoly p;
  if (c == 0) return p;
  if (power < 0) throw InputError("negative power in univariate monomial");
  p.c_.assign(static_cast<std::size_t>(power) + 1, Rational(0));
  p.c_.back() = c;
  return p;
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int UPoly::order() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return -1;
}

Rational UPoly::coeff(int power) const {
  if (power < 0 || power >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(power)];
}

Rational UPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  UPoly r = *this;
  Rational inv = 1 / leading();
  return r *= inv;
}

UPoly UPoly::truncated(int n) const {
  if (n <= 0) return {};
  if (static_cast<int>(c_.size()) <= n) return *this;
  return UPoly(std::vector<Rational>(c_.begin(), c_.begin() + n));
}

UPoly UPoly::pow(unsigned k) const {
  UPoly result(1);
  UPoly base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

UPoly UPoly::compose(const UPoly& inner) const {
  UPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= inner;
    acc += UPoly(*it);
  }
  return acc;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const UPoly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << algres::to_string(mag);
      continue;
    }
    if (mag != 1) os << algres::to_string(mag) << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw InputError("division by the zero polynomial");
  UPoly q, r = a;
  const Rational& lb = b.leading();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    UPoly term = UPoly::monomial(r.leading() / lb, shift);
    q += term;
    r -= term * b;
  }
  return {q, r};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

bool series_root(const UPoly& p, unsigned k, int n, UPoly& root) {
  if (k == 0) return false;
  if (p.is_zero()) {
    root = UPoly();
    return true;
  }
  int m = p.order();
  if (m % static_cast<int>(k) != 0) return false;
  int e = m / static_cast<int>(k);
  Rational a = p.coeff(m);
  Rational a_root;
  if (!exact_root(a, k, a_root)) return false;
  int len = n - e;
  if (len <= 0) {
    root = UPoly();
    return true;
  }
  // h = p / (a t^m), h(0) = 1; g = h^(1/k) by the J.C.P. Miller recurrence.
  std::vector<Rational> h(static_cast<std::size_t>(len), Rational(0));
  for (int i = 0; i < len; ++i) h[static_cast<std::size_t>(i)] = p.coeff(m + i) / a;
  Rational alpha(1, k);
  std::vector<Rational> g(static_cast<std::size_t>(len), Rational(0));
  g[0] = 1;
  for (int j = 1; j < len; ++j) {
    Rational acc = 0;
    for (int i = 1; i <= j; ++i) {
      const Rational& hi = h[static_cast<std::size_t>(i)];
      if (hi == 0) continue;
      acc += ((alpha + 1) * i - j) * hi * g[static_cast<std::size_t>(j - i)];
    }
    g[static_cast<std::size_t>(j)] = acc / j;
  }
  std::vector<Rational> r(static_cast<std::size_t>(n), Rational(0));
  for (int j = 0; j < len; ++j) r[static_cast<std::size_t>(j + e)] = a_root * g[static_cast<std::size_t>(j)];
  root = UPoly(std::move(r));
  return true;
}

namespace {

int sign_changes(const std::vector<UPoly>& seq, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& s : seq) {
    int v = sgn(s.eval(x));
    if (v == 0) continue;
    if (last != 0 && v != last) ++changes;
    last = v;
  }
  return changes;
}

}  // namespace

int sturm_count(const UPoly& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw InputError("sturm_count of the zero polynomial");
  if (a >= b || p.degree() == 0) return 0;
  UPoly sqf = divmod(p, gcd(p, p.derivative())).first;
  std::vector<UPoly> seq{sqf, sqf.derivative()};
  while (!seq.back().is_zero()) {
    UPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return sign_changes(seq, a) - sign_changes(seq, b);
}

int real_roots_in_closed(const UPoly& p, const Rational& a, const Rational& b) {
  int count = sturm_count(p, a, b);
  if (p.eval(a) == 0) ++count;
  return count;
}

}  // namespace algres
