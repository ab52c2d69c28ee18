#include "algres/curve.hpp"

#include <numeric>

namespace algres {

namespace {

/// reachable[n] iff n is a non-negative combination of `gens`, for n <= limit.
std::vector<bool> reachable_table(const std::vector<int>& gens, int limit) {
  std::vector<bool> r(static_cast<std::size_t>(limit) + 1, false);
  r[0] = true;
  for (int n = 1; n <= limit; ++n)
    for (int g : gens)
      if (g <= n && r[static_cast<std::size_t>(n - g)]) {
        r[static_cast<std::size_t>(n)] = true;
        break;
      }
  return r;
}

}  // namespace

MonomialCurve::MonomialCurve(std::vector<int> lambda, std::size_t ambient)
    : weights_(std::move(lambda), ambient) {
  const auto& l = weights_.lambda();
  for (std::size_t j = 0; j < l.size(); ++j) {
    std::vector<int> others;
    for (std::size_t i = 0; i < l.size(); ++i)
      if (i != j) others.push_back(l[i]);
    if (!others.empty() && reachable_table(others, l[j])[static_cast<std::size_t>(l[j])])
      throw InputError("weight " + std::to_string(l[j]) +
                       " is a non-negative combination of the other weights");
  }
  int g = 0;
  for (int x : l) g = std::gcd(g, x);
  if (g != 1) throw InputError("weights must be coprime for the semigroup to have a conductor");
  // Frobenius number is below l1 * ls, so a table of that size finds the conductor.
  int limit = l.front() * l.back() + l.back();
  auto r = reachable_table(l, limit);
  conductor_ = 0;
  for (int n = limit; n >= 0; --n)
    if (!r[static_cast<std::size_t>(n)]) {
      conductor_ = n + 1;
      break;
    }
}

bool MonomialCurve::in_semigroup(int n) const {
  if (n < 0) return false;
  if (n >= conductor_) return true;
  return reachable_table(lambda(), n)[static_cast<std::size_t>(n)];
}

std::vector<int> MonomialCurve::gaps() const {
  std::vector<int> out;
  for (int n = 1; n < conductor_; ++n)
    if (!in_semigroup(n)) out.push_back(n);
  return out;
}

std::vector<UPoly> MonomialCurve::images() const {
  std::vector<UPoly> out;
  for (int l : lambda()) out.push_back(UPoly::monomial(1, l));
  out.resize(ambient());
  return out;
}

PolyMap MonomialCurve::as_map() const {
  std::vector<Polynomial> comps;
  Polynomial t = Polynomial::variable(1, 0);
  for (int l : lambda()) comps.push_back(t.pow(static_cast<unsigned>(l)));
  comps.resize(ambient(), Polynomial(1));
  return PolyMap(1, std::move(comps));
}

bool MonomialCurve::vanishes_on(const Polynomial& p) const {
  if (p.nvars() != ambient())
    throw InputError("polynomial has " + std::to_string(p.nvars()) + " variables, curve ambient is " +
                     std::to_string(ambient()));
  return p.substitute(images()).is_zero();
}

std::string MonomialCurve::id() const {
  std::string out;
  for (int l : lambda()) out += (out.empty() ? "" : ",") + std::to_string(l);
  return out;
}

std::vector<int> parse_weight_list(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("invalid weight list '" + text + "'");
    out.push_back(std::stoi(item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

bool vanishes_on_curve(const Polynomial& p, const MonomialCurve& c) { return c.vanishes_on(p); }

}  // namespace algres
