#include "algres/forms.hpp"

#include <algorithm>
#include <sstream>

namespace algres {

Weights::Weights(std::vector<int> lambda, std::size_t ambient) : lambda_(std::move(lambda)) {
  if (lambda_.empty()) throw InputError("weight list is empty");
  for (std::size_t i = 0; i < lambda_.size(); ++i) {
    if (lambda_[i] <= 0) throw InputError("weights must be positive");
    if (i > 0 && lambda_[i] <= lambda_[i - 1]) throw InputError("weights must be strictly increasing");
  }
  if (ambient < lambda_.size())
    throw InputError("ambient dimension " + std::to_string(ambient) + " is smaller than the " +
                     std::to_string(lambda_.size()) + " curve weights");
  all_ = lambda_;
  all_.resize(ambient, lambda_.back() + 1);
}

namespace {

/// Sorts idx in place; returns the sign of the permutation, 0 on a repeat.
int sort_with_sign(std::vector<int>& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  return sign;
}

void check_same(const DifferentialForm& a, const DifferentialForm& b) {
  if (a.nvars() != b.nvars()) throw InputError("forms live in different ambient dimensions");
}

}  // namespace

DifferentialForm::DifferentialForm(std::size_t nvars, int degree) : nvars_(nvars), degree_(degree) {
  if (degree < 0) throw InputError("negative form degree");
}

DifferentialForm DifferentialForm::function(const Polynomial& g) {
  DifferentialForm w(g.nvars(), 0);
  w.add_term({}, g);
  return w;
}

DifferentialForm DifferentialForm::basic(std::size_t nvars, std::vector<int> idx, const Polynomial& coef) {
  for (int i : idx)
    if (i < 0 || static_cast<std::size_t>(i) >= nvars)
      throw InputError("differential dx" + std::to_string(i + 1) + " outside ambient dimension " +
                       std::to_string(nvars));
  DifferentialForm w(nvars, static_cast<int>(idx.size()));
  int sign = sort_with_sign(idx);
  if (sign == 0) return w;
  Polynomial g = coef;
  if (sign < 0) g = -g;
  w.add_term(idx, g);
  return w;
}

DifferentialForm DifferentialForm::basic(std::size_t nvars, std::vector<int> idx, const Rational& c) {
  return basic(nvars, std::move(idx), Polynomial::constant(nvars, c));
}

Polynomial DifferentialForm::coefficient(const IndexTuple& idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? Polynomial(nvars_) : it->second;
}

void DifferentialForm::add_term(const IndexTuple& idx, const Polynomial& g) {
  if (g.nvars() != nvars_) throw InputError("coefficient has the wrong number of variables");
  if (static_cast<int>(idx.size()) != degree_) throw InputError("term has the wrong form degree");
  if (g.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(idx, g);
  if (!inserted) {
    it->second += g;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DifferentialForm& DifferentialForm::operator+=(const DifferentialForm& o) {
  check_same(*this, o);
  if (o.is_zero()) return *this;
  if (is_zero()) degree_ = o.degree_;
  if (o.degree_ != degree_) throw InputError("adding forms of different degrees");
  for (const auto& [idx, g] : o.terms_) add_term(idx, g);
  return *this;
}

DifferentialForm& DifferentialForm::operator-=(const DifferentialForm& o) { return *this += -o; }

DifferentialForm& DifferentialForm::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [idx, g] : terms_) g *= s;
  return *this;
}

DifferentialForm DifferentialForm::operator-() const {
  DifferentialForm r = *this;
  for (auto& [idx, g] : r.terms_) g = -g;
  return r;
}

DifferentialForm operator*(const Polynomial& g, const DifferentialForm& w) {
  if (g.nvars() != w.nvars()) throw InputError("function and form live in different dimensions");
  DifferentialForm r(w.nvars(), w.degree());
  for (const auto& [idx, c] : w.terms()) r.add_term(idx, g * c);
  return r;
}

int quasi_degree(const Monomial& m, const IndexTuple& idx, const Weights& w) {
  int d = m.weighted_degree(w.all());
  for (int i : idx) d += w[static_cast<std::size_t>(i)];
  return d;
}

std::optional<int> DifferentialForm::quasi_degree(const Weights& w) const {
  auto parts = graded_parts(*this, w);
  if (parts.size() != 1) return std::nullopt;
  return parts.begin()->first;
}

DifferentialForm DifferentialForm::embedded(std::size_t nvars) const {
  DifferentialForm r(nvars, degree_);
  for (const auto& [idx, g] : terms_) r.add_term(idx, g.embedded(nvars));
  return r;
}

DifferentialForm DifferentialForm::restricted(std::size_t keep) const {
  DifferentialForm r(keep, degree_);
  for (const auto& [idx, g] : terms_) {
    if (!idx.empty() && static_cast<std::size_t>(idx.back()) >= keep) continue;
    r.add_term(idx, g.restricted(keep));
  }
  return r;
}

std::string DifferentialForm::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, g] : terms_) {
    std::string wedge_part;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (k) wedge_part += "^";
      wedge_part += "dx" + std::to_string(idx[k] + 1);
    }
    for (auto it = g.terms().rbegin(); it != g.terms().rend(); ++it) {
      const auto& [m, c] = *it;
      if (first) {
        if (sgn(c) < 0) os << "-";
      } else {
        os << (sgn(c) < 0 ? " - " : " + ");
      }
      first = false;
      std::vector<std::string> factors;
      Rational mag = abs(c);
      std::string mono = monomial_to_string(m, default_var_name);
      if (mag != 1 || (mono.empty() && wedge_part.empty())) factors.push_back(algres::to_string(mag));
      if (!mono.empty()) factors.push_back(mono);
      if (!wedge_part.empty()) factors.push_back(wedge_part);
      for (std::size_t k = 0; k < factors.size(); ++k) os << (k ? "*" : "") << factors[k];
    }
  }
  return os.str();
}

VectorField::VectorField(std::vector<Polynomial> components) : c_(std::move(components)) {
  for (const auto& p : c_)
    if (p.nvars() != c_.size())
      throw InputError("vector field component has the wrong number of variables");
}

VectorField VectorField::zero(std::size_t nvars) {
  return VectorField(std::vector<Polynomial>(nvars, Polynomial(nvars)));
}

VectorField VectorField::euler(const Weights& w) {
  std::size_t m = w.ambient();
  std::vector<Polynomial> c;
  for (std::size_t i = 0; i < m; ++i) c.push_back(Polynomial::variable(m, i) * Rational(w[i]));
  return VectorField(std::move(c));
}

bool VectorField::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

VectorField& VectorField::operator+=(const VectorField& o) {
  if (o.nvars() != nvars()) throw InputError("adding vector fields of different dimensions");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

VectorField operator*(const Rational& s, const VectorField& v) {
  VectorField r = v;
  for (auto& p : r.c_) p *= s;
  return r;
}

VectorField operator*(const Polynomial& g, const VectorField& v) {
  VectorField r = v;
  for (auto& p : r.c_) p = g * p;
  return r;
}

std::optional<int> VectorField::quasi_degree(const Weights& w) const {
  std::optional<int> d;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    auto di = c_[i].weighted_degree(w.all());
    if (!di) return std::nullopt;
    int delta = *di - w[i];
    if (d && *d != delta) return std::nullopt;
    d = delta;
  }
  return d;
}

Polynomial VectorField::apply(const Polynomial& g) const {
  Polynomial r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) r += c_[i] * g.derivative(i);
  return r;
}

std::string VectorField::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    std::string comp = c_[i].to_string();
    bool compound = c_[i].size() > 1;
    bool negative = !compound && comp.front() == '-';
    if (!out.empty()) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    if (negative) comp.erase(0, 1);
    if (compound) comp = "(" + comp + ")";
    out += (comp == "1" ? std::string() : comp + "*") + "d/dx" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

PolyMap::PolyMap(std::size_t source, std::vector<Polynomial> components)
    : source_(source), c_(std::move(components)) {
  for (const auto& p : c_) {
    if (p.nvars() != source_) throw InputError("map component has the wrong number of variables");
    if (p.coefficient(Monomial(source_)) != 0) throw InputError("map does not fix the origin");
  }
}

PolyMap PolyMap::identity(std::size_t n) {
  std::vector<Polynomial> c;
  for (std::size_t i = 0; i < n; ++i) c.push_back(Polynomial::variable(n, i));
  return PolyMap(n, std::move(c));
}

PolyMap PolyMap::scaling(const Weights& w, const Rational& c) {
  std::size_t m = w.ambient();
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i < m; ++i) {
    Rational f = 1;
    for (int k = 0; k < w[i]; ++k) f *= c;
    comps.push_back(Polynomial::variable(m, i) * f);
  }
  return PolyMap(m, std::move(comps));
}

PolyMap PolyMap::compose(const PolyMap& inner) const {
  if (inner.target() != source_) throw InputError("cannot compose maps of mismatched dimensions");
  std::vector<Polynomial> c;
  for (const auto& p : c_) c.push_back(p.compose(inner.c_));
  return PolyMap(inner.source_, std::move(c));
}

QMatrix PolyMap::linear_part() const {
  QMatrix j(target(), source_);
  for (std::size_t i = 0; i < target(); ++i)
    for (std::size_t k = 0; k < source_; ++k)
      j(i, k) = c_[i].coefficient(Monomial::variable(source_, k));
  return j;
}

bool PolyMap::has_invertible_linear_part() const {
  return target() == source_ && rank(linear_part()) == source_;
}

std::string PolyMap::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < c_.size(); ++i) out += (i ? ", " : "") + c_[i].to_string();
  return out + ")";
}

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b) {
  check_same(a, b);
  DifferentialForm r(a.nvars(), a.degree() + b.degree());
  for (const auto& [ia, ga] : a.terms())
    for (const auto& [ib, gb] : b.terms()) {
      std::vector<int> idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      int sign = sort_with_sign(idx);
      if (sign == 0) continue;
      Polynomial g = ga * gb;
      if (sign < 0) g = -g;
      r.add_term(idx, g);
    }
  return r;
}

DifferentialForm ext_der(const DifferentialForm& w) {
  std::size_t m = w.nvars();
  DifferentialForm r(m, w.degree() + 1);
  for (const auto& [idx, g] : w.terms())
    for (std::size_t j = 0; j < m; ++j) {
      if (std::binary_search(idx.begin(), idx.end(), static_cast<int>(j))) continue;
      Polynomial dg = g.derivative(j);
      if (dg.is_zero()) continue;
      std::vector<int> full{static_cast<int>(j)};
      full.insert(full.end(), idx.begin(), idx.end());
      int sign = sort_with_sign(full);
      if (sign < 0) dg = -dg;
      r.add_term(full, dg);
    }
  return r;
}

DifferentialForm interior(const VectorField& x, const DifferentialForm& w) {
  if (x.nvars() != w.nvars()) throw InputError("vector field and form live in different dimensions");
  if (w.degree() == 0) return DifferentialForm(w.nvars(), 0);
  DifferentialForm r(w.nvars(), w.degree() - 1);
  for (const auto& [idx, g] : w.terms())
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const Polynomial& xi = x[static_cast<std::size_t>(idx[k])];
      if (xi.is_zero()) continue;
      IndexTuple rest = idx;
      rest.erase(rest.begin() + static_cast<long>(k));
      Polynomial c = xi * g;
      if (k % 2 == 1) c = -c;
      r.add_term(rest, c);
    }
  return r;
}

DifferentialForm lie_derivative(const VectorField& x, const DifferentialForm& w) {
  DifferentialForm r = interior(x, ext_der(w));
  if (w.degree() > 0) r += ext_der(interior(x, w));
  return r;
}

DifferentialForm pullback(const PolyMap& phi, const DifferentialForm& w) {
  if (phi.target() != w.nvars())
    throw InputError("map target dimension " + std::to_string(phi.target()) +
                     " does not match form dimension " + std::to_string(w.nvars()));
  std::size_t n = phi.source();
  std::vector<DifferentialForm> dphi;
  for (const auto& comp : phi.components()) dphi.push_back(ext_der(DifferentialForm::function(comp)));
  DifferentialForm r(n, w.degree());
  for (const auto& [idx, g] : w.terms()) {
    DifferentialForm term = DifferentialForm::function(g.compose(phi.components()));
    for (int i : idx) {
      term = wedge(term, dphi[static_cast<std::size_t>(i)]);
      if (term.is_zero()) break;
    }
    if (!term.is_zero()) r += term;
  }
  return r;
}

std::map<int, DifferentialForm> graded_parts(const DifferentialForm& w, const Weights& wt) {
  if (wt.ambient() != w.nvars()) throw InputError("weights and form live in different dimensions");
  std::map<int, DifferentialForm> parts;
  for (const auto& [idx, g] : w.terms())
    for (const auto& [m, c] : g.terms()) {
      auto [it, _] = parts.try_emplace(quasi_degree(m, idx, wt), w.nvars(), w.degree());
      it->second.add_term(idx, Polynomial::term(m, c));
    }
  return parts;
}

VectorField bracket(const VectorField& x, const VectorField& y) {
  if (x.nvars() != y.nvars()) throw InputError("bracket of fields of different dimensions");
  std::vector<Polynomial> c;
  for (std::size_t i = 0; i < x.nvars(); ++i) c.push_back(x.apply(y[i]) - y.apply(x[i]));
  return VectorField(std::move(c));
}

}  // namespace algres
