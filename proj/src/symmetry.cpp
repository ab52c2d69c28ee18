#include "algres/symmetry.hpp"

#include <map>

namespace algres {

LiftPolicy parse_lift_policy(const std::string& text) {
  if (text == "grlex") return LiftPolicy::Grlex;
  if (text == "paper") return LiftPolicy::Paper;
  throw InputError("unknown lift policy '" + text + "' (expected grlex or paper)");
}

std::string to_string(LiftPolicy p) { return p == LiftPolicy::Paper ? "paper" : "grlex"; }

bool is_admissible_shift(const MonomialCurve& c, int s) {
  if (s == 0) return true;
  if (s < 0) return false;
  for (int l : c.lambda())
    if (!c.in_semigroup(l + s)) return false;
  return true;
}

std::vector<int> admissible_shifts(const MonomialCurve& c, int bound) {
  std::vector<int> out;
  for (int s = 0; s <= bound; ++s)
    if (is_admissible_shift(c, s)) out.push_back(s);
  return out;
}

std::vector<Monomial> curve_monomials(const MonomialCurve& c, int e) {
  std::vector<Monomial> out;
  for (const auto& m : monomials_of_weighted_degree(c.lambda(), e)) {
    std::vector<int> exps = m.exponents();
    exps.resize(c.ambient(), 0);
    out.emplace_back(std::move(exps));
  }
  return out;
}

namespace {

using ExpTable = std::map<int, std::vector<std::vector<int>>>;

/// Explicit lifts used for the printed action tables: component i of X_s is
/// lambda_i times the listed monomial.
const ExpTable* paper_lifts(const std::vector<int>& lambda) {
  static const ExpTable t4567 = [] {
    std::map<int, std::vector<int>> m{
        {4, {1, 0, 0, 0}},  {5, {0, 1, 0, 0}},  {6, {0, 0, 1, 0}},  {7, {0, 0, 0, 1}},
        {8, {2, 0, 0, 0}},  {9, {1, 1, 0, 0}},  {10, {1, 0, 1, 0}}, {11, {1, 0, 0, 1}},
        {12, {3, 0, 0, 0}}, {13, {2, 1, 0, 0}},
    };
    ExpTable t;
    for (int s = 1; s <= 6; ++s)
      for (int l : {4, 5, 6, 7}) t[s].push_back(m.at(l + s));
    return t;
  }();
  static const ExpTable t456{
      {4, {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}}},  {5, {{1, 1, 0}, {0, 2, 0}, {0, 1, 1}}},
      {6, {{1, 0, 1}, {0, 1, 1}, {0, 0, 2}}},  {7, {{0, 1, 1}, {0, 0, 2}, {2, 1, 0}}},
      {8, {{3, 0, 0}, {2, 1, 0}, {2, 0, 1}}},  {9, {{2, 1, 0}, {1, 2, 0}, {1, 1, 1}}},
      {10, {{2, 0, 1}, {1, 1, 1}, {1, 0, 2}}},
  };
  static const ExpTable t457{
      {3, {{0, 0, 1}, {2, 0, 0}, {0, 2, 0}}},  {4, {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}}},
      {5, {{1, 1, 0}, {0, 2, 0}, {0, 1, 1}}},  {6, {{0, 2, 0}, {1, 0, 1}, {2, 1, 0}}},
      {7, {{1, 0, 1}, {0, 1, 1}, {0, 0, 2}}},  {8, {{3, 0, 0}, {2, 1, 0}, {2, 0, 1}}},
      {9, {{2, 1, 0}, {1, 2, 0}, {1, 1, 1}}},
  };
  if (lambda == std::vector<int>{4, 5, 6, 7}) return &t4567;
  if (lambda == std::vector<int>{4, 5, 6}) return &t456;
  if (lambda == std::vector<int>{4, 5, 7}) return &t457;
  return nullptr;
}

}  // namespace

LiftableField liftable_field_from(const MonomialCurve& c, int s, const std::vector<Monomial>& lifts) {
  if (lifts.size() != c.s()) throw InputError("need one lift per curve coordinate");
  std::size_t m = c.ambient();
  std::vector<Polynomial> comps(m, Polynomial(m));
  for (std::size_t i = 0; i < c.s(); ++i) {
    if (lifts[i].nvars() != m) throw InputError("lift has the wrong number of variables");
    if (lifts[i].weighted_degree(c.weights().all()) != c.lambda()[i] + s)
      throw InputError("lift of component " + std::to_string(i + 1) + " has the wrong quasi-degree");
    comps[i] = Polynomial::term(lifts[i], c.lambda()[i]);
  }
  LiftableField x{s, VectorField(std::move(comps)), LiftPolicy::Grlex};
  auto h = lifting_factor(c, x.field);
  if (!h || !(*h == UPoly::monomial(1, s + 1))) throw std::logic_error("constructed field fails the lifting identity");
  return x;
}

LiftableField liftable_field(const MonomialCurve& c, int s, LiftPolicy policy) {
  if (s == 0) return {0, VectorField::euler(c.weights()), policy};
  if (!is_admissible_shift(c, s))
    throw InputError("no monomial lift exists for shift " + std::to_string(s) + " on (" + c.id() + ")");
  std::vector<Monomial> lifts;
  const ExpTable* table = policy == LiftPolicy::Paper ? paper_lifts(c.lambda()) : nullptr;
  auto it = table ? table->find(s) : ExpTable::const_iterator{};
  if (table && it != table->end()) {
    for (auto exps : it->second) {
      exps.resize(c.ambient(), 0);
      lifts.emplace_back(std::move(exps));
    }
  } else {
    for (int l : c.lambda()) lifts.push_back(curve_monomials(c, l + s).front());
  }
  LiftableField x = liftable_field_from(c, s, lifts);
  x.policy = policy;
  return x;
}

std::optional<UPoly> lifting_factor(const MonomialCurve& c, const VectorField& x) {
  if (x.nvars() != c.ambient()) throw InputError("vector field dimension does not match the curve");
  auto img = c.images();
  const auto& l = c.lambda();
  UPoly x1 = x[0].substitute(img);
  auto [h, rem] = divmod(x1, UPoly::monomial(l[0], l[0] - 1));
  if (!rem.is_zero()) return std::nullopt;
  for (std::size_t i = 1; i < c.ambient(); ++i) {
    UPoly expected = i < c.s() ? h * UPoly::monomial(l[i], l[i] - 1) : UPoly();
    if (!(x[i].substitute(img) == expected)) return std::nullopt;
  }
  return h;
}

AlgRestriction lie_action(const VectorField& x, const AlgRestriction& a) {
  const RestrictionBasis& b = a.basis();
  if (!lifting_factor(b.curve(), x)) throw InputError("vector field is not liftable over the curve");
  if (a.is_zero()) return b.zero();
  return b.project(lie_derivative(x, b.representative(a)));
}

AlgRestriction lie_action(const LiftableField& x, const AlgRestriction& a) { return lie_action(x.field, a); }

ActionTable action_table(const RestrictionBasis& b, LiftPolicy policy) {
  ActionTable t;
  if (b.size() == 0) return t;
  int span = b.K() - b.elements().front().qdeg;
  t.shifts = admissible_shifts(b.curve(), span);
  for (int s : t.shifts) {
    LiftableField x = liftable_field(b.curve(), s, policy);
    std::vector<AlgRestriction> row;
    for (std::size_t j = 0; j < b.size(); ++j) row.push_back(lie_action(x, b.unit(j)));
    t.fields.push_back(std::move(x));
    t.entries.push_back(std::move(row));
  }
  return t;
}

std::vector<int> orbit_shifts(const RestrictionBasis& b, const AlgRestriction& a) {
  auto mp = min_qdeg_part(a);
  if (!mp) return {};
  return admissible_shifts(b.curve(), b.K() - mp->r);
}

TangentSpace orbit_tangent_space(const AlgRestriction& a, LiftPolicy policy) {
  const RestrictionBasis& b = a.basis();
  TangentSpace ts;
  ts.echelon = EchelonBasis(b.size());
  ts.shifts = orbit_shifts(b, a);
  for (int s : ts.shifts) {
    AlgRestriction v = lie_action(liftable_field(b.curve(), s, policy), a);
    ts.echelon.insert(v.coords());
    ts.spanning.push_back(std::move(v));
  }
  ts.dim = ts.echelon.rank();
  return ts;
}

bool is_modulus(const AlgRestriction& a, const AlgRestriction& direction, LiftPolicy policy) {
  if (!(a.basis() == direction.basis())) throw InputError("restrictions refer to different bases");
  return !orbit_tangent_space(a, policy).contains(direction);
}

HomotopyResult moser_reduce(const AlgRestriction& a, const AlgRestriction& kill, LiftPolicy policy) {
  const RestrictionBasis& b = a.basis();
  if (!(b == kill.basis())) throw InputError("restrictions refer to different bases");
  HomotopyResult res;
  if (kill.is_zero()) {
    res.feasible = true;
    return res;
  }
  auto sup = kill.support();
  if (sup.size() != 1 || !(a.graded_part(sup.front()) == kill))
    throw InputError("kill must be a full graded part of the restriction");
  res.shifts = orbit_shifts(b, a);
  std::size_t n = b.size();
  std::vector<std::vector<UPoly>> mat(n, std::vector<UPoly>(res.shifts.size()));
  UPoly t = UPoly::t();
  for (std::size_t j = 0; j < res.shifts.size(); ++j) {
    LiftableField x = liftable_field(b.curve(), res.shifts[j], policy);
    QVector la = lie_action(x, a).coords();
    QVector lk = lie_action(x, kill).coords();
    for (std::size_t i = 0; i < n; ++i) mat[i][j] = UPoly(la[i]) - t * lk[i];
    res.action_on_a.push_back(std::move(la));
    res.action_on_kill.push_back(std::move(lk));
  }
  std::vector<UPoly> rhs;
  for (const auto& c : kill.coords()) rhs.emplace_back(c);
  ParamSolution sol = solve_param_linear(mat, rhs);
  res.coefficients = sol.solution;
  res.poles_in_unit_interval = sol.poles_in_unit_interval;
  res.feasible = sol.feasible_on_unit_interval();
  return res;
}

SymmetryCheck check_curve_symmetry(const MonomialCurve& c, const PolyMap& phi, int order) {
  SymmetryCheck out;
  out.order = order;
  if (phi.source() != c.ambient() || phi.target() != c.ambient()) {
    out.reason = "map dimensions do not match the curve ambient dimension";
    return out;
  }
  if (!phi.has_invertible_linear_part()) {
    out.reason = "linear part is not invertible";
    return out;
  }
  auto img = c.images();
  const auto& l = c.lambda();
  UPoly first = phi[0].substitute(img).truncated(order + l[0]);
  if (first.order() != l[0]) {
    out.reason = "first component does not start at t^" + std::to_string(l[0]);
    return out;
  }
  UPoly root;
  if (!series_root(first, static_cast<unsigned>(l[0]), order, root)) {
    out.reason = "first component has no rational " + std::to_string(l[0]) + "-th root";
    return out;
  }
  // For even l_1 the root is determined up to sign; try both.
  std::vector<UPoly> candidates{root};
  if (l[0] % 2 == 0) candidates.push_back(Rational(-1) * root);
  for (const UPoly& cand : candidates) {
    bool match = true;
    for (std::size_t i = 0; i < c.ambient() && match; ++i) {
      UPoly lhs = phi[i].substitute(img).truncated(order);
      UPoly rhs = i < c.s() ? cand.pow(static_cast<unsigned>(l[i])).truncated(order) : UPoly();
      if (!(lhs == rhs)) {
        match = false;
        out.reason = "component " + std::to_string(i + 1) + " is not f_" + std::to_string(i + 1) +
                     " of the reparametrization";
      }
    }
    if (match) {
      out.ok = true;
      out.reason.clear();
      out.phi = cand;
      out.leading = cand.coeff(1);
      return out;
    }
  }
  return out;
}

int symmetry_check_order(const RestrictionBasis& b) { return b.K() + b.curve().lambda().back() + 1; }

AlgRestriction pullback_restriction(const PolyMap& phi, const AlgRestriction& a) {
  const RestrictionBasis& b = a.basis();
  SymmetryCheck chk = check_curve_symmetry(b.curve(), phi, symmetry_check_order(b));
  if (!chk.ok) throw InputError("not a local symmetry of the curve: " + chk.reason);
  return b.project(pullback(phi, b.representative(a)));
}

ScalingSymmetry scaling_symmetry(const RestrictionBasis& b, const std::string& label, const Rational& value) {
  if (value == 0) throw InputError("cannot normalize a zero coefficient");
  const BasisElement& el = b.element(label);
  int r = el.qdeg;
  ScalingSymmetry out;
  Rational target = value;
  if (r % 2 == 0 && sgn(value) < 0) {
    out.normalized_to = -1;
    target = -value;
  }
  Rational root;
  std::string sign = out.normalized_to < 0 ? "-1" : "1";
  if (!exact_root(target, static_cast<unsigned>(r), root)) {
    out.verdict = "normalize to " + sign + " (root of order " + std::to_string(r) + " is irrational)";
    return out;
  }
  const MonomialCurve& c = b.curve();
  std::size_t m = c.ambient();
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i < m; ++i) {
    Rational f = 1;
    if (i < c.s())
      for (int k = 0; k < c.lambda()[i]; ++k) f /= root;
    comps.push_back(Polynomial::variable(m, i) * f);
  }
  out.map = PolyMap(m, std::move(comps));
  out.verdict = "normalize to " + sign;
  return out;
}

}  // namespace algres
