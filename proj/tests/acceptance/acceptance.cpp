// Acceptance run: one [PASS]/[FAIL] line per criterion. Exits 0 when every
// failure is on the list of documented printed-value discrepancies.

#include <json.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "algres/atlas.hpp"
#include "oracle.hpp"
#include "properties.hpp"

using namespace algres;

namespace {

const std::vector<std::vector<int>> kSemigroups{{4, 5, 6, 7}, {4, 5, 6}, {4, 5, 7}};

std::string id(const std::vector<int>& sg) { return MonomialCurve(sg).id(); }

struct Result {
  bool pass = true;
  std::string detail;
  /// Failures that are documented discrepancies with printed values.
  std::vector<std::string> documented;
  /// Any other failure.
  std::vector<std::string> other;

  void fail(const std::string& what) {
    pass = false;
    other.push_back(what);
  }
};

std::string join(const std::vector<std::string>& v, std::size_t limit = 6) {
  std::string out;
  for (std::size_t i = 0; i < v.size() && i < limit; ++i) out += (i ? "; " : "") + v[i];
  if (v.size() > limit) out += "; ... (" + std::to_string(v.size()) + " total)";
  return out;
}

// AC1 -----------------------------------------------------------------------

Result basis_dimensions() {
  Result r;
  const std::map<std::string, std::pair<std::vector<int>, int>> want{
      {"4,5,6,7", {{9, 10, 11, 11, 12, 13, 13, 14, 15}, 15}},
      {"4,5,6", {{9, 10, 11, 13, 14, 15, 17, 19}, 19}},
      {"4,5,7", {{9, 11, 12, 13, 14, 15, 16, 17, 18}, 18}}};
  for (const auto& sg : kSemigroups) {
    MonomialCurve c(sg);
    RestrictionBasis b = closed2_restriction_basis(c);
    const auto& [degrees, k] = want.at(c.id());
    if (b.degrees() != degrees || b.K() != k) r.fail(c.id() + ": degrees or K differ");
    BasisOptions canon;
    canon.paper_frame = false;
    RestrictionBasis cb = closed2_restriction_basis(c, canon);
    std::vector<QVector> cols;
    for (const auto& e : b.elements()) cols.push_back(cb.project(e.representative).coords());
    if (rank(QMatrix::from_columns(cols, cb.size())) != cb.size()) r.fail(c.id() + ": printed representatives are dependent");
  }
  r.detail = "dimensions 9/8/9, K = 15/19/18, printed representatives invertible";
  return r;
}

// AC2 -----------------------------------------------------------------------

Result action_tables() {
  Result r;
  int checked = 0;
  for (const auto& sg : kSemigroups) {
    std::string name;
    for (int l : sg) name += (name.empty() ? "" : "-") + std::to_string(l);
    std::ifstream in(std::string(ALGRES_DATA_DIR) + "/tables/action-" + name + ".json");
    auto doc = nlohmann::json::parse(in);
    const RestrictionBasis& b = atlas_basis(sg);
    ActionTable t = action_table(b, LiftPolicy::Paper);
    std::vector<std::string> cols = doc["columns"];
    for (const auto& [s, values] : doc["rows"].items()) {
      int shift = std::stoi(s);
      auto it = std::find(t.shifts.begin(), t.shifts.end(), shift);
      if (it == t.shifts.end()) {
        r.fail(id(sg) + ": no field X" + s);
        continue;
      }
      std::size_t row = static_cast<std::size_t>(it - t.shifts.begin());
      for (std::size_t j = 0; j < cols.size(); ++j) {
        AlgRestriction want = parse_restriction(values[j].get<std::string>(), b);
        const AlgRestriction& got = t.entries[row][*b.index_of(cols[j])];
        ++checked;
        if (!(got == want))
          r.fail(id(sg) + " L(X" + s + ") " + cols[j] + ": got " + got.to_string() + ", printed " + want.to_string());
      }
    }
  }
  r.detail = std::to_string(checked) + " printed entries compared";
  return r;
}

// AC3 -----------------------------------------------------------------------

int full_n(const std::vector<NormalFormEntry>& entries) {
  int n = 2;
  for (const auto& e : entries) n = std::max(n, e.min_n);
  return n;
}

Result invariant_columns() {
  Result r;
  const std::set<std::string> documented{"4,5,6 row 8 iota", "4,5,7 row 8 iota", "4,5,7 row 9 iota"};
  std::set<std::string> failing;
  int rows = 0, samples = 0;
  for (const auto& sg : kSemigroups) {
    auto entries = load_atlas(sg);
    int n = full_n(entries);
    for (const auto& e : entries) {
      ++rows;
      int count = 0;
      for (const auto& s : e.samples)
        for (const auto& p : expand_signs(e, s)) {
          if (!satisfies_constraints(e, p, n)) continue;
          ++count;
          EntryReport rep = verify_entry(e, p, n);
          for (const auto& c : rep.checks) {
            if (c.name != "mu" && c.name != "iota" && c.name != "Lt") continue;
            if (c.pass || c.informational) continue;
            std::string key = id(sg) + " row " + std::to_string(e.row) + " " + c.name;
            if (failing.insert(key).second) {
              std::string what = key + " (" + c.detail + ")";
              if (documented.count(key)) {
                r.pass = false;
                r.documented.push_back(what);
              } else {
                r.fail(what);
              }
            }
          }
        }
      samples += count;
      if (count < 3 && !e.parameters.empty()) r.fail(id(sg) + " row " + std::to_string(e.row) + ": fewer than 3 samples");
    }
  }
  r.detail = std::to_string(rows) + " rows, " + std::to_string(samples) + " samples";
  return r;
}

// AC4 -----------------------------------------------------------------------

Result representability() {
  Result r;
  const std::vector<Rational> grid{Rational(-2), Rational(-1, 2), Rational(0), Rational(1), Rational(5, 3)};
  // Printed R^4 constraints: parameters that must be nonzero.
  const std::map<int, std::vector<std::string>> printed{{1, {"c2"}}, {2, {"c1", "c2"}}, {3, {"c1"}}, {4, {"c1"}}};
  int tests = 0;
  auto check_atlas = [&](const std::vector<int>& sg, int rows_n2) {
    for (const auto& e : load_atlas(sg)) {
      std::vector<ParamValues> points{{}};
      for (const auto& name : e.parameters) {
        std::vector<ParamValues> next;
        for (const auto& p : points)
          for (const auto& v : grid) {
            ParamValues q = p;
            q[name] = v;
            next.push_back(q);
          }
        points = next;
      }
      for (const auto& base : points)
        for (const auto& p : expand_signs(e, base)) {
          if (!satisfies_constraints(e, p, 3)) continue;
          bool want = e.row <= rows_n2;
          if (sg.size() == 4 && printed.count(e.row))
            for (const auto& name : printed.at(e.row))
              if (p.at(name) == 0) want = false;
          bool got = representable_by_symplectic(entry_restriction(e, p), 2);
          ++tests;
          if (got != want)
            r.fail(id(sg) + " row " + std::to_string(e.row) + " [" + sample_to_string(p) + "]: rank test says " +
                   (got ? "representable" : "not representable"));
        }
    }
  };
  check_atlas({4, 5, 6, 7}, 9);
  check_atlas({4, 5, 7}, 3);
  std::vector<int> rows456;
  for (const auto& e : load_atlas({4, 5, 6})) {
    ParamValues p;
    for (const auto& name : e.parameters) p[name] = 1;
    if (e.sign_variants) p["pm"] = 1;
    if (representable_by_symplectic(entry_restriction(e, p), 2)) rows456.push_back(e.row);
  }
  std::string list;
  for (int row : rows456) list += (list.empty() ? "" : ",") + std::to_string(row);
  r.detail = std::to_string(tests) + " rank tests; (4,5,6) rows representable in R^4 (reported only): " + list;
  return r;
}

// AC5 -----------------------------------------------------------------------

bool clean(const ParamSolution& s) {
  if (!s.feasible) return false;
  for (int p : s.poles_in_unit_interval)
    if (p) return false;
  return true;
}

bool clean(const HomotopyResult& h) {
  if (!h.feasible) return false;
  for (int p : h.poles_in_unit_interval)
    if (p) return false;
  return true;
}

Result moser() {
  Result r;
  const RestrictionBasis& b = atlas_basis({4, 5, 6, 7});
  const std::vector<std::pair<Rational, Rational>> samples{
      {1, 1}, {-2, 3}, {Rational(1, 2), -1}, {5, Rational(2, 7)}, {Rational(-3, 4), Rational(-5, 2)}};
  UPoly t = UPoly::t(), one_minus_t = UPoly(1) - t;
  for (const auto& [c1, c2] : samples) {
    std::string tag = "c1=" + to_string(c1) + ", c2=" + to_string(c2);
    AlgRestriction a = parse_restriction("a11+ - 3/2*a11- + c1*a12 + c2*a13+", b, {{"c1", c1}, {"c2", c2}});
    if (!clean(moser_reduce(a, a.graded_part(13)))) r.fail("moser_reduce, " + tag);
    // The printed 4x4 system in b1..b4.
    std::vector<std::vector<UPoly>> m{
        {UPoly(5 * c1), UPoly(-11), UPoly(0), UPoly(0)},
        {UPoly(-14 * c1), UPoly(Rational(-45, 2)), UPoly(0), UPoly(0)},
        {UPoly(-14 * c2) * one_minus_t, UPoly(Rational(-7, 2) * c1), UPoly(Rational(-7, 2)), UPoly(0)},
        {UPoly(0), UPoly(5 * c2) * one_minus_t, UPoly(10 * c1), UPoly(Rational(-35, 2))}};
    if (!clean(solve_param_linear(m, {UPoly(c2), UPoly(0), UPoly(0), UPoly(0)}))) r.fail("printed system, " + tag);
  }

  const RestrictionBasis& b6 = atlas_basis({4, 5, 6});
  const MonomialCurve& c6 = b6.curve();
  LiftableField x6 = liftable_field(c6, 6, LiftPolicy::Paper), x8 = liftable_field(c6, 8, LiftPolicy::Paper);
  const std::vector<std::array<Rational, 4>> cut{
      {1, 1, 1, 1}, {-1, 2, -1, 3}, {1, Rational(-1, 2), 4, Rational(2, 3)}, {-1, 3, 0, -2}, {1, Rational(5, 7), -3, 1}};
  for (const auto& [pm, c1, c2, c3] : cut) {
    std::string tag = "pm=" + to_string(pm) + ", c1=" + to_string(c1) + ", c2=" + to_string(c2) + ", c3=" + to_string(c3);
    ParamValues p{{"pm", pm}, {"c1", c1}, {"c2", c2}, {"c3", c3}};
    AlgRestriction a0 = parse_restriction("pm*a10 + c1*a11 + c2*a13 + c3*a17", b6, p);
    AlgRestriction a17 = parse_restriction("c3*a17", b6, p);
    VectorField eta = (c3 / (17 * c1)) * x6.field + (-c2 * c3 / (17 * c1 * c1)) * x8.field;
    // A_t = a0 - t a17 is affine in t, so L_eta A_t = c3 a17 for all t iff
    // L_eta a0 = c3 a17 and L_eta a17 = 0.
    if (!(lie_action(eta, a0) == a17) || !lie_action(eta, a17).is_zero()) r.fail("explicit eta, " + tag);
    if (!clean(moser_reduce(a0, a17))) r.fail("moser_reduce on the (4,5,6) cut, " + tag);
  }
  r.detail = "5 samples of each system";
  return r;
}

// AC6 -----------------------------------------------------------------------

Result distinguishability() {
  Result r;
  std::size_t pairs = 0;
  for (const auto& sg : kSemigroups) {
    DistinctnessReport rep = verify_pairwise_distinct(sg, full_n(load_atlas(sg)));
    pairs += rep.pairs.size();
    for (const auto& p : rep.pairs)
      if (!p.distinct)
        r.fail(id(sg) + " rows " + std::to_string(p.row_a) + " [" + p.sample_a + "] / " + std::to_string(p.row_b) + " [" +
               p.sample_b + "]");
  }
  auto entries = load_atlas({4, 5, 6, 7});
  for (int i : {6, 7, 8})
    for (int j : {6, 7, 8}) {
      if (i >= j) continue;
      const auto& ei = entries[static_cast<std::size_t>(i - 1)];
      const auto& ej = entries[static_cast<std::size_t>(j - 1)];
      for (const auto& si : ei.samples)
        for (const auto& sj : ej.samples)
          if (pmqd_compare(entry_restriction(ei, si), entry_restriction(ej, sj)).kind != PmqdVerdict::Kind::NotProportional)
            r.fail("(4,5,6,7) rows " + std::to_string(i) + "/" + std::to_string(j) + " proportional minimal parts");
    }
  r.detail = std::to_string(pairs) + " pairs; rows 6/7/8 of (4,5,6,7) not proportional";
  return r;
}

// AC7 -----------------------------------------------------------------------

Result normal_form_identity() {
  Result r;
  int checks = 0;
  for (const auto& sg : kSemigroups) {
    auto entries = load_atlas(sg);
    for (const auto& e : entries)
      for (const auto& real : e.realizations)
        for (const auto& s : e.samples)
          for (const auto& p : expand_signs(e, s)) {
            if (!satisfies_constraints(e, p, real.n)) continue;
            for (int n = real.n; n <= std::max(real.n, full_n(entries)); ++n) {
              if (realization_for(e, n) != &real) continue;
              EntryReport rep = verify_entry(e, p, n);
              for (const auto& c : rep.checks)
                if (c.name == "curve-identity" || c.name == "invertible-linear-part" || c.name == "restriction") {
                  ++checks;
                  if (!c.pass)
                    r.fail(id(sg) + " row " + std::to_string(e.row) + " n=" + std::to_string(n) + " [" +
                           sample_to_string(p) + "] " + c.name + ": " + c.detail);
                }
            }
          }
  }
  const auto table1 = load_atlas({4, 5, 6, 7});
  const Realization* row1 = realization_for(table1.at(0), 2);
  if (!row1 || row1->map != "(x1, x2 + c1*x4, x3, c2*x4)") r.fail("row 1 map differs from the printed F");
  r.detail = std::to_string(checks) + " identity checks; row 1 F = " + (row1 ? row1->map : std::string("?"));
  return r;
}

// AC8 -----------------------------------------------------------------------

Result property_suites() {
  Result r;
  int cases = 0;
  for (const auto& suite : props::acceptance_suites()) {
    props::Outcome o = suite.run();
    cases += o.cases;
    if (!o.pass()) r.fail(suite.name + ": " + std::to_string(o.failures) + " failures, " + o.first_failure);
  }
  r.detail = "8 suites, " + std::to_string(cases) + " cases, seed " + std::to_string(props::kSeed);
  return r;
}

// AC9 -----------------------------------------------------------------------

Result oracle_equivalence() {
  Result r;
  int degrees = 0;
  for (const auto& sg : kSemigroups) {
    MonomialCurve c(sg);
    int top = atlas_basis(sg).K() + sg.back();
    for (int d = 0; d <= top; ++d) {
      ++degrees;
      std::size_t engine = restriction_quotient(c, 2, d).dim_quotient(), brute = oracle::dim_A2(sg, d);
      if (engine != brute)
        r.fail(c.id() + " d=" + std::to_string(d) + ": engine " + std::to_string(engine) + ", brute force " +
               std::to_string(brute));
    }
  }
  r.detail = std::to_string(degrees) + " graded pieces";
  return r;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Result (*run)();
  };
  const Criterion criteria[] = {{"basis dimensions and degrees", basis_dimensions},
                                {"action tables", action_tables},
                                {"invariant columns", invariant_columns},
                                {"representability thresholds", representability},
                                {"Moser reductions", moser},
                                {"distinguishability", distinguishability},
                                {"normal-form identity", normal_form_identity},
                                {"property suites", property_suites},
                                {"oracle equivalence", oracle_equivalence}};
  int undocumented = 0, failed = 0;
  auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < std::size(criteria); ++i) {
    Result r;
    try {
      r = criteria[i].run();
    } catch (const std::exception& e) {
      r.fail(std::string("exception: ") + e.what());
    }
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << "AC" << i + 1 << " " << criteria[i].name << ": " << r.detail;
    if (!r.documented.empty()) std::cout << "; printed values not reproduced: " << join(r.documented);
    if (!r.other.empty()) std::cout << "; failures: " << join(r.other);
    std::cout << "\n";
    if (!r.pass) ++failed;
    if (!r.other.empty()) ++undocumented;
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << std::size(criteria) - static_cast<std::size_t>(failed) << "/" << std::size(criteria) << " criteria pass";
  if (failed > undocumented) std::cout << "; " << failed - undocumented << " fail only on documented printed values";
  std::cout << " (" << std::fixed << std::setprecision(1) << secs << " s)\n";
  return undocumented == 0 ? 0 : 1;
}
