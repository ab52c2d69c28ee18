#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <regex>
#include <sstream>

#include "algres/atlas.hpp"

namespace algres::cli {

namespace {

using json = nlohmann::ordered_json;

/// Thrown for a completed run whose checks failed (exit status 1).
struct VerificationFailed {};

struct Config {
  std::string semigroup;
  std::optional<int> ambient;
  std::optional<int> max_qdeg;
  std::string lift_policy = "grlex";
  std::string format = "text";
  std::int64_t seed = 0;
  std::vector<std::string> params;
  std::string form, map, restriction, kill, samples_file;
  std::optional<int> n;
};

struct Document {
  json j;
  std::vector<std::string> text;
  std::vector<std::string> latex;
};

std::string latex(std::string s) {
  s = std::regex_replace(s, std::regex(R"(\^dx)"), " \\wedge dx");
  s = std::regex_replace(s, std::regex(R"(\bx(\d+))"), "x_{$1}");
  s = std::regex_replace(s, std::regex(R"(dx(\d+))"), "dx_{$1}");
  s = std::regex_replace(s, std::regex(R"(\ba(\d+)(_\d+)?([+-])(?=\s|$))"), "a_{$1$2}^{$3}");
  s = std::regex_replace(s, std::regex(R"(\ba(\d+)(_\d+)?\b)"), "a_{$1$2}");
  s = std::regex_replace(s, std::regex(R"(\bc(\d+))"), "c_{$1}");
  s = std::regex_replace(s, std::regex(R"((\d+)/(\d+))"), "\\frac{$1}{$2}");
  s = std::regex_replace(s, std::regex(R"(\*)"), " ");
  return s;
}

json rationals(const QVector& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s + " " : s + std::string(w - s.size(), ' '); }

ParamValues parse_params(const std::vector<std::string>& items) {
  ParamValues out;
  for (const auto& item : items) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw InputError("--param expects name=value, got '" + item + "'");
    out[item.substr(0, eq)] = parse_scalar(item.substr(eq + 1));
  }
  return out;
}

MonomialCurve curve_of(const Config& c) {
  std::vector<int> w = parse_weight_list(c.semigroup);
  std::size_t m = c.ambient ? static_cast<std::size_t>(*c.ambient) : w.size();
  if (c.ambient && *c.ambient < static_cast<int>(w.size())) throw InputError("--ambient is smaller than the number of weights");
  return MonomialCurve(w, m);
}

RestrictionBasis basis_of(const Config& c) {
  BasisOptions opt;
  if (c.max_qdeg) opt.max_qdeg = *c.max_qdeg;
  return closed2_restriction_basis(curve_of(c), opt);
}

void add_basis(Document& d, const RestrictionBasis& b) {
  d.j["semigroup"] = b.curve().id();
  json arr = json::array();
  for (const auto& e : b.elements())
    arr.push_back({{"label", e.label}, {"qdeg", e.qdeg}, {"representative", e.representative.to_string()}});
  d.j["basis"] = arr;
}

std::string ext(const ExtInt& x) { return x.to_string(); }

void cmd_basis(const Config& c, Document& d) {
  RestrictionBasis b = basis_of(c);
  add_basis(d, b);
  d.j["report"] = {{"ambient", b.curve().ambient()}, {"dimension", b.size()}, {"K", b.K()}, {"bound", b.bound()}};
  d.text.push_back("semigroup (" + b.curve().id() + ") in R^" + std::to_string(b.curve().ambient()) + ": dimension " +
                   std::to_string(b.size()) + ", K = " + std::to_string(b.K()) + ", bound " + std::to_string(b.bound()));
  d.text.push_back(pad("label", 8) + pad("qdeg", 6) + "representative");
  for (const auto& e : b.elements()) {
    d.text.push_back(pad(e.label, 8) + pad(std::to_string(e.qdeg), 6) + e.representative.to_string());
    d.latex.push_back(latex(e.label) + " & " + std::to_string(e.qdeg) + " & " + latex(e.representative.to_string()) +
                      " \\\\");
  }
}

void cmd_action_table(const Config& c, Document& d) {
  RestrictionBasis b = basis_of(c);
  add_basis(d, b);
  LiftPolicy policy = parse_lift_policy(c.lift_policy);
  ActionTable t = action_table(b, policy);
  json shifts = json::array();
  for (std::size_t i = 0; i < t.shifts.size(); ++i) {
    int s = t.shifts[i];
    bool outside = s > 0 && !b.curve().in_semigroup(s);
    shifts.push_back({{"s", s}, {"field", t.fields[i].field.to_string()}, {"outside_semigroup", outside}});
    d.text.push_back("X" + std::to_string(s) + " = " + t.fields[i].field.to_string());
    if (outside) d.text.push_back("  note: shift " + std::to_string(s) + " is not in the semigroup");
  }
  json entries = json::array();
  std::string head = pad("", 8);
  for (int s : t.shifts) head += "| X" + std::to_string(s) + " ";
  d.text.push_back("");
  for (std::size_t col = 0; col < b.size(); ++col) {
    std::string label = b.elements()[col].label;
    std::string tex = latex(label);
    for (std::size_t row = 0; row < t.shifts.size(); ++row) {
      const AlgRestriction& v = t.entries[row][col];
      entries.push_back({{"shift", t.shifts[row]}, {"element", label}, {"value", v.to_string()}, {"coords", rationals(v.coords())}});
      d.text.push_back("L(X" + std::to_string(t.shifts[row]) + ") " + label + " = " + v.to_string());
      tex += " & " + latex(v.to_string());
    }
    d.latex.push_back(tex + " \\\\");
  }
  d.j["table"] = {{"lift_policy", to_string(policy)}, {"shifts", shifts}, {"entries", entries}};
}

void cmd_project(const Config& c, Document& d) {
  if (c.form.empty()) throw InputError("--form is required");
  RestrictionBasis b = basis_of(c);
  add_basis(d, b);
  DifferentialForm w = parse_form(c.form, b.curve().ambient(), parse_params(c.params));
  AlgRestriction a = b.project(w);
  d.j["report"] = {{"form", w.to_string()}, {"restriction", a.to_string()}, {"coords", rationals(a.coords())}};
  d.text.push_back("[" + w.to_string() + "] = " + a.to_string());
  d.latex.push_back("[" + latex(w.to_string()) + "]_f = " + latex(a.to_string()));
}

AlgRestriction restriction_of(const Config& c, const RestrictionBasis& b) {
  if (c.restriction.empty()) throw InputError("--restriction is required");
  return parse_restriction(c.restriction, b, parse_params(c.params));
}

void cmd_invariants(const Config& c, Document& d) {
  RestrictionBasis b = basis_of(c);
  add_basis(d, b);
  AlgRestriction a = restriction_of(c, b);
  InvariantReport r = invariants(a, parse_lift_policy(c.lift_policy));
  json rep = {{"restriction", a.to_string()},
              {"mu", r.multiplicity},
              {"iota", ext(r.isotropy)},
              {"Lt", ext(r.tangency)},
              {"min_qdeg", r.min_qdeg ? json(*r.min_qdeg) : json(nullptr)},
              {"min_part", r.min_part ? json(r.min_part->to_string()) : json(nullptr)}};
  d.text.push_back("restriction " + a.to_string());
  d.text.push_back("mu = " + std::to_string(r.multiplicity));
  d.text.push_back("iota = " + ext(r.isotropy));
  d.text.push_back("Lt = " + ext(r.tangency));
  d.text.push_back("min quasi-degree = " + (r.min_qdeg ? std::to_string(*r.min_qdeg) : std::string("none")) +
                   (r.min_part ? ", part " + r.min_part->to_string() : ""));
  std::string row = latex(a.to_string()) + " & " + std::to_string(r.multiplicity) + " & " +
                    (r.isotropy.is_infinite() ? "\\infty" : ext(r.isotropy)) + " & " +
                    (r.tangency.is_infinite() ? "\\infty" : ext(r.tangency));
  if (c.n) {
    bool rep_ok = representable_by_symplectic(a, *c.n);
    rep["n"] = *c.n;
    rep["representable"] = rep_ok;
    d.text.push_back("representable in R^" + std::to_string(2 * *c.n) + ": " + (rep_ok ? "yes" : "no"));
  }
  d.latex.push_back(row + " \\\\");
  d.j["report"] = rep;
}

void cmd_tangent(const Config& c, Document& d) {
  RestrictionBasis b = basis_of(c);
  add_basis(d, b);
  AlgRestriction a = restriction_of(c, b);
  TangentSpace ts = orbit_tangent_space(a, parse_lift_policy(c.lift_policy));
  json span = json::array();
  d.text.push_back("tangent space of the orbit of " + a.to_string() + ": dimension " + std::to_string(ts.dim) +
                   ", codimension " + std::to_string(b.size() - ts.dim));
  for (std::size_t i = 0; i < ts.spanning.size(); ++i) {
    span.push_back({{"shift", ts.shifts[i]}, {"value", ts.spanning[i].to_string()}});
    d.text.push_back("  L(X" + std::to_string(ts.shifts[i]) + ") = " + ts.spanning[i].to_string());
    d.latex.push_back(latex(ts.spanning[i].to_string()) + " \\\\");
  }
  json outside = json::array();
  for (std::size_t i = 0; i < b.size(); ++i)
    if (!ts.contains(b.unit(i))) outside.push_back(b.elements()[i].label);
  std::string outs;
  for (const auto& l : outside) outs += (outs.empty() ? "" : ", ") + l.get<std::string>();
  d.text.push_back("basis elements outside: " + (outs.empty() ? std::string("none") : outs));
  d.j["report"] = {{"restriction", a.to_string()},
                   {"dimension", ts.dim},
                   {"codimension", b.size() - ts.dim},
                   {"spanning", span},
                   {"outside", outside}};
}

void cmd_moser(const Config& c, Document& d) {
  RestrictionBasis b = basis_of(c);
  add_basis(d, b);
  AlgRestriction a = restriction_of(c, b);
  if (c.kill.empty()) throw InputError("--kill is required");
  const BasisElement& el = b.element(c.kill);
  AlgRestriction kill = a.graded_part(el.qdeg);
  HomotopyResult h = moser_reduce(a, kill, parse_lift_policy(c.lift_policy));
  bool poles = false;
  json coeffs = json::array();
  d.text.push_back("A_t = " + a.to_string() + " - t*(" + kill.to_string() + ")");
  d.text.push_back(std::string("feasible: ") + (h.feasible ? "yes" : "no"));
  for (std::size_t i = 0; i < h.coefficients.size(); ++i) {
    int p = i < h.poles_in_unit_interval.size() ? h.poles_in_unit_interval[i] : 0;
    poles = poles || p > 0;
    coeffs.push_back({{"shift", h.shifts[i]}, {"coefficient", h.coefficients[i].to_string()}, {"poles_in_unit_interval", p}});
    d.text.push_back("  b" + std::to_string(h.shifts[i]) + "(t) = " + h.coefficients[i].to_string() +
                     "  poles in [0,1]: " + std::to_string(p));
    d.latex.push_back("b_{" + std::to_string(h.shifts[i]) + "}(t) & " + latex(h.coefficients[i].to_string()) + " \\\\");
  }
  d.j["report"] = {{"restriction", a.to_string()}, {"kill", kill.to_string()}, {"feasible", h.feasible}, {"coefficients", coeffs}};
  if (!h.feasible || poles) throw VerificationFailed{};
}

std::map<int, std::vector<ParamValues>> read_samples(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read samples file " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(std::string("samples file: ") + e.what());
  }
  std::map<int, std::vector<ParamValues>> out;
  try {
    for (const auto& [row, list] : j.items()) {
      for (const auto& s : list) {
        ParamValues p;
        for (const auto& [k, v] : s.items()) p[k] = parse_rational(v.is_string() ? v.get<std::string>() : v.dump());
        out[std::stoi(row)].push_back(std::move(p));
      }
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("samples file: ") + e.what());
  } catch (const std::logic_error&) {
    throw InputError("samples file: rows must be integers");
  }
  return out;
}

void cmd_verify_atlas(const Config& c, Document& d) {
  std::vector<int> sg = parse_weight_list(c.semigroup);
  Atlas atlas = load_atlas_document(sg);
  add_basis(d, atlas_basis(sg));
  int n = 2;
  for (const auto& e : atlas.entries) n = std::max(n, e.min_n);
  if (c.n) n = *c.n;
  if (n < 2) throw InputError("--n must be at least 2");
  std::map<int, std::vector<ParamValues>> samples;
  if (!c.samples_file.empty()) samples = read_samples(c.samples_file);
  AtlasReport rep = verify_atlas(sg, n, samples);

  d.text.push_back("atlas (" + atlas_basis(sg).curve().id() + "), n = " + std::to_string(n));
  json entries = json::array();
  for (const auto& e : rep.entries) {
    json checks = json::array();
    for (const auto& ch : e.checks)
      checks.push_back({{"name", ch.name}, {"pass", ch.pass}, {"informational", ch.informational}, {"detail", ch.detail}});
    entries.push_back({{"row", e.row}, {"sample", e.sample}, {"pass", e.pass()}, {"checks", checks}});
    std::string line = pad("row " + std::to_string(e.row), 8) + pad("[" + e.sample + "]", 24) +
                       (e.pass() ? "pass" : "FAIL " + e.first_failure());
    d.text.push_back(line);
    for (const auto& ch : e.checks)
      if (ch.informational && !ch.pass) d.text.push_back("        info: " + ch.name + " " + ch.detail);
  }
  std::map<std::string, int> witnesses;
  json undist = json::array();
  for (const auto& p : rep.distinct.pairs) {
    ++witnesses[p.witness];
    if (!p.distinct) {
      undist.push_back({{"row_a", p.row_a}, {"sample_a", p.sample_a}, {"row_b", p.row_b}, {"sample_b", p.sample_b}});
      d.text.push_back("undistinguished: row " + std::to_string(p.row_a) + " [" + p.sample_a + "] vs row " +
                       std::to_string(p.row_b) + " [" + p.sample_b + "]");
    }
  }
  std::string summary = "pairs " + std::to_string(rep.distinct.pairs.size()) + ":";
  json wj = json::object();
  for (const auto& [k, v] : witnesses) {
    summary += " " + k + "=" + std::to_string(v);
    wj[k] = v;
  }
  d.text.push_back(summary);
  d.text.push_back(std::string("result: ") + (rep.pass() ? "pass" : "FAIL"));

  for (const auto& e : atlas.entries) {
    std::string iota = e.expected.iota.is_infinite() ? "\\infty" : e.expected.iota.to_string();
    std::string lt = e.expected.lt.is_infinite() ? "\\infty" : e.expected.lt.to_string();
    std::string restr = std::regex_replace(e.restriction, std::regex(R"(pm\*)"), "\\pm ");
    d.latex.push_back(std::to_string(e.row) + " & " + latex(restr) + " & " + std::to_string(e.expected.mu) + " & " +
                      iota + " & " + lt + " \\\\");
  }
  d.j["report"] = {{"n", n},
                   {"pass", rep.pass()},
                   {"entries", entries},
                   {"pairs", rep.distinct.pairs.size()},
                   {"witnesses", wj},
                   {"undistinguished", undist}};
  if (!rep.pass()) throw VerificationFailed{};
}

void cmd_pullback(const Config& c, Document& d) {
  if (c.map.empty() || c.form.empty()) throw InputError("--map and --form are required");
  RestrictionBasis b = basis_of(c);
  add_basis(d, b);
  std::size_t m = b.curve().ambient();
  ParamValues params = parse_params(c.params);
  PolyMap phi = parse_map(c.map, m, params);
  if (phi.target() != m) throw InputError("map has " + std::to_string(phi.target()) + " components, expected " + std::to_string(m));
  DifferentialForm w = parse_form(c.form, m, params);
  DifferentialForm pw = pullback(phi, w);
  json rep = {{"map", phi.to_string()}, {"form", w.to_string()}, {"pullback", pw.to_string()}};
  d.text.push_back("pullback: " + pw.to_string());
  d.latex.push_back(latex(pw.to_string()));
  try {
    AlgRestriction a = b.project(pw);
    rep["restriction"] = a.to_string();
    d.text.push_back("restriction: " + a.to_string());
  } catch (const InputError& e) {
    rep["restriction"] = nullptr;
    d.text.push_back(std::string("restriction: ") + e.what());
  }
  SymmetryCheck sc = check_curve_symmetry(b.curve(), phi, symmetry_check_order(b));
  rep["symmetry"] = sc.ok;
  d.text.push_back(std::string("curve symmetry: ") + (sc.ok ? "yes, phi(t) = " + sc.phi.to_string() : "no (" + sc.reason + ")"));
  d.j["report"] = rep;
}

void emit(const Config& c, const Document& d, std::ostream& out) {
  if (c.format == "json") {
    out << d.j.dump(2) << "\n";
  } else if (c.format == "latex") {
    for (const auto& l : d.latex) out << l << "\n";
  } else {
    for (const auto& l : d.text) out << l << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Algebraic restrictions and symplectic normal forms of monomial curves", "algres"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));
  app.add_option("--seed", cfg.seed, "Random seed recorded in the output");

  auto common = [&](CLI::App* sub) {
    sub->add_option("semigroup", cfg.semigroup, "Weights, e.g. 4,5,6,7")->required();
    sub->add_option("--param", cfg.params, "Parameter value name=value (repeatable)");
    return sub;
  };
  auto* basis = common(app.add_subcommand("basis", "Basis of algebraic restrictions of closed 2-forms"));
  basis->add_option("--ambient", cfg.ambient, "Ambient dimension");
  basis->add_option("--max-qdeg", cfg.max_qdeg, "Quasi-degree scan bound");
  auto* table = common(app.add_subcommand("action-table", "Lie derivatives of basis elements along liftable fields"));
  table->add_option("--lift-policy", cfg.lift_policy, "grlex or paper");
  auto* proj = common(app.add_subcommand("project", "Coordinates of the restriction of a form"));
  proj->add_option("--form", cfg.form)->required();
  proj->add_option("--ambient", cfg.ambient, "Ambient dimension");
  auto* inv = common(app.add_subcommand("invariants", "Symplectic invariants of a restriction"));
  inv->add_option("--restriction", cfg.restriction)->required();
  inv->add_option("--n", cfg.n, "Test representability in R^(2n)");
  auto* tan = common(app.add_subcommand("tangent", "Tangent space to the orbit of a restriction"));
  tan->add_option("--restriction", cfg.restriction)->required();
  auto* moser = common(app.add_subcommand("moser", "Moser homotopy removing one graded part"));
  moser->add_option("--restriction", cfg.restriction)->required();
  moser->add_option("--kill", cfg.kill, "Label whose graded part is removed")->required();
  auto* verify = common(app.add_subcommand("verify-atlas", "Verify the classification tables"));
  verify->add_option("--n", cfg.n, "Half the ambient dimension");
  verify->add_option("--samples", cfg.samples_file, "JSON file {row: [{param: value}]}");
  auto* pb = common(app.add_subcommand("pullback", "Pull back a form along a polynomial map"));
  pb->add_option("--map", cfg.map)->required();
  pb->add_option("--form", cfg.form)->required();
  pb->add_option("--ambient", cfg.ambient, "Ambient dimension");
  for (auto* sub : {table, inv, tan, moser, verify})
    if (!sub->get_option_no_throw("--lift-policy")) sub->add_option("--lift-policy", cfg.lift_policy, "grlex or paper");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Document doc;
  doc.j["command"] = app.get_subcommands().front()->get_name();
  doc.j["seed"] = cfg.seed;
  int status = 0;
  try {
    const std::string name = app.get_subcommands().front()->get_name();
    if (name == "basis") cmd_basis(cfg, doc);
    else if (name == "action-table") cmd_action_table(cfg, doc);
    else if (name == "project") cmd_project(cfg, doc);
    else if (name == "invariants") cmd_invariants(cfg, doc);
    else if (name == "tangent") cmd_tangent(cfg, doc);
    else if (name == "moser") cmd_moser(cfg, doc);
    else if (name == "verify-atlas") cmd_verify_atlas(cfg, doc);
    else if (name == "pullback") cmd_pullback(cfg, doc);
  } catch (const VerificationFailed&) {
    status = 1;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  emit(cfg, doc, out);
  return status;
}

}  // namespace algres::cli
