#include "algres/atlas.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <regex>
#include <sstream>

#include <json.hpp>

namespace algres {

namespace {

using json = nlohmann::ordered_json;

const std::vector<std::string> kSupported = {"4,5,6,7", "4,5,6", "4,5,7"};

std::string join_weights(const std::vector<int>& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "," : "") + std::to_string(w[i]);
  return out;
}

std::string file_stem(const std::vector<int>& w) {
  std::string s = join_weights(w);
  std::replace(s.begin(), s.end(), ',', '-');
  return s;
}

const json& field(const json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("atlas document: missing field \"") + key + "\"");
  return j.at(key);
}

std::vector<ParamConstraint> constraints_from(const json& j) {
  std::vector<ParamConstraint> out;
  for (const auto& c : j) {
    ParamConstraint pc;
    pc.param = field(c, "param").get<std::string>();
    for (const auto& v : field(c, "excluded")) pc.excluded.push_back(parse_rational(v.get<std::string>()));
    out.push_back(std::move(pc));
  }
  return out;
}

json constraints_to(const std::vector<ParamConstraint>& cs) {
  json out = json::array();
  for (const auto& c : cs) {
    json ex = json::array();
    for (const auto& v : c.excluded) ex.push_back(to_string(v));
    out.push_back({{"param", c.param}, {"excluded", ex}});
  }
  return out;
}

NormalFormEntry entry_from(const json& j, const std::vector<int>& semigroup) {
  NormalFormEntry e;
  e.semigroup = semigroup;
  e.row = field(j, "row").get<int>();
  e.restriction = field(j, "restriction").get<std::string>();
  e.parameters = field(j, "parameters").get<std::vector<std::string>>();
  e.sign_variants = field(j, "sign_variants").get<bool>();
  e.constraints = constraints_from(field(j, "constraints"));
  e.constraints_n2 = constraints_from(field(j, "constraints_n2"));
  e.min_n = field(j, "min_n").get<int>();
  const json& x = field(j, "expected");
  e.expected.mu = field(x, "mu").get<int>();
  e.expected.iota = ExtInt::parse(field(x, "iota").get<std::string>());
  e.expected.lt = ExtInt::parse(field(x, "lt").get<std::string>());
  e.expected.lt_source = field(x, "lt_source").get<std::string>();
  if (e.expected.lt_source != "computed" && e.expected.lt_source != "paper-asserted")
    throw InputError("atlas document: unknown lt_source \"" + e.expected.lt_source + "\"");
  e.moduli = field(j, "moduli").get<std::vector<std::string>>();
  for (const auto& s : field(j, "samples")) {
    ParamValues p;
    for (const auto& [k, v] : s.items()) p[k] = parse_rational(v.get<std::string>());
    e.samples.push_back(std::move(p));
  }
  for (const auto& rj : field(j, "realizations")) {
    Realization r;
    r.n = field(rj, "n").get<int>();
    r.table_template = field(rj, "template").get<std::string>();
    r.corrected = rj.value("corrected", "");
    if (rj.contains("substitution"))
      for (const auto& [k, v] : rj.at("substitution").items()) r.substitution[k] = v.get<std::string>();
    r.map = rj.value("map", "");
    r.note = rj.value("note", "");
    e.realizations.push_back(std::move(r));
  }
  return e;
}

json entry_to(const NormalFormEntry& e) {
  json j;
  j["row"] = e.row;
  j["restriction"] = e.restriction;
  j["parameters"] = e.parameters;
  j["sign_variants"] = e.sign_variants;
  j["constraints"] = constraints_to(e.constraints);
  j["constraints_n2"] = constraints_to(e.constraints_n2);
  j["min_n"] = e.min_n;
  j["expected"] = {{"mu", e.expected.mu},
                   {"iota", e.expected.iota.to_string()},
                   {"lt", e.expected.lt.to_string()},
                   {"lt_source", e.expected.lt_source}};
  j["moduli"] = e.moduli;
  json samples = json::array();
  for (const auto& s : e.samples) {
    json o = json::object();
    for (const auto& [k, v] : s) o[k] = to_string(v);
    samples.push_back(o);
  }
  j["samples"] = samples;
  json reals = json::array();
  for (const auto& r : e.realizations) {
    json o;
    o["n"] = r.n;
    o["template"] = r.table_template;
    if (!r.corrected.empty()) o["corrected"] = r.corrected;
    if (!r.substitution.empty()) {
      json sub = json::object();
      for (const auto& [k, v] : r.substitution) sub[k] = v;
      o["substitution"] = sub;
    }
    o["map"] = r.map;
    if (!r.note.empty()) o["note"] = r.note;
    reals.push_back(o);
  }
  j["realizations"] = reals;
  return j;
}

bool excluded_by(const std::vector<ParamConstraint>& cs, const ParamValues& sample) {
  for (const auto& c : cs) {
    auto it = sample.find(c.param);
    if (it == sample.end()) continue;
    for (const auto& v : c.excluded)
      if (it->second == v) return true;
  }
  return false;
}

void require_parameters(const NormalFormEntry& e, const ParamValues& sample) {
  for (const auto& p : e.parameters)
    if (!sample.count(p)) throw InputError("row " + std::to_string(e.row) + ": sample lacks parameter " + p);
  if (e.sign_variants) {
    auto it = sample.find("pm");
    if (it == sample.end() || (it->second != 1 && it->second != -1))
      throw InputError("row " + std::to_string(e.row) + ": sign row needs pm = 1 or pm = -1");
  }
}

DifferentialForm omega0(std::size_t n) {
  DifferentialForm w(2 * n, 2);
  for (int i = 0; i < static_cast<int>(n); ++i) w += DifferentialForm::basic(2 * n, {2 * i, 2 * i + 1});
  return w;
}

std::vector<std::string> split_components(const std::string& text) {
  std::string s = text;
  auto first = s.find_first_not_of(" \t\n");
  auto last = s.find_last_not_of(" \t\n");
  if (first == std::string::npos) return {};
  s = s.substr(first, last - first + 1);
  if (s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  for (auto& c : out) {
    auto a = c.find_first_not_of(' ');
    auto b = c.find_last_not_of(' ');
    c = a == std::string::npos ? "" : c.substr(a, b - a + 1);
  }
  return out;
}

std::string check_detail(const std::string& got, const std::string& expected) {
  return "got " + got + ", expected " + expected;
}

}  // namespace

std::vector<std::string> supported_atlases() { return kSupported; }

std::string atlas_path(const std::vector<int>& semigroup) {
  return std::string(ALGRES_DATA_DIR) + "/atlas/" + file_stem(semigroup) + ".json";
}

Atlas parse_atlas(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("atlas document: ") + e.what());
  }
  Atlas a;
  try {
    a.semigroup = field(j, "semigroup").get<std::vector<int>>();
    a.n2_representability = field(j, "n2_representability").get<std::string>();
    for (const auto& ej : field(j, "entries")) a.entries.push_back(entry_from(ej, a.semigroup));
  } catch (const json::exception& e) {
    throw InputError(std::string("atlas document: ") + e.what());
  }
  return a;
}

std::string atlas_to_json(const Atlas& atlas) {
  json j;
  j["semigroup"] = atlas.semigroup;
  j["n2_representability"] = atlas.n2_representability;
  json entries = json::array();
  for (const auto& e : atlas.entries) entries.push_back(entry_to(e));
  j["entries"] = entries;
  return j.dump(2) + "\n";
}

Atlas load_atlas_document(const std::vector<int>& semigroup) {
  std::string id = join_weights(semigroup);
  if (std::find(kSupported.begin(), kSupported.end(), id) == kSupported.end()) {
    std::string list;
    for (const auto& s : kSupported) list += (list.empty() ? "" : "; ") + s;
    throw InputError("no atlas for semigroup (" + id + "); supported: " + list);
  }
  std::ifstream in(atlas_path(semigroup));
  if (!in) throw InputError("cannot read " + atlas_path(semigroup));
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_atlas(ss.str());
}

std::vector<NormalFormEntry> load_atlas(const std::vector<int>& semigroup) {
  return load_atlas_document(semigroup).entries;
}

std::vector<ParamValues> expand_signs(const NormalFormEntry& e, const ParamValues& sample) {
  if (!e.sign_variants) return {sample};
  ParamValues plus = sample, minus = sample;
  plus["pm"] = 1;
  minus["pm"] = -1;
  return {plus, minus};
}

bool satisfies_constraints(const NormalFormEntry& e, const ParamValues& sample, int n) {
  if (excluded_by(e.constraints, sample)) return false;
  if (n == 2 && excluded_by(e.constraints_n2, sample)) return false;
  return true;
}

std::string sample_to_string(const ParamValues& sample) {
  std::string out;
  for (const auto& [k, v] : sample) out += (out.empty() ? "" : ", ") + k + "=" + to_string(v);
  return out.empty() ? "-" : out;
}

const Realization* realization_for(const NormalFormEntry& e, int n) {
  const Realization* best = nullptr;
  for (const auto& r : e.realizations)
    if (r.n <= n && (!best || r.n > best->n)) best = &r;
  return best;
}

ParamValues template_parameters(const Realization& r, const ParamValues& sample) {
  ParamValues out = sample;
  for (const auto& [k, expr] : r.substitution) out[k] = parse_scalar(expr, sample);
  return out;
}

std::vector<UPoly> normal_form_curve(const NormalFormEntry& e, const ParamValues& sample, int n) {
  const Realization* r = n == 0 ? (e.realizations.empty() ? nullptr : &e.realizations.front())
                                : realization_for(e, n);
  if (!r) throw InputError("row " + std::to_string(e.row) + " has no normal form in R^" + std::to_string(2 * n));
  if (n == 0) n = r->n;
  std::vector<UPoly> f = parse_curve(r->curve_template(), template_parameters(*r, sample));
  if (f.size() > static_cast<std::size_t>(2 * n)) throw InputError("template longer than 2n");
  f.resize(2 * n);
  return f;
}

std::string derive_identification_map(const std::vector<int>& semigroup, const std::string& curve_template,
                                      int n, const std::vector<ParamValues>& samples) {
  MonomialCurve c(semigroup, 2 * n);
  std::size_t m = 2 * n, s = c.s();
  std::vector<std::string> comps = split_components(curve_template);
  if (comps.size() > m) throw InputError("template has more than 2n components");
  comps.resize(m, "0");

  static const std::regex power(R"(\bt(\^(\d+))?\b)");
  for (auto& comp : comps) {
    std::string out;
    auto begin = std::sregex_iterator(comp.begin(), comp.end(), power);
    std::size_t pos = 0;
    for (auto it = begin; it != std::sregex_iterator(); ++it) {
      int k = (*it)[2].matched ? std::stoi((*it)[2].str()) : 1;
      std::vector<Monomial> lifts = curve_monomials(c, k);
      if (lifts.empty()) throw InputError("t^" + std::to_string(k) + " is not in the semigroup");
      Monomial lift = *std::min_element(lifts.begin(), lifts.end());
      out += comp.substr(pos, it->position() - pos) + monomial_to_string(lift, default_var_name);
      pos = it->position() + it->length();
    }
    comp = out + comp.substr(pos);
  }

  auto render = [&] {
    std::string out = "(";
    for (std::size_t i = 0; i < m; ++i) out += (i ? ", " : "") + comps[i];
    return out + ")";
  };
  if (samples.empty()) throw InputError("derive_identification_map needs at least one sample");
  std::vector<std::vector<QVector>> cols(samples.size());
  std::vector<bool> zero_row(m, true);
  for (std::size_t k = 0; k < samples.size(); ++k) {
    QMatrix lin = parse_map(render(), m, samples[k]).linear_part();
    for (std::size_t j = 0; j < s; ++j) cols[k].push_back(lin.column(j));
    if (rank(QMatrix::from_columns(cols[k], m)) != s)
      throw InputError("template has a degenerate linear part at " + sample_to_string(samples[k]));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < s; ++j)
        if (lin(i, j) != 0) zero_row[i] = false;
  }
  // Rows without linear terms first, then the rest.
  std::vector<std::size_t> order;
  for (int pass = 0; pass < 2; ++pass)
    for (std::size_t i = 0; i < m; ++i)
      if (zero_row[i] == (pass == 0)) order.push_back(i);
  for (std::size_t j = s; j < m; ++j) {
    bool placed = false;
    for (std::size_t i : order) {
      QVector e(m, Rational(0));
      e[i] = 1;
      bool grows = true;
      for (auto& c : cols) {
        std::size_t r0 = rank(QMatrix::from_columns(c, m));
        c.push_back(e);
        grows = grows && rank(QMatrix::from_columns(c, m)) > r0;
      }
      if (grows) {
        std::string x = default_var_name(j);
        comps[i] = comps[i] == "0" ? x : comps[i] + " + " + x;
        placed = true;
        break;
      }
      for (auto& c : cols) c.pop_back();
    }
    if (!placed) throw InputError("cannot complete the linear part of the template to an invertible one");
  }
  return render();
}

PolyMap identification_map(const NormalFormEntry& e, const Realization& r, const ParamValues& sample, int n) {
  if (n < r.n) throw InputError("realization needs n >= " + std::to_string(r.n));
  std::size_t m = 2 * n;
  PolyMap f = parse_map(r.map, 2 * r.n, template_parameters(r, sample));
  std::vector<Polynomial> comps;
  for (const auto& p : f.components()) comps.push_back(p.embedded(m));
  for (std::size_t j = 2 * r.n; j < m; ++j) comps.push_back(Polynomial::variable(m, j));
  (void)e;
  return PolyMap(m, std::move(comps));
}

const RestrictionBasis& atlas_basis(const std::vector<int>& semigroup, std::size_t ambient) {
  static std::mutex mu;
  static std::map<std::pair<std::vector<int>, std::size_t>, RestrictionBasis> cache;
  if (ambient == 0) ambient = semigroup.size();
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(semigroup, ambient);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, closed2_restriction_basis(MonomialCurve(semigroup, ambient))).first;
  return it->second;
}

AlgRestriction entry_restriction(const NormalFormEntry& e, const ParamValues& sample) {
  return parse_restriction(e.restriction, atlas_basis(e.semigroup), sample);
}

bool EntryReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass || c.informational; });
}

std::string EntryReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass && !c.informational) return c.name + ": " + c.detail;
  return "";
}

EntryReport verify_entry(const NormalFormEntry& e, const ParamValues& sample, int n, bool n2_informational) {
  if (n < 1) throw InputError("n must be >= 1");
  require_parameters(e, sample);
  if (excluded_by(e.constraints, sample))
    throw InputError("row " + std::to_string(e.row) + ": sample " + sample_to_string(sample) +
                     " violates the parameter constraints");
  EntryReport rep;
  rep.row = e.row;
  rep.n = n;
  rep.sample = sample_to_string(sample);

  AlgRestriction a = entry_restriction(e, sample);
  bool expected_rep = n >= e.min_n && satisfies_constraints(e, sample, n);
  bool is_rep = representable_by_symplectic(a, n);
  CheckResult repc{"representability", is_rep == expected_rep, n == 2 && n2_informational,
                   check_detail(is_rep ? "true" : "false", expected_rep ? "true" : "false")};
  const Realization* r = realization_for(e, n);
  if (!expected_rep) {
    rep.checks.push_back(repc);
    return rep;
  }
  if (!r) throw InputError("row " + std::to_string(e.row) + " has no stored normal form for n = " + std::to_string(n));

  MonomialCurve g(e.semigroup, 2 * n);
  PolyMap f = identification_map(e, *r, sample, n);
  std::vector<UPoly> tmpl = normal_form_curve(e, sample, n);
  std::vector<UPoly> images = g.images();
  bool same = true;
  std::string got, want;
  for (std::size_t i = 0; i < f.target(); ++i) {
    UPoly fg = f[i].substitute(images);
    if (fg != tmpl[i]) {
      same = false;
      got = fg.to_string();
      want = tmpl[i].to_string();
      break;
    }
  }
  rep.checks.push_back({"curve-identity", same, false, same ? "" : check_detail(got, want)});
  bool inv = f.has_invertible_linear_part();
  rep.checks.push_back({"invertible-linear-part", inv, false, inv ? "" : "linear part of F is singular"});

  const RestrictionBasis& big = atlas_basis(e.semigroup, 2 * n);
  AlgRestriction pulled = big.project(pullback(f, omega0(n)));
  bool coords_ok = pulled.coords() == a.coords();
  rep.checks.push_back({"restriction", coords_ok, false,
                        coords_ok ? "" : check_detail(pulled.to_string(), a.to_string())});

  int mu = symplectic_multiplicity(a);
  rep.checks.push_back({"mu", mu == e.expected.mu, false,
                        check_detail(std::to_string(mu), std::to_string(e.expected.mu))});
  ExtInt iota = index_of_isotropy(a);
  rep.checks.push_back({"iota", iota == e.expected.iota, false,
                        check_detail(iota.to_string(), e.expected.iota.to_string())});
  if (e.expected.lt_source == "computed") {
    ExtInt lt = lagrangian_tangency_order(a);
    rep.checks.push_back({"Lt", lt == e.expected.lt, false, check_detail(lt.to_string(), e.expected.lt.to_string())});
  } else {
    rep.checks.push_back({"Lt", true, true, "paper-asserted " + e.expected.lt.to_string()});
  }
  rep.checks.push_back(repc);

  std::string bad;
  for (const auto& p : e.moduli) {
    ParamValues shifted = sample;
    shifted[p] += 1;
    AlgRestriction dir = entry_restriction(e, shifted) - a;
    if (!is_modulus(a, dir)) bad += (bad.empty() ? "" : ", ") + p;
  }
  rep.checks.push_back({"moduli", bad.empty(), false, bad.empty() ? "" : "not a modulus: " + bad});
  return rep;
}

bool DistinctnessReport::pass() const {
  return std::all_of(pairs.begin(), pairs.end(), [](const PairVerdict& p) { return p.distinct; });
}

namespace {

struct Item {
  const NormalFormEntry* entry;
  ParamValues sample;
  AlgRestriction a;
  int mu;
  ExtInt iota, lt;
};

std::string distinguish(const Item& x, const Item& y) {
  if (x.mu != y.mu) return "mu";
  if (x.iota != y.iota) return "iota";
  if (x.lt.is_finite() || x.lt.is_infinite())
    if ((y.lt.is_finite() || y.lt.is_infinite()) && x.lt != y.lt) return "Lt";
  PmqdVerdict v = pmqd_compare(x.a, y.a);
  if (v.kind == PmqdVerdict::Kind::NotProportional || v.kind == PmqdVerdict::Kind::OneZero) return "pmqd";
  if (v.kind == PmqdVerdict::Kind::Proportional) {
    // A symmetry with leading reparametrization t -> c t scales the minimal part by c^r.
    int r = min_qdeg_part(x.a)->r;
    if (r % 2 == 0 && v.constant < 0) return "pmqd-sign";
  }
  return "";
}

}  // namespace

DistinctnessReport verify_pairwise_distinct(const std::vector<int>& semigroup, int n, int samples_per_entry) {
  Atlas atlas = load_atlas_document(semigroup);
  std::vector<const NormalFormEntry*> kept;
  std::vector<Item> items;
  for (const auto& e : atlas.entries) {
    if (e.min_n > n) continue;
    int taken = 0;
    for (const auto& s : e.samples) {
      if (taken >= samples_per_entry) break;
      if (!satisfies_constraints(e, s, n)) continue;
      ++taken;
      for (const auto& p : expand_signs(e, s)) {
        AlgRestriction a = entry_restriction(e, p);
        ExtInt lt = e.expected.lt_source == "computed" ? lagrangian_tangency_order(a) : ExtInt::not_applicable();
        items.push_back({&e, p, a, symplectic_multiplicity(a), index_of_isotropy(a), lt});
      }
    }
  }
  DistinctnessReport rep;
  rep.n = n;
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = i + 1; j < items.size(); ++j) {
      const Item& x = items[i];
      const Item& y = items[j];
      PairVerdict v;
      v.row_a = x.entry->row;
      v.row_b = y.entry->row;
      v.sample_a = sample_to_string(x.sample);
      v.sample_b = sample_to_string(y.sample);
      v.witness = distinguish(x, y);
      if (v.witness.empty() && x.entry == y.entry) {
        auto pm_x = x.sample.find("pm"), pm_y = y.sample.find("pm");
        bool same_sign = pm_x == x.sample.end() || pm_x->second == pm_y->second;
        bool moduli_only = same_sign;
        for (const auto& [k, val] : x.sample)
          if (k != "pm" && y.sample.at(k) != val &&
              std::find(x.entry->moduli.begin(), x.entry->moduli.end(), k) == x.entry->moduli.end())
            moduli_only = false;
        if (moduli_only) v.witness = "modulus";
      }
      v.distinct = !v.witness.empty();
      if (!v.distinct) v.witness = "none";
      rep.pairs.push_back(std::move(v));
    }
  }
  return rep;
}

bool AtlasReport::pass() const {
  return distinct.pass() &&
         std::all_of(entries.begin(), entries.end(), [](const EntryReport& e) { return e.pass(); });
}

AtlasReport verify_atlas(const std::vector<int>& semigroup, int n, const std::map<int, std::vector<ParamValues>>& samples) {
  Atlas atlas = load_atlas_document(semigroup);
  bool informational = atlas.n2_representability == "informational";
  AtlasReport rep;
  rep.semigroup = semigroup;
  rep.n = n;
  for (const auto& e : atlas.entries) {
    auto it = samples.find(e.row);
    const std::vector<ParamValues>& list = it == samples.end() ? e.samples : it->second;
    for (const auto& s : list)
      for (const auto& p : expand_signs(e, s)) rep.entries.push_back(verify_entry(e, p, n, informational));
  }
  rep.distinct = verify_pairwise_distinct(semigroup, n);
  return rep;
}

}  // namespace algres
