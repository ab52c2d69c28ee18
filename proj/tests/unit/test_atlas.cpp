#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "algres/atlas.hpp"

using namespace algres;

namespace {

const std::vector<int> s4567{4, 5, 6, 7};
const std::vector<int> s456{4, 5, 6};
const std::vector<int> s457{4, 5, 7};

const NormalFormEntry& row(const std::vector<int>& sg, int r) {
  static std::map<std::vector<int>, std::vector<NormalFormEntry>> cache;
  auto it = cache.find(sg);
  if (it == cache.end()) it = cache.emplace(sg, load_atlas(sg)).first;
  return it->second.at(r - 1);
}

const CheckResult& check(const EntryReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c;
  throw std::runtime_error("no check " + name);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(AtlasLoad, EntryCounts) {
  EXPECT_EQ(load_atlas(s4567).size(), 18u);
  EXPECT_EQ(load_atlas(s456).size(), 10u);
  EXPECT_EQ(load_atlas(s457).size(), 10u);
  EXPECT_TRUE(entry_restriction(row(s4567, 18), {}).is_zero());
  for (const auto* sg : {&s4567, &s456, &s457}) {
    auto entries = load_atlas(*sg);
    for (std::size_t i = 0; i < entries.size(); ++i) EXPECT_EQ(entries[i].row, static_cast<int>(i) + 1);
  }
}

TEST(AtlasLoad, UnknownSemigroupListsSupported) {
  try {
    load_atlas({3, 4, 5});
    FAIL();
  } catch (const InputError& e) {
    std::string msg = e.what();
    EXPECT_NE(msg.find("4,5,6,7"), std::string::npos);
    EXPECT_NE(msg.find("4,5,7"), std::string::npos);
  }
}

TEST(AtlasLoad, GoldenSerialization) {
  for (const auto* sg : {&s4567, &s456, &s457}) {
    std::string text = slurp(atlas_path(*sg));
    ASSERT_FALSE(text.empty());
    EXPECT_EQ(atlas_to_json(parse_atlas(text)), text) << atlas_path(*sg);
  }
}

TEST(AtlasLoad, MalformedDocument) {
  EXPECT_THROW(parse_atlas("{"), InputError);
  EXPECT_THROW(parse_atlas(R"({"semigroup": [4, 5, 7]})"), InputError);
}

TEST(AtlasData, StoredMapsMatchDerivation) {
  for (const auto* sg : {&s4567, &s456, &s457}) {
    for (const auto& e : load_atlas(*sg)) {
      for (const auto& r : e.realizations) {
        std::vector<ParamValues> samples;
        for (const auto& s : e.samples)
          for (const auto& p : expand_signs(e, s))
            if (satisfies_constraints(e, p, r.n)) samples.push_back(template_parameters(r, p));
        EXPECT_EQ(derive_identification_map(*sg, r.curve_template(), r.n, samples), r.map)
            << "row " << e.row << " n=" << r.n;
      }
    }
  }
}

TEST(AtlasData, RestrictionsRoundTrip) {
  for (const auto* sg : {&s4567, &s456, &s457}) {
    for (const auto& e : load_atlas(*sg)) {
      for (const auto& s : e.samples) {
        for (const auto& p : expand_signs(e, s)) {
          AlgRestriction a = entry_restriction(e, p);
          EXPECT_EQ(parse_restriction(a.to_string(), a.basis()), a);
        }
      }
    }
  }
}

TEST(AtlasData, GenericSamplesSpanTheSpace) {
  for (const auto* sg : {&s4567, &s456, &s457}) {
    std::vector<QVector> cols;
    for (const auto& e : load_atlas(*sg))
      for (const auto& s : e.samples)
        for (const auto& p : expand_signs(e, s)) cols.push_back(entry_restriction(e, p).coords());
    EXPECT_EQ(rank(QMatrix::from_columns(cols, atlas_basis(*sg).size())), atlas_basis(*sg).size());
  }
}

TEST(NormalFormCurve, Examples) {
  auto f = normal_form_curve(row(s4567, 1), {{"c1", 0}, {"c2", 1}});
  std::vector<UPoly> want{UPoly::monomial(1, 4), UPoly::monomial(1, 5), UPoly::monomial(1, 6), UPoly::monomial(1, 7)};
  EXPECT_EQ(f, want);

  auto f18 = normal_form_curve(row(s4567, 18), {});
  ASSERT_EQ(f18.size(), 8u);
  EXPECT_EQ(f18[4], UPoly::monomial(1, 6));
  EXPECT_TRUE(f18[5].is_zero());
  EXPECT_EQ(f18[6], UPoly::monomial(1, 7));

  auto f10 = normal_form_curve(row(s456, 10), {}, 4);
  ASSERT_EQ(f10.size(), 8u);
  EXPECT_EQ(f10[2], UPoly::monomial(1, 5));
  EXPECT_TRUE(f10[7].is_zero());
  EXPECT_THROW(normal_form_curve(row(s4567, 15), {}, 3), InputError);
}

TEST(IdentificationMap, Row1ReproducesExplicitMap) {
  const NormalFormEntry& e = row(s4567, 1);
  const Realization* r = realization_for(e, 2);
  ASSERT_NE(r, nullptr);
  EXPECT_EQ(r->map, "(x1, x2 + c1*x4, x3, c2*x4)");
  PolyMap f = identification_map(e, *r, {{"c1", 1}, {"c2", 1}}, 2);
  EXPECT_EQ(f, parse_map("(x1, x2 + x4, x3, x4)", 4));
}

TEST(IdentificationMap, LiftsAreGrlexMinimal) {
  EXPECT_EQ(derive_identification_map(s4567, "(t^4, t^10, t^5, t^6, t^7, 0)", 3, {{}}),
            "(x1, x2^2 + x5, x2, x3, x4, x6)");
  EXPECT_THROW(derive_identification_map(s457, "(t^4, t^6, t^5, t^7)", 2, {{}}), InputError);
  EXPECT_THROW(derive_identification_map(s4567, "(t^4, t^8, t^5, t^9)", 2, {{}}), InputError);
}

TEST(VerifyEntry, Row1) {
  EntryReport rep = verify_entry(row(s4567, 1), {{"c1", 1}, {"c2", 1}}, 2);
  EXPECT_TRUE(rep.pass()) << rep.first_failure();
  EXPECT_TRUE(check(rep, "Lt").informational);
  EXPECT_TRUE(check(rep, "curve-identity").pass);
}

TEST(VerifyEntry, Row15ComputesLt) {
  EntryReport rep = verify_entry(row(s4567, 15), {}, 4);
  EXPECT_TRUE(rep.pass()) << rep.first_failure();
  EXPECT_EQ(check(rep, "Lt").detail, "got 9, expected 9");
  EXPECT_EQ(check(rep, "mu").detail, "got 6, expected 6");
}

TEST(VerifyEntry, Semigroup456Row9) {
  EntryReport rep = verify_entry(row(s456, 9), {}, 3);
  EXPECT_TRUE(rep.pass()) << rep.first_failure();
  EXPECT_EQ(check(rep, "iota").detail, "got 2, expected 2");
  EXPECT_EQ(check(rep, "Lt").detail, "got 15, expected 15");
}

TEST(VerifyEntry, PrintedIotaDiffersOnThreeRows) {
  EntryReport r8 = verify_entry(row(s456, 8), {{"c", 1}}, 3);
  EXPECT_FALSE(r8.pass());
  EXPECT_EQ(r8.first_failure(), "iota: got 2, expected 1");
  EXPECT_FALSE(verify_entry(row(s457, 8), {{"c", 1}}, 3).pass());
  EXPECT_FALSE(verify_entry(row(s457, 9), {{"pm", -1}}, 3).pass());
}

TEST(VerifyEntry, RepresentabilityThresholds) {
  // n = 2: row 1 needs c2 != 0.
  EntryReport excluded = verify_entry(row(s4567, 1), {{"c1", 1}, {"c2", 0}}, 2);
  EXPECT_TRUE(excluded.pass());
  ASSERT_EQ(excluded.checks.size(), 1u);
  EXPECT_EQ(excluded.checks[0].detail, "got false, expected false");
  EXPECT_TRUE(verify_entry(row(s4567, 10), {{"c", 1}}, 2).pass());
  EXPECT_TRUE(verify_entry(row(s4567, 15), {}, 3).pass());
  EXPECT_TRUE(verify_entry(row(s457, 4), {{"c1", 1}, {"c2", 1}}, 2).pass());
  EntryReport info = verify_entry(row(s456, 4), {{"c1", 1}, {"c2", 1}}, 2, true);
  EXPECT_TRUE(info.pass());
  EXPECT_TRUE(info.checks[0].informational);
  EXPECT_FALSE(info.checks[0].pass);
}

TEST(VerifyEntry, InputErrors) {
  EXPECT_THROW(verify_entry(row(s4567, 12), {{"c", 2}}, 3), InputError);
  EXPECT_THROW(verify_entry(row(s4567, 12), {}, 3), InputError);
  EXPECT_THROW(verify_entry(row(s4567, 16), {}, 4), InputError);
  EXPECT_THROW(verify_entry(row(s4567, 16), {{"pm", 2}}, 4), InputError);
}

TEST(VerifyEntry, SubstitutedTemplates) {
  const NormalFormEntry& e = row(s457, 4);
  const Realization& r = e.realizations.at(0);
  EXPECT_FALSE(r.corrected.empty());
  ParamValues t = template_parameters(r, {{"c1", 2}, {"c2", 5}});
  EXPECT_EQ(t.at("c1"), 5);
  EXPECT_EQ(t.at("c2"), -2);
  EXPECT_TRUE(verify_entry(e, {{"c1", 2}, {"c2", 5}}, 3).pass());
}

TEST(PairwiseDistinct, Semigroup4567) {
  DistinctnessReport rep = verify_pairwise_distinct(s4567, 4);
  EXPECT_TRUE(rep.pass());
  bool saw67 = false, saw1516 = false;
  for (const auto& p : rep.pairs) {
    if (p.row_a == 6 && p.row_b == 7) {
      saw67 = true;
      EXPECT_EQ(p.witness, "pmqd");
    }
    if (p.row_a == 15 && p.row_b == 16) {
      saw1516 = true;
      EXPECT_EQ(p.witness, "mu");
    }
    if (p.row_a == 16 && p.row_b == 16 && p.sample_a != p.sample_b) EXPECT_EQ(p.witness, "pmqd-sign");
  }
  EXPECT_TRUE(saw67);
  EXPECT_TRUE(saw1516);
}

TEST(PairwiseDistinct, ModuliWithinARow) {
  DistinctnessReport rep = verify_pairwise_distinct(s4567, 2);
  bool saw = false;
  for (const auto& p : rep.pairs)
    if (p.row_a == 1 && p.row_b == 1) {
      saw = true;
      EXPECT_EQ(p.witness, "modulus");
    }
  EXPECT_TRUE(saw);
}

TEST(VerifyAtlas, Semigroup4567AtN3) {
  AtlasReport rep = verify_atlas(s4567, 3);
  EXPECT_TRUE(rep.pass());
  EXPECT_FALSE(rep.entries.empty());
}
