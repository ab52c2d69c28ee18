#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "algres/invariants.hpp"
#include "algres/parser.hpp"

namespace algres {

/// Parameter values excluded for one parameter.
struct ParamConstraint {
  std::string param;
  std::vector<Rational> excluded;
};

struct ExpectedInvariants {
  int mu = 0;
  ExtInt iota;
  ExtInt lt;
  /// "computed" or "paper-asserted".
  std::string lt_source;
};

/// One printed normal-form curve of a row, valid in R^(2n) for this n and above.
struct Realization {
  int n = 0;
  /// Curve template as printed, in the parser's curve syntax.
  std::string table_template;
  /// Erratum-corrected template; empty when the printed one is used as is.
  std::string corrected;
  /// Template parameter -> expression in the entry's parameters.
  std::map<std::string, std::string> substitution;
  /// Stored identification map F on R^(2n) with F o g equal to the template.
  std::string map;
  std::string note;

  const std::string& curve_template() const { return corrected.empty() ? table_template : corrected; }
};

struct NormalFormEntry {
  std::vector<int> semigroup;
  int row = 0;
  /// Linear expression in the parameters over basis labels; "pm" is the sign of a +/- row.
  std::string restriction;
  std::vector<std::string> parameters;
  bool sign_variants = false;
  std::vector<ParamConstraint> constraints;
  /// Constraints that apply in R^4 in addition to the general ones.
  std::vector<ParamConstraint> constraints_n2;
  int min_n = 2;
  ExpectedInvariants expected;
  std::vector<std::string> moduli;
  /// Parameter samples without "pm"; sign rows are checked for both signs.
  std::vector<ParamValues> samples;
  std::vector<Realization> realizations;
};

struct Atlas {
  std::vector<int> semigroup;
  /// "asserted" or "informational".
  std::string n2_representability = "asserted";
  std::vector<NormalFormEntry> entries;
};

/// Semigroups shipped with the library, e.g. "4,5,6,7".
std::vector<std::string> supported_atlases();
/// Reads the shipped document; InputError listing the supported atlases otherwise.
Atlas load_atlas_document(const std::vector<int>& semigroup);
std::vector<NormalFormEntry> load_atlas(const std::vector<int>& semigroup);
Atlas parse_atlas(const std::string& json_text);
/// Canonical serialization (two-space indent, trailing newline).
std::string atlas_to_json(const Atlas& atlas);
std::string atlas_path(const std::vector<int>& semigroup);

/// The sample with "pm" added for sign rows, one per sign.
std::vector<ParamValues> expand_signs(const NormalFormEntry& e, const ParamValues& sample);
/// True when the sample avoids every excluded value (including constraints_n2 when n == 2).
bool satisfies_constraints(const NormalFormEntry& e, const ParamValues& sample, int n);
std::string sample_to_string(const ParamValues& sample);

/// Realization with the largest n' <= n; nullptr when none fits.
const Realization* realization_for(const NormalFormEntry& e, int n);
/// Template parameters for an entry sample.
ParamValues template_parameters(const Realization& r, const ParamValues& sample);
/// Instantiated curve template padded with zeros to 2n components (n = 0: the realization's own n).
std::vector<UPoly> normal_form_curve(const NormalFormEntry& e, const ParamValues& sample, int n = 0);

/// F with F o g equal to the template: each t^k becomes the grlex-minimal
/// curve monomial of weighted degree k, then off-curve variables are added so
/// that the linear part is invertible at every given sample (template parameters).
std::string derive_identification_map(const std::vector<int>& semigroup, const std::string& curve_template,
                                      int n, const std::vector<ParamValues>& samples);
/// Stored F of a realization at a sample, extended by the identity to R^(2n).
PolyMap identification_map(const NormalFormEntry& e, const Realization& r, const ParamValues& sample, int n);

/// Closed 2-form basis of the semigroup curve in R^ambient (cached).
const RestrictionBasis& atlas_basis(const std::vector<int>& semigroup, std::size_t ambient = 0);
AlgRestriction entry_restriction(const NormalFormEntry& e, const ParamValues& sample);

struct CheckResult {
  std::string name;
  bool pass = true;
  bool informational = false;
  std::string detail;
};

struct EntryReport {
  int row = 0;
  int n = 0;
  std::string sample;
  std::vector<CheckResult> checks;
  bool pass() const;
  /// Name and detail of the first failing check; empty when all pass.
  std::string first_failure() const;
};

/// Checks the F identity, invertibility, [F^* omega_0] coordinates, invariants,
/// the representability threshold and moduli flags. When the class is not
/// expected in R^(2n) (n < min_n, or an excluded n = 2 value) only the
/// representability test runs. InputError on a sample violating the general
/// constraints or missing a parameter.
EntryReport verify_entry(const NormalFormEntry& e, const ParamValues& sample, int n,
                         bool n2_informational = false);

struct PairVerdict {
  int row_a = 0, row_b = 0;
  std::string sample_a, sample_b;
  bool distinct = false;
  /// "mu", "iota", "Lt", "pmqd", "pmqd-sign", "modulus" or "none".
  std::string witness;
};

struct DistinctnessReport {
  int n = 0;
  std::vector<PairVerdict> pairs;
  bool pass() const;
};

/// Compares every pair of (entry, sample, sign) with min_n <= n, using up to
/// samples_per_entry samples of each entry.
DistinctnessReport verify_pairwise_distinct(const std::vector<int>& semigroup, int n, int samples_per_entry = 3);

struct AtlasReport {
  std::vector<int> semigroup;
  int n = 0;
  std::vector<EntryReport> entries;
  DistinctnessReport distinct;
  bool pass() const;
};

/// verify_entry on every sample of every entry plus pairwise distinctness.
/// Optional samples override the stored ones per row.
AtlasReport verify_atlas(const std::vector<int>& semigroup, int n,
                         const std::map<int, std::vector<ParamValues>>& samples = {});

}  // namespace algres
