#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace algres::props {

struct Outcome {
  std::string name;
  int cases = 0;
  int failures = 0;
  /// Case index and message of the first failure.
  std::string first_failure;
  bool pass() const { return failures == 0 && cases > 0; }
};

constexpr std::uint64_t kSeed = 20240611;
constexpr int kCases = 1000;

Outcome d_squared(std::uint64_t seed = kSeed, int cases = kCases);
Outcome leibniz(std::uint64_t seed = kSeed, int cases = kCases);
/// L_X w of quasi-homogeneous X (degree i) and w (degree j) lives in degree i + j.
Outcome cartan_grading(std::uint64_t seed = kSeed, int cases = kCases);
/// s(x) dx_i^dx_j and p(x) dx_i^dx_j have equal restrictions for monomials s, p of equal quasi-degree.
Outcome equal_restriction(std::uint64_t seed = kSeed, int cases = kCases);
/// Every graded part of a form with zero restriction has zero restriction.
Outcome gradedness(std::uint64_t seed = kSeed, int cases = kCases);
/// lie_action does not depend on which monomials lift X_s.
Outcome lift_choice_independence(std::uint64_t seed = kSeed, int cases = kCases);
/// Adding a field that vanishes on the curve, or a zero-restriction form, leaves L_X a unchanged.
Outcome vanishing_field_trivial(std::uint64_t seed = kSeed, int cases = kCases);
/// Lowest part of Phi^* a is c^r times the lowest part of a for a symmetry with leading scaling c.
Outcome pmqd_scaling(std::uint64_t seed = kSeed, int cases = kCases);

Outcome cartan_formula(std::uint64_t seed = kSeed, int cases = kCases);
Outcome pullback_commutes_with_d(std::uint64_t seed = kSeed, int cases = kCases);
/// F_c^* w = c^delta w for quasi-homogeneous w of quasi-degree delta.
Outcome scaling_characterization(std::uint64_t seed = kSeed, int cases = kCases);
/// iota, Lt and mu are unchanged by curve symmetries.
Outcome invariants_under_symmetry(std::uint64_t seed = kSeed, int cases = kCases);
/// L_{X_s} maps degree r into degree r + s.
Outcome action_grading(std::uint64_t seed = kSeed, int cases = kCases);

struct Named {
  std::string name;
  std::function<Outcome()> run;
};
/// The eight suites of the acceptance criteria, in order.
std::vector<Named> acceptance_suites();

}  // namespace algres::props
