#include <gtest/gtest.h>

#include "properties.hpp"

using namespace algres::props;

namespace {

void expect_pass(const Outcome& o) {
  EXPECT_EQ(o.cases, kCases) << o.name;
  EXPECT_EQ(o.failures, 0) << o.name << ": " << o.first_failure;
}

}  // namespace

TEST(Forms, DSquaredIsZero) { expect_pass(d_squared()); }
TEST(Forms, Leibniz) { expect_pass(leibniz()); }
TEST(Forms, CartanGrading) { expect_pass(cartan_grading()); }
TEST(Forms, CartanFormula) { expect_pass(cartan_formula()); }
TEST(Forms, PullbackCommutesWithD) { expect_pass(pullback_commutes_with_d()); }
TEST(Forms, ScalingCharacterization) { expect_pass(scaling_characterization()); }
TEST(Restriction, EqualDegreeMonomialsRestrictEqually) { expect_pass(equal_restriction()); }
TEST(Restriction, Gradedness) { expect_pass(gradedness()); }
TEST(Action, LiftChoiceIndependence) { expect_pass(lift_choice_independence()); }
TEST(Action, VanishingFieldsActTrivially) { expect_pass(vanishing_field_trivial()); }
TEST(Action, Grading) { expect_pass(action_grading()); }
TEST(Symmetry, PmqdScaling) { expect_pass(pmqd_scaling()); }
TEST(Symmetry, InvariantsArePreserved) { expect_pass(invariants_under_symmetry()); }

TEST(Harness, FailuresAreReported) {
  // Zero cases never count as a pass.
  Outcome o = d_squared(1, 0);
  EXPECT_FALSE(o.pass());
}
