#include <gtest/gtest.h>

#include "algres/atlas.hpp"
#include "oracle.hpp"

using namespace algres;

TEST(Oracle, KnownPieces) {
  EXPECT_EQ(oracle::dim_V2({4, 5, 6, 7}, 14), 2u);
  EXPECT_EQ(oracle::dim_A2({4, 5, 6, 7}, 14), 1u);
  EXPECT_EQ(oracle::dim_A2({4, 5, 6, 7}, 11), 2u);
  EXPECT_EQ(oracle::dim_A2({4, 5, 6}, 16), 0u);
  EXPECT_EQ(oracle::dim_A2({4, 5, 6}, 12), 0u);
  EXPECT_EQ(oracle::dim_A2({4, 5, 7}, 10), 0u);
}

TEST(Oracle, MatchesRestrictionQuotient) {
  for (const std::vector<int>& sg : {std::vector<int>{4, 5, 6, 7}, std::vector<int>{4, 5, 6}, std::vector<int>{4, 5, 7}}) {
    MonomialCurve c(sg);
    int top = atlas_basis(sg).K() + sg.back();
    for (int d = 0; d <= top; ++d)
      EXPECT_EQ(restriction_quotient(c, 2, d).dim_quotient(), oracle::dim_A2(sg, d)) << c.id() << " d=" << d;
  }
}
