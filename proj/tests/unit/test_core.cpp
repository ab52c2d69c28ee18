#include <gtest/gtest.h>

#include <random>

#include "algres/matrix.hpp"
#include "algres/param_linear.hpp"
#include "algres/polynomial.hpp"
#include "algres/ratfunc.hpp"
#include "algres/upoly.hpp"

using namespace algres;

namespace {

Polynomial var(std::size_t m, std::size_t i) { return Polynomial::variable(m, i); }

UPoly up(std::vector<Rational> c) { return UPoly(std::move(c)); }

std::vector<UPoly> curve_images(std::vector<int> weights, std::size_t m) {
  std::vector<UPoly> out;
  for (int w : weights) out.push_back(UPoly::monomial(1, w));
  out.resize(m);
  return out;
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(to_string(parse_rational("-6/4")), "-3/2");
  EXPECT_EQ(to_string(parse_rational("12")), "12");
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational("x"), InputError);
  Rational r;
  EXPECT_TRUE(exact_root(Rational(-8, 27), 3, r));
  EXPECT_EQ(r, Rational(-2, 3));
  EXPECT_FALSE(exact_root(Rational(2), 2, r));
  EXPECT_FALSE(exact_root(Rational(-4), 2, r));
}

TEST(Substitute, CurveExamples) {
  auto x = [](std::size_t i) { return var(3, i); };
  Polynomial p = x(1) * x(1) - x(0) * x(2);
  EXPECT_TRUE(p.substitute(curve_images({4, 5, 6}, 3)).is_zero());

  Polynomial x4 = var(4, 3);
  EXPECT_TRUE(x4.substitute(curve_images({4, 5, 6}, 4)).is_zero());

  Polynomial q = var(4, 0) * var(4, 1);
  EXPECT_EQ(q.substitute(curve_images({4, 5, 6, 7}, 4)), UPoly::monomial(1, 9));

  EXPECT_THROW(q.substitute(curve_images({4, 5, 6}, 3)), InputError);
}

TEST(Substitute, IsRingHomomorphism) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3), expo(0, 2);
  auto random_poly = [&] {
    Polynomial p(3);
    for (int k = 0; k < 4; ++k) p.add_term(Monomial({expo(rng), expo(rng), expo(rng)}), coef(rng));
    return p;
  };
  std::vector<UPoly> images{up({0, 1, 2}), up({0, 0, 0, -1}), up({0, 3})};
  for (int i = 0; i < 50; ++i) {
    Polynomial p = random_poly(), q = random_poly();
    EXPECT_EQ((p * q).substitute(images), p.substitute(images) * q.substitute(images));
    EXPECT_EQ((p + q).substitute(images), p.substitute(images) + q.substitute(images));
  }
}

TEST(Polynomial, GrlexPrinting) {
  Polynomial p = var(3, 1) * var(3, 1) - var(3, 0) * var(3, 2) + Polynomial::constant(3, Rational(1, 2));
  EXPECT_EQ(p.to_string(), "-x1*x3 + x2^2 + 1/2");
}

TEST(Polynomial, WeightedParts) {
  std::vector<int> w{4, 5, 6};
  Polynomial p = var(3, 0) * var(3, 1) + var(3, 2) + var(3, 1);
  auto parts = p.weighted_parts(w);
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts.at(9), var(3, 0) * var(3, 1));
  EXPECT_EQ(monomials_of_weighted_degree(w, 10).size(), 2u);
  EXPECT_TRUE(monomials_of_weighted_degree(w, 7).empty());
}

TEST(Rref, Examples) {
  auto id = rref(QMatrix::identity(3));
  EXPECT_EQ(id.rank, 3u);
  EXPECT_TRUE(id.kernel.empty());

  auto z = rref(QMatrix(2, 4));
  EXPECT_EQ(z.rank, 0u);
  EXPECT_EQ(z.kernel.size(), 4u);

  QMatrix m = QMatrix::from_rows({{1, 2}, {2, 4}}, 2);
  auto r = rref(m);
  EXPECT_EQ(r.rank, 1u);
  ASSERT_EQ(r.kernel.size(), 1u);
  EXPECT_EQ(r.kernel[0], (QVector{-2, 1}));
}

TEST(Rref, IdempotentAndRankNullity) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> v(-2, 2), dims(1, 6);
  for (int iter = 0; iter < 100; ++iter) {
    QMatrix m(static_cast<std::size_t>(dims(rng)), static_cast<std::size_t>(dims(rng)));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = v(rng);
    auto r = rref(m);
    EXPECT_EQ(rref(r.reduced).reduced, r.reduced);
    EXPECT_EQ(r.rank + r.kernel.size(), m.cols());
    for (const auto& k : r.kernel) EXPECT_TRUE(is_zero(m * k));
  }
}

TEST(EchelonBasis, ReduceGivesCanonicalCoset) {
  EchelonBasis b(3);
  EXPECT_TRUE(b.insert({1, 1, 0}));
  EXPECT_FALSE(b.insert({2, 2, 0}));
  EXPECT_TRUE(b.insert({0, 1, 1}));
  EXPECT_EQ(b.free_columns(), (std::vector<std::size_t>{2}));
  EXPECT_EQ(b.reduce({1, 0, 0}), (QVector{0, 0, 1}));
  EXPECT_TRUE(b.contains({1, 2, 1}));
}

TEST(Solve, FindsParticularSolution) {
  QMatrix m = QMatrix::from_rows({{1, 1}, {1, -1}}, 2);
  auto x = solve(m, {3, 1});
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, (QVector{2, 1}));
  EXPECT_FALSE(solve(QMatrix::from_rows({{1, 1}, {2, 2}}, 2), {1, 3}));
}

TEST(Sturm, Examples) {
  UPoly t = UPoly::t();
  EXPECT_EQ(sturm_count(t * t - UPoly(1), 0, 2), 1);
  EXPECT_EQ(sturm_count(t * t + UPoly(1), 0, 1), 0);
  UPoly p = (t - UPoly(Rational(1, 4))) * (t - UPoly(Rational(3, 4)));
  EXPECT_EQ(sturm_count(p, 0, 1), 2);
  EXPECT_THROW(sturm_count(UPoly(), 0, 1), InputError);
  EXPECT_EQ(sturm_count(t * t, Rational(-1), Rational(1)), 1);
  EXPECT_EQ(sturm_count(t, 0, 1), 0);
  EXPECT_EQ(real_roots_in_closed(t, 0, 1), 1);
}

TEST(Sturm, AgreesWithExplicitRoots) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> num(-12, 12), den(1, 5), deg(1, 5);
  UPoly t = UPoly::t();
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<Rational> roots;
    UPoly p(1);
    int d = deg(rng);
    for (int k = 0; k < d; ++k) {
      Rational r = make_rational(num(rng), den(rng));
      roots.push_back(r);
      p *= t - UPoly(r);
    }
    if (iter % 3 == 0) p *= t * t + UPoly(1);
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    Rational a = make_rational(num(rng), 4), b = a + make_rational(den(rng), 1);
    int expected = 0;
    for (const auto& r : roots)
      if (r > a && r <= b) ++expected;
    EXPECT_EQ(sturm_count(p, a, b), expected);
  }
}

TEST(SeriesRoot, InvertsPower) {
  UPoly phi = up({0, 2, 1, Rational(-1, 3)});
  UPoly p = phi.pow(5).truncated(12);
  UPoly root;
  ASSERT_TRUE(series_root(p, 5, 8, root));
  EXPECT_EQ(root, phi.truncated(8));
  EXPECT_FALSE(series_root(UPoly::monomial(1, 3), 2, 5, root));
}

TEST(RatFunc, NormalizesToLowestTerms) {
  UPoly t = UPoly::t();
  RatFunc r(t * t - UPoly(1), UPoly(2) * (t - UPoly(1)));
  EXPECT_EQ(r.num(), (t + UPoly(1)) * Rational(1, 2));
  EXPECT_TRUE(r.is_polynomial());
  RatFunc s = RatFunc(1) / RatFunc(t) + RatFunc(1) / RatFunc(t * Rational(-1));
  EXPECT_TRUE(s.is_zero());
}

TEST(SolveParamLinear, Trivial) {
  UPoly t = UPoly::t();
  auto s = solve_param_linear(std::vector<std::vector<UPoly>>{{UPoly(1)}}, {t});
  ASSERT_TRUE(s.feasible);
  EXPECT_EQ(s.solution[0], RatFunc(t));
  EXPECT_TRUE(s.feasible_on_unit_interval());

  auto p = solve_param_linear(std::vector<std::vector<UPoly>>{{t - UPoly(Rational(1, 2))}}, {UPoly(1)});
  ASSERT_TRUE(p.feasible);
  EXPECT_EQ(p.poles_in_unit_interval[0], 1);
  EXPECT_FALSE(p.feasible_on_unit_interval());

  auto bad = solve_param_linear(std::vector<std::vector<UPoly>>{{UPoly(1)}, {UPoly(1)}}, {UPoly(0), UPoly(1)});
  EXPECT_FALSE(bad.feasible);
}

TEST(SolveParamLinear, MoserSystemForAdjustedA11) {
  UPoly t = UPoly::t();
  UPoly one_minus_t = UPoly(1) - t;
  for (Rational c1 : {Rational(1), Rational(-2), Rational(1, 3), Rational(5), Rational(-7, 2)}) {
    Rational c2 = 1;
    std::vector<std::vector<UPoly>> a{
        {UPoly(5 * c1), UPoly(-11), UPoly(0), UPoly(0)},
        {UPoly(-14 * c1), UPoly(Rational(-45, 2)), UPoly(0), UPoly(0)},
        {one_minus_t * Rational(-14 * c2), UPoly(Rational(-7, 2) * c1), UPoly(Rational(-7, 2)), UPoly(0)},
        {UPoly(0), one_minus_t * Rational(5 * c2), UPoly(10 * c1), UPoly(Rational(-35, 2))}};
    std::vector<UPoly> b{UPoly(c2), UPoly(0), UPoly(0), UPoly(0)};
    auto s = solve_param_linear(a, b);
    ASSERT_TRUE(s.feasible);
    EXPECT_TRUE(s.feasible_on_unit_interval());
    for (std::size_t i = 0; i < 4; ++i) {
      RatFunc lhs;
      for (std::size_t j = 0; j < 4; ++j) lhs += RatFunc(a[i][j]) * s.solution[j];
      EXPECT_EQ(lhs, RatFunc(b[i]));
    }
  }
}
