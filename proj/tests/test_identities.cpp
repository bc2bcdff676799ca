#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "sconvex/identities.hpp"

using namespace sconvex;

TEST(AbsoluteMoments, HandValues) {
  auto m = lemma2_closed(0.0, 2.0);
  EXPECT_NEAR(m.m0, 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(m.m1, 1.0 / 4.0, 1e-15);
  m = lemma2_closed(0.5, 1.0);
  EXPECT_NEAR(m.m0, 1.0 / 4.0, 1e-15);
  EXPECT_NEAR(m.m1, 1.0 / 8.0, 1e-15);
  m = lemma2_closed(1.0, 3.0);
  EXPECT_NEAR(m.m0, 1.0 / 4.0, 1e-15);
  EXPECT_NEAR(m.m1, 1.0 / 20.0, 1e-15);
}

TEST(AbsoluteMoments, DomainErrors) {
  EXPECT_THROW(lemma2_closed(-0.1, 1.0), RangeError);
  EXPECT_THROW(lemma2_closed(1.1, 1.0), RangeError);
  EXPECT_THROW(lemma2_closed(0.5, 0.0), RangeError);
}

TEST(AbsoluteMoments, MatchQuadratureOnGrid) {
  for (int i = 0; i <= 10; ++i) {
    const double y = i / 10.0;
    for (double x : {0.3, 0.5, 1.0, 2.0, 5.0}) {
      QuadOptions opts;
      opts.breakpoints = {y};
      const double q0 =
          integrate([&](double a) { return std::pow(std::abs(y - a), x); }, 0.0, 1.0, 1e-13, opts)
              .value;
      const double q1 =
          integrate([&](double a) { return a * std::pow(std::abs(y - a), x); }, 0.0, 1.0, 1e-13,
                    opts)
              .value;
      const auto m = lemma2_closed(y, x);
      EXPECT_LE(std::abs(m.m0 - q0), 1e-9 * std::abs(q0)) << y << " " << x;
      EXPECT_LE(std::abs(m.m1 - q1), 1e-9 * std::abs(q1)) << y << " " << x;
      EXPECT_GT(m.m0, 0.0);
      EXPECT_LT(m.m1, m.m0);
      EXPECT_GT(m.m1, 0.0);
    }
  }
}

TEST(AbsoluteMoments, ZerothMomentSymmetric) {
  for (int i = 0; i <= 10; ++i) {
    const double y = i / 10.0;
    for (double x : {0.3, 0.5, 1.0, 2.0, 5.0}) {
      // 1 - (1 - y) can differ from y in the last bit, so compare to a few ulp.
      EXPECT_DOUBLE_EQ(lemma2_closed(y, x).m0, lemma2_closed(1.0 - y, x).m0);
    }
  }
}

TEST(WeightedIdentity, SquareOnUnitInterval) {
  const auto fn = make_builtin("power:q=2");
  const Interval iv(0.0, 1.0);
  EXPECT_NEAR(identity_lhs(fn, iv, 1.0, 1.0).value, 1.0 / 6.0, 1e-12);
  EXPECT_NEAR(identity_rhs(fn, iv, 1.0, 1.0).value, 1.0 / 6.0, 1e-12);
}

TEST(WeightedIdentity, ConstantGivesZero) {
  const auto fn = fixtures::constant(2.5);
  const Interval iv(-1.0, 4.0);
  EXPECT_NEAR(identity_lhs(fn, iv, 0.3, 1.7).value, 0.0, 1e-12);
  EXPECT_EQ(identity_rhs(fn, iv, 0.3, 1.7).value, 0.0);
}

TEST(WeightedIdentity, LinearCases) {
  const auto fn = make_builtin("power:q=1");
  const Interval iv(0.0, 1.0);
  EXPECT_NEAR(identity_lhs(fn, iv, 0.0, 0.0).value, 0.0, 1e-14);
  EXPECT_NEAR(identity_rhs(fn, iv, 0.5, 0.5).value, 0.0, 1e-14);
}

TEST(WeightedIdentity, HoldsOverFixtureFamily) {
  constexpr double tol = 1e-10;
  std::mt19937_64 rng(20261016);
  std::uniform_real_distribution<double> w(-1.0, 2.0);
  for (const auto& sel : fixtures::smooth_selectors()) {
    const auto fn = fixtures::builtin(sel);
    for (const auto& iv : fixtures::intervals()) {
      for (int k = 0; k < 50; ++k) {
        const double l = w(rng);
        const double m = w(rng);
        const double lhs = identity_lhs(fn, iv, l, m, tol).value;
        const double rhs = identity_rhs(fn, iv, l, m, tol).value;
        ASSERT_LE(std::abs(lhs - rhs), 100.0 * tol) << sel << " [" << iv.u << "," << iv.v << "] "
                                                    << l << " " << m;
      }
    }
  }
}

TEST(WeightedIdentity, KinkedDerivative) {
  const auto fn = make_builtin("abs_shift:c=0.3");
  const Interval iv(0.0, 1.0);
  for (double l : {-0.5, 0.0, 0.4, 1.5}) {
    EXPECT_NEAR(identity_lhs(fn, iv, l, 1.0 - l).value, identity_rhs(fn, iv, l, 1.0 - l).value,
                1e-8);
  }
}

TEST(WeightedIdentity, RejectsNonFiniteWeights) {
  const auto fn = make_builtin("exp");
  EXPECT_THROW(identity_lhs(fn, Interval(0.0, 1.0), NAN, 0.0), RangeError);
  EXPECT_THROW(identity_rhs(fn, Interval(0.0, 1.0), 0.0, INFINITY), RangeError);
}
