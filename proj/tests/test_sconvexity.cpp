#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <vector>

#include "sconvex/sconvexity.hpp"

using namespace sconvex;

namespace {

struct Named {
  const char* name;
  std::function<double(double)> f;
};

std::vector<Named> convex_nonnegative() {
  return {{"x", [](double x) { return x; }},
          {"x^2", [](double x) { return x * x; }},
          {"exp", [](double x) { return std::exp(x); }},
          {"|x-1|", [](double x) { return std::abs(x - 1.0); }},
          {"(x-1)^2+0.5", [](double x) { return (x - 1.0) * (x - 1.0) + 0.5; }},
          {"1", [](double) { return 1.0; }}};
}

std::vector<Named> mixed_family() {
  auto out = convex_nonnegative();
  out.push_back({"-x^2", [](double x) { return -x * x; }});
  out.push_back({"sqrt", [](double x) { return std::sqrt(x); }});
  out.push_back({"sin", [](double x) { return std::sin(3.0 * x); }});
  out.push_back({"-1", [](double) { return -1.0; }});
  return out;
}

}  // namespace

TEST(CheckSConvex, SquareIsConvex) {
  const auto rep = check_s_convex([](double x) { return x * x; }, 1.0, Interval(0.0, 2.0), 50);
  EXPECT_TRUE(rep.passes());
  // The exact gap is -a(1-a)(x-y)^2 <= 0; on the diagonal x = y only rounding remains.
  EXPECT_LE(rep.max_violation, 1e-14);
  EXPECT_FALSE(rep.witness.has_value());
  EXPECT_EQ(rep.grid_size, 50u);
}

TEST(CheckSConvex, SqrtIsHalfConvex) {
  EXPECT_TRUE(check_s_convex([](double x) { return std::sqrt(x); }, 0.5, Interval(0.0, 4.0), 50)
                  .passes());
}

TEST(CheckSConvex, ConcaveFailsWithWitness) {
  const auto rep = check_s_convex([](double x) { return -x * x; }, 1.0, Interval(0.0, 2.0), 50);
  EXPECT_FALSE(rep.passes());
  EXPECT_GT(rep.max_violation, 0.0);
  ASSERT_TRUE(rep.witness.has_value());
  const auto& w = *rep.witness;
  const double z = w.alpha * w.x + (1.0 - w.alpha) * w.y;
  EXPECT_GT(-z * z, -w.alpha * w.x * w.x - (1.0 - w.alpha) * w.y * w.y);
}

TEST(CheckSConvex, NegativeDomainRejected) {
  EXPECT_THROW(check_s_convex([](double x) { return x; }, 1.0, Interval(-1.0, 1.0)), DomainError);
  EXPECT_THROW(check_s_convex([](double x) { return x; }, 0.0, Interval(0.0, 1.0)), RangeError);
}

TEST(PowerOfConvex, Examples) {
  const Interval d4(0.0, 4.0);
  EXPECT_TRUE(check_s_convex(power_of_convex([](double x) { return x; }, 0.3), 0.3, d4).passes());
  for (double s : {0.1, 0.5, 0.9}) {
    EXPECT_TRUE(
        check_s_convex(power_of_convex([](double) { return 1.0; }, s), s, d4).passes());
  }
  EXPECT_TRUE(check_s_convex(power_of_convex([](double x) { return std::abs(x - 1.0); }, 0.5), 0.5,
                             Interval(0.0, 2.0), 50)
                  .passes());
}

TEST(PowerOfConvex, ClosureOverFixtureFamily) {
  const Interval d(0.0, 2.0);
  for (const auto& g : convex_nonnegative()) {
    for (double s : {0.25, 0.5, 0.75}) {
      EXPECT_TRUE(check_s_convex(power_of_convex(g.f, s), s, d).passes()) << g.name << " s=" << s;
    }
  }
}

TEST(PowerOfConvex, NegativeValueThrows) {
  const auto h = power_of_convex([](double x) { return x - 1.0; }, 0.5);
  EXPECT_NO_THROW(h(2.0));
  EXPECT_THROW(h(0.0), NegativeValue);
}

TEST(CheckSConvex, AtOneAgreesWithSecondDifferences) {
  const Interval d(0.0, 2.0);
  for (const auto& g : mixed_family()) {
    EXPECT_EQ(check_s_convex(g.f, 1.0, d).passes(), second_differences_nonnegative(g.f, d))
        << g.name;
  }
}

TEST(CheckSConvex, RefinementKeepsFailures) {
  const Interval d(0.0, 2.0);
  for (const auto& g : mixed_family()) {
    for (double s : {0.25, 0.5, 1.0}) {
      if (!check_s_convex(g.f, s, d, 25).passes()) {
        EXPECT_FALSE(check_s_convex(g.f, s, d, 50).passes()) << g.name << " s=" << s;
      }
    }
  }
}

TEST(EstimateMaxS, Examples) {
  EXPECT_EQ(estimate_max_s([](double x) { return x * x; }, Interval(0.0, 2.0)), 1.0);
  const double sq = estimate_max_s([](double x) { return std::sqrt(x); }, Interval(0.0, 4.0));
  EXPECT_GE(sq, 0.5);
  EXPECT_LT(sq, 0.5 + 2e-3);
}

TEST(EstimateMaxS, NegativeConstant) {
  // An affine function satisfies the inequality at s = 1; every s < 1 is
  // violated because a^s + (1-a)^s > 1 multiplies a negative value.
  auto f = [](double) { return -1.0; };
  const Interval d(0.0, 1.0);
  EXPECT_EQ(estimate_max_s(f, d), 1.0);
  for (double s : {0.001, 0.25, 0.5, 0.75, 0.999}) {
    EXPECT_FALSE(check_s_convex(f, s, d).passes()) << s;
  }
}

TEST(EstimateMaxS, ZeroWhenNothingPasses) {
  EXPECT_EQ(estimate_max_s([](double x) { return -x * x - 1.0; }, Interval(0.0, 1.0), 20), 0.0);
}
