#include <gtest/gtest.h>

#include <cmath>
#include <cstring>

#include "fixtures.hpp"
#include "sconvex/explorer.hpp"

using namespace sconvex;

namespace {

SweepSpec square_lambda_sweep() {
  const Interval iv(0.0, 1.0);
  SweepSpec spec{.function = make_builtin("power:q=2", iv), .interval = iv};
  spec.s = {1.0};
  spec.lambda = {0.0, 1.0 / 3.0, 0.5, 2.0 / 3.0, 1.0};
  spec.mu_follows_lambda = true;
  spec.r = {1.0};
  return spec;
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

TEST(Sweep, FiveRowLambdaSweep) {
  const auto rows = sweep(square_lambda_sweep());
  ASSERT_EQ(rows.size(), 5u);
  for (const auto& r : rows) {
    EXPECT_TRUE(r.satisfied);
    EXPECT_EQ(r.status, "ok");
    EXPECT_EQ(r.params.lambda, r.params.mu);
  }
  EXPECT_NEAR(rows[1].lhs, 0.0, 1e-14);
  EXPECT_NEAR(rows[4].rhs, 0.25, 1e-14);
  const auto c = coefficients_ELIF(1.0, 1.0 / 3.0, 1.0 / 3.0);
  EXPECT_NEAR(rows[1].rhs, (1.0 / 8.0) * (1.0 / 6.0) * ((c.L + c.F) * 2.0), 1e-14);
}

TEST(Sweep, EmptyGrids) {
  SweepSpec spec{.function = make_builtin("exp")};
  EXPECT_TRUE(sweep(spec).empty());
  spec.s = {1.0};
  spec.lambda = {0.5};
  spec.mu = {0.5};
  EXPECT_TRUE(sweep(spec).empty());
}

TEST(Sweep, ExpWithFirstCatalogInstance) {
  const Interval iv(0.0, 1.0);
  SweepSpec spec{.function = make_builtin("exp", iv), .interval = iv};
  spec.s = {0.3};
  spec.lambda = {0.3};
  spec.mu = {0.3};
  spec.p = {2.0};
  spec.which = SweepWhich::holder;
  const auto rows = sweep(spec);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_TRUE(rows[0].satisfied);
  EXPECT_EQ(rows[0].kind, "holder");
  EXPECT_EQ(rows[0].params.r, 2.0);
}

TEST(Sweep, Cap) {
  auto spec = square_lambda_sweep();
  spec.cap = 4;
  EXPECT_THROW(sweep(spec), CapExceeded);
}

TEST(Sweep, InvalidTupleBecomesFailedRow) {
  auto spec = square_lambda_sweep();
  spec.lambda = {0.5, 1.5};
  const auto rows = sweep(spec);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].status, "ok");
  EXPECT_EQ(rows[1].status.rfind("failed", 0), 0u);
  EXPECT_TRUE(std::isnan(rows[1].lhs));
}

TEST(Sweep, OrderingIsLexicographic) {
  const Interval iv(1.0, 2.0);
  SweepSpec spec{.function = make_builtin("exp", iv), .interval = iv};
  spec.s = {0.5, 1.0};
  spec.lambda = {0.0, 1.0};
  spec.mu = {0.2, 0.8};
  spec.r = {1.0, 2.0};
  spec.p = {2.0};
  spec.which = SweepWhich::both;
  const auto rows = sweep(spec);
  ASSERT_EQ(rows.size(), 8u + 16u);
  EXPECT_EQ(rows[0].kind, "holder");
  EXPECT_EQ(rows[8].kind, "power_mean");
  EXPECT_EQ(rows[8].params.s, 0.5);
  EXPECT_EQ(rows[8].params.lambda, 0.0);
  EXPECT_EQ(rows[8].params.mu, 0.2);
  EXPECT_EQ(rows[8].params.r, 1.0);
  EXPECT_EQ(rows[9].params.r, 2.0);
  EXPECT_EQ(rows[10].params.mu, 0.8);
  EXPECT_EQ(rows[12].params.lambda, 1.0);
  EXPECT_EQ(rows[16].params.s, 1.0);
}

TEST(Sweep, HypothesisAnnotation) {
  // |f'| = |ln x + 1| is concave on [1, 3], so it fails at s = 1.
  const Interval iv(1.0, 3.0);
  SweepSpec spec{.function = make_builtin("xlnx", iv), .interval = iv};
  spec.s = {1.0};
  spec.lambda = spec.mu = {0.5};
  spec.r = {1.0};
  spec.check_hypothesis = true;
  const auto rows = sweep(spec);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].status, "hypothesis_failed");
}

TEST(Sweep, Deterministic) {
  auto spec = square_lambda_sweep();
  spec.r = {1.0, 2.0};
  spec.p = {1.5, 4.0};
  spec.which = SweepWhich::both;
  EXPECT_EQ(sweep(spec), sweep(spec));
}

TEST(GoldenSection, FindsParabolaMinimum) {
  const auto m = golden_section_minimize([](double x) { return (x - 0.3) * (x - 0.3); }, 0.0, 1.0,
                                         1e-8);
  EXPECT_NEAR(m.x, 0.3, 1e-7);
}

TEST(Optimizer, GridDominanceAndValidity) {
  for (const auto& sel : fixtures::smooth_selectors()) {
    for (const auto& iv : fixtures::intervals()) {
      const auto fn = make_builtin(sel, iv);
      for (auto which : {BoundKind::holder, BoundKind::power_mean}) {
        const double r = which == BoundKind::holder ? 2.0 : 1.0;
        const auto opt = minimize_bound(fn, iv, 1.0, r, which);
        EXPECT_LE(opt.rhs, opt.grid_rhs);
        for (int i = 0; i <= 20; ++i) {
          for (int j = 0; j <= 20; ++j) {
            const double l = i / 20.0;
            const double m = j / 20.0;
            const double du = fn.f_prime(iv.u);
            const double dv = fn.f_prime(iv.v);
            const double g = which == BoundKind::holder
                                 ? holder_rhs(iv.width(), du, dv, InequalityParams::holder(1.0, l, m, 2.0))
                                 : power_mean_rhs(iv.width(), du, dv,
                                                  InequalityParams::power_mean(1.0, l, m, 1.0));
            EXPECT_LE(opt.rhs, g);
          }
        }
        EXPECT_LE(opt.lhs, opt.rhs + opt.lhs_error + kSatisfiedSlack) << sel;
      }
    }
  }
}

TEST(Optimizer, SquareBeatsSimpsonWeights) {
  const Interval iv(0.0, 1.0);
  const auto fn = make_builtin("power:q=2", iv);
  const auto opt = minimize_bound(fn, iv, 1.0, 1.0, BoundKind::power_mean);
  const double at_third =
      power_mean_rhs(1.0, 0.0, 2.0, InequalityParams::power_mean(1.0, 1.0 / 3.0, 1.0 / 3.0, 1.0));
  EXPECT_LE(opt.rhs, at_third);
}

TEST(Optimizer, ConstantTieBreak) {
  const auto opt = minimize_bound(fixtures::constant(2.0), Interval(0.0, 1.0), 0.5, 1.0,
                                  BoundKind::power_mean);
  EXPECT_EQ(opt.lambda, 0.0);
  EXPECT_EQ(opt.mu, 0.0);
  EXPECT_EQ(opt.rhs, 0.0);
}

TEST(Optimizer, SymmetricDerivativeMagnitudes) {
  const Interval iv(0.0, 2.0);
  FunctionSpec fn{[](double x) { return (x - 1.0) * (x - 1.0); },
                  [](double x) { return 2.0 * (x - 1.0); }};
  for (auto which : {BoundKind::holder, BoundKind::power_mean}) {
    const auto opt = minimize_bound(fn, iv, 0.7, 2.0, which);
    EXPECT_NEAR(opt.lambda, opt.mu, 1e-3);
  }
}

TEST(Optimizer, BitIdenticalRuns) {
  const Interval iv(0.5, 2.0);
  const auto fn = make_builtin("exp", iv);
  const auto a = minimize_bound(fn, iv, 0.6, 1.5, BoundKind::power_mean);
  const auto b = minimize_bound(fn, iv, 0.6, 1.5, BoundKind::power_mean);
  EXPECT_TRUE(same_bits(a.lambda, b.lambda));
  EXPECT_TRUE(same_bits(a.mu, b.mu));
  EXPECT_TRUE(same_bits(a.rhs, b.rhs));
  EXPECT_TRUE(same_bits(a.lhs, b.lhs));
  EXPECT_EQ(a.iterations, b.iterations);
}

TEST(Optimizer, HolderNeedsRAboveOne) {
  EXPECT_THROW(minimize_bound(make_builtin("exp"), Interval(0.0, 1.0), 1.0, 1.0, BoundKind::holder),
               RangeError);
}
