#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "sconvex/quadrature.hpp"

using namespace sconvex;

namespace {
constexpr double kTol = 1e-10;
}

TEST(Integrate, Square) {
  const auto q = integrate([](double x) { return x * x; }, 0.0, 1.0, kTol);
  EXPECT_NEAR(q.value, 1.0 / 3.0, 1e-14);
  EXPECT_LE(q.error_estimate, kTol);
}

TEST(Integrate, TentFunction) {
  const auto q = integrate([](double a) { return std::abs(0.5 - a); }, 0.0, 1.0, kTol);
  EXPECT_NEAR(q.value, 0.25, kTol);
}

TEST(Integrate, Reciprocal) {
  const auto q = integrate([](double x) { return 1.0 / x; }, 1.0, 2.0, kTol);
  EXPECT_NEAR(q.value, std::numbers::ln2, kTol);
}

TEST(Integrate, EndpointSingularityIsNeverSampled) {
  const auto q = integrate([](double x) { return std::pow(x, -0.5); }, 0.0, 1.0, 1e-8);
  EXPECT_NEAR(q.value, 2.0, 1e-7);
}

TEST(Integrate, Linearity) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coef(-3.0, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    double c[2][6];
    for (auto& row : c) {
      for (double& x : row) x = coef(rng);
    }
    auto poly = [&](int k) {
      return [&, k](double x) {
        double y = 0.0;
        for (int i = 5; i >= 0; --i) y = y * x + c[k][i];
        return y;
      };
    };
    const double a = coef(rng);
    const double b = coef(rng);
    const auto f = poly(0);
    const auto g = poly(1);
    const double lhs =
        integrate([&](double x) { return a * f(x) + b * g(x); }, -1.0, 2.0, kTol).value;
    const double rhs = a * integrate(f, -1.0, 2.0, kTol).value + b * integrate(g, -1.0, 2.0, kTol).value;
    EXPECT_NEAR(lhs, rhs, 10.0 * kTol);
  }
}

TEST(Integrate, KinkSplittingAgrees) {
  for (double c : {0.1, 0.37, 0.5, 0.81}) {
    auto h = [c](double a) { return std::abs(c - a) * std::exp(a); };
    const double split = integrate(h, 0.0, c, kTol).value + integrate(h, c, 1.0, kTol).value;
    const double once = integrate(h, 0.0, 1.0, kTol).value;
    EXPECT_NEAR(once, split, 10.0 * kTol) << "c = " << c;
    QuadOptions opts;
    opts.breakpoints = {c};
    EXPECT_NEAR(integrate(h, 0.0, 1.0, kTol, opts).value, split, 10.0 * kTol);
  }
}

TEST(Integrate, CubicsAreExact) {
  auto cubic = [](double x) { return 4.0 * x * x * x - 3.0 * x * x + 2.0 * x - 1.0; };
  auto anti = [](double x) { return x * x * x * x - x * x * x + x * x - x; };
  const auto q = integrate(cubic, -1.5, 2.5, kTol);
  EXPECT_NEAR(q.value, anti(2.5) - anti(-1.5), 1e-13);
  EXPECT_EQ(q.subdivisions, 0u);
}

TEST(Integrate, NonFiniteInteriorSample) {
  EXPECT_THROW(integrate([](double x) { return x > 0.3 ? NAN : 1.0; }, 0.0, 1.0), NonFiniteSample);
}

TEST(Integrate, SubdivisionCap) {
  QuadOptions opts;
  opts.max_subdivisions = 5;
  EXPECT_THROW(integrate([](double x) { return std::sin(1.0 / x); }, 1e-4, 1.0, 1e-12, opts),
               NoConvergence);
}

TEST(Integrate, RejectsBadArguments) {
  EXPECT_THROW(integrate([](double) { return 1.0; }, 1.0, 1.0), RangeError);
  EXPECT_THROW(integrate([](double) { return 1.0; }, 0.0, 1.0, 0.0), RangeError);
}
