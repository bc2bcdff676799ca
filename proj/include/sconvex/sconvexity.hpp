#pragma once

/**
 * @file sconvexity.hpp
 * @brief Empirical membership test for s-convexity in the second sense.
 *
 * f is s-convex on a subset of [0, inf) when
 *     f(a x + (1-a) y) <= a^s f(x) + (1-a)^s f(y)
 * for all x, y in the domain and a in [0, 1]. The checks here sample that
 * inequality on a uniform grid; they can refute membership but never prove it.
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "sconvex/core.hpp"

namespace sconvex {

inline constexpr std::size_t kDefaultGrid = 50;
inline constexpr double kViolationRelTol = 1e-9;

struct SConvexityWitness {
  double alpha;
  double x;
  double y;
};

struct SConvexityReport {
  double s = 1.0;
  /// Largest f(a x + (1-a) y) - a^s f(x) - (1-a)^s f(y) on the grid.
  double max_violation = 0.0;
  /// kViolationRelTol * (1 + max |f| on the grid).
  double threshold = 0.0;
  std::optional<SConvexityWitness> witness;
  std::size_t grid_size = 0;

  bool passes() const noexcept { return max_violation <= threshold; }
};

namespace detail {

inline std::vector<double> uniform_grid(double a, double b, std::size_t n) {
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) {
    g[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  g.back() = b;
  return g;
}

template <typename F>
double finite_value(F& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) {
    throw DomainError("function is not finite at x = " + std::to_string(x));
  }
  return y;
}

}  // namespace detail

/// Evaluates the defining inequality on all n^3 triples (a, x, y) of two
/// n-point grids (domain and [0, 1]) and reports the worst signed violation.
template <typename F>
SConvexityReport check_s_convex(F&& fn, double s, const Interval& domain,
                                std::size_t n = kDefaultGrid) {
  if (domain.u < 0.0) {
    throw DomainError("s-convexity is defined on [0, inf); got u = " + std::to_string(domain.u));
  }
  if (!(s > 0.0 && s <= 1.0)) throw RangeError("s", "must lie in (0, 1]");
  if (n < 2) throw RangeError("grid", "needs at least two points");

  const auto xs = detail::uniform_grid(domain.u, domain.v, n);
  const auto alphas = detail::uniform_grid(0.0, 1.0, n);

  std::vector<double> fx(n);
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    fx[i] = detail::finite_value(fn, xs[i]);
    scale = std::max(scale, std::abs(fx[i]));
  }
  std::vector<double> wa(n), wb(n);
  for (std::size_t k = 0; k < n; ++k) {
    wa[k] = std::pow(alphas[k], s);
    wb[k] = std::pow(1.0 - alphas[k], s);
  }

  SConvexityReport rep;
  rep.s = s;
  rep.grid_size = n;
  rep.threshold = kViolationRelTol * (1.0 + scale);
  rep.max_violation = -std::numeric_limits<double>::infinity();
  SConvexityWitness worst{};
  for (std::size_t k = 0; k < n; ++k) {
    const double a = alphas[k];
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const double z = a * xs[i] + (1.0 - a) * xs[j];
        const double gap = detail::finite_value(fn, z) - wa[k] * fx[i] - wb[k] * fx[j];
        if (gap > rep.max_violation) {
          rep.max_violation = gap;
          worst = {a, xs[i], xs[j]};
        }
      }
    }
  }
  if (!rep.passes()) rep.witness = worst;
  return rep;
}

/// x -> g(x)^s. A nonnegative convex g yields an s-convex result. Evaluating
/// the returned map where g is negative throws NegativeValue.
template <typename G>
ScalarMap power_of_convex(G g, double s) {
  if (!(s > 0.0 && s <= 1.0)) throw RangeError("s", "must lie in (0, 1]");
  return [g = std::move(g), s](double x) -> double {
    const double gx = g(x);
    if (gx < 0.0) {
      throw NegativeValue("g(" + std::to_string(x) + ") = " + std::to_string(gx) + " < 0");
    }
    return std::pow(gx, s);
  };
}

/// Largest s in (0, 1] for which check_s_convex passes, to within
/// `resolution`. Seeded at s = 1; 0 when even s = resolution fails. This is
/// an empirical value: it assumes the passing set is an interval (0, s*].
template <typename F>
double estimate_max_s(F&& fn, const Interval& domain, std::size_t n = kDefaultGrid,
                      double resolution = 1e-3) {
  if (check_s_convex(fn, 1.0, domain, n).passes()) return 1.0;
  if (!check_s_convex(fn, resolution, domain, n).passes()) return 0.0;
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > resolution) {
    const double mid = 0.5 * (lo + hi);
    if (check_s_convex(fn, mid, domain, n).passes()) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo > 0.0 ? lo : resolution;
}

/// Ordinary convexity test via second divided differences on an n-point
/// grid: true when every difference is >= -tol * (1 + scale).
template <typename F>
bool second_differences_nonnegative(F&& fn, const Interval& domain,
                                    std::size_t n = kDefaultGrid) {
  if (n < 3) throw RangeError("grid", "needs at least three points");
  const auto xs = detail::uniform_grid(domain.u, domain.v, n);
  std::vector<double> fx(n);
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    fx[i] = detail::finite_value(fn, xs[i]);
    scale = std::max(scale, std::abs(fx[i]));
  }
  // Uniform spacing, so the sign of f[i+1] - 2 f[i] + f[i-1] is the sign of
  // the divided difference.
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double second = fx[i + 1] - 2.0 * fx[i] + fx[i - 1];
    if (second < -kViolationRelTol * (1.0 + scale)) return false;
  }
  return true;
}

}  // namespace sconvex
