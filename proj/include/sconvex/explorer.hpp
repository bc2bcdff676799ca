#pragma once

/**
 * @file explorer.hpp
 * @brief Parameter sweeps over the bounds and (lambda, mu) minimization of
 *        the right-hand side.
 *
 * The right-hand sides are only piecewise smooth in (lambda, mu), so the
 * minimizer is derivative-free: a coarse grid followed by coordinate-wise
 * golden-section refinement.
 */

#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sconvex/bounds.hpp"
#include "sconvex/builtins.hpp"
#include "sconvex/core.hpp"
#include "sconvex/sconvexity.hpp"

namespace sconvex {

enum class SweepWhich { holder, power_mean, both };

struct SweepSpec {
  FunctionSpec function;
  Interval interval{0.0, 1.0};
  std::vector<double> s;
  std::vector<double> lambda;
  /// Ignored when mu_follows_lambda is set.
  std::vector<double> mu;
  std::vector<double> r;
  /// Hölder rows use these, with r = p/(p-1).
  std::vector<double> p;
  bool mu_follows_lambda = false;
  SweepWhich which = SweepWhich::power_mean;
  bool check_hypothesis = false;
  double tol = kDefaultTol;
  std::size_t cap = 1'000'000;
};

namespace detail {

struct SweepRow {
  BoundKind kind;
  InequalityParams params;
};

inline std::vector<SweepRow> enumerate_rows(const SweepSpec& spec) {
  std::vector<std::pair<double, double>> pairs;
  for (double l : spec.lambda) {
    if (spec.mu_follows_lambda) {
      pairs.emplace_back(l, l);
    } else {
      for (double m : spec.mu) pairs.emplace_back(l, m);
    }
  }
  const bool want_holder = spec.which != SweepWhich::power_mean;
  const bool want_power = spec.which != SweepWhich::holder;
  const std::size_t per_kind = spec.s.size() * pairs.size();
  const std::size_t total =
      (want_holder ? per_kind * spec.p.size() : 0) + (want_power ? per_kind * spec.r.size() : 0);
  if (total > spec.cap) {
    throw CapExceeded("sweep has " + std::to_string(total) + " tuples, cap is " +
                      std::to_string(spec.cap));
  }

  std::vector<SweepRow> rows;
  rows.reserve(total);
  auto emit = [&](BoundKind kind, const std::vector<double>& exps) {
    for (double s : spec.s) {
      for (const auto& [l, m] : pairs) {
        for (double e : exps) {
          rows.push_back({kind, kind == BoundKind::holder ? InequalityParams::holder(s, l, m, e)
                                                          : InequalityParams::power_mean(s, l, m, e)});
        }
      }
    }
  };
  if (want_holder) emit(BoundKind::holder, spec.p);
  if (want_power) emit(BoundKind::power_mean, spec.r);
  return rows;
}

inline BoundReport failed_row(BoundKind kind, const InequalityParams& params, const Interval& iv,
                              const std::string& why) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  BoundReport rep{.kind = std::string(to_string(kind)), .params = params, .interval = iv};
  rep.lhs = rep.rhs = rep.margin = rep.ratio = nan;
  rep.quad_error = 0.0;
  rep.satisfied = false;
  rep.status = "failed: " + why;
  return rep;
}

}  // namespace detail

/// One report per tuple, ordered holder rows first, then power-mean rows,
/// each lexicographic in (s, lambda, mu, exponent). A row whose evaluation
/// throws is kept with status "failed: ..." and NaN values. With
/// check_hypothesis, rows where |f'|^r fails check_s_convex on the interval
/// get status "hypothesis_failed".
inline std::vector<BoundReport> sweep(const SweepSpec& spec) {
  const auto rows = detail::enumerate_rows(spec);
  std::vector<BoundReport> out;
  out.reserve(rows.size());

  std::map<std::pair<double, double>, Estimate> lhs_cache;
  std::map<std::pair<double, double>, bool> hypothesis_cache;

  for (const auto& row : rows) {
    const auto& pr = row.params;
    try {
      validate_params(pr, ParamMode::bound);
      const auto key = std::make_pair(pr.lambda, pr.mu);
      auto it = lhs_cache.find(key);
      if (it == lhs_cache.end()) {
        it = lhs_cache
                 .emplace(key, lhs_functional(spec.function, spec.interval, pr.lambda, pr.mu,
                                              spec.tol))
                 .first;
      }
      const double rhs = row.kind == BoundKind::holder
                             ? holder_bound(spec.function, spec.interval, pr)
                             : power_mean_bound(spec.function, spec.interval, pr);
      auto rep = make_report(std::string(to_string(row.kind)), it->second.value, rhs,
                             it->second.error, pr, spec.interval);
      if (spec.check_hypothesis) {
        const auto hkey = std::make_pair(pr.s, pr.r);
        auto h = hypothesis_cache.find(hkey);
        if (h == hypothesis_cache.end()) {
          bool ok = false;
          try {
            ok = check_s_convex(derivative_power(spec.function, pr.r), pr.s, spec.interval)
                     .passes();
          } catch (const Error&) {
            ok = false;
          }
          h = hypothesis_cache.emplace(hkey, ok).first;
        }
        if (!h->second) rep.status = "hypothesis_failed";
      }
      out.push_back(std::move(rep));
    } catch (const Error& e) {
      out.push_back(detail::failed_row(row.kind, pr, spec.interval, e.what()));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Minimization
// ---------------------------------------------------------------------------

struct LineMinimum {
  double x;
  double value;
  std::size_t iterations;
};

/// Golden-section search for a minimum of a unimodal f on [a, b], stopping
/// once the bracket is narrower than `tol`.
template <typename F>
LineMinimum golden_section_minimize(F&& f, double a, double b, double tol = 1e-4) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  std::size_t it = 0;
  while (b - a > tol) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    ++it;
  }
  return fc <= fd ? LineMinimum{c, fc, it} : LineMinimum{d, fd, it};
}

struct Optimum {
  double lambda;
  double mu;
  std::optional<double> p;
  double rhs;
  double lhs;
  double lhs_error;
  /// Smallest right-hand side seen on the coarse grid.
  double grid_rhs;
  std::size_t iterations;
};

inline constexpr std::size_t kCoarseGrid = 21;
inline constexpr double kRefineTol = 1e-4;

/// Minimizes the chosen bound over (lambda, mu) in [0, 1]^2 with s and r
/// fixed (for the Hölder bound p = r/(r-1), so r > 1 is required).
///
/// Coarse 21x21 grid, ties broken toward the smallest lambda and then the
/// smallest mu; then alternating golden-section passes on lambda and mu,
/// each bracketed by one grid step around the incumbent. A refinement is
/// only accepted when it strictly lowers the bound.
inline Optimum minimize_bound(const FunctionSpec& fn, const Interval& iv, double s, double r,
                              BoundKind which, double tol = kDefaultTol) {
  std::optional<double> p;
  if (which == BoundKind::holder) {
    if (!(r > 1.0)) throw RangeError("r", "the Hölder bound needs r > 1");
    p = r / (r - 1.0);
  }
  const double du = fn.f_prime(iv.u);
  const double dv = fn.f_prime(iv.v);
  auto params_at = [&](double l, double m) {
    return p ? InequalityParams{s, l, m, p, r} : InequalityParams::power_mean(s, l, m, r);
  };
  auto objective = [&](double l, double m) {
    const auto pr = params_at(l, m);
    return which == BoundKind::holder ? holder_rhs(iv.width(), du, dv, pr)
                                      : power_mean_rhs(iv.width(), du, dv, pr);
  };
  validate_params(params_at(0.0, 0.0), ParamMode::bound);

  const double step = 1.0 / static_cast<double>(kCoarseGrid - 1);
  double best_l = 0.0;
  double best_m = 0.0;
  double best = objective(0.0, 0.0);
  for (std::size_t i = 0; i < kCoarseGrid; ++i) {
    for (std::size_t j = 0; j < kCoarseGrid; ++j) {
      const double l = static_cast<double>(i) * step;
      const double m = static_cast<double>(j) * step;
      const double val = objective(l, m);
      if (val < best) {
        best = val;
        best_l = l;
        best_m = m;
      }
    }
  }
  const double grid_best = best;

  std::size_t iterations = 0;
  for (int round = 0; round < 20; ++round) {
    bool improved = false;
    {
      auto line = golden_section_minimize([&](double l) { return objective(l, best_m); },
                                          std::max(0.0, best_l - step),
                                          std::min(1.0, best_l + step), kRefineTol);
      iterations += line.iterations;
      if (line.value < best) {
        best = line.value;
        best_l = line.x;
        improved = true;
      }
    }
    {
      auto line = golden_section_minimize([&](double m) { return objective(best_l, m); },
                                          std::max(0.0, best_m - step),
                                          std::min(1.0, best_m + step), kRefineTol);
      iterations += line.iterations;
      if (line.value < best) {
        best = line.value;
        best_m = line.x;
        improved = true;
      }
    }
    if (!improved) break;
  }

  const auto lhs = lhs_functional(fn, iv, best_l, best_m, tol);
  return {best_l, best_m, p, best, lhs.value, lhs.error, grid_best, iterations};
}

}  // namespace sconvex
