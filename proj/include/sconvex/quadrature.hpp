#pragma once

/**
 * @file quadrature.hpp
 * @brief Globally adaptive Gauss-Kronrod (7/15) integration.
 *
 * Each panel is integrated with the 15-point Kronrod rule; the embedded
 * 7-point Gauss rule gives the local error indicator |K15 - G7|. The panel
 * with the largest indicator is bisected until the summed indicators drop
 * below the requested absolute tolerance.
 *
 * Both rules are open: no panel is ever sampled at its endpoints, so
 * integrable endpoint singularities (x^(s-1) at 0, say) are reached by
 * repeated bisection toward the singular end.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <string>
#include <vector>

#include "sconvex/core.hpp"

namespace sconvex {

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t subdivisions = 0;
};

struct QuadOptions {
  std::size_t max_subdivisions = 10'000;
  /// Interior points where the integrand has a kink or jump.
  std::vector<double> breakpoints;
};

namespace detail {

// QUADPACK qk15 abscissae/weights. Index 7 is the centre; odd indices are
// the Gauss-7 nodes.
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;
};

inline bool panel_less(const Panel& x, const Panel& y) { return x.error < y.error; }

template <typename F>
double sample(F& f, double x) {
  const double y = static_cast<double>(f(x));
  if (!std::isfinite(y)) {
    throw NonFiniteSample(x, "integrand is not finite at x = " + std::to_string(x));
  }
  return y;
}

template <typename F>
Panel gauss_kronrod_15(F& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double fc = sample(f, centre);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    const double pair = sample(f, centre - dx) + sample(f, centre + dx);
    kronrod += kKronrodWeights[j] * pair;
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * pair;
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace detail

/// Integrates f over [a, b] to absolute tolerance `tol`.
///
/// Throws NoConvergence when the subdivision cap is hit (or a panel can no
/// longer be bisected in double precision) before the error target is met,
/// and NonFiniteSample when f returns NaN or infinity at a sample point.
template <typename F>
  requires std::invocable<F&, double>
QuadResult integrate(F&& f, double a, double b, double tol = kDefaultTol,
                     const QuadOptions& opts = {}) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw RangeError("interval", "integrate requires finite a < b");
  }
  if (!(tol > 0.0)) throw RangeError("tol", "must be positive");

  std::vector<double> cuts{a};
  for (double x : opts.breakpoints) {
    if (x > a && x < b) cuts.push_back(x);
  }
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<detail::Panel> heap;
  heap.reserve(cuts.size() + 2 * opts.max_subdivisions);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    heap.push_back(detail::gauss_kronrod_15(f, cuts[i], cuts[i + 1]));
  }
  std::make_heap(heap.begin(), heap.end(), detail::panel_less);

  auto total_error = [&heap] {
    double e = 0.0;
    for (const auto& p : heap) e += p.error;
    return e;
  };

  std::size_t subdivisions = 0;
  double err = total_error();
  while (err > tol) {
    if (subdivisions >= opts.max_subdivisions) {
      throw NoConvergence("subdivision cap " + std::to_string(opts.max_subdivisions) +
                          " reached with error estimate " + std::to_string(err));
    }
    std::pop_heap(heap.begin(), heap.end(), detail::panel_less);
    const detail::Panel worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      throw NoConvergence("panel width reached machine resolution near x = " +
                          std::to_string(mid));
    }
    const detail::Panel left = detail::gauss_kronrod_15(f, worst.a, mid);
    const detail::Panel right = detail::gauss_kronrod_15(f, mid, worst.b);
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end(), detail::panel_less);
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end(), detail::panel_less);
    ++subdivisions;
    // Incremental update drifts; recompute from scratch now and then.
    err = (subdivisions % 64 == 0) ? total_error()
                                   : err - worst.error + left.error + right.error;
    if (err <= tol) err = total_error();
  }

  // Sum left to right so the result does not depend on heap layout.
  std::sort(heap.begin(), heap.end(),
            [](const detail::Panel& x, const detail::Panel& y) { return x.a < y.a; });
  QuadResult out;
  for (const auto& p : heap) {
    out.value += p.value;
    out.error_estimate += p.error;
  }
  out.subdivisions = subdivisions;
  return out;
}

}  // namespace sconvex
