#pragma once

// Weighted endpoint/midpoint integral identity and the absolute moments
// of |y - alpha|^x on [0, 1].

#include <cmath>
#include <vector>

#include "sconvex/core.hpp"
#include "sconvex/quadrature.hpp"

namespace sconvex {

/// m0 = int_0^1 |y - a|^x da,  m1 = int_0^1 a |y - a|^x da.
struct MomentPair {
  double m0;
  double m1;
};

inline MomentPair lemma2_closed(double y, double x) {
  if (!(y >= 0.0 && y <= 1.0)) throw RangeError("y", "must lie in [0, 1]");
  if (!(x > 0.0) || !std::isfinite(x)) throw RangeError("x", "must be positive");
  const double w = 1.0 - y;
  const double m0 = (std::pow(y, x + 1.0) + std::pow(w, x + 1.0)) / (x + 1.0);
  const double m1 = (std::pow(y, x + 2.0) + (x + 1.0 + y) * std::pow(w, x + 1.0)) /
                    ((x + 1.0) * (x + 2.0));
  return {m0, m1};
}

/// (1/(v-u)) int_u^v f, with the quadrature error scaled the same way.
inline Estimate mean_value(const FunctionSpec& fn, const Interval& iv,
                           double tol = kDefaultTol) {
  QuadOptions opts;
  opts.breakpoints = fn.kinks;
  const auto q = integrate(fn.f, iv.u, iv.v, tol * iv.width(), opts);
  return {q.value / iv.width(), q.error_estimate / iv.width()};
}

/// Combination of endpoint and midpoint values minus the mean integral:
///   (lambda f(u) + mu f(v))/2 + ((2 - lambda - mu)/2) f((u+v)/2) - mean(f).
/// Any real lambda, mu is accepted.
inline Estimate identity_lhs(const FunctionSpec& fn, const Interval& iv, double lambda,
                             double mu, double tol = kDefaultTol) {
  if (!std::isfinite(lambda)) throw RangeError("lambda", "must be finite");
  if (!std::isfinite(mu)) throw RangeError("mu", "must be finite");
  const auto mean = mean_value(fn, iv, tol);
  const double combo = 0.5 * (lambda * fn.f(iv.u) + mu * fn.f(iv.v)) +
                       0.5 * (2.0 - lambda - mu) * fn.f(iv.midpoint());
  return {combo - mean.value, mean.error};
}

/// The derivative-side integral
///   ((v-u)/4) int_0^1 [(1-lambda-a) f'(a u + (1-a) m) + (mu-a) f'(a m + (1-a) v)] da
/// with m the midpoint. The first argument uses (1-a) throughout.
inline Estimate identity_rhs(const FunctionSpec& fn, const Interval& iv, double lambda,
                             double mu, double tol = kDefaultTol) {
  if (!std::isfinite(lambda)) throw RangeError("lambda", "must be finite");
  if (!std::isfinite(mu)) throw RangeError("mu", "must be finite");
  const double u = iv.u;
  const double v = iv.v;
  const double m = iv.midpoint();
  auto integrand = [&](double a) {
    return (1.0 - lambda - a) * fn.f_prime(a * u + (1.0 - a) * m) +
           (mu - a) * fn.f_prime(a * m + (1.0 - a) * v);
  };

  // A kink c of f' shows up at a = (m - c)/(m - u) in the left half and at
  // a = (v - c)/(v - m) in the right half.
  QuadOptions opts;
  for (double c : fn.kinks) {
    if (c > u && c < m) opts.breakpoints.push_back((m - c) / (m - u));
    if (c > m && c < v) opts.breakpoints.push_back((v - c) / (v - m));
  }
  const double scale = 0.25 * iv.width();
  const auto q = integrate(integrand, 0.0, 1.0, tol / scale, opts);
  return {scale * q.value, scale * q.error_estimate};
}

}  // namespace sconvex
