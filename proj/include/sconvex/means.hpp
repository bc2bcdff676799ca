#pragma once

/**
 * @file means.hpp
 * @brief Arithmetic, logarithmic and generalized logarithmic means, and the
 *        three special-means consequences of the bounds.
 *
 * The propositions instantiate the bounds at f(x) = x^s (Hölder and power
 * mean) and f(x) = x^(-s) (power mean). Their left sides are evaluated in
 * closed form through the means; their right sides delegate to bounds.hpp.
 */

#include <cmath>
#include <numbers>
#include <string>

#include "sconvex/bounds.hpp"
#include "sconvex/core.hpp"

namespace sconvex {

namespace detail {

inline void require_positive_pair(double u, double v) {
  if (!(u > 0.0) || !std::isfinite(u)) throw RangeError("u", "must be positive");
  if (!(v > 0.0) || !std::isfinite(v)) throw RangeError("v", "must be positive");
}

inline void require_ordered_pair(double u, double v) {
  require_positive_pair(u, v);
  if (!(u < v)) throw RangeError("interval", "requires 0 < u < v");
}

}  // namespace detail

inline double mean_arithmetic(double u, double v) {
  detail::require_positive_pair(u, v);
  return 0.5 * (u + v);
}

inline double mean_logarithmic(double u, double v) {
  detail::require_positive_pair(u, v);
  if (u == v) return u;
  return (v - u) / (std::log(v) - std::log(u));
}

/// (1/e) (v^v / u^u)^(1/(v-u)); the p -> 0 limit of L_p.
inline double mean_identric(double u, double v) {
  detail::require_positive_pair(u, v);
  if (u == v) return u;
  return std::exp((v * std::log(v) - u * std::log(u)) / (v - u) - 1.0);
}

/// L_p(u, v) with its continuous extensions at p = -1, p = 0 and u = v.
inline double mean_generalized_log(double u, double v, double p) {
  detail::require_positive_pair(u, v);
  if (!std::isfinite(p)) throw RangeError("p", "must be finite");
  if (u == v) return u;
  if (p == -1.0) return mean_logarithmic(u, v);
  if (p == 0.0) return mean_identric(u, v);
  return std::pow((std::pow(v, p + 1.0) - std::pow(u, p + 1.0)) / ((p + 1.0) * (v - u)),
                  1.0 / p);
}

/// (1/(v-u)) int_u^v x^q dx, i.e. L_q^q(u, v) without the q != -1, 0
/// exclusion (q = -1 gives 1/L, q = 0 gives 1).
inline double power_mean_integral(double u, double v, double q) {
  detail::require_ordered_pair(u, v);
  if (q == -1.0) return 1.0 / mean_logarithmic(u, v);
  return (std::pow(v, q + 1.0) - std::pow(u, q + 1.0)) / ((q + 1.0) * (v - u));
}

struct MeanValues {
  double arithmetic;
  double logarithmic;
  double generalized_log;
  double p_exponent;
};

inline MeanValues mean_values(double u, double v, double p = 1.0) {
  return {mean_arithmetic(u, v), mean_logarithmic(u, v), mean_generalized_log(u, v, p), p};
}

// ---------------------------------------------------------------------------
// Propositions
// ---------------------------------------------------------------------------

inline FunctionSpec power_function(double q) {
  return {[q](double x) { return std::pow(x, q); },
          [q](double x) { return q * std::pow(x, q - 1.0); },
          std::nullopt,
          "power:q=" + std::to_string(q),
          {}};
}

namespace detail {

/// |(lambda u^q + mu v^q)/2 + ((2-lambda-mu)/2) A(u,v)^q - L_q^q(u,v)|.
inline double power_lhs(double u, double v, double q, double lambda, double mu) {
  const double combo = 0.5 * (lambda * std::pow(u, q) + mu * std::pow(v, q)) +
                       0.5 * (2.0 - lambda - mu) * std::pow(mean_arithmetic(u, v), q);
  return std::abs(combo - power_mean_integral(u, v, q));
}

}  // namespace detail

/// f(x) = x^s under the Hölder bound. `paper_variant_rhs` keeps the
/// printed form with a single s inside each (.)^(1/r) root, which is
/// s^(1/r) times the bracket instead of s times it.
inline BoundReport proposition_xs_holder(double u, double v, const InequalityParams& params) {
  detail::require_ordered_pair(u, v);
  validate_params(params, ParamMode::bound);
  if (!params.p) throw MissingExponent("proposition p1 needs p (with 1/p + 1/r = 1)");
  const double s = params.s;
  const double r = params.r;
  const Interval iv(u, v);
  const auto fn = power_function(s);

  const double lhs = detail::power_lhs(u, v, s, params.lambda, params.mu);
  const double rhs = holder_bound(fn, iv, params);

  const auto w = holder_weights(s);
  const double a = std::pow(u, r * (s - 1.0));
  const double b = std::pow(v, r * (s - 1.0));
  const double printed =
      0.25 * iv.width() *
      (holder_prefactor(params.lambda, *params.p) * std::pow(s * w.big * a + s * w.small * b, 1.0 / r) +
       holder_prefactor(params.mu, *params.p) * std::pow(s * w.small * a + s * w.big * b, 1.0 / r));

  auto rep = make_report("p1", lhs, rhs, 0.0, params, iv);
  rep.paper_variant_rhs = printed;
  return rep;
}

/// Closed form of the x^s power-mean bound at lambda = mu = 1, r = 1:
///   s (1 + s 2^s) (v-u) / (2^s (s+1)(s+2)) * A(u^(s-1), v^(s-1)).
inline double xs_powermean_reduced(double u, double v, double s) {
  detail::require_ordered_pair(u, v);
  return s * (1.0 + s * std::pow(2.0, s)) * (v - u) /
         (std::pow(2.0, s) * (s + 1.0) * (s + 2.0)) *
         mean_arithmetic(std::pow(u, s - 1.0), std::pow(v, s - 1.0));
}

/// The same reduction as printed, with s^2 in place of s.
inline double xs_powermean_reduced_printed(double u, double v, double s) {
  return s * xs_powermean_reduced(u, v, s);
}

/// f(x) = x^s under the power-mean bound. At lambda = mu = 1, r = 1 the
/// report also carries the printed s^2 reduction as `paper_variant_rhs`.
inline BoundReport proposition_xs_powermean(double u, double v, const InequalityParams& params) {
  detail::require_ordered_pair(u, v);
  validate_params(params, ParamMode::bound);
  const Interval iv(u, v);
  const double lhs = detail::power_lhs(u, v, params.s, params.lambda, params.mu);
  const double rhs = power_mean_bound(power_function(params.s), iv, params);
  auto rep = make_report("p2", lhs, rhs, 0.0, params, iv);
  if (params.lambda == 1.0 && params.mu == 1.0 && params.r == 1.0) {
    rep.paper_variant_rhs = xs_powermean_reduced_printed(u, v, params.s);
  }
  return rep;
}

/// (v-u) (5/36) A(u^-2, v^-2): the inverse-power bound at s = r = 1,
/// lambda = mu = 1/3.
inline double inverse_power_simpson_reduced(double u, double v) {
  detail::require_ordered_pair(u, v);
  return (v - u) * (5.0 / 36.0) * mean_arithmetic(1.0 / (u * u), 1.0 / (v * v));
}

/// f(x) = x^(-s) under the power-mean bound.
inline BoundReport proposition_inverse_power(double u, double v, const InequalityParams& params) {
  detail::require_ordered_pair(u, v);
  validate_params(params, ParamMode::bound);
  const Interval iv(u, v);
  const double lhs = detail::power_lhs(u, v, -params.s, params.lambda, params.mu);
  const double rhs = power_mean_bound(power_function(-params.s), iv, params);
  return make_report("p3", lhs, rhs, 0.0, params, iv);
}

}  // namespace sconvex
