#pragma once

/**
 * @file core.hpp
 * @brief Shared domain types for the s-convex inequality toolkit.
 *
 * Everything here is an immutable value type. Operations that need a
 * validated parameter set take it by const reference and throw one of the
 * error types below when a precondition does not hold.
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sconvex {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter fell outside its admissible range. `field()` names it.
class RangeError : public Error {
 public:
  RangeError(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class ConjugacyError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

class NonFiniteSample : public Error {
 public:
  NonFiniteSample(double x, const std::string& what) : Error(what), x_(x) {}
  double x() const noexcept { return x_; }

 private:
  double x_;
};

class NegativeValue : public Error {
 public:
  using Error::Error;
};

class MissingExponent : public Error {
 public:
  using Error::Error;
};

class MissingBound : public Error {
 public:
  using Error::Error;
};

class UnknownId : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class DerivativeMismatch : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Tolerances
// ---------------------------------------------------------------------------

inline constexpr double kDefaultTol = 1e-10;
inline constexpr double kConjugacyTol = 1e-12;
inline constexpr double kDerivativeRelTol = 1e-6;
inline constexpr double kSatisfiedSlack = 1e-12;

using ScalarMap = std::function<double(double)>;

// ---------------------------------------------------------------------------
// Interval
// ---------------------------------------------------------------------------

/// Closed interval [u, v] with u < v. Degenerate intervals are rejected.
struct Interval {
  double u;
  double v;

  Interval(double left, double right) : u(left), v(right) {
    if (!std::isfinite(u) || !std::isfinite(v)) {
      throw RangeError("interval", "endpoints must be finite");
    }
    if (!(u < v)) {
      throw RangeError("interval", "requires u < v");
    }
  }

  double width() const noexcept { return v - u; }
  double midpoint() const noexcept { return 0.5 * (u + v); }

  friend bool operator==(const Interval&, const Interval&) = default;
};

// ---------------------------------------------------------------------------
// FunctionSpec
// ---------------------------------------------------------------------------

/// A scalar function together with its first derivative.
///
/// `kinks` lists abscissae where f or f' is not smooth; quadrature splits
/// there. `fourth_deriv_bound` is sup|f''''| on the interval of interest,
/// when known.
struct FunctionSpec {
  ScalarMap f;
  ScalarMap f_prime;
  std::optional<double> fourth_deriv_bound;
  std::string label;
  std::vector<double> kinks;
};

/// Compares f' against a central difference of f on an n-point grid.
/// Returns the first abscissa where |fd - f'| > rtol * (1 + |f'|).
inline std::optional<double> derivative_mismatch(const FunctionSpec& fn,
                                                 const Interval& iv,
                                                 std::size_t n = 1000,
                                                 double rtol = kDerivativeRelTol) {
  if (n < 2) throw RangeError("n", "grid needs at least two points");
  for (std::size_t i = 0; i < n; ++i) {
    const double x = iv.u + iv.width() * static_cast<double>(i) / static_cast<double>(n - 1);
    const double h = 1e-5 * std::max(1.0, std::abs(x));
    // One-sided at the ends so f is never sampled outside [u, v].
    double fd = 0.0;
    if (x - h < iv.u) {
      fd = (-3.0 * fn.f(x) + 4.0 * fn.f(x + h) - fn.f(x + 2.0 * h)) / (2.0 * h);
    } else if (x + h > iv.v) {
      fd = (3.0 * fn.f(x) - 4.0 * fn.f(x - h) + fn.f(x - 2.0 * h)) / (2.0 * h);
    } else {
      fd = (fn.f(x + h) - fn.f(x - h)) / (2.0 * h);
    }
    const double d = fn.f_prime(x);
    if (!(std::abs(fd - d) <= rtol * (1.0 + std::abs(d)))) return x;
  }
  return std::nullopt;
}

/// Throws DerivativeMismatch if f' disagrees with f anywhere on the grid.
inline void validate_function_spec(const FunctionSpec& fn, const Interval& iv,
                                   std::size_t n = 1000) {
  if (fn.fourth_deriv_bound && !(*fn.fourth_deriv_bound >= 0.0)) {
    throw RangeError("fourth_deriv_bound", "must be nonnegative");
  }
  if (auto x = derivative_mismatch(fn, iv, n)) {
    throw DerivativeMismatch("f_prime of '" + fn.label +
                             "' disagrees with finite differences at x = " +
                             std::to_string(*x));
  }
}

// ---------------------------------------------------------------------------
// InequalityParams
// ---------------------------------------------------------------------------

/// (s, lambda, mu) plus exponents. An absent `p` means r stands alone
/// (the power-mean form, r >= 1); a present `p` means (p, r) are Hölder
/// conjugates with both strictly greater than 1.
struct InequalityParams {
  double s = 1.0;
  double lambda = 0.0;
  double mu = 0.0;
  std::optional<double> p;
  double r = 1.0;

  static InequalityParams holder(double s, double lambda, double mu, double p) {
    return {s, lambda, mu, p, p / (p - 1.0)};
  }
  static InequalityParams power_mean(double s, double lambda, double mu, double r) {
    return {s, lambda, mu, std::nullopt, r};
  }

  friend bool operator==(const InequalityParams&, const InequalityParams&) = default;
};

enum class ParamMode { identity, bound };

/// Returns `params` unchanged when every invariant for `mode` holds.
inline InequalityParams validate_params(const InequalityParams& params, ParamMode mode) {
  if (!(params.s > 0.0 && params.s <= 1.0)) {
    throw RangeError("s", "must lie in (0, 1]");
  }
  if (!std::isfinite(params.lambda)) throw RangeError("lambda", "must be finite");
  if (!std::isfinite(params.mu)) throw RangeError("mu", "must be finite");
  if (mode == ParamMode::bound) {
    if (params.lambda < 0.0 || params.lambda > 1.0) {
      throw RangeError("lambda", "bounds require 0 <= lambda <= 1");
    }
    if (params.mu < 0.0 || params.mu > 1.0) {
      throw RangeError("mu", "bounds require 0 <= mu <= 1");
    }
  }
  if (!(params.r >= 1.0) || !std::isfinite(params.r)) {
    throw RangeError("r", "must be finite and >= 1");
  }
  if (params.p) {
    const double p = *params.p;
    if (!(p > 1.0) || !std::isfinite(p)) throw RangeError("p", "must be finite and > 1");
    if (!(params.r > 1.0)) throw RangeError("r", "must be > 1 when p is given");
    if (std::abs(1.0 / p + 1.0 / params.r - 1.0) > kConjugacyTol) {
      throw ConjugacyError("1/p + 1/r must equal 1 (got " +
                           std::to_string(1.0 / p + 1.0 / params.r) + ")");
    }
  }
  return params;
}

// ---------------------------------------------------------------------------
// BoundReport
// ---------------------------------------------------------------------------

struct BoundReport {
  std::string kind;  // "holder", "power_mean", "simpson", "p1", ...
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  double ratio = 0.0;
  double quad_error = 0.0;
  bool satisfied = false;
  InequalityParams params;
  Interval interval{0.0, 1.0};
  std::optional<double> paper_variant_rhs;
  std::string status = "ok";

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

inline BoundReport make_report(std::string kind, double lhs, double rhs, double quad_error,
                               const InequalityParams& params, const Interval& iv) {
  BoundReport rep{.kind = std::move(kind), .params = params, .interval = iv};
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.margin = rhs - lhs;
  if (rhs > 0.0) {
    rep.ratio = lhs / rhs;
  } else if (lhs == 0.0) {
    rep.ratio = 0.0;
  } else {
    rep.ratio = std::numeric_limits<double>::infinity();
  }
  rep.quad_error = quad_error;
  rep.satisfied = lhs <= rhs + quad_error + kSatisfiedSlack;
  return rep;
}

/// Value with the absolute error bound carried along from quadrature.
struct Estimate {
  double value = 0.0;
  double error = 0.0;
};

}  // namespace sconvex
