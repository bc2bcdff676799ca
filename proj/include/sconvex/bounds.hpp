#pragma once

/**
 * @file bounds.hpp
 * @brief Left-hand functional and the two right-hand bounds.
 *
 * For 0 <= lambda, mu <= 1 the quantity
 *
 *     | (lambda f(u) + mu f(v))/2 + ((2-lambda-mu)/2) f((u+v)/2) - mean(f) |
 *
 * is bounded in terms of |f'(u)| and |f'(v)| whenever |f'|^r is s-convex on
 * [u, v]. Two bounds are provided:
 *
 *   holder      Hölder split with conjugate exponents p, r > 1
 *   power_mean  power-mean split with r >= 1, coefficients E, L, I, F
 *
 * plus the classical Hermite-Hadamard and Simpson checks, and a catalog of
 * the named parameter instances with their printed constants.
 */

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sconvex/core.hpp"
#include "sconvex/identities.hpp"

namespace sconvex {

// ---------------------------------------------------------------------------
// Coefficients
// ---------------------------------------------------------------------------

/// (s+1)(s+2) * int_0^1 |1-t-a| (1+a)^s da, in closed form.
inline double coefficient_E(double s, double t) {
  return 2.0 * std::pow(2.0 - t, s + 2.0) + (t - 1.0) * (s + std::pow(2.0, s + 2.0) + 2.0) +
         std::pow(2.0, s + 1.0) * s * t - 1.0;
}

/// (s+1)(s+2) * int_0^1 |1-t-a| (1-a)^s da, in closed form.
inline double coefficient_L(double s, double t) {
  return 2.0 * std::pow(t, s + 2.0) + s * (1.0 - t) - 2.0 * t + 1.0;
}

struct CoefficientSet {
  double E;
  double L;
  double I;
  double F;
  double s;
  double lambda;
  double mu;
};

/// I and F reuse the L and E formulas with mu in place of lambda.
inline CoefficientSet coefficients_ELIF(double s, double lambda, double mu) {
  validate_params(InequalityParams::power_mean(s, lambda, mu, 1.0), ParamMode::bound);
  return {coefficient_E(s, lambda), coefficient_L(s, lambda), coefficient_L(s, mu),
          coefficient_E(s, mu),     s,                        lambda,
          mu};
}

/// int_0^1 |t - a|^p da = ((1-t)^(p+1) + t^(p+1)) / (p+1). Symmetric in t <-> 1-t.
inline double holder_moment(double t, double p) {
  return (std::pow(1.0 - t, p + 1.0) + std::pow(t, p + 1.0)) / (p + 1.0);
}

/// The Hölder prefactor (holder_moment)^(1/p).
inline double holder_prefactor(double t, double p) { return std::pow(holder_moment(t, p), 1.0 / p); }

/// Weights from integrating ((1+a)/2)^s and ((1-a)/2)^s over [0, 1].
struct HolderWeights {
  double big;    // (2^(s+1) - 1) / (2^s (s+1))
  double small;  // 1 / (2^s (s+1))
};

inline HolderWeights holder_weights(double s) {
  const double denom = std::pow(2.0, s) * (s + 1.0);
  return {(std::pow(2.0, s + 1.0) - 1.0) / denom, 1.0 / denom};
}

// ---------------------------------------------------------------------------
// Right-hand sides from derivative magnitudes
// ---------------------------------------------------------------------------

/// Hölder-type bound given the interval width and |f'(u)|, |f'(v)|.
inline double holder_rhs(double width, double du, double dv, const InequalityParams& params) {
  if (!params.p) throw MissingExponent("the Hölder bound needs p (with 1/p + 1/r = 1)");
  validate_params(params, ParamMode::bound);
  const double p = *params.p;
  const double r = params.r;
  const auto w = holder_weights(params.s);
  const double a = std::pow(std::abs(du), r);
  const double b = std::pow(std::abs(dv), r);
  const double left = holder_prefactor(params.lambda, p) * std::pow(w.big * a + w.small * b, 1.0 / r);
  const double right = holder_prefactor(params.mu, p) * std::pow(w.small * a + w.big * b, 1.0 / r);
  return 0.25 * width * (left + right);
}

/// Power-mean-type bound given the interval width and |f'(u)|, |f'(v)|.
inline double power_mean_rhs(double width, double du, double dv, const InequalityParams& params) {
  validate_params(params, ParamMode::bound);
  const double s = params.s;
  const double r = params.r;
  const auto c = coefficients_ELIF(s, params.lambda, params.mu);
  const double a = std::pow(std::abs(du), r);
  const double b = std::pow(std::abs(dv), r);
  const double lead =
      0.125 * width * std::pow(1.0 / (std::pow(2.0, s - 1.0) * (s + 1.0) * (s + 2.0)), 1.0 / r);
  const double wl = std::pow(2.0 * params.lambda * params.lambda - 2.0 * params.lambda + 1.0,
                             1.0 - 1.0 / r);
  const double wm = std::pow(2.0 * params.mu * params.mu - 2.0 * params.mu + 1.0, 1.0 - 1.0 / r);
  return lead * (wl * std::pow(c.E * a + c.L * b, 1.0 / r) +
                 wm * std::pow(c.I * a + c.F * b, 1.0 / r));
}

// ---------------------------------------------------------------------------
// Evaluation on a FunctionSpec
// ---------------------------------------------------------------------------

enum class BoundKind { holder, power_mean };

inline std::string_view to_string(BoundKind k) {
  return k == BoundKind::holder ? "holder" : "power_mean";
}

/// |identity_lhs|; the error is the quadrature error of the mean integral.
inline Estimate lhs_functional(const FunctionSpec& fn, const Interval& iv, double lambda,
                               double mu, double tol = kDefaultTol) {
  const auto e = identity_lhs(fn, iv, lambda, mu, tol);
  return {std::abs(e.value), e.error};
}

inline double holder_bound(const FunctionSpec& fn, const Interval& iv,
                           const InequalityParams& params) {
  return holder_rhs(iv.width(), fn.f_prime(iv.u), fn.f_prime(iv.v), params);
}

inline double power_mean_bound(const FunctionSpec& fn, const Interval& iv,
                               const InequalityParams& params) {
  return power_mean_rhs(iv.width(), fn.f_prime(iv.u), fn.f_prime(iv.v), params);
}

inline BoundReport evaluate_bound(BoundKind kind, const FunctionSpec& fn, const Interval& iv,
                                  const InequalityParams& params, double tol = kDefaultTol) {
  const double rhs = kind == BoundKind::holder ? holder_bound(fn, iv, params)
                                               : power_mean_bound(fn, iv, params);
  const auto lhs = lhs_functional(fn, iv, params.lambda, params.mu, tol);
  return make_report(std::string(to_string(kind)), lhs.value, rhs, lhs.error, params, iv);
}

// ---------------------------------------------------------------------------
// Classical baselines
// ---------------------------------------------------------------------------

struct HermiteHadamardResult {
  bool left_ok;
  bool right_ok;
  double midpoint;
  double mean;
  double endpoint_average;
};

/// f((u+v)/2) <= mean(f) <= (f(u)+f(v))/2, each side allowed the quadrature
/// error plus kSatisfiedSlack.
inline HermiteHadamardResult hermite_hadamard_check(const FunctionSpec& fn, const Interval& iv,
                                                    double tol = kDefaultTol) {
  const auto mean = mean_value(fn, iv, tol);
  const double mid = fn.f(iv.midpoint());
  const double avg = 0.5 * (fn.f(iv.u) + fn.f(iv.v));
  const double slack = mean.error + kSatisfiedSlack;
  return {mid <= mean.value + slack, mean.value <= avg + slack, mid, mean.value, avg};
}

/// Simpson functional against ||f''''|| (v-u)^4 / 1280.
inline BoundReport simpson_classical_check(const FunctionSpec& fn, const Interval& iv,
                                           double tol = kDefaultTol) {
  if (!fn.fourth_deriv_bound) {
    throw MissingBound("Simpson check needs sup|f''''| on the interval ('" + fn.label + "')");
  }
  if (!(*fn.fourth_deriv_bound >= 0.0)) {
    throw RangeError("fourth_deriv_bound", "must be nonnegative");
  }
  const auto mean = mean_value(fn, iv, tol);
  const double simpson =
      (0.5 * (fn.f(iv.u) + fn.f(iv.v)) + 2.0 * fn.f(iv.midpoint())) / 3.0;
  const double lhs = std::abs(simpson - mean.value);
  const double rhs = *fn.fourth_deriv_bound * std::pow(iv.width(), 4) / 1280.0;
  return make_report("simpson", lhs, rhs, mean.error,
                     InequalityParams::power_mean(1.0, 1.0 / 3.0, 1.0 / 3.0, 1.0), iv);
}

// ---------------------------------------------------------------------------
// Corollary catalog
// ---------------------------------------------------------------------------

/// What a catalog constant measures, in terms of the entry's parameters.
enum class CorollaryQuantity {
  prefactor_lambda,  // holder_prefactor(lambda, p)
  prefactor_mu,      // holder_prefactor(mu, p)
  weight_big,        // holder_weights(s).big
  weight_small,      // holder_weights(s).small
  width_lambda,      // holder_prefactor(lambda, p) / 4
  width_mu,          // holder_prefactor(mu, p) / 4
  integer_weights,   // holder_prefactor(lambda, p) / 4 * weight_small^(1/r); s = 1 only
};

struct NamedConstant {
  std::string name;
  CorollaryQuantity quantity;
  double printed;
  /// Printed decimal places; empty when `printed` is an exact closed form.
  std::optional<int> decimals;
};

struct CorollaryEntry {
  std::string id;
  InequalityParams params;
  std::vector<NamedConstant> constants;
  std::string note;
};

inline const std::vector<std::string>& corollary_ids() {
  static const std::vector<std::string> ids = {
      "i",       "ii",     "iii",          "iv",      "v", "vi", "s1_half",
      "s1_third", "s1_twothirds", "midpoint_trapezoid"};
  return ids;
}

inline CorollaryEntry corollary_catalog(std::string_view id) {
  using Q = CorollaryQuantity;
  const double e = std::numbers::e;
  if (id == "i") {
    return {"i",
            InequalityParams::holder(0.3, 0.3, 0.3, 2.0),
            {{"prefactor", Q::prefactor_lambda, 0.351, 3},
             {"weight_big", Q::weight_big, 0.914, 3},
             {"weight_small", Q::weight_small, 0.625, 3}},
            "printed display writes 1/(b-u) for 1/(v-u) and one |f'(u)|^r where r = 2"};
  }
  if (id == "ii") {
    return {"ii",
            InequalityParams::holder(0.5, 0.5, 0.5, 2.0),
            {{"prefactor", Q::prefactor_lambda, 0.289, 3},
             {"weight_big", Q::weight_big, 0.862, 3},
             {"weight_small", Q::weight_small, 0.471, 3}},
            ""};
  }
  if (id == "iii") {
    return {"iii",
            {0.75, 0.3, 0.7, 10.0, 10.0 / 9.0},
            {{"prefactor", Q::prefactor_lambda, 0.531, 3},
             {"prefactor_mu", Q::prefactor_mu, 0.531, 3},
             {"weight_big", Q::weight_big, 0.803, 3},
             {"weight_small", Q::weight_small, 0.34, 2}},
            "printed bracket exponent 9/10 equals 1/r for r = 10/9"};
  }
  if (id == "iv") {
    return {"iv",
            {0.4, 0.2, 0.8, 3.0, 1.5},
            {{"prefactor", Q::prefactor_lambda, 0.468, 3},
             {"prefactor_mu", Q::prefactor_mu, 0.468, 3},
             {"weight_big", Q::weight_big, 0.887, 3},
             {"weight_small", Q::weight_small, 0.541, 3}},
            ""};
  }
  if (id == "v") {
    return {"v",
            {0.4, 0.2, 0.8, e, e / (e - 1.0)},
            {{"prefactor", Q::prefactor_lambda, 0.455, 3},
             {"prefactor_mu", Q::prefactor_mu, 0.455, 3},
             {"weight_big", Q::weight_big, 0.887, 3},
             {"weight_small", Q::weight_small, 0.541, 3}},
            "printed bracket exponent e/(e-1) is r, not 1/r; the bound uses 1/r = (e-1)/e"};
  }
  if (id == "vi") {
    return {"vi",
            InequalityParams::holder(1.0, 1.0 / 3.0, 2.0 / 3.0, 2.0),
            {{"width_coefficient", Q::width_lambda, 1.0 / 12.0, std::nullopt},
             {"width_coefficient_mu", Q::width_mu, 1.0 / 12.0, std::nullopt},
             {"weight_big", Q::weight_big, 0.75, std::nullopt},
             {"weight_small", Q::weight_small, 0.25, std::nullopt}},
            ""};
  }
  // s = 1, lambda = mu; the printed coefficient multiplies
  // (v-u) [ (3|f'(u)|^r + |f'(v)|^r)^(1/r) + (|f'(u)|^r + 3|f'(v)|^r)^(1/r) ].
  // Instantiated at p = r = 2.
  const double p = 2.0;
  const double r = 2.0;
  if (id == "s1_half") {
    const double printed = 1.0 / (8.0 * std::pow(p + 1.0, 1.0 / p) * std::pow(4.0, 1.0 / r));
    return {"s1_half",
            InequalityParams::holder(1.0, 0.5, 0.5, p),
            {{"integer_weight_coefficient", Q::integer_weights, printed, std::nullopt},
             {"weight_big", Q::weight_big, 0.75, std::nullopt},
             {"weight_small", Q::weight_small, 0.25, std::nullopt}},
            "instantiated at p = r = 2"};
  }
  if (id == "s1_third" || id == "s1_twothirds") {
    const double printed =
        std::pow(4.0, -(1.0 + 1.0 / r)) *
        std::pow((1.0 + std::pow(2.0, p + 1.0)) / (std::pow(3.0, p + 1.0) * (p + 1.0)), 1.0 / p);
    const double t = id == "s1_third" ? 1.0 / 3.0 : 2.0 / 3.0;
    return {std::string(id),
            InequalityParams::holder(1.0, t, t, p),
            {{"integer_weight_coefficient", Q::integer_weights, printed, std::nullopt},
             {"weight_big", Q::weight_big, 0.75, std::nullopt},
             {"weight_small", Q::weight_small, 0.25, std::nullopt}},
            "instantiated at p = r = 2; lambda = 1/3 and 2/3 share one coefficient"};
  }
  if (id == "midpoint_trapezoid") {
    const double printed = 1.0 / (8.0 * std::pow(p + 1.0, 1.0 / p));
    return {"midpoint_trapezoid",
            InequalityParams::holder(0.5, 0.5, 0.5, p),
            {{"width_coefficient", Q::width_lambda, printed, std::nullopt}},
            "assumes (f(u)+f(v))/2 = f((u+v)/2), so the trapezoid and midpoint deviations "
            "coincide and share this bound; instantiated at s = 0.5, p = r = 2"};
  }
  throw UnknownId("unknown corollary id '" + std::string(id) + "'");
}

/// Rounds half away from zero at `decimals` places (all catalog values are
/// positive, so this is round-half-up).
inline double round_half_up(double x, int decimals) {
  const double scale = std::pow(10.0, decimals);
  return std::floor(x * scale + 0.5) / scale;
}

struct ConstantCheck {
  NamedConstant constant;
  double computed;
  double rounded;
  bool match;
};

struct CorollaryVerification {
  CorollaryEntry entry;
  std::vector<ConstantCheck> checks;
  bool pass;
};

inline double corollary_quantity(const CorollaryEntry& entry, CorollaryQuantity q) {
  const auto& pr = entry.params;
  if (!pr.p) throw MissingExponent("catalog entry '" + entry.id + "' has no p");
  const double p = *pr.p;
  const auto w = holder_weights(pr.s);
  switch (q) {
    case CorollaryQuantity::prefactor_lambda:
      return holder_prefactor(pr.lambda, p);
    case CorollaryQuantity::prefactor_mu:
      return holder_prefactor(pr.mu, p);
    case CorollaryQuantity::weight_big:
      return w.big;
    case CorollaryQuantity::weight_small:
      return w.small;
    case CorollaryQuantity::width_lambda:
      return 0.25 * holder_prefactor(pr.lambda, p);
    case CorollaryQuantity::width_mu:
      return 0.25 * holder_prefactor(pr.mu, p);
    case CorollaryQuantity::integer_weights:
      return 0.25 * holder_prefactor(pr.lambda, p) * std::pow(w.small, 1.0 / pr.r);
  }
  return std::nan("");
}

/// Recomputes every constant of the entry from its parameters and compares
/// against the printed value: at the printed precision (round-half-up) when
/// `decimals` is set, to 1e-12 relative otherwise.
inline CorollaryVerification verify_corollary(const CorollaryEntry& entry) {
  validate_params(entry.params, ParamMode::bound);
  CorollaryVerification out{entry, {}, true};
  for (const auto& c : entry.constants) {
    const double computed = corollary_quantity(entry, c.quantity);
    ConstantCheck check{c, computed, computed, false};
    if (c.decimals) {
      check.rounded = round_half_up(computed, *c.decimals);
      const double scale = std::pow(10.0, *c.decimals);
      check.match = std::llround(check.rounded * scale) == std::llround(c.printed * scale);
    } else {
      check.match = std::abs(computed - c.printed) <= 1e-12 * std::max(1.0, std::abs(c.printed));
    }
    out.pass = out.pass && check.match;
    out.checks.push_back(check);
  }
  return out;
}

}  // namespace sconvex
