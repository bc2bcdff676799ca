#pragma once

// Built-in functions addressed by a selector string `name[:key=value,...]`:
//
//   power:q=<real>     x^q
//   invpower:s=<real>  x^(-s)
//   exp                e^x
//   xlnx               x ln x   (0 at x = 0)
//   abs_shift:c=<real> |x - c|

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sconvex/core.hpp"

namespace sconvex {

class UnknownFunction : public Error {
 public:
  using Error::Error;
};

struct FunctionSelector {
  std::string name;
  std::map<std::string, double> args;
};

namespace detail {

inline double parse_real(std::string_view text, const std::string& what) {
  double x = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, x);
  if (ec != std::errc() || ptr != last) {
    throw UnknownFunction("cannot parse '" + std::string(text) + "' as a number in " + what);
  }
  return x;
}

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace detail

inline FunctionSelector parse_selector(std::string_view text) {
  FunctionSelector sel;
  const auto colon = text.find(':');
  sel.name = detail::trim(text.substr(0, colon));
  if (sel.name.empty()) throw UnknownFunction("empty function selector");
  if (colon == std::string_view::npos) return sel;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw UnknownFunction("expected key=value in '" + std::string(text) + "'");
    }
    sel.args[detail::trim(item.substr(0, eq))] =
        detail::parse_real(detail::trim(item.substr(eq + 1)), std::string(text));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return sel;
}

namespace detail {

inline double required_arg(const FunctionSelector& sel, const std::string& key) {
  auto it = sel.args.find(key);
  if (it == sel.args.end()) {
    throw UnknownFunction("function '" + sel.name + "' needs argument " + key);
  }
  return it->second;
}

inline void reject_extra_args(const FunctionSelector& sel, std::vector<std::string> allowed) {
  for (const auto& [k, _] : sel.args) {
    if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) {
      throw UnknownFunction("function '" + sel.name + "' has no argument '" + k + "'");
    }
  }
}

/// sup |x^q| over [u, v] for a monotone power; infinite when the
/// exponent is negative and u = 0.
inline double sup_abs_power(double coeff, double q, double u, double v) {
  if (coeff == 0.0) return 0.0;
  if (q == 0.0) return std::abs(coeff);
  const double at_u = std::pow(u, q);
  const double at_v = std::pow(v, q);
  return std::abs(coeff) * std::max(at_u, at_v);
}

}  // namespace detail

/// Builds the FunctionSpec for a selector. When `iv` is given, the
/// fourth-derivative bound is filled in for that interval (if finite).
inline FunctionSpec make_builtin(const FunctionSelector& sel,
                                 std::optional<Interval> iv = std::nullopt) {
  FunctionSpec fn;
  std::optional<double> m4;
  if (sel.name == "power") {
    detail::reject_extra_args(sel, {"q"});
    const double q = detail::required_arg(sel, "q");
    fn.f = [q](double x) { return std::pow(x, q); };
    fn.f_prime = [q](double x) { return q == 0.0 ? 0.0 : q * std::pow(x, q - 1.0); };
    if (iv && iv->u >= 0.0) {
      const double c4 = q * (q - 1.0) * (q - 2.0) * (q - 3.0);
      m4 = detail::sup_abs_power(c4, q - 4.0, iv->u, iv->v);
    }
  } else if (sel.name == "invpower") {
    detail::reject_extra_args(sel, {"s"});
    const double s = detail::required_arg(sel, "s");
    fn.f = [s](double x) { return std::pow(x, -s); };
    fn.f_prime = [s](double x) { return -s * std::pow(x, -s - 1.0); };
    if (iv && iv->u > 0.0) {
      m4 = s * (s + 1.0) * (s + 2.0) * (s + 3.0) * std::pow(iv->u, -s - 4.0);
    }
  } else if (sel.name == "exp") {
    detail::reject_extra_args(sel, {});
    fn.f = [](double x) { return std::exp(x); };
    fn.f_prime = [](double x) { return std::exp(x); };
    if (iv) m4 = std::exp(iv->v);
  } else if (sel.name == "xlnx") {
    detail::reject_extra_args(sel, {});
    fn.f = [](double x) { return x == 0.0 ? 0.0 : x * std::log(x); };
    fn.f_prime = [](double x) { return std::log(x) + 1.0; };
    if (iv && iv->u > 0.0) m4 = 2.0 / (iv->u * iv->u * iv->u);
  } else if (sel.name == "abs_shift") {
    detail::reject_extra_args(sel, {"c"});
    const double c = detail::required_arg(sel, "c");
    fn.f = [c](double x) { return std::abs(x - c); };
    fn.f_prime = [c](double x) { return x > c ? 1.0 : (x < c ? -1.0 : 0.0); };
    fn.kinks = {c};
    if (iv && (c <= iv->u || c >= iv->v)) m4 = 0.0;
  } else {
    throw UnknownFunction("unknown builtin function '" + sel.name +
                          "' (expected power, invpower, exp, xlnx, abs_shift)");
  }
  if (m4 && std::isfinite(*m4)) fn.fourth_deriv_bound = m4;

  fn.label = sel.name;
  bool first = true;
  for (const auto& [k, val] : sel.args) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", val);
    fn.label += (first ? ":" : ",") + k + "=" + buf;
    first = false;
  }
  return fn;
}

inline FunctionSpec make_builtin(std::string_view selector,
                                 std::optional<Interval> iv = std::nullopt) {
  return make_builtin(parse_selector(selector), iv);
}

/// x -> |f'(x)|^r, the function whose s-convexity the bounds assume.
inline ScalarMap derivative_power(const FunctionSpec& fn, double r) {
  return [fp = fn.f_prime, r](double x) { return std::pow(std::abs(fp(x)), r); };
}

}  // namespace sconvex
