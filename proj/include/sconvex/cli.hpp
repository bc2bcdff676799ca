#pragma once

/**
 * @file cli.hpp
 * @brief The `sconvex-ineq` command line.
 *
 *   sconvex-ineq verify identity|lemma2|bound|hh|simpson|corollary [flags]
 *   sconvex-ineq sweep --spec <file.json> [flags]
 *   sconvex-ineq optimize [flags]
 *   sconvex-ineq means --u U --v V [--prop p1|p2|p3] [flags]
 *   sconvex-ineq check-sconvex --f SEL --s S --u U --v V [--grid N]
 *
 * Every command writes one document: JSON
 * `{"tool_version", "command", "reports": [...]}` or CSV. Exit status is 0
 * on pass, 1 when an inequality or check is violated, 2 on usage or
 * evaluation errors (message on the error stream).
 *
 * `--config file.json` supplies defaults keyed by flag name (without the
 * dashes, '-' spelled '_'); flags given on the command line win.
 */

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sconvex/bounds.hpp"
#include "sconvex/builtins.hpp"
#include "sconvex/core.hpp"
#include "sconvex/explorer.hpp"
#include "sconvex/identities.hpp"
#include "sconvex/means.hpp"
#include "sconvex/quadrature.hpp"
#include "sconvex/report_io.hpp"
#include "sconvex/sconvexity.hpp"

namespace sconvex::cli {

class UsageError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  std::string command;
  std::string function;
  std::optional<double> u;
  std::optional<double> v;
  double s = 1.0;
  double lambda = 1.0 / 3.0;
  double mu = 1.0 / 3.0;
  std::optional<double> p;
  std::optional<double> r;
  double tol = kDefaultTol;
  std::string format = "json";
  std::string out;
  bool check_hypothesis = false;
  std::string which = "t1";
  std::string id;
  std::size_t grid = kDefaultGrid;
  std::string prop;
  double lp = 1.0;
  std::optional<double> y;
  std::optional<double> x;
  std::string spec;
  std::optional<double> fourth_bound;
  bool estimate = false;
};

inline constexpr double kMinTol = 1e-14;
inline constexpr double kMaxTol = 1e-2;

namespace detail {

using ordered_json = nlohmann::ordered_json;

inline void apply_config(const nlohmann::json& j, RunConfig& c) {
  if (!j.is_object()) throw UsageError("config file must hold a JSON object");
  auto num = [&](const char* k, auto& dst) {
    if (j.contains(k)) dst = j.at(k).get<double>();
  };
  auto str = [&](const char* k, std::string& dst) {
    if (j.contains(k)) dst = j.at(k).get<std::string>();
  };
  str("f", c.function);
  num("u", c.u);
  num("v", c.v);
  num("s", c.s);
  num("lambda", c.lambda);
  num("mu", c.mu);
  num("p", c.p);
  num("r", c.r);
  num("tol", c.tol);
  str("format", c.format);
  str("out", c.out);
  if (j.contains("check_hypothesis")) c.check_hypothesis = j.at("check_hypothesis").get<bool>();
  str("which", c.which);
  str("id", c.id);
  if (j.contains("grid")) c.grid = j.at("grid").get<std::size_t>();
  str("prop", c.prop);
  num("lp", c.lp);
  num("y", c.y);
  num("x", c.x);
  str("spec", c.spec);
  num("fourth_bound", c.fourth_bound);
  if (j.contains("estimate")) c.estimate = j.at("estimate").get<bool>();
}

inline nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("cannot parse '" + path + "': " + e.what());
  }
}

inline Interval require_interval(const RunConfig& c) {
  if (!c.u || !c.v) throw UsageError("--u and --v are required");
  return Interval(*c.u, *c.v);
}

inline FunctionSpec require_function(const RunConfig& c, const Interval& iv) {
  if (c.function.empty()) throw UsageError("--f is required");
  auto fn = make_builtin(c.function, iv);
  if (c.fourth_bound) fn.fourth_deriv_bound = *c.fourth_bound;
  return fn;
}

/// (p, r) from whichever of the two flags were given.
inline InequalityParams holder_params(const RunConfig& c) {
  if (c.p && c.r) return {c.s, c.lambda, c.mu, c.p, *c.r};
  if (c.p) return InequalityParams::holder(c.s, c.lambda, c.mu, *c.p);
  if (c.r && *c.r > 1.0) return {c.s, c.lambda, c.mu, *c.r / (*c.r - 1.0), *c.r};
  throw MissingExponent("the Hölder bound needs --p or --r > 1");
}

inline InequalityParams power_params(const RunConfig& c) {
  return InequalityParams::power_mean(c.s, c.lambda, c.mu, c.r.value_or(1.0));
}

inline BoundKind parse_which(const std::string& w) {
  if (w == "t0" || w == "holder") return BoundKind::holder;
  if (w == "t1" || w == "power_mean") return BoundKind::power_mean;
  throw UsageError("--which must be t0 or t1");
}

inline ordered_json json_number(double x) { return ordered_json(number_to_json(x)); }

inline void flatten(const ordered_json& j, const std::string& prefix, ordered_json& out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it->is_object()) {
      flatten(*it, key, out);
    } else {
      out[key] = *it;
    }
  }
}

inline std::string csv_value(const ordered_json& v) {
  if (v.is_null()) return "";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_float()) return format_number(v.get<double>());
  if (v.is_number()) return v.dump();
  if (v.is_string()) return csv_field(v.get<std::string>());
  return csv_field(v.dump());
}

/// Generic CSV for non-BoundReport documents: the header is the union of
/// flattened keys in order of first appearance.
inline void write_generic_csv(std::ostream& os, const std::vector<ordered_json>& reports) {
  if (reports.empty()) return;
  std::vector<ordered_json> flat;
  std::vector<std::string> keys;
  for (const auto& r : reports) {
    ordered_json f = ordered_json::object();
    flatten(r, "", f);
    for (auto it = f.begin(); it != f.end(); ++it) {
      if (std::find(keys.begin(), keys.end(), it.key()) == keys.end()) keys.push_back(it.key());
    }
    flat.push_back(std::move(f));
  }
  for (std::size_t i = 0; i < keys.size(); ++i) os << (i ? "," : "") << keys[i];
  os << '\n';
  for (const auto& f : flat) {
    for (std::size_t i = 0; i < keys.size(); ++i) {
      os << (i ? "," : "") << (f.contains(keys[i]) ? csv_value(f.at(keys[i])) : "");
    }
    os << '\n';
  }
}

struct Output {
  std::string command;
  std::vector<ordered_json> reports;
  /// Set when every report is a BoundReport; selects the fixed CSV layout.
  std::optional<std::vector<BoundReport>> bound_reports;
  int status = 0;
};

inline ordered_json bound_json(const BoundReport& r) {
  // report_to_json uses a sorted object; re-key in declaration order.
  const auto j = report_to_json(r);
  ordered_json o;
  for (const char* k : {"kind", "lhs", "rhs", "margin", "ratio", "quad_error", "satisfied",
                        "params", "interval", "paper_variant_rhs", "status"}) {
    o[k] = ordered_json::parse(j.at(k).dump());
  }
  return o;
}

inline void add_bound(Output& out, const BoundReport& r) {
  out.reports.push_back(bound_json(r));
  if (!out.bound_reports) out.bound_reports.emplace();
  out.bound_reports->push_back(r);
}

inline void annotate_hypothesis(BoundReport& rep, const FunctionSpec& fn, const Interval& iv) {
  try {
    if (!check_s_convex(derivative_power(fn, rep.params.r), rep.params.s, iv).passes()) {
      rep.status = "hypothesis_failed";
    }
  } catch (const Error&) {
    rep.status = "hypothesis_failed";
  }
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

inline Output verify_identity(const RunConfig& c) {
  const auto iv = require_interval(c);
  const auto fn = require_function(c, iv);
  validate_params({c.s, c.lambda, c.mu, std::nullopt, 1.0}, ParamMode::identity);
  const auto lhs = identity_lhs(fn, iv, c.lambda, c.mu, c.tol);
  const auto rhs = identity_rhs(fn, iv, c.lambda, c.mu, c.tol);
  const double diff = std::abs(lhs.value - rhs.value);
  const bool pass = diff <= 100.0 * c.tol;
  Output out{"verify identity"};
  ordered_json r;
  r["function"] = fn.label;
  r["interval"] = {{"u", iv.u}, {"v", iv.v}};
  r["lambda"] = c.lambda;
  r["mu"] = c.mu;
  r["lhs"] = json_number(lhs.value);
  r["rhs"] = json_number(rhs.value);
  r["difference"] = json_number(diff);
  r["tolerance"] = 100.0 * c.tol;
  r["pass"] = pass;
  r["note"] =
      "the first derivative argument is a*u + (1-a)*(u+v)/2; the printed identity "
      "reads (1-t) there";
  out.reports.push_back(std::move(r));
  out.status = pass ? 0 : 1;
  return out;
}

inline Output verify_lemma2(const RunConfig& c) {
  std::vector<double> ys;
  std::vector<double> xs;
  if (c.y) {
    ys = {*c.y};
  } else {
    for (int i = 0; i <= 10; ++i) ys.push_back(i / 10.0);
  }
  if (c.x) {
    xs = {*c.x};
  } else {
    xs = {0.3, 0.5, 1.0, 2.0, 5.0};
  }
  Output out{"verify lemma2"};
  bool all = true;
  for (double y : ys) {
    for (double x : xs) {
      const auto closed = lemma2_closed(y, x);
      QuadOptions opts;
      opts.breakpoints = {y};
      const double qtol = std::min(c.tol, 1e-12);
      const auto q0 = integrate([&](double a) { return std::pow(std::abs(y - a), x); }, 0.0, 1.0,
                                qtol, opts);
      const auto q1 = integrate([&](double a) { return a * std::pow(std::abs(y - a), x); }, 0.0,
                                1.0, qtol, opts);
      const double e0 = std::abs(closed.m0 - q0.value) / std::abs(q0.value);
      const double e1 = std::abs(closed.m1 - q1.value) / std::abs(q1.value);
      const bool pass = e0 <= 1e-9 && e1 <= 1e-9;
      all = all && pass;
      ordered_json r;
      r["y"] = y;
      r["x"] = x;
      r["m0_closed"] = closed.m0;
      r["m0_oracle"] = q0.value;
      r["m1_closed"] = closed.m1;
      r["m1_oracle"] = q1.value;
      r["max_rel_error"] = std::max(e0, e1);
      r["pass"] = pass;
      out.reports.push_back(std::move(r));
    }
  }
  out.status = all ? 0 : 1;
  return out;
}

inline Output verify_bound(const RunConfig& c) {
  const auto iv = require_interval(c);
  const auto fn = require_function(c, iv);
  const auto kind = parse_which(c.which);
  const auto params = kind == BoundKind::holder ? holder_params(c) : power_params(c);
  auto rep = evaluate_bound(kind, fn, iv, params, c.tol);
  if (c.check_hypothesis) annotate_hypothesis(rep, fn, iv);
  Output out{"verify bound"};
  add_bound(out, rep);
  out.status = rep.satisfied ? 0 : 1;
  return out;
}

inline Output verify_hh(const RunConfig& c) {
  const auto iv = require_interval(c);
  const auto fn = require_function(c, iv);
  const auto hh = hermite_hadamard_check(fn, iv, c.tol);
  Output out{"verify hh"};
  ordered_json r;
  r["function"] = fn.label;
  r["interval"] = {{"u", iv.u}, {"v", iv.v}};
  r["midpoint"] = hh.midpoint;
  r["mean"] = hh.mean;
  r["endpoint_average"] = hh.endpoint_average;
  r["left_ok"] = hh.left_ok;
  r["right_ok"] = hh.right_ok;
  out.reports.push_back(std::move(r));
  out.status = hh.left_ok && hh.right_ok ? 0 : 1;
  return out;
}

inline Output verify_simpson(const RunConfig& c) {
  const auto iv = require_interval(c);
  const auto fn = require_function(c, iv);
  const auto rep = simpson_classical_check(fn, iv, c.tol);
  Output out{"verify simpson"};
  add_bound(out, rep);
  out.status = rep.satisfied ? 0 : 1;
  return out;
}

inline Output verify_corollary(const RunConfig& c) {
  if (c.id.empty()) throw UsageError("--id is required");
  const auto result = sconvex::verify_corollary(corollary_catalog(c.id));
  Output out{"verify corollary"};
  ordered_json r;
  r["id"] = result.entry.id;
  r["params"] = ordered_json::parse(nlohmann::json(result.entry.params).dump());
  ordered_json constants = ordered_json::array();
  for (const auto& ch : result.checks) {
    ordered_json k;
    k["name"] = ch.constant.name;
    k["printed"] = ch.constant.printed;
    k["decimals"] = ch.constant.decimals ? ordered_json(*ch.constant.decimals) : ordered_json();
    k["computed"] = ch.computed;
    k["rounded"] = ch.rounded;
    k["match"] = ch.match;
    constants.push_back(std::move(k));
  }
  r["constants"] = std::move(constants);
  r["note"] = result.entry.note;
  r["pass"] = result.pass;
  out.reports.push_back(std::move(r));
  out.status = result.pass ? 0 : 1;
  return out;
}

inline std::vector<double> grid_from(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) return {};
  const auto& g = j.at(key);
  if (g.is_number()) return {g.get<double>()};
  return g.get<std::vector<double>>();
}

inline SweepSpec parse_sweep_spec(const nlohmann::json& j, const RunConfig& c) {
  try {
    const std::string sel = j.value("function", c.function);
    if (sel.empty()) throw UsageError("sweep spec needs \"function\"");
    const double u = j.contains("u") ? j.at("u").get<double>() : c.u.value_or(NAN);
    const double v = j.contains("v") ? j.at("v").get<double>() : c.v.value_or(NAN);
    SweepSpec spec{.function = make_builtin(sel, Interval(u, v)), .interval = Interval(u, v)};
    spec.s = grid_from(j, "s");
    spec.lambda = grid_from(j, "lambda");
    if (j.contains("mu") && j.at("mu").is_string()) {
      if (j.at("mu").get<std::string>() != "lambda") {
        throw UsageError("\"mu\" must be a list or the string \"lambda\"");
      }
      spec.mu_follows_lambda = true;
    } else {
      spec.mu = grid_from(j, "mu");
    }
    spec.r = grid_from(j, "r");
    spec.p = grid_from(j, "p");
    const std::string which = j.value("which", std::string("power_mean"));
    if (which == "holder" || which == "t0") {
      spec.which = SweepWhich::holder;
    } else if (which == "power_mean" || which == "t1") {
      spec.which = SweepWhich::power_mean;
    } else if (which == "both") {
      spec.which = SweepWhich::both;
    } else {
      throw UsageError("\"which\" must be holder, power_mean or both");
    }
    spec.check_hypothesis = j.value("check_hypothesis", false) || c.check_hypothesis;
    spec.tol = j.value("tol", c.tol);
    spec.cap = j.value("cap", spec.cap);
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("bad sweep spec: ") + e.what());
  }
}

inline Output run_sweep(const RunConfig& c) {
  if (c.spec.empty()) throw UsageError("--spec is required");
  const auto spec = parse_sweep_spec(read_json_file(c.spec), c);
  const auto reports = sweep(spec);
  Output out{"sweep"};
  out.bound_reports.emplace();
  bool violation = false;
  for (const auto& r : reports) {
    add_bound(out, r);
    if (r.status.rfind("failed", 0) != 0 && !r.satisfied) violation = true;
  }
  out.status = violation ? 1 : 0;
  return out;
}

inline Output run_optimize(const RunConfig& c) {
  const auto iv = require_interval(c);
  const auto fn = require_function(c, iv);
  const auto kind = parse_which(c.which);
  const double r = c.r.value_or(kind == BoundKind::holder ? 2.0 : 1.0);
  const auto opt = minimize_bound(fn, iv, c.s, r, kind, c.tol);
  Output out{"optimize"};
  ordered_json j;
  j["function"] = fn.label;
  j["interval"] = {{"u", iv.u}, {"v", iv.v}};
  j["which"] = std::string(to_string(kind));
  j["s"] = c.s;
  j["r"] = r;
  j["lambda"] = opt.lambda;
  j["mu"] = opt.mu;
  j["p"] = opt.p ? ordered_json(*opt.p) : ordered_json();
  j["rhs"] = json_number(opt.rhs);
  j["grid_rhs"] = json_number(opt.grid_rhs);
  j["lhs"] = json_number(opt.lhs);
  j["lhs_error"] = opt.lhs_error;
  j["iterations"] = opt.iterations;
  const bool valid = opt.lhs <= opt.rhs + opt.lhs_error + kSatisfiedSlack;
  j["valid"] = valid;
  out.reports.push_back(std::move(j));
  out.status = valid ? 0 : 1;
  return out;
}

inline Output run_means(const RunConfig& c) {
  if (!c.u || !c.v) throw UsageError("--u and --v are required");
  const double u = *c.u;
  const double v = *c.v;
  const auto mv = mean_values(u, v, c.lp);
  Output out{"means"};
  ordered_json m;
  m["u"] = u;
  m["v"] = v;
  m["arithmetic"] = mv.arithmetic;
  m["logarithmic"] = mv.logarithmic;
  m["generalized_log"] = mv.generalized_log;
  m["p_exponent"] = mv.p_exponent;
  out.reports.push_back(std::move(m));
  if (c.prop.empty()) return out;

  BoundReport rep;
  if (c.prop == "p1") {
    rep = proposition_xs_holder(u, v, holder_params(c));
  } else if (c.prop == "p2") {
    rep = proposition_xs_powermean(u, v, power_params(c));
  } else if (c.prop == "p3") {
    rep = proposition_inverse_power(u, v, power_params(c));
  } else {
    throw UsageError("--prop must be p1, p2 or p3");
  }
  out.reports.push_back(bound_json(rep));
  out.status = rep.satisfied ? 0 : 1;
  return out;
}

inline Output run_check_sconvex(const RunConfig& c) {
  const auto iv = require_interval(c);
  const auto fn = require_function(c, iv);
  const auto rep = check_s_convex(fn.f, c.s, iv, c.grid);
  Output out{"check-sconvex"};
  ordered_json j;
  j["function"] = fn.label;
  j["interval"] = {{"u", iv.u}, {"v", iv.v}};
  j["s"] = rep.s;
  j["max_violation"] = rep.max_violation;
  j["threshold"] = rep.threshold;
  j["passes"] = rep.passes();
  j["grid_size"] = rep.grid_size;
  if (rep.witness) {
    j["witness"] = {{"alpha", rep.witness->alpha}, {"x", rep.witness->x}, {"y", rep.witness->y}};
  } else {
    j["witness"] = nullptr;
  }
  if (c.estimate) {
    j["estimated_max_s"] = estimate_max_s(fn.f, iv, c.grid);
    j["estimate_kind"] = "empirical";
  }
  out.reports.push_back(std::move(j));
  out.status = rep.passes() ? 0 : 1;
  return out;
}

inline void emit(const Output& o, const RunConfig& c, std::ostream& stdout_stream) {
  std::ostringstream buf;
  if (c.format == "csv") {
    if (o.bound_reports && o.bound_reports->size() == o.reports.size()) {
      write_reports_csv(buf, *o.bound_reports);
    } else {
      write_generic_csv(buf, o.reports);
    }
  } else {
    ordered_json doc;
    doc["tool_version"] = kToolVersion;
    doc["command"] = o.command;
    doc["reports"] = o.reports;
    buf << doc.dump(2) << '\n';
  }
  if (c.out.empty()) {
    stdout_stream << buf.str();
  } else {
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + c.out + "'");
    f << buf.str();
  }
}

inline void add_common(CLI::App* sub, RunConfig& c) {
  sub->add_option("--f", c.function, "function selector, e.g. power:q=2, exp, invpower:s=0.5");
  sub->add_option("--u", c.u, "left endpoint");
  sub->add_option("--v", c.v, "right endpoint");
  sub->add_option("--s", c.s, "s in (0, 1]");
  sub->add_option("--lambda", c.lambda, "endpoint weight lambda");
  sub->add_option("--mu", c.mu, "endpoint weight mu");
  sub->add_option("--p", c.p, "Hölder exponent p > 1");
  sub->add_option("--r", c.r, "exponent r >= 1");
  sub->add_option("--tol", c.tol, "absolute quadrature tolerance");
  sub->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--out", c.out, "output path (default: standard output)");
  sub->add_flag("--check-hypothesis", c.check_hypothesis,
                "check s-convexity of |f'|^r on the interval and annotate the report");
}

}  // namespace detail

/// Runs one command. `args` excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  RunConfig c;
  try {
    // --config is consumed up front so file values act as defaults.
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (args[i] == "--config") {
        if (i + 1 >= args.size()) throw UsageError("--config needs a path");
        detail::apply_config(detail::read_json_file(args[i + 1]), c);
        args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
                   args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        break;
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: bad config: " << e.what() << '\n';
    return 2;
  }

  CLI::App app{"Hadamard- and Simpson-type bounds for s-convex functions", "sconvex-ineq"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "check an identity, bound or printed constant");
  verify->require_subcommand(1);
  std::map<std::string, CLI::App*> subs;
  for (const char* name : {"identity", "lemma2", "bound", "hh", "simpson", "corollary"}) {
    subs[name] = verify->add_subcommand(name);
    detail::add_common(subs[name], c);
  }
  subs["bound"]->add_option("--which", c.which, "t0 (Hölder) or t1 (power mean)");
  subs["simpson"]->add_option("--fourth-bound", c.fourth_bound, "sup |f''''| on [u, v]");
  subs["corollary"]->add_option("--id", c.id, "i..vi, s1_half, s1_third, s1_twothirds, "
                                              "midpoint_trapezoid");
  subs["lemma2"]->add_option("--y", c.y, "single y in [0, 1] (default: 0, 0.1, ..., 1)");
  subs["lemma2"]->add_option("--x", c.x, "single x > 0 (default: 0.3, 0.5, 1, 2, 5)");

  auto* sweep_cmd = app.add_subcommand("sweep", "evaluate the bounds over a parameter grid");
  detail::add_common(sweep_cmd, c);
  sweep_cmd->add_option("--spec", c.spec, "sweep specification (JSON)");

  auto* optimize = app.add_subcommand("optimize", "minimize a bound over (lambda, mu)");
  detail::add_common(optimize, c);
  optimize->add_option("--which", c.which, "t0 (Hölder) or t1 (power mean)");

  auto* means = app.add_subcommand("means", "special means and the propositions");
  detail::add_common(means, c);
  means->add_option("--prop", c.prop, "p1, p2 or p3");
  means->add_option("--lp", c.lp, "exponent of the generalized logarithmic mean (default 1)");

  auto* check = app.add_subcommand("check-sconvex", "grid test of s-convexity");
  detail::add_common(check, c);
  check->add_option("--grid", c.grid, "grid points per axis");
  check->add_flag("--estimate", c.estimate, "also estimate the largest passing s");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (!(c.tol >= kMinTol && c.tol <= kMaxTol)) {
      throw UsageError("--tol must lie in [1e-14, 1e-2]");
    }
    detail::Output result;
    if (verify->parsed()) {
      if (subs["identity"]->parsed()) result = detail::verify_identity(c);
      if (subs["lemma2"]->parsed()) result = detail::verify_lemma2(c);
      if (subs["bound"]->parsed()) result = detail::verify_bound(c);
      if (subs["hh"]->parsed()) result = detail::verify_hh(c);
      if (subs["simpson"]->parsed()) result = detail::verify_simpson(c);
      if (subs["corollary"]->parsed()) result = detail::verify_corollary(c);
    } else if (sweep_cmd->parsed()) {
      result = detail::run_sweep(c);
    } else if (optimize->parsed()) {
      result = detail::run_optimize(c);
    } else if (means->parsed()) {
      result = detail::run_means(c);
    } else if (check->parsed()) {
      result = detail::run_check_sconvex(c);
    }
    detail::emit(result, c, out);
    return result.status;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace sconvex::cli
