#pragma once

// JSON and CSV encodings of BoundReport.
//
// JSON field names follow the struct members. Non-finite doubles are written
// as the strings "inf", "-inf" and "nan" so that a report survives a round
// trip. CSV rows use %.17g, which is round-trip safe for doubles.

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sconvex/core.hpp"

namespace sconvex {

inline constexpr const char* kToolVersion = "0.1.0";

inline constexpr const char* kCsvHeader =
    "s,lambda,mu,p,r,u,v,lhs,rhs,margin,ratio,satisfied,quad_error,status";

inline nlohmann::json number_to_json(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

inline double number_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    throw Error("expected a number, got \"" + s + "\"");
  }
  return j.get<double>();
}

inline void to_json(nlohmann::json& j, const InequalityParams& p) {
  j = {{"s", p.s}, {"lambda", p.lambda}, {"mu", p.mu}, {"r", p.r}};
  j["p"] = p.p ? nlohmann::json(*p.p) : nlohmann::json(nullptr);
}

inline void from_json(const nlohmann::json& j, InequalityParams& p) {
  p.s = j.at("s").get<double>();
  p.lambda = j.at("lambda").get<double>();
  p.mu = j.at("mu").get<double>();
  p.r = j.at("r").get<double>();
  if (j.contains("p") && !j.at("p").is_null()) {
    p.p = j.at("p").get<double>();
  } else {
    p.p.reset();
  }
}

inline nlohmann::json report_to_json(const BoundReport& r) {
  nlohmann::json j;
  j["kind"] = r.kind;
  j["lhs"] = number_to_json(r.lhs);
  j["rhs"] = number_to_json(r.rhs);
  j["margin"] = number_to_json(r.margin);
  j["ratio"] = number_to_json(r.ratio);
  j["quad_error"] = number_to_json(r.quad_error);
  j["satisfied"] = r.satisfied;
  j["params"] = r.params;
  j["interval"] = {{"u", r.interval.u}, {"v", r.interval.v}};
  j["paper_variant_rhs"] =
      r.paper_variant_rhs ? number_to_json(*r.paper_variant_rhs) : nlohmann::json(nullptr);
  j["status"] = r.status;
  return j;
}

inline BoundReport report_from_json(const nlohmann::json& j) {
  BoundReport r{.kind = j.at("kind").get<std::string>(),
                .interval = Interval(j.at("interval").at("u").get<double>(),
                                     j.at("interval").at("v").get<double>())};
  r.lhs = number_from_json(j.at("lhs"));
  r.rhs = number_from_json(j.at("rhs"));
  r.margin = number_from_json(j.at("margin"));
  r.ratio = number_from_json(j.at("ratio"));
  r.quad_error = number_from_json(j.at("quad_error"));
  r.satisfied = j.at("satisfied").get<bool>();
  r.params = j.at("params").get<InequalityParams>();
  if (j.contains("paper_variant_rhs") && !j.at("paper_variant_rhs").is_null()) {
    r.paper_variant_rhs = number_from_json(j.at("paper_variant_rhs"));
  }
  r.status = j.value("status", std::string("ok"));
  return r;
}

inline std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

/// Quotes a CSV field when it contains a comma, quote or newline.
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string report_to_csv_row(const BoundReport& r) {
  std::string row;
  auto add = [&row](const std::string& field) {
    if (!row.empty()) row += ',';
    row += field;
  };
  add(format_number(r.params.s));
  add(format_number(r.params.lambda));
  add(format_number(r.params.mu));
  row += ',';
  if (r.params.p) row += format_number(*r.params.p);
  add(format_number(r.params.r));
  add(format_number(r.interval.u));
  add(format_number(r.interval.v));
  add(format_number(r.lhs));
  add(format_number(r.rhs));
  add(format_number(r.margin));
  add(format_number(r.ratio));
  add(r.satisfied ? "true" : "false");
  add(format_number(r.quad_error));
  add(csv_field(r.status));
  return row;
}

/// Header plus one LF-terminated row per report.
inline void write_reports_csv(std::ostream& os, const std::vector<BoundReport>& reports) {
  os << kCsvHeader << '\n';
  for (const auto& r : reports) os << report_to_csv_row(r) << '\n';
}

}  // namespace sconvex
