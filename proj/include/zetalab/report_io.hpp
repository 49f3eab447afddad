#pragma once

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "zetalab/identities.hpp"

namespace zetalab {

/// Quotes a CSV field when it contains a separator, quote or newline.
inline std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (const char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

namespace detail {
inline std::map<std::string, std::string> report_params(const ResidualReport& r, int digits) {
  std::map<std::string, std::string> params = r.params;
  params["status"] = std::string(to_string(r.status));
  if (r.threshold) params["threshold"] = r.threshold->to_string(digits);
  return params;
}
}  // namespace detail

/// {"identity", "argument", "lhs", "rhs", "residual", "params"}; numbers are
/// decimal strings, absent sides are null. Status and threshold ride in params.
inline nlohmann::ordered_json to_json(const ResidualReport& r, int digits) {
  const auto opt = [&](const std::optional<ApproxReal>& v) -> nlohmann::ordered_json {
    return v ? nlohmann::ordered_json(v->to_string(digits)) : nlohmann::ordered_json(nullptr);
  };
  nlohmann::ordered_json j;
  j["identity"] = r.identity;
  j["argument"] = r.argument.to_string(digits);
  j["lhs"] = opt(r.lhs);
  j["rhs"] = opt(r.rhs);
  j["residual"] = opt(r.residual);
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : detail::report_params(r, digits)) params[k] = v;
  j["params"] = std::move(params);
  return j;
}

inline constexpr std::string_view kReportCsvHeader = "identity,argument,lhs,rhs,residual,params";

/// Same columns as the JSON keys; params flattened as key=value pairs joined
/// by ';'.
inline std::string to_csv_row(const ResidualReport& r, int digits) {
  const auto opt = [&](const std::optional<ApproxReal>& v) { return v ? v->to_string(digits) : std::string(); };
  std::string params;
  for (const auto& [k, v] : detail::report_params(r, digits)) {
    if (!params.empty()) params += ';';
    params += k + "=" + v;
  }
  return csv_field(r.identity) + "," + r.argument.to_string(digits) + "," + opt(r.lhs) + "," + opt(r.rhs) + "," +
         opt(r.residual) + "," + csv_field(params);
}

}  // namespace zetalab
