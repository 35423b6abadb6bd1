#include "meanbounds/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace meanbounds::report {
namespace {

using json = nlohmann::ordered_json;

json value_or_null(double v) {
  if (std::isnan(v)) return nullptr;
  return v;
}

json query_json(const bounds::ConvexBoundQuery& q) {
  return {{"target", q.target.name()},
          {"lower", q.lower.name()},
          {"upper", q.upper.name()},
          {"alpha", q.alpha},
          {"beta", q.beta}};
}

json grid_json(const GridSpec& g, std::size_t size) {
  return {{"near_count", g.near_count}, {"near_hi", g.near_hi},
          {"far_count", g.far_count},   {"far_lo", g.far_lo},
          {"t_max", g.t_max},           {"exclusion", g.exclusion},
          {"size", size}};
}

json bracket_json(const lemmas::RootBracket& b) {
  return {{"lo", b.lo}, {"hi", b.hi}, {"f_lo", b.f_lo}, {"f_hi", b.f_hi}, {"width", b.width}};
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

std::string format_double_17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string json_certificate(const bounds::BoundCertificate& cert, const GridSpec& grid,
                             int indent) {
  json doc;
  doc["query"] = query_json(cert.query);
  doc["grid"] = grid_json(grid, cert.grid_size);
  doc["margins"] = {{"worst_lower", cert.worst_lower_margin},
                    {"worst_lower_t", cert.worst_lower_t},
                    {"worst_upper", cert.worst_upper_margin},
                    {"worst_upper_t", cert.worst_upper_t}};
  doc["verdict"] = cert.pass ? "pass" : "fail";
  doc["worst_points"] = json::array(
      {{{"side", "lower"}, {"t", cert.worst_lower_t}, {"margin", cert.worst_lower_margin}},
       {{"side", "upper"}, {"t", cert.worst_upper_t}, {"margin", cert.worst_upper_margin}}});
  doc["violations"] = cert.violations;
  doc["first_violation_t"] = value_or_null(cert.first_violation_t);
  return doc.dump(indent);
}

std::string json_profile(const bounds::RatioProfile& profile, int indent) {
  json doc;
  doc["target"] = profile.target.name();
  doc["limit_at_one"] = profile.limit_at_one;
  doc["limit_at_infinity"] = profile.limit_at_infinity;
  json samples = json::array();
  for (const auto& [t, r] : profile.samples) samples.push_back(json::array({t, r}));
  doc["samples"] = std::move(samples);
  return doc.dump(indent);
}

std::string json_sign_report(const lemmas::SignReport& report, int indent) {
  json doc;
  doc["function_id"] = report.function_id;
  doc["sign"] = report.sign > 0 ? "+" : (report.sign < 0 ? "-" : "0");
  doc["violations"] = report.violations;
  doc["min_abs_value"] = report.min_abs_value;
  doc["grid_size"] = report.grid.size();
  doc["grid"] = report.grid;
  return doc.dump(indent);
}

std::string json_cascade(std::span<const lemmas::RootBracket> brackets, int indent) {
  static constexpr const char* kNames[] = {"lambda1", "lambda2", "lambda3", "lambda4",
                                           "lambda0"};
  json doc;
  for (std::size_t i = 0; i < brackets.size() && i < 5; ++i)
    doc[kNames[i]] = bracket_json(brackets[i]);
  return doc.dump(indent);
}

std::string csv_scan(const std::vector<bounds::ScanRow>& rows) {
  std::string out = "t,ratio,lower_margin,upper_margin\n";
  for (const auto& row : rows) {
    out += format_double(row.t);
    out += ',';
    out += format_double(row.ratio);
    out += ',';
    out += format_double(row.lower_margin);
    out += ',';
    out += format_double(row.upper_margin);
    out += '\n';
  }
  return out;
}

}  // namespace meanbounds::report
