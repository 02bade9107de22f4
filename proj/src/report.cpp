#include "schlomilch/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "schlomilch/quad.hpp"

namespace schlomilch {

namespace {

nlohmann::json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

double read_number(const nlohmann::json& j) {
  if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
  return j.get<double>();
}

constexpr const char* kFields[] = {"id",      "params", "lhs",  "rhs",
                                   "abs_err", "rel_err", "tol", "pass",
                                   "flags",   "evaluations"};

}  // namespace

void finalize(VerificationReport& r, bool extra_ok) {
  r.abs_err = std::fabs(r.lhs - r.rhs);
  r.rel_err = r.abs_err / std::max(1.0, std::fabs(r.rhs));
  bool within = r.abs_err <= r.tol * std::max(1.0, std::fabs(r.rhs));
  r.pass = within && r.converged && extra_ok;
}

double quadrature_tol(double tol, double rhs_scale) {
  double scale = std::max(1.0, std::fabs(rhs_scale));
  if (!std::isfinite(scale)) scale = 1.0;
  return std::clamp(0.01 * tol * scale, quad::kMinTol * scale, quad::kMaxTol);
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : r.params) params[k] = number(v);
  return nlohmann::json{{"id", r.id},
                        {"params", params},
                        {"lhs", number(r.lhs)},
                        {"rhs", number(r.rhs)},
                        {"abs_err", number(r.abs_err)},
                        {"rel_err", number(r.rel_err)},
                        {"tol", number(r.tol)},
                        {"pass", r.pass},
                        {"flags", r.flags},
                        {"evaluations", r.evaluations}};
}

void validate_report_json(const nlohmann::json& j) {
  auto bad = [](const std::string& field) {
    throw std::invalid_argument("report field '" + field + "' missing or mistyped");
  };
  if (!j.is_object()) throw std::invalid_argument("report is not an object");
  if (j.size() != std::size(kFields))
    throw std::invalid_argument("report has unexpected fields");
  for (const char* f : kFields)
    if (!j.contains(f)) bad(f);
  if (!j["id"].is_string()) bad("id");
  if (!j["params"].is_object()) bad("params");
  for (const auto& [k, v] : j["params"].items())
    if (!v.is_number() && !v.is_null()) bad("params." + k);
  for (const char* f : {"lhs", "rhs", "abs_err", "rel_err", "tol"})
    if (!j[f].is_number() && !j[f].is_null()) bad(f);
  if (!j["pass"].is_boolean()) bad("pass");
  if (!j["flags"].is_array()) bad("flags");
  for (const auto& f : j["flags"])
    if (!f.is_string()) bad("flags");
  if (!j["evaluations"].is_number_unsigned()) bad("evaluations");
}

VerificationReport report_from_json(const nlohmann::json& j) {
  validate_report_json(j);
  VerificationReport r;
  r.id = j["id"].get<std::string>();
  for (const auto& [k, v] : j["params"].items()) r.params[k] = read_number(v);
  r.lhs = read_number(j["lhs"]);
  r.rhs = read_number(j["rhs"]);
  r.abs_err = read_number(j["abs_err"]);
  r.rel_err = read_number(j["rel_err"]);
  r.tol = read_number(j["tol"]);
  r.pass = j["pass"].get<bool>();
  r.flags = j["flags"].get<std::vector<std::string>>();
  r.evaluations = j["evaluations"].get<std::size_t>();
  r.converged = r.pass;
  return r;
}

}  // namespace schlomilch
