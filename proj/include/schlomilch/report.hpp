#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace schlomilch {

struct VerificationReport {
  std::string id;
  std::map<std::string, double> params;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  double tol = 0.0;
  bool pass = false;
  std::vector<std::string> flags;
  std::size_t evaluations = 0;

  // Not serialized.
  bool converged = false;
  std::vector<std::string> notes;
};

// Fill abs_err/rel_err and set pass from |lhs - rhs| <= tol * max(1, |rhs|)
// and `converged`. `extra_ok` folds in any additional per-report checks.
void finalize(VerificationReport& r, bool extra_ok = true);

// Tolerance handed to quadrature when a report must be decided at `tol`.
double quadrature_tol(double tol, double rhs_scale);

// Exactly {id, params, lhs, rhs, abs_err, rel_err, tol, pass, flags,
// evaluations}. Non-finite doubles are written as null.
nlohmann::json to_json(const VerificationReport& r);
VerificationReport report_from_json(const nlohmann::json& j);

// Throws std::invalid_argument naming the first offending field.
void validate_report_json(const nlohmann::json& j);

}  // namespace schlomilch
