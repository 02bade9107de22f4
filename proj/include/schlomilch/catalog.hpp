#pragma once

// Compiled-in list of evaluated definite integrals. Each entry pairs an
// integrand builder with a closed form over specfun and is checked by
// quadrature.

#include <functional>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "schlomilch/real_function.hpp"
#include "schlomilch/report.hpp"

namespace schlomilch::catalog {

using Params = std::map<std::string, double>;

// Interval constraint. lo == hi marks a fixed parameter.
struct Parameter {
  std::string name;
  double default_value;
  double lo;
  double hi;
  bool lo_open = true;
  bool hi_open = false;
  bool integer = false;

  bool admits(double v) const;
  std::string describe() const;
};

// Left side for one parameter set: factor * int_lo^hi f, split at `splits`.
// hi = +inf gives a semi-infinite piece; lo = -inf with hi = +inf is the
// whole real line (no splits).
struct Integrand {
  RealFunction f;
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();
  std::vector<double> splits;
  double factor = 1.0;
};

struct IdentityEntry {
  std::string id;
  std::string formula;  // one-line statement
  std::string source;   // citation string
  std::vector<Parameter> parameters;
  std::function<Integrand(const Params&)> lhs;
  std::function<double(const Params&)> rhs;
  // Special-case value exactly as printed. When it differs from `rhs` the
  // report is flagged and `rhs` (the general formula) is authoritative.
  std::function<double(const Params&)> printed;
  // Relations between parameters; returns an error message or "".
  std::function<std::string(const Params&)> cross_check;
  // Additional checks folded into `pass`. Appends notes; returns ok.
  std::function<bool(const Params&, double tol, VerificationReport&)> extra;
};

inline constexpr const char* kDiscrepancyFlag = "printed-value-discrepancy";

// Sorted by id.
const std::vector<IdentityEntry>& entries();
std::vector<std::string> list_entries();
// Throws PreconditionError for an unknown id.
const IdentityEntry& find_entry(const std::string& id);

// Defaults merged with overrides. Throws PreconditionError on unknown names
// or constraint violations.
Params resolve_params(const IdentityEntry& entry, const Params& overrides);

// Quadrature failures are reported (pass = false), not thrown.
VerificationReport verify_entry(const std::string& id, const Params& overrides,
                                double tol);

// Every entry at its defaults, in id order. workers = 0 picks the hardware
// concurrency.
std::vector<VerificationReport> verify_all(double tol, unsigned workers = 0);

// Entry metadata (id, formula, source, parameters) for tooling.
nlohmann::json export_entries();

}  // namespace schlomilch::catalog
