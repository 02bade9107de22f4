#include "schlomilch/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "schlomilch/catalog.hpp"
#include "schlomilch/distributions.hpp"
#include "schlomilch/error.hpp"
#include "schlomilch/expr.hpp"
#include "schlomilch/identities.hpp"
#include "schlomilch/report.hpp"
#include "schlomilch/transform.hpp"

namespace schlomilch::cli {
namespace {

namespace dist = distributions;

struct Options {
  double tol = 1e-8;
  bool json = false;
  std::uint64_t seed = 42;

  std::string entry;
  std::vector<std::string> sets;

  std::string f;
  double a = 1.0;
  double b = 1.0;

  std::string kind;
  double alpha = 1.0;

  std::string identity;
  std::optional<int> max_k;

  std::string family;
  double nu = 2.0;
  int exponent = 2;
  std::string check;
  int order = 2;
  std::size_t samples = 10000;
  double p = std::exp(-1.0);

  std::size_t count = 1000;
};

bool skipped(const VerificationReport& r) {
  for (const auto& f : r.flags)
    if (f == "skipped") return true;
  return false;
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(15) << v;
  return os.str();
}

std::string short_fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(3) << v;
  return os.str();
}

catalog::Params parse_sets(const std::vector<std::string>& sets) {
  catalog::Params out;
  for (const auto& s : sets) {
    auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0)
      throw PreconditionError("--set expects key=value, got '" + s + "'");
    std::string key = s.substr(0, eq);
    std::string text = s.substr(eq + 1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
      throw PreconditionError("--set " + key + ": '" + text + "' is not a number");
    out[key] = v;
  }
  return out;
}

void print_human(std::ostream& out, const VerificationReport& r, const std::string& source) {
  const char* status = skipped(r) ? "SKIP" : (r.pass ? "PASS" : "FAIL");
  out << "[" << status << "] " << r.id;
  for (const auto& [k, v] : r.params) out << "  " << k << "=" << fmt(v);
  out << "\n";
  out << "  lhs  " << fmt(r.lhs) << "\n";
  out << "  rhs  " << fmt(r.rhs) << "\n";
  out << "  diff " << short_fmt(r.abs_err) << "  (tol " << short_fmt(r.tol) << ", "
      << r.evaluations << " evaluations)\n";
  if (!source.empty()) out << "  source: " << source << "\n";
  for (const auto& f : r.flags) out << "  flag: " << f << "\n";
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
}

std::string source_of(const std::string& id) {
  for (const auto& e : catalog::entries())
    if (e.id == id) return e.source;
  return "";
}

int emit(std::ostream& out, const Options& opt, const std::vector<VerificationReport>& reports) {
  bool ok = true;
  for (const auto& r : reports)
    if (!r.pass && !skipped(r)) ok = false;
  if (opt.json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    out << arr.dump(2) << "\n";
  } else {
    std::size_t passed = 0;
    std::size_t skips = 0;
    for (const auto& r : reports) {
      print_human(out, r, source_of(r.id));
      if (skipped(r))
        ++skips;
      else if (r.pass)
        ++passed;
    }
    if (reports.size() > 1) {
      out << passed << "/" << reports.size() - skips << " passed";
      if (skips) out << ", " << skips << " skipped";
      out << "\n";
    }
  }
  return ok ? kPass : kFail;
}

// A report whose lhs counts failures among rhs = 0 expected.
VerificationReport count_report(const std::string& id, std::size_t failures,
                                std::size_t total) {
  VerificationReport r;
  r.id = id;
  r.lhs = static_cast<double>(failures);
  r.rhs = 0.0;
  r.tol = 0.0;
  r.converged = true;
  r.evaluations = total;
  finalize(r);
  return r;
}

VerificationReport max_residual_report(const std::string& id, double residual, double tol,
                                       std::size_t evaluations) {
  VerificationReport r;
  r.id = id;
  r.lhs = residual;
  r.rhs = 0.0;
  r.tol = tol;
  r.converged = std::isfinite(residual);
  r.evaluations = evaluations;
  finalize(r);
  return r;
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v;
  for (int i = 0; i < n; ++i) v.push_back(lo + (hi - lo) * i / (n - 1));
  return v;
}

std::vector<VerificationReport> run_identity(const Options& opt) {
  const std::string& name = opt.identity;
  std::vector<VerificationReport> out;
  auto exact = [&](const std::string& id, int default_k, bool (*check)(int)) {
    int max_k = opt.max_k.value_or(default_k);
    if (max_k < 0) throw PreconditionError("--max-k must be >= 0");
    std::size_t failures = 0;
    std::vector<int> bad;
    for (int k = 0; k <= max_k; ++k) {
      if (!check(k)) {
        ++failures;
        if (bad.size() < 10) bad.push_back(k);
      }
    }
    auto r = count_report(id, failures, static_cast<std::size_t>(max_k) + 1);
    r.params["max_k"] = max_k;
    for (int k : bad) r.notes.push_back("fails at k=" + std::to_string(k));
    out.push_back(r);
  };
  if (name == "wz1") {
    exact("identity:wz1", 200, identities::wz1_check);
  } else if (name == "sevalues") {
    exact("identity:sevalues", 150, identities::se_so_check);
  } else if (name == "lemma62") {
    exact("identity:lemma62", 100, identities::lemma62_sums_check);
  } else if (name == "hseries") {
    double worst = 0.0;
    for (double x : linspace(-2.0, 2.0, 20))
      worst = std::max(worst, identities::h_series_identity_check(x));
    out.push_back(max_residual_report("identity:hseries", worst, 1e-11, 20));
  } else if (name == "trigbessel") {
    double bessel = 0.0;
    for (double c : linspace(-2.0, 2.0, 20))
      bessel = std::max(bessel, identities::trig_bessel_identity_check(c).bessel);
    out.push_back(max_residual_report("identity:trigbessel", bessel, 1e-11, 20));
    double hyp = 0.0;
    for (double u : linspace(0.0, 0.25, 20))
      hyp = std::max(hyp, identities::trig_bessel_identity_check(u).hypergeometric);
    out.push_back(max_residual_report("identity:trigbessel-2f3", hyp, 1e-12, 20));
  } else if (name == "derivs") {
    for (const auto& c : identities::derivative_identity_checks()) {
      auto r = max_residual_report("identity:derivs", c.max_residual, 1e-8, 50);
      r.notes.push_back(c.name);
      out.push_back(r);
    }
  } else {
    throw PreconditionError("unknown identity '" + name + "'");
  }
  return out;
}

dist::ParentDensity parent_for(const Options& opt) {
  if (opt.family == "rrig") return dist::ParentDensity::half_gaussian();
  if (opt.family == "halft") {
    if (!(opt.nu > 0.0)) throw PreconditionError("--nu must be > 0");
    return dist::ParentDensity::half_t(opt.nu);
  }
  if (opt.family == "subbotin") {
    if (opt.exponent < 1) throw PreconditionError("--exponent must be >= 1");
    return dist::ParentDensity::half_subbotin(opt.exponent);
  }
  throw PreconditionError("unknown family '" + opt.family + "'");
}

dist::ScaleTransformDistribution distribution_for(const Options& opt) {
  auto g = parent_for(opt);
  if (!opt.kind.empty()) {
    if (!(opt.alpha > 0.0)) throw PreconditionError("--alpha must be > 0");
    return dist::ScaleTransformDistribution::extended(
        g, transform::SelfInverseFn(transform::parse_kind(opt.kind), opt.alpha));
  }
  if (!(opt.b > 0.0)) throw PreconditionError("--b must be > 0");
  return dist::ScaleTransformDistribution::classic(g, opt.b);
}

std::vector<VerificationReport> run_asymmetry(const dist::ScaleTransformDistribution& d,
                                              double p) {
  std::vector<VerificationReport> out;
  auto a = dist::asymmetry(d, p);
  VerificationReport r;
  r.id = "asymmetry";
  r.params["p"] = p;
  r.lhs = a.generic;
  r.rhs = std::isfinite(a.closed_form) ? a.closed_form : a.value;
  r.tol = 1e-9;
  r.converged = true;
  r.notes.push_back(std::isfinite(a.closed_form) ? "generic construction vs closed form"
                                                 : "no closed form for this parent");
  finalize(r);
  out.push_back(r);

  // gamma(p) in (0, 1) and decreasing in p.
  std::size_t violations = 0;
  double prev = std::numeric_limits<double>::infinity();
  auto grid = linspace(0.01, 0.99, 50);
  for (double q : grid) {
    double g = dist::asymmetry(d, q).value;
    if (!(g > 0.0 && g < 1.0) || !(g < prev)) ++violations;
    prev = g;
  }
  out.push_back(count_report("asymmetry:monotone-p", violations, grid.size()));
  return out;
}

std::vector<VerificationReport> run_dist(const Options& opt) {
  auto d = distribution_for(opt);
  std::vector<VerificationReport> out;
  if (opt.check == "norm") {
    out.push_back(dist::normalization_check(d, 1e-8));
  } else if (opt.check == "symmetry") {
    out = dist::symmetry_checks(d);
  } else if (opt.check == "moments") {
    if (opt.order < -4 || opt.order > 4) throw PreconditionError("--r must be in [-4, 4]");
    out = dist::moment_checks(d, opt.order, opt.samples, opt.seed);
  } else if (opt.check == "asymmetry") {
    out = run_asymmetry(d, opt.p);
  } else {
    throw PreconditionError("unknown check '" + opt.check + "'");
  }
  for (auto& r : out) {
    if (d.is_classic())
      r.params.emplace("b", d.b());
    else
      r.params.emplace("alpha", opt.alpha);
    r.notes.insert(r.notes.begin(), d.name());
  }
  return out;
}

int run_sample(std::ostream& out, const Options& opt) {
  auto d = distribution_for(opt);
  if (!d.is_classic()) throw PreconditionError("sampling is available in classic mode only");
  auto xs = dist::sample(d, opt.count, opt.seed);
  if (opt.json) {
    out << nlohmann::json(xs).dump() << "\n";
  } else {
    out << std::setprecision(17);
    for (double x : xs) out << x << "\n";
  }
  return kPass;
}

int run_list(std::ostream& out, const Options& opt) {
  if (opt.json) {
    out << catalog::export_entries().dump(2) << "\n";
    return kPass;
  }
  for (const auto& e : catalog::entries()) {
    out << e.id << "\n  " << e.formula << "\n  source: " << e.source << "\n";
    for (const auto& p : e.parameters) out << "  " << p.describe() << "\n";
  }
  return kPass;
}

// An unbound name in --f is a usage error, not a failed check.
RealFunction compile_user(const std::string& text) {
  try {
    return expr::compile(text, "u");
  } catch (const DomainError& e) {
    throw PreconditionError(std::string("--f: ") + e.what());
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Numerical checks of Cauchy-Schlomilch type integral identities",
               "schlomilch"};
  app.require_subcommand(1);
  app.fallthrough();
  app.option_defaults()->always_capture_default();
  app.add_option("--tol", opt.tol, "Relative tolerance")
      ->check(CLI::Range(1e-12, 1e-3));
  app.add_flag("--json", opt.json, "Emit JSON");
  app.add_option("--seed", opt.seed, "RNG seed");

  auto* verify = app.add_subcommand("verify", "Verify one catalog entry");
  verify->add_option("--entry", opt.entry, "Entry id")->required();
  verify->add_option("--set", opt.sets, "Parameter override key=value")
      ->allow_extra_args(false);

  auto* verify_all = app.add_subcommand("verify-all", "Verify every catalog entry");

  auto* transform_cmd = app.add_subcommand(
      "transform", "Check int_0^inf f((ax-b/x)^2) dx = (1/a) int_0^inf f(y^2) dy");
  transform_cmd->add_option("--f", opt.f, "f as an expression in u (u = squared argument)")
      ->required();
  transform_cmd->add_option("--a", opt.a, "a > 0")->required();
  transform_cmd->add_option("--b", opt.b, "b > 0")->required();

  auto* extended = app.add_subcommand(
      "extended", "Check the extended transformation with a self-inverse s");
  extended->add_option("--kind", opt.kind, "Self-inverse kind")
      ->required()
      ->check(CLI::IsMember(
          {"reciprocal", "log-expm1", "exp-log", "log-sinh-ratio", "sinh-asinh"}));
  extended->add_option("--alpha", opt.alpha, "Parameter of s")->required();
  extended->add_option("--f", opt.f, "f as an expression in u")->required();
  extended->add_option("--a", opt.a, "Scale a > 0");

  auto* identity = app.add_subcommand("identity", "Exact and series identities");
  identity->add_option("--name", opt.identity, "Identity family")
      ->required()
      ->check(CLI::IsMember({"wz1", "sevalues", "lemma62", "hseries", "trigbessel", "derivs"}));
  identity->add_option("--max-k", opt.max_k, "Largest k for the exact sums");

  auto* dist_cmd = app.add_subcommand("dist", "Transformation-of-scale distribution checks");
  dist_cmd->add_option("--family", opt.family, "Parent family")
      ->required()
      ->check(CLI::IsMember({"rrig", "halft", "subbotin"}));
  dist_cmd->add_option("--b", opt.b, "Classic-mode b > 0");
  dist_cmd->add_option("--nu", opt.nu, "Half-t degrees of freedom");
  dist_cmd->add_option("--exponent", opt.exponent, "Subbotin n");
  dist_cmd->add_option("--kind", opt.kind, "Extended mode: self-inverse kind");
  dist_cmd->add_option("--alpha", opt.alpha, "Extended mode: parameter of s");
  dist_cmd->add_option("--check", opt.check, "Check to run")
      ->required()
      ->check(CLI::IsMember({"norm", "symmetry", "moments", "asymmetry"}));
  dist_cmd->add_option("--r", opt.order, "Moment order in [-4, 4]");
  dist_cmd->add_option("--samples", opt.samples, "Monte Carlo sample size");
  dist_cmd->add_option("--p", opt.p, "Density level for the asymmetry function");

  auto* sample_cmd = app.add_subcommand("sample", "Draw from a classic-mode distribution");
  sample_cmd->add_option("--family", opt.family, "Parent family")
      ->check(CLI::IsMember({"rrig", "halft", "subbotin"}))
      ->default_val("rrig");
  sample_cmd->add_option("--b", opt.b, "b > 0");
  sample_cmd->add_option("--nu", opt.nu, "Half-t degrees of freedom");
  sample_cmd->add_option("--exponent", opt.exponent, "Subbotin n");
  sample_cmd->add_option("-n", opt.count, "Number of draws");

  auto* list = app.add_subcommand("list", "List catalog entries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (verify->parsed()) {
      auto r = catalog::verify_entry(opt.entry, parse_sets(opt.sets), opt.tol);
      return emit(out, opt, {r});
    }
    if (verify_all->parsed()) return emit(out, opt, catalog::verify_all(opt.tol));
    if (transform_cmd->parsed()) {
      auto f = compile_user(opt.f);
      return emit(out, opt, {transform::verify_cs(f, transform::TransformSpec(opt.a, opt.b),
                                                  opt.tol)});
    }
    if (extended->parsed()) {
      auto f = compile_user(opt.f);
      transform::SelfInverseFn s(transform::parse_kind(opt.kind), opt.alpha);
      return emit(out, opt, {transform::extended_check(s, f, opt.a, opt.tol)});
    }
    if (identity->parsed()) return emit(out, opt, run_identity(opt));
    if (dist_cmd->parsed()) return emit(out, opt, run_dist(opt));
    if (sample_cmd->parsed()) return run_sample(out, opt);
    if (list->parsed()) return run_list(out, opt);
  } catch (const ParseError& e) {
    err << "error: cannot parse expression: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const IntegrationError& e) {
    err << "error: quadrature failed near x = " << e.node() << ": " << e.what() << "\n";
    return kFail;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kFail;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << "\n";
    return kFail;
  }
  err << "error: no subcommand\n";
  return kUsage;
}

}  // namespace schlomilch::cli
