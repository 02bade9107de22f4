#include "schlomilch/transform.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <numbers>
#include <sstream>

#include "schlomilch/error.hpp"

namespace schlomilch::transform {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// log(1 - e^{-z}) for z > 0 without cancellation.
double log1mexp(double z) {
  return z < std::numbers::ln2 ? std::log(-std::expm1(-z)) : std::log1p(-std::exp(-z));
}

template <class Run>
Integral guarded(Run run) {
  try {
    return {run(), {}};
  } catch (const IntegrationError& e) {
    return {quad::QuadratureResult{kNaN, kNaN, 1, false}, e.what()};
  }
}

void absorb(VerificationReport& r, const Integral& i, const char* side) {
  r.evaluations += i.result.evaluations;
  r.converged = r.converged && i.result.converged;
  if (!i.error.empty()) r.notes.push_back(std::string(side) + ": " + i.error);
  else if (!i.result.converged) r.notes.push_back(std::string(side) + ": quadrature did not converge");
}

VerificationReport start_report(std::string id, std::map<std::string, double> params,
                                double tol) {
  VerificationReport r;
  r.id = std::move(id);
  r.params = std::move(params);
  r.tol = tol;
  r.converged = true;
  return r;
}

void check_tol(double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol))
    throw PreconditionError("tolerance must be positive");
}

// Side-by-side comparison where the right side is (1/scale) int_0^inf f(y^2).
template <class Lhs>
VerificationReport compare_with_rhs(VerificationReport r, const RealFunction& f,
                                    double scale, double tol, Lhs lhs_integral) {
  Integral rhs = rhs_integral(f, scale, quadrature_tol(tol, 1.0));
  absorb(r, rhs, "rhs");
  r.rhs = rhs.result.value;
  double qtol = quadrature_tol(tol, std::isfinite(r.rhs) ? r.rhs : 1.0);
  Integral lhs = guarded([&] { return lhs_integral(qtol); });
  absorb(r, lhs, "lhs");
  r.lhs = lhs.result.value;
  finalize(r);
  return r;
}

}  // namespace

TransformSpec::TransformSpec(double a_, double b_) : a(a_), b(b_) {
  if (!(a > 0.0 && b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
    throw PreconditionError("transform parameters a and b must be positive");
}

OddPolynomial::OddPolynomial(std::vector<BigRational> coefficients)
    : c(std::move(coefficients)) {
  if (c.empty()) throw PreconditionError("odd polynomial needs at least one coefficient");
}

double OddPolynomial::operator()(double x) const {
  double x2 = x * x;
  // Seeded with the top coefficient so that x2 = inf never meets a 0 * inf.
  double acc = to_double(c.back());
  for (auto it = std::next(c.rbegin()); it != c.rend(); ++it) acc = acc * x2 + to_double(*it);
  return acc * x;
}

SelfInverseFn::SelfInverseFn(SelfInverseKind k, double p) : kind(k), param(p) {
  if (!(param > 0.0) || !std::isfinite(param))
    throw PreconditionError("self-inverse parameter must be positive");
}

double SelfInverseFn::domain_start() const {
  return kind == SelfInverseKind::exp_log ? 1.0 : 0.0;
}

double SelfInverseFn::fixed_point() const {
  switch (kind) {
    case SelfInverseKind::reciprocal: return std::sqrt(param);
    case SelfInverseKind::log_expm1: return std::numbers::ln2 / param;
    case SelfInverseKind::exp_log: return std::exp(std::sqrt(param));
    case SelfInverseKind::log_sinh_ratio: return std::asinh(1.0) / param;
    case SelfInverseKind::sinh_asinh: return std::sinh(std::sqrt(param));
  }
  return kNaN;
}

std::string SelfInverseFn::name() const { return kind_name(kind); }

double SelfInverseFn::eval(double x) const {
  if (!(x > domain_start())) return kNaN;
  const double p = param;
  switch (kind) {
    case SelfInverseKind::reciprocal: return p / x;
    case SelfInverseKind::log_expm1: return -log1mexp(p * x) / p;
    case SelfInverseKind::exp_log: return std::exp(p / std::log(x));
    case SelfInverseKind::log_sinh_ratio: {
      double z = p * x;
      return -(log1mexp(z) - std::log1p(std::exp(-z))) / p;
    }
    case SelfInverseKind::sinh_asinh: return std::sinh(p / std::asinh(x));
  }
  return kNaN;
}

double SelfInverseFn::operator()(double x) const {
  if (!(x > domain_start())) {
    std::ostringstream msg;
    msg << name() << ": x = " << x << " is outside (" << domain_start() << ", inf)";
    throw DomainError(msg.str());
  }
  return eval(x);
}

SelfInverseKind parse_kind(const std::string& name) {
  for (auto k : {SelfInverseKind::reciprocal, SelfInverseKind::log_expm1,
                 SelfInverseKind::exp_log, SelfInverseKind::log_sinh_ratio,
                 SelfInverseKind::sinh_asinh})
    if (kind_name(k) == name) return k;
  throw PreconditionError("unknown self-inverse kind '" + name + "'");
}

std::string kind_name(SelfInverseKind kind) {
  switch (kind) {
    case SelfInverseKind::reciprocal: return "reciprocal";
    case SelfInverseKind::log_expm1: return "log-expm1";
    case SelfInverseKind::exp_log: return "exp-log";
    case SelfInverseKind::log_sinh_ratio: return "log-sinh-ratio";
    case SelfInverseKind::sinh_asinh: return "sinh-asinh";
  }
  return "?";
}

MeromorphicMap::MeromorphicMap(std::vector<double> p, std::vector<double> z)
    : poles(std::move(p)), zeros(std::move(z)) {
  if (poles.size() != zeros.size())
    throw PreconditionError("meromorphic map needs as many zeros as poles");
  double prev = 0.0;
  for (double a : poles) {
    if (!(a > prev)) throw PreconditionError("poles must be positive and increasing");
    prev = a;
  }
  for (double b : zeros)
    if (!(b > 0.0)) throw PreconditionError("zeros must be positive");
}

double MeromorphicMap::operator()(double z) const {
  double z2 = z * z;
  double v = z;
  for (std::size_t j = 0; j < poles.size(); ++j)
    v *= (z2 - zeros[j] * zeros[j]) / (z2 - poles[j] * poles[j]);
  return v;
}

std::vector<double> MeromorphicMap::residues() const {
  std::vector<double> out;
  for (std::size_t j = 0; j < poles.size(); ++j) {
    double a2 = poles[j] * poles[j];
    double r = (a2 - zeros[j] * zeros[j]) / 2;
    for (std::size_t i = 0; i < poles.size(); ++i)
      if (i != j) r *= (a2 - zeros[i] * zeros[i]) / (a2 - poles[i] * poles[i]);
    out.push_back(r);
  }
  return out;
}

const std::vector<MeromorphicMap>& shipped_maps() {
  static const std::vector<MeromorphicMap> maps{
      MeromorphicMap({1.0}, {2.0}),
      MeromorphicMap({1.0, 3.0}, {2.0, 4.0}),
      MeromorphicMap({1.0, 2.0, 3.0}, {1.5, 2.5, 3.5}),
  };
  return maps;
}

RealFunction cs_integrand(RealFunction f, TransformSpec spec) {
  return [f = std::move(f), a = spec.a, b = spec.b](double x) {
    double y = a * x - b / x;
    return f(y * y);
  };
}

Integral rhs_integral(const RealFunction& f, double scale, double quad_tol) {
  return guarded([&] {
    RealFunction g = [&f](double y) { return f(y * y); };
    auto r = quad::integrate_semi_infinite(g, 0.0, std::max(quad_tol * scale, quad::kMinTol));
    r.value /= scale;
    r.error_estimate /= scale;
    return r;
  });
}

VerificationReport verify_cs(const RealFunction& f, TransformSpec spec, double tol) {
  check_tol(tol);
  auto r = start_report("cs", {{"a", spec.a}, {"b", spec.b}}, tol);
  RealFunction g = cs_integrand(f, spec);
  double split = std::sqrt(spec.b / spec.a);
  return compare_with_rhs(std::move(r), f, spec.a, tol, [&](double qtol) {
    return quad::integrate_with_splits(g, 0.0, {split}, qtol);
  });
}

std::vector<BigRational> basis_change(const OddPolynomial& c, const BigRational& a,
                                      const BigRational& b) {
  const BigRational ab = a * b;
  const long n = static_cast<long>(c.c.size()) - 1;
  std::vector<BigRational> d(c.c.size());
  for (long k = 0; k <= n; ++k) {
    BigRational acc = 0;
    BigRational power = 1;  // (ab)^{j-k}
    for (long j = k; j <= n; ++j) {
      acc += BigRational(binomial(k + j, 2 * k) * (2 * j + 1), BigInt(2 * k + 1)) * power *
             c.c[j];
      power *= ab;
    }
    d[k] = acc;
  }
  return d;
}

RealFunction g_polynomial(const std::vector<BigRational>& d) {
  std::vector<double> dd;
  for (const auto& q : d) dd.push_back(to_double(q));
  return [dd](double u) {
    double acc = 0.0;
    for (auto it = dd.rbegin(); it != dd.rend(); ++it) acc = acc * u + *it;
    return u * acc * acc;
  };
}

VerificationReport verify_corollary(const OddPolynomial& c, const RealFunction& f,
                                    TransformSpec spec, double tol) {
  check_tol(tol);
  auto r = start_report("corollary", {{"a", spec.a}, {"b", spec.b}}, tol);
  auto d = basis_change(c, to_rational(spec.a), to_rational(spec.b));
  RealFunction g = g_polynomial(d);
  RealFunction rhs_f = [&](double u) { return f(g(u)); };
  RealFunction lhs = [&, a = spec.a, b = spec.b](double x) {
    double h = c(a * x) - c(b / x);
    return f(h * h);
  };
  double split = std::sqrt(spec.b / spec.a);
  return compare_with_rhs(std::move(r), rhs_f, spec.a, tol, [&](double qtol) {
    return quad::integrate_with_splits(lhs, 0.0, {split}, qtol);
  });
}

ReducedIntegral alter_reduce(RealFunction f, double a, double b) {
  if (!(a > -1.0)) throw PreconditionError("alter_reduce: need a > -1");
  if (!(b > 0.0)) throw PreconditionError("alter_reduce: need b > 0");
  double a_star = b / (2 * (1 + a));
  double scale = std::sqrt(b) / (2 * std::sqrt(a_star));
  quad::EndpointFunction g = [f = std::move(f), a_star](double t, double to_lo,
                                                        double to_hi) {
    return f(a_star * t) / t / std::sqrt(to_lo * to_hi);
  };
  return {g, scale, a_star};
}

RealFunction rational_argument_integrand(RealFunction f, double a, double b) {
  return [f = std::move(f), a, b](double x) {
    // b x^2/(x^4+2ax^2+1) = b / ((x - 1/x)^2 + 2(1+a)), safe for tiny and huge x.
    double y = x - 1.0 / x;
    return f(b / (y * y + 2 * (1 + a)));
  };
}

VerificationReport verify_alter_reduce(const RealFunction& f, double a, double b,
                                       double tol) {
  check_tol(tol);
  auto r = start_report("alter_reduce", {{"a", a}, {"b", b}}, tol);
  ReducedIntegral red = alter_reduce(f, a, b);
  Integral rhs = guarded([&] {
    auto q = quad::integrate_finite(red.integrand, 0.0, 1.0, quadrature_tol(tol, 1.0));
    q.value *= red.scale;
    q.error_estimate *= red.scale;
    return q;
  });
  absorb(r, rhs, "rhs");
  r.rhs = rhs.result.value;
  RealFunction lhs_f = rational_argument_integrand(f, a, b);
  double qtol = quadrature_tol(tol, std::isfinite(r.rhs) ? r.rhs : 1.0);
  Integral lhs = guarded([&] { return quad::integrate_with_splits(lhs_f, 0.0, {1.0}, qtol); });
  absorb(r, lhs, "lhs");
  r.lhs = lhs.result.value;
  finalize(r);
  return r;
}

double series_value(const std::vector<double>& coefficients, double a) {
  if (!(a > -1.0)) throw PreconditionError("series_value: need a > -1");
  if (coefficients.size() > 60) throw PreconditionError("series_value: at most 60 terms");
  const double u = 1.0 / (8 * (1 + a));
  double sum = 0.0;
  double central = 1.0;  // binom(2n, n)
  double un = 1.0;
  int growing = 0;
  double prev = 0.0;
  for (std::size_t n = 0; n < coefficients.size(); ++n) {
    double term = coefficients[n] * central * un;
    sum += term;
    // Sustained growth of the non-zero terms means the series diverges.
    if (term != 0.0) {
      growing = (prev != 0.0 && std::fabs(term) > std::fabs(prev)) ? growing + 1 : 0;
      prev = term;
      if (growing >= 5 && std::fabs(term) > 1.0)
        throw RangeError("series_value: terms are growing, series diverges");
    }
    central *= 2.0 * (2 * n + 1) / (n + 1.0);
    un *= u;
  }
  return std::numbers::pi / (2 * std::numbers::sqrt2 * std::sqrt(1 + a)) * sum;
}

RealFunction power_substituted_integrand(RealFunction f, double a, double r) {
  if (!(r > 0.0)) throw PreconditionError("power substitution: need r > 0");
  return [f = std::move(f), a, r](double t) {
    double tr = std::pow(t, r);
    double y = a * (tr - 1.0 / tr);
    double v = f(y * y);
    if (v == 0.0) return 0.0;  // keeps t^{r-1} -> inf at t -> 0 from turning 0 into NaN
    return std::pow(t, r - 1) * v;
  };
}

VerificationReport verify_power_substitution(const RealFunction& f, double a, double r,
                                             double tol) {
  check_tol(tol);
  if (!(a > 0.0)) throw PreconditionError("power substitution: need a > 0");
  auto rep = start_report("power_substitution", {{"a", a}, {"r", r}}, tol);
  RealFunction g = power_substituted_integrand(f, a, r);
  return compare_with_rhs(std::move(rep), f, a * r, tol, [&](double qtol) {
    return quad::integrate_with_splits(g, 0.0, {1.0}, qtol);
  });
}

VerificationReport meromorphic_transform_check(const MeromorphicMap& map,
                                               const RealFunction& f, double tol) {
  check_tol(tol);
  for (double res : map.residues())
    if (!(res < 0.0))
      throw PreconditionError("meromorphic map has a pole with non-negative residue");
  if (!(std::fabs(map(1e6) / 1e6 - 1.0) < 1e-6))
    throw PreconditionError("meromorphic map is not asymptotically linear");
  std::map<std::string, double> params{{"N", static_cast<double>(map.poles.size())}};
  for (std::size_t j = 0; j < map.poles.size(); ++j) {
    params["a" + std::to_string(j + 1)] = map.poles[j];
    params["b" + std::to_string(j + 1)] = map.zeros[j];
  }
  auto r = start_report("meromorphic", params, tol);
  // The right side takes f(x), not f(x^2): adapt with u -> f(sqrt(u)).
  RealFunction squared = [&f](double u) { return f(std::sqrt(u)); };
  RealFunction lhs = [&](double x) { return f(map(x)); };
  return compare_with_rhs(std::move(r), squared, 1.0, tol, [&](double qtol) {
    return quad::integrate_with_splits(lhs, 0.0, map.poles, qtol);
  });
}

double self_inverse(const SelfInverseFn& s, double x) { return s(x); }

VerificationReport extended_check(const SelfInverseFn& s, const RealFunction& f, double a,
                                  double tol) {
  check_tol(tol);
  if (!(a > 0.0)) throw PreconditionError("extended_check: need a > 0");
  auto r = start_report("extended:" + s.name(), {{"alpha", s.param}, {"a", a}}, tol);
  const double start = s.domain_start();
  RealFunction lhs = [&, start](double x) {
    double ax = a * x;
    // s(x) -> +inf at the start of its domain.
    double sx = ax > start ? s.eval(ax) : std::numeric_limits<double>::infinity();
    double y = ax - sx;
    return f(y * y);
  };
  double lo = s.domain_start() / a;
  double split = s.fixed_point() / a;
  return compare_with_rhs(std::move(r), f, a, tol, [&](double qtol) {
    return quad::integrate_with_splits(lhs, lo, {split}, qtol);
  });
}

}  // namespace schlomilch::transform
