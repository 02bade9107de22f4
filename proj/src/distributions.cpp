#include "schlomilch/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "schlomilch/error.hpp"
#include "schlomilch/specfun.hpp"

namespace schlomilch::distributions {

namespace {

namespace sf = specfun;
using transform::SelfInverseFn;
using transform::SelfInverseKind;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kMomentTol = 1e-6;
constexpr double kSPrimeTol = 1e-4;
constexpr double kSymmetryTol = 1e-12;
constexpr double kModeTol = 1e-6;

// Uniform on the open interval (0, 1) from the top 53 bits.
double uniform01(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1p-53;
}

std::string format(double v) {
  std::ostringstream out;
  out.precision(10);
  out << v;
  return out.str();
}

std::map<std::string, double> describe(const ScaleTransformDistribution& d) {
  std::map<std::string, double> p;
  if (d.is_classic()) p["b"] = d.b();
  else p["alpha"] = d.s().param;
  switch (d.parent().kind()) {
    case ParentKind::half_t: p["nu"] = d.parent().shape(); break;
    case ParentKind::half_subbotin: p["n"] = d.parent().shape(); break;
    case ParentKind::half_gaussian: break;
  }
  return p;
}

VerificationReport new_report(const std::string& id, const ScaleTransformDistribution& d,
                              double tol) {
  VerificationReport r;
  r.id = id;
  r.params = describe(d);
  r.tol = tol;
  r.converged = true;
  return r;
}

// Maximizer of a unimodal f on [lo, hi].
double golden_max(const RealFunction& f, double lo, double hi) {
  const double inv_phi = (std::sqrt(5.0) - 1) / 2;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < 200 && hi - lo > 1e-13 * std::fabs(hi); ++i) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    }
  }
  return (lo + hi) / 2;
}

// Golden section on log f, then the midpoint of the flat top: near a mode of
// order 2n the density is constant in double precision over a window of
// width ~eps^(1/2n), so the search alone can stop anywhere inside it.
double find_mode(const ScaleTransformDistribution& d) {
  double lo = d.lower(), c = d.center();
  double a = lo + (c - lo) / 10, b = lo + 10 * (c - lo);
  RealFunction logf = [&d](double x) { return d.log_density(x); };
  double m = golden_max(logf, a, b);
  double top = logf(m);
  auto edge = [&](double inside, double outside) {
    for (int i = 0; i < 200; ++i) {
      double mid = inside + (outside - inside) / 2;
      if (mid == inside || mid == outside) break;
      if (logf(mid) >= top) inside = mid;
      else outside = mid;
    }
    return inside;
  };
  double left = edge(m, a), right = edge(m, b);
  // Classic edges pair up under x -> b/x, so their geometric mean is exact.
  if (d.is_classic()) return std::sqrt(left * right);
  return (left + right) / 2;
}

// Increasing-function root of h on [lo, hi] by bisection.
template <class H>
double bisect(H h, double lo, double hi) {
  for (int i = 0; i < 400; ++i) {
    double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    if (h(mid) < 0) lo = mid;
    else hi = mid;
  }
  return lo + (hi - lo) / 2;
}

// int_{lower}^{x} f.
double cdf_at(const ScaleTransformDistribution& d, double x) {
  double lo = d.lower();
  if (!(x > lo)) return 0.0;
  RealFunction f = [&d](double t) { return d.density(t); };
  double c = d.center();
  if (x > c) return quad::integrate_finite_with_splits(f, lo, x, {c}, 1e-13).value;
  return quad::integrate_finite(f, lo, x, 1e-13).value;
}

struct SampleStats {
  double mean;
  double se;
};

SampleStats stats(const std::vector<double>& v) {
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= v.size();
  double var = 0.0;
  for (double x : v) var += (x - mean) * (x - mean);
  var /= std::max<std::size_t>(v.size() - 1, 1);
  return {mean, std::sqrt(var / v.size())};
}

// Fold a Monte Carlo estimate into a report: within 4 standard errors.
bool monte_carlo(VerificationReport& r, const std::vector<double>& values, double target) {
  SampleStats s = stats(values);
  double dev = std::fabs(s.mean - target);
  bool ok = dev <= 4 * s.se + 1e-12 * std::max(1.0, std::fabs(target));
  r.notes.push_back("monte carlo: mean " + format(s.mean) + ", standard error " + format(s.se) +
                    (ok ? ", within 4 SE" : ", outside 4 SE"));
  return ok;
}

VerificationReport skipped(VerificationReport r, const std::string& why) {
  r.lhs = r.rhs = kNaN;
  r.flags.push_back("skipped");
  r.notes.push_back(why);
  r.converged = false;
  finalize(r, false);
  return r;
}

void absorb(VerificationReport& r, const quad::QuadratureResult& q) {
  r.evaluations += q.evaluations;
  r.converged = r.converged && q.converged;
}

}  // namespace

// ---- parent densities -------------------------------------------------------

ParentDensity::ParentDensity(ParentKind kind, double shape, double norm)
    : kind_(kind), shape_(shape), norm_(norm) {}

ParentDensity ParentDensity::half_gaussian() {
  ParentDensity g(ParentKind::half_gaussian, 0.0, std::sqrt(2 / std::numbers::pi));
  g.check_invariants();
  return g;
}

ParentDensity ParentDensity::half_subbotin(int n) {
  if (n < 1 || n > 20) throw PreconditionError("half-subbotin: need 1 <= n <= 20");
  ParentDensity g(ParentKind::half_subbotin, n, 2.0 * n / sf::gamma(1.0 / (2 * n)));
  g.check_invariants();
  return g;
}

ParentDensity ParentDensity::half_t(double nu) {
  if (!(nu > 0.0 && nu <= 1e6)) throw PreconditionError("half-t: need 0 < nu <= 1e6");
  double norm = 2 * std::exp(sf::log_gamma((nu + 1) / 2) - sf::log_gamma(nu / 2)) /
                std::sqrt(nu * std::numbers::pi);
  ParentDensity g(ParentKind::half_t, nu, norm);
  g.check_invariants();
  return g;
}

void ParentDensity::check_invariants() const {
  RealFunction g = [this](double y) { return (*this)(y); };
  auto q = quad::integrate_with_splits(g, 0.0, {1.0}, 1e-11);
  if (!q.converged || std::fabs(q.value - 1.0) > 1e-9)
    throw std::logic_error(name() + ": parent density does not integrate to 1");
  double prev = g(0.0);
  for (int i = 1; i <= 100; ++i) {
    double v = g(0.1 * i);
    if (v > prev) throw std::logic_error(name() + ": parent density is not decreasing");
    prev = v;
  }
}

std::string ParentDensity::name() const {
  switch (kind_) {
    case ParentKind::half_gaussian: return "half-gaussian";
    case ParentKind::half_subbotin: return "half-subbotin(n=" + format(shape_) + ")";
    case ParentKind::half_t: return "half-t(nu=" + format(shape_) + ")";
  }
  return "";
}

double ParentDensity::operator()(double y) const {
  if (y < 0.0) return 0.0;
  switch (kind_) {
    case ParentKind::half_gaussian: return norm_ * std::exp(-y * y / 2);
    case ParentKind::half_subbotin: return norm_ * std::exp(-std::pow(y, 2 * shape_));
    case ParentKind::half_t:
      return norm_ * std::exp(-(shape_ + 1) / 2 * std::log1p(y * y / shape_));
  }
  return kNaN;
}

double ParentDensity::log_value(double y) const {
  if (y < 0.0) return -kInf;
  double log_norm = std::log(norm_);
  switch (kind_) {
    case ParentKind::half_gaussian: return log_norm - y * y / 2;
    case ParentKind::half_subbotin: return log_norm - std::pow(y, 2 * shape_);
    case ParentKind::half_t: return log_norm - (shape_ + 1) / 2 * std::log1p(y * y / shape_);
  }
  return kNaN;
}

double ParentDensity::cdf(double y) const {
  if (!(y > 0.0)) return 0.0;
  switch (kind_) {
    case ParentKind::half_gaussian: return sf::erf(y / std::numbers::sqrt2);
    case ParentKind::half_subbotin:
      return sf::regularized_gamma_p(1 / (2 * shape_), std::pow(y, 2 * shape_));
    case ParentKind::half_t: {
      RealFunction g = [this](double t) { return (*this)(t); };
      return quad::integrate_finite(g, 0.0, y, 1e-14).value;
    }
  }
  return kNaN;
}

bool ParentDensity::has_moment(double r) const {
  if (!(r > -1.0)) return false;
  return kind_ != ParentKind::half_t || r < shape_;
}

double ParentDensity::moment(double r) const {
  if (!has_moment(r)) return kNaN;
  switch (kind_) {
    case ParentKind::half_gaussian:
      return std::pow(2.0, r / 2) * sf::gamma((r + 1) / 2) / kSqrtPi;
    case ParentKind::half_subbotin:
      return std::exp(sf::log_gamma((r + 1) / (2 * shape_)) - sf::log_gamma(1 / (2 * shape_)));
    case ParentKind::half_t:
      return std::pow(shape_, r / 2) *
             std::exp(sf::log_gamma((r + 1) / 2) + sf::log_gamma((shape_ - r) / 2) -
                      sf::log_gamma(shape_ / 2)) /
             kSqrtPi;
  }
  return kNaN;
}

double ParentDensity::sample(std::mt19937_64& rng) const {
  switch (kind_) {
    case ParentKind::half_gaussian: return -normal_quantile(uniform01(rng) / 2);
    case ParentKind::half_t: {
      double z = -normal_quantile(uniform01(rng) / 2);
      std::chi_squared_distribution<double> chi(shape_);
      return z / std::sqrt(chi(rng) / shape_);
    }
    case ParentKind::half_subbotin: {
      double u = uniform01(rng);
      double hi = 1.0;
      while (cdf(hi) < u) hi *= 2;
      return bisect([&](double y) { return cdf(y) - u; }, 0.0, hi);
    }
  }
  return kNaN;
}

// ---- transformed densities --------------------------------------------------

ScaleTransformDistribution::ScaleTransformDistribution(ParentDensity g, SelfInverseFn s,
                                                       bool classic)
    : g_(std::move(g)), s_(s), classic_(classic) {}

ScaleTransformDistribution ScaleTransformDistribution::classic(ParentDensity g, double b) {
  if (!(b > 0.0) || !std::isfinite(b)) throw PreconditionError("classic mode: need b > 0");
  return {std::move(g), SelfInverseFn(SelfInverseKind::reciprocal, b), true};
}

ScaleTransformDistribution ScaleTransformDistribution::extended(ParentDensity g,
                                                                SelfInverseFn s) {
  return {std::move(g), s, false};
}

double ScaleTransformDistribution::b() const {
  if (!classic_) throw PreconditionError("b is defined in classic mode only");
  return s_.param;
}

std::string ScaleTransformDistribution::name() const {
  if (classic_) return g_.name() + " classic(b=" + format(s_.param) + ")";
  return g_.name() + " extended(" + s_.name() + ", alpha=" + format(s_.param) + ")";
}

double ScaleTransformDistribution::density(double x) const {
  if (!(x > lower())) return 0.0;
  double y = x - s_.eval(x);
  if (!std::isfinite(y)) return 0.0;
  return g_(std::fabs(y));
}

double ScaleTransformDistribution::log_density(double x) const {
  if (!(x > lower())) return -kInf;
  double y = x - s_.eval(x);
  if (!std::isfinite(y)) return -kInf;
  return g_.log_value(std::fabs(y));
}

// ---- normal quantile --------------------------------------------------------

double normal_quantile(double u) {
  if (!(u > 0.0 && u < 1.0)) throw DomainError("normal_quantile: need 0 < u < 1");
  // 1 - u is exact here; refining against u itself would cost the upper tail
  // its relative accuracy.
  if (u > 0.5) return -normal_quantile(1 - u);
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;
  auto tail = [&](double p) {
    double q = std::sqrt(-2 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
  };
  double x;
  if (u < p_low) {
    x = tail(u);
  } else if (u > 1 - p_low) {
    x = -tail(1 - u);
  } else {
    double q = u - 0.5;
    double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1);
  }
  // One Halley step against the exact CDF.
  double e = 0.5 * sf::erfc(-x / std::numbers::sqrt2) - u;
  double step = e * std::sqrt(2 * std::numbers::pi) * std::exp(x * x / 2);
  return x - step / (1 + x * step / 2);
}

// ---- checks -----------------------------------------------------------------

VerificationReport normalization_check(const ScaleTransformDistribution& d, double tol) {
  if (!(tol > 0.0)) throw PreconditionError("tolerance must be positive");
  auto r = new_report("normalization", d, tol);
  r.rhs = 1.0;
  try {
    auto q = expectation(d, [](double) { return 1.0; }, quadrature_tol(tol, 1.0));
    absorb(r, q);
    r.lhs = q.value;
  } catch (const IntegrationError& e) {
    r.lhs = kNaN;
    r.converged = false;
    r.notes.push_back(e.what());
  }
  finalize(r);
  return r;
}

quad::QuadratureResult expectation(const ScaleTransformDistribution& d,
                                   const RealFunction& h, double tol) {
  RealFunction f = [&](double x) {
    double fx = d.density(x);
    return fx == 0.0 ? 0.0 : h(x) * fx;
  };
  return quad::integrate_with_splits(f, d.lower(), {d.center()}, tol);
}

quad::QuadratureResult power_moment(const ScaleTransformDistribution& d, double p,
                                    double tol) {
  RealFunction f = [&d, p](double x) { return std::exp(p * std::log(x) + d.log_density(x)); };
  return quad::integrate_with_splits(f, d.lower(), {d.center()}, tol);
}

bool has_moment(const ScaleTransformDistribution& d, double p) {
  const ParentDensity& g = d.parent();
  if (g.kind() != ParentKind::half_t) return true;
  double nu = g.shape();
  if (d.is_classic()) return p > -nu - 2 && p < nu;
  return p >= 0 && p < nu;
}

std::vector<VerificationReport> moment_checks(const ScaleTransformDistribution& d, int r,
                                              std::size_t n, std::uint64_t seed) {
  if (r < -4 || r > 4) throw PreconditionError("moment_checks: need r in [-4, 4]");
  const ParentDensity& g = d.parent();
  const SelfInverseFn& s = d.s();
  std::vector<VerificationReport> out;

  // The moment tolerance is relative: a large moment is redone with the
  // absolute quadrature tolerance scaled to its magnitude.
  auto relative = [](auto integrate) {
    quad::QuadratureResult q = integrate(quadrature_tol(kMomentTol, 1.0));
    if (!q.converged && std::isfinite(q.value) && std::fabs(q.value) > 1) {
      std::size_t spent = q.evaluations;
      q = integrate(quadrature_tol(kMomentTol, q.value));
      q.evaluations += spent;
    }
    return q;
  };

  std::vector<double> xs;
  bool mc = d.is_classic() && n > 1;
  if (mc) xs = sample(d, n, seed);

  auto with_r = [&](const std::string& id, double tol) {
    auto rep = new_report(id, d, tol);
    rep.params["r"] = r;
    return rep;
  };
  auto guarded = [](VerificationReport& rep, auto run) {
    try {
      run();
    } catch (const IntegrationError& e) {
      rep.converged = false;
      rep.notes.push_back(e.what());
    }
  };

  // E|X - s(X)|^r = E_g Y^r.
  {
    auto rep = with_r("moment:abs-diff", kMomentTol);
    if (!g.has_moment(r)) {
      out.push_back(skipped(rep, "E_g Y^" + std::to_string(r) + " does not exist"));
    } else {
      guarded(rep, [&] {
        RealFunction fx = [&](double x) {
          return std::exp(r * std::log(std::fabs(x - s.eval(x))) + d.log_density(x));
        };
        auto lhs = relative([&](double t) {
          return quad::integrate_with_splits(fx, d.lower(), {d.center()}, t);
        });
        RealFunction gy = [&](double y) { return std::exp(r * std::log(y) + g.log_value(y)); };
        auto rhs = relative(
            [&](double t) { return quad::integrate_with_splits(gy, 0.0, {1.0}, t); });
        absorb(rep, lhs);
        absorb(rep, rhs);
        rep.lhs = lhs.value;
        rep.rhs = rhs.value;
      });
      rep.notes.push_back("closed-form parent moment " + format(g.moment(r)));
      bool ok = true;
      if (mc && g.has_moment(2.0 * r)) {
        std::vector<double> v;
        v.reserve(xs.size());
        for (double x : xs) v.push_back(std::pow(std::fabs(x - s.eval(x)), r));
        ok = monte_carlo(rep, v, rep.rhs);
      } else {
        rep.notes.push_back("monte carlo not applied");
      }
      finalize(rep, ok);
      out.push_back(rep);
    }
  }

  // Reflection of moments through the symmetry.
  {
    auto rep = with_r("moment:reflect", kMomentTol);
    if (d.is_classic()) {
      const double b = d.b();
      if (!has_moment(d, r) || !has_moment(d, -(r + 2))) {
        out.push_back(skipped(rep, "E X^r or E X^-(r+2) does not exist"));
      } else {
        guarded(rep, [&] {
          auto lhs = relative([&](double t) { return power_moment(d, r, t); });
          auto rhs = relative([&](double t) { return power_moment(d, -(r + 2), t); });
          absorb(rep, lhs);
          absorb(rep, rhs);
          rep.lhs = lhs.value;
          rep.rhs = std::pow(b, r + 1) * rhs.value;
        });
        bool ok = true;
        if (mc && has_moment(d, 2.0 * r) && has_moment(d, -2.0 * (r + 2))) {
          std::vector<double> v;
          v.reserve(xs.size());
          for (double x : xs) v.push_back(std::pow(x, r) - std::pow(b, r + 1) * std::pow(x, -(r + 2)));
          ok = monte_carlo(rep, v, 0.0);
        } else {
          rep.notes.push_back("monte carlo not applied");
        }
        finalize(rep, ok);
        out.push_back(rep);
      }
    } else if (!has_moment(d, r)) {
      out.push_back(skipped(rep, "E X^r does not exist"));
    } else {
      auto sprime = [&s, &d](double x) {
        double h = 1e-5 * (x - d.lower());
        return (s.eval(x + h) - s.eval(x - h)) / (2 * h);
      };
      guarded(rep, [&] {
        auto lhs = relative([&](double t) { return power_moment(d, r, t); });
        auto rhs = relative([&](double t) {
          return expectation(
              d, [&](double x) { return -sprime(x) * std::pow(s.eval(x), r); }, t);
        });
        absorb(rep, lhs);
        absorb(rep, rhs);
        rep.lhs = lhs.value;
        rep.rhs = rhs.value;
      });
      finalize(rep);
      out.push_back(rep);
    }
  }

  if (!d.is_classic()) {
    auto rep = new_report("moment:s-prime", d, kSPrimeTol);
    auto sprime = [&s, &d](double x) {
      double h = 1e-5 * (x - d.lower());
      return (s.eval(x + h) - s.eval(x - h)) / (2 * h);
    };
    rep.rhs = -1.0;
    guarded(rep, [&] {
      auto q = expectation(d, sprime, quadrature_tol(kSPrimeTol, 1.0));
      absorb(rep, q);
      rep.lhs = q.value;
    });
    finalize(rep);
    out.push_back(rep);
  }
  return out;
}

std::vector<VerificationReport> symmetry_checks(const ScaleTransformDistribution& d) {
  std::vector<VerificationReport> out;
  const double lo = d.lower(), c = d.center();
  {
    auto rep = new_report("symmetry", d, kSymmetryTol);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      double t = std::pow(10.0, (i - 49.5) / 25);  // about 0.01 .. 100
      double left, right;
      if (d.is_classic()) {
        left = d.density(c * t);
        right = d.density(c / t);
      } else {
        double x = lo + (c - lo) * t;
        left = d.density(x);
        right = d.density(d.s().eval(x));
      }
      worst = std::max(worst, std::fabs(left - right));
    }
    rep.lhs = worst;
    rep.rhs = 0.0;
    finalize(rep);
    out.push_back(rep);
  }
  if (d.parent().decreasing()) {
    auto rep = new_report("mode", d, kModeTol);
    rep.lhs = find_mode(d);
    rep.rhs = c;
    finalize(rep);
    out.push_back(rep);
  }
  return out;
}

double parent_level(const ParentDensity& g, double p) {
  if (!(p > 0.0 && p < 1.0)) throw PreconditionError("parent_level: need 0 < p < 1");
  const double target = p * g.at_zero();
  double hi = 1.0;
  while (g(hi) >= target) hi *= 2;
  return bisect([&](double y) { return target - g(y); }, 0.0, hi);
}

Asymmetry asymmetry(const ScaleTransformDistribution& d, double p) {
  if (!(p > 1e-6 && p < 1 - 1e-6))
    throw PreconditionError("asymmetry: need p in (1e-6, 1 - 1e-6)");
  if (!d.parent().decreasing())
    throw PreconditionError("asymmetry: parent density must be decreasing");
  const double c = parent_level(d.parent(), p);
  const SelfInverseFn& s = d.s();
  const double x0 = d.center();

  // Right equal-density point: x - s(x) = c with x > x0; the left one is s(x).
  double hi = x0 + c + 1;
  while (hi - s.eval(hi) < c) hi = x0 + 2 * (hi - x0);
  double xr = bisect([&](double x) { return x - s.eval(x) - c; }, x0, hi);
  double generic = (xr + s.eval(xr) - 2 * x0) / c;

  Asymmetry out{generic, generic, kNaN};
  bool gaussian = d.parent().kind() == ParentKind::half_gaussian;
  if (d.is_classic()) {
    double b = d.b();
    out.value = (std::sqrt(c * c + 4 * b) - std::sqrt(4 * b)) / c;
    if (gaussian)
      out.closed_form = (std::sqrt(2 * b - std::log(p)) - std::sqrt(2 * b)) / std::sqrt(-std::log(p));
  } else if (gaussian && s.kind == SelfInverseKind::log_expm1) {
    double w = s.param * std::sqrt(-std::log(p) / 2);
    out.closed_form = std::log(std::cosh(w)) / w;
    out.value = out.closed_form;
  }
  return out;
}

// ---- sampling ---------------------------------------------------------------

Sampler::Sampler(const ScaleTransformDistribution& d, std::uint64_t seed) : d_(d), rng_(seed) {
  if (!d.is_classic())
    throw PreconditionError("sampling is available in classic mode only");
}

double Sampler::operator()() {
  const double b = d_.b();
  double y = d_.parent().sample(rng_);
  double root = std::sqrt(y * y + 4 * b);
  double x1 = (y + root) / 2;
  double u = uniform01(rng_);
  return u < x1 / root ? x1 : b / x1;
}

std::vector<double> Sampler::draw(std::size_t n) {
  std::vector<double> out(n);
  for (auto& x : out) x = (*this)();
  return out;
}

std::vector<double> sample(const ScaleTransformDistribution& d, std::size_t n,
                           std::uint64_t seed) {
  return Sampler(d, seed).draw(n);
}

double ks_statistic(const ScaleTransformDistribution& d, std::vector<double> samples) {
  if (samples.empty()) throw PreconditionError("ks_statistic: no samples");
  std::sort(samples.begin(), samples.end());
  RealFunction f = [&d](double x) { return d.density(x); };
  const double n = static_cast<double>(samples.size());
  double cdf = 0.0;
  double prev = d.lower();
  double sup = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    double x = samples[i];
    if (x > prev) {
      cdf += quad::integrate_finite(f, prev, x, 1e-13).value;
      prev = x;
    }
    sup = std::max({sup, (i + 1) / n - cdf, cdf - i / n});
  }
  return sup;
}

Location location(const ScaleTransformDistribution& d) {
  Location loc{};
  loc.mode = find_mode(d);
  loc.mean = expectation(d, [](double x) { return x; }, 1e-12).value;
  double lo = d.lower();
  double hi = d.center() + 1;
  while (cdf_at(d, hi) < 0.5) hi = lo + 2 * (hi - lo);
  loc.median = bisect([&](double x) { return cdf_at(d, x) - 0.5; }, lo, hi);
  return loc;
}

}  // namespace schlomilch::distributions
