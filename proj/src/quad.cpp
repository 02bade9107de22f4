#include "schlomilch/quad.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "schlomilch/error.hpp"

namespace schlomilch::quad {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;
constexpr double kNegligibleWeight = 1e-300;

// One abscissa of a DE rule. For tanh-sinh `offset` is the distance from the
// nearer endpoint of [-1, 1]; for exp-sinh it is x - lo.
struct Node {
  double offset;
  double weight;
};

using Levels = std::vector<std::vector<Node>>;

// t values of level L: integers at L = 0, odd multiples of 2^-L afterwards.
template <class Make>
Levels build_levels(double t_min, double t_max, Make make) {
  Levels levels(kMaxLevel + 1);
  for (int level = 0; level <= kMaxLevel; ++level) {
    double h = std::ldexp(1.0, -level);
    long k_lo = static_cast<long>(std::ceil(t_min / h));
    long k_hi = static_cast<long>(std::floor(t_max / h));
    for (long k = k_lo; k <= k_hi; ++k) {
      if (level > 0 && k % 2 == 0) continue;
      levels[level].push_back(make(k * h));
    }
  }
  return levels;
}

// Tanh-sinh nodes for t > 0 (t = 0 is handled separately). Mirrored use
// covers t < 0.
const Levels& tanh_sinh_levels() {
  static const Levels levels = build_levels(1e-300, 6.1, [](double t) {
    double u = kHalfPi * std::sinh(t);
    double e = std::exp(-2 * u);
    double offset = 2 * e / (1 + e);
    double weight = kHalfPi * std::cosh(t) * 4 * e / ((1 + e) * (1 + e));
    return Node{offset, weight};
  });
  return levels;
}

// Exp-sinh nodes: x - lo ranges over roughly [1e-300, 1e100].
const Levels& exp_sinh_levels() {
  static const Levels levels = build_levels(
      -std::asinh(690.7755 / kHalfPi), std::asinh(230.2585 / kHalfPi),
      [](double t) {
        double offset = std::exp(kHalfPi * std::sinh(t));
        return Node{offset, kHalfPi * std::cosh(t) * offset};
      });
  return levels;
}

[[noreturn]] void non_finite(double x) {
  std::ostringstream msg;
  msg.precision(17);
  msg << "integrand is non-finite at interior node x = " << x;
  throw IntegrationError(x, msg.str());
}

template <class F>
class Sampler {
 public:
  explicit Sampler(const F& f) : f_(f) {}

  // weight * f(args...), with the endpoint sentinel rule applied.
  template <class... Args>
  double operator()(double weight, double x, Args... args) {
    double fx = f_(x, args...);
    ++evaluations;
    if (!std::isfinite(fx)) {
      if (weight < kNegligibleWeight) return 0.0;
      non_finite(x);
    }
    return weight * fx;
  }

  std::size_t evaluations = 0;

 private:
  const F& f_;
};

void check_tol(double tol) {
  if (!(tol >= kMinTol) || !std::isfinite(tol))
    throw PreconditionError("quadrature tolerance must be finite and >= 1e-14");
}

}  // namespace

QuadratureResult operator+(const QuadratureResult& a, const QuadratureResult& b) {
  return {a.value + b.value, a.error_estimate + b.error_estimate,
          a.evaluations + b.evaluations, a.converged && b.converged};
}

QuadratureResult integrate_finite(const EndpointFunction& f, double lo,
                                  double hi, double tol) {
  check_tol(tol);
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
    throw PreconditionError("integrate_finite: need finite lo < hi");
  const Levels& levels = tanh_sinh_levels();
  const double half = (hi - lo) / 2;
  const double mid = lo + half;
  Sampler<EndpointFunction> sample(f);

  double sum = sample(kHalfPi, mid, mid - lo, hi - mid);
  QuadratureResult result;
  double previous = 0.0;
  for (int level = 0; level <= kMaxLevel; ++level) {
    for (const Node& n : levels[level]) {
      double d = half * n.offset;
      if (d == 0.0) continue;
      double right = hi - d;
      double left = lo + d;
      sum += sample(n.weight, right, right - lo, d);
      sum += sample(n.weight, left, d, hi - left);
    }
    double estimate = std::ldexp(sum, -level) * half;
    result.value = estimate;
    if (level > 0) {
      result.error_estimate = std::fabs(estimate - previous);
      if (level >= kMinLevel && result.error_estimate <= tol) {
        result.converged = true;
        break;
      }
    }
    previous = estimate;
  }
  result.evaluations = sample.evaluations;
  return result;
}

QuadratureResult integrate_finite(const RealFunction& f, double lo, double hi,
                                  double tol) {
  // Abscissas that round onto an endpoint lie outside the open interval in
  // floating point; they contribute nothing.
  EndpointFunction g = [&f, lo, hi](double x, double, double) {
    return (x == lo || x == hi) ? 0.0 : f(x);
  };
  return integrate_finite(g, lo, hi, tol);
}

QuadratureResult integrate_semi_infinite(const RealFunction& f, double lo,
                                         double tol) {
  check_tol(tol);
  if (!std::isfinite(lo))
    throw PreconditionError("integrate_semi_infinite: lower limit must be finite");
  const Levels& levels = exp_sinh_levels();
  Sampler<RealFunction> sample(f);

  double sum = 0.0;
  QuadratureResult result;
  double previous = 0.0;
  for (int level = 0; level <= kMaxLevel; ++level) {
    for (const Node& n : levels[level]) {
      double x = lo + n.offset;
      if (x == lo) continue;
      sum += sample(n.weight, x);
    }
    double estimate = std::ldexp(sum, -level);
    result.value = estimate;
    if (level > 0) {
      result.error_estimate = std::fabs(estimate - previous);
      if (level >= kMinLevel && result.error_estimate <= tol) {
        result.converged = true;
        break;
      }
    }
    previous = estimate;
  }
  result.evaluations = sample.evaluations;
  return result;
}

QuadratureResult integrate_real_line(const RealFunction& f, double tol) {
  check_tol(tol);
  RealFunction mirrored = [&f](double x) { return f(-x); };
  double half_tol = std::fmax(tol / 2, kMinTol);
  QuadratureResult r = integrate_semi_infinite(f, 0.0, half_tol) +
                       integrate_semi_infinite(mirrored, 0.0, half_tol);
  r.converged = r.converged && r.error_estimate <= tol;
  return r;
}

QuadratureResult integrate_with_splits(const RealFunction& f, double lo,
                                       const std::vector<double>& breakpoints,
                                       double tol) {
  check_tol(tol);
  double prev = lo;
  for (double p : breakpoints) {
    if (!(p > prev))
      throw PreconditionError("breakpoints must be strictly increasing and > lo");
    prev = p;
  }
  double piece_tol = std::fmax(tol / (breakpoints.size() + 1), kMinTol);
  QuadratureResult total{0.0, 0.0, 0, true};
  double a = lo;
  for (double p : breakpoints) {
    total = total + integrate_finite(f, a, p, piece_tol);
    a = p;
  }
  total = total + integrate_semi_infinite(f, a, piece_tol);
  total.converged = total.converged && total.error_estimate <= tol;
  return total;
}

QuadratureResult integrate_finite_with_splits(
    const RealFunction& f, double lo, double hi,
    const std::vector<double>& breakpoints, double tol) {
  check_tol(tol);
  double prev = lo;
  for (double p : breakpoints) {
    if (!(p > prev) || !(p < hi))
      throw PreconditionError("breakpoints must be strictly increasing inside (lo, hi)");
    prev = p;
  }
  double piece_tol = std::fmax(tol / (breakpoints.size() + 1), kMinTol);
  QuadratureResult total{0.0, 0.0, 0, true};
  double a = lo;
  for (double p : breakpoints) {
    total = total + integrate_finite(f, a, p, piece_tol);
    a = p;
  }
  total = total + integrate_finite(f, a, hi, piece_tol);
  total.converged = total.converged && total.error_estimate <= tol;
  return total;
}

}  // namespace schlomilch::quad
