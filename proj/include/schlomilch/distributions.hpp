#pragma once

// Transformation-of-scale densities f(x) = g(|x - s(x)|) built from a
// half-line parent density g and a self-inverse s (s(x) = b/x in the classic
// case).

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "schlomilch/quad.hpp"
#include "schlomilch/real_function.hpp"
#include "schlomilch/report.hpp"
#include "schlomilch/transform.hpp"

namespace schlomilch::distributions {

enum class ParentKind { half_gaussian, half_subbotin, half_t };

// Density on [0, inf). All shipped kinds are decreasing.
class ParentDensity {
 public:
  static ParentDensity half_gaussian();
  static ParentDensity half_subbotin(int n);  // g(y) = 2n/Gamma(1/(2n)) exp(-y^{2n})
  static ParentDensity half_t(double nu);

  ParentKind kind() const { return kind_; }
  double shape() const { return shape_; }  // n or nu; 0 for the Gaussian
  std::string name() const;
  bool decreasing() const { return true; }

  double operator()(double y) const;  // 0 for y < 0
  double log_value(double y) const;   // log g(y); -inf for y < 0
  double at_zero() const { return norm_; }
  double cdf(double y) const;

  // E_g(Y^r) in closed form; NaN when the moment does not exist.
  double moment(double r) const;
  bool has_moment(double r) const;

  // One draw from g.
  double sample(std::mt19937_64& rng) const;

 private:
  ParentDensity(ParentKind kind, double shape, double norm);
  void check_invariants() const;

  ParentKind kind_;
  double shape_;
  double norm_;  // g(0)
};

class ScaleTransformDistribution {
 public:
  static ScaleTransformDistribution classic(ParentDensity g, double b);
  static ScaleTransformDistribution extended(ParentDensity g, transform::SelfInverseFn s);

  const ParentDensity& parent() const { return g_; }
  const transform::SelfInverseFn& s() const { return s_; }
  bool is_classic() const { return classic_; }
  double b() const;  // classic only

  // Left end of the support and the symmetry center (sqrt(b) or x0).
  double lower() const { return s_.domain_start(); }
  double center() const { return s_.fixed_point(); }
  std::string name() const;

  // g(|x - s(x)|); 0 outside the support.
  double density(double x) const;
  double log_density(double x) const;

 private:
  ScaleTransformDistribution(ParentDensity g, transform::SelfInverseFn s, bool classic);

  ParentDensity g_;
  transform::SelfInverseFn s_;
  bool classic_;
};

// Standard normal quantile: rational approximation plus one Halley step.
double normal_quantile(double u);

// int f over the support; report id "normalization".
VerificationReport normalization_check(const ScaleTransformDistribution& d, double tol);

// E_f h(X) by quadrature.
quad::QuadratureResult expectation(const ScaleTransformDistribution& d,
                                   const RealFunction& h, double tol);

// E_f X^p by quadrature, with the integrand formed in logs.
quad::QuadratureResult power_moment(const ScaleTransformDistribution& d, double p,
                                    double tol);

// Whether E_f X^p is finite.
bool has_moment(const ScaleTransformDistribution& d, double p);

// Moment identities at integer r in [-4, 4], quadrature first, Monte Carlo
// (classic mode) within 4 standard errors. Identities that do not exist are
// returned with a "skipped" flag and pass = false.
//   classic:  E|X - b/X|^r = E_g Y^r;  E X^r = b^{r+1} E X^{-(r+2)}
//   extended: E|X - s(X)|^r = E_g Y^r; E X^r = -E s'(X) s(X)^r; E s'(X) = -1
std::vector<VerificationReport> moment_checks(const ScaleTransformDistribution& d, int r,
                                              std::size_t n, std::uint64_t seed);

// f(c x) = f(c/x) (classic) or f(x) = f(s(x)) (extended) at 100 grid points,
// and the mode located by golden-section search.
std::vector<VerificationReport> symmetry_checks(const ScaleTransformDistribution& d);

// c_g(p) = g^{-1}(p g(0)) by bisection.
double parent_level(const ParentDensity& g, double p);

struct Asymmetry {
  double value;        // the returned gamma(p)
  double generic;      // from the equal-density points around the mode
  double closed_form;  // NaN when no closed form applies
};

// p in (1e-6, 1 - 1e-6); throws PreconditionError otherwise.
Asymmetry asymmetry(const ScaleTransformDistribution& d, double p);

// Classic mode: draw y ~ g and pick the root x1 = (y + sqrt(y^2+4b))/2 with
// probability x1/sqrt(y^2+4b), else x2 = b/x1. Deterministic given the seed.
class Sampler {
 public:
  Sampler(const ScaleTransformDistribution& d, std::uint64_t seed);
  double operator()();
  std::vector<double> draw(std::size_t n);

 private:
  ScaleTransformDistribution d_;
  std::mt19937_64 rng_;
};

std::vector<double> sample(const ScaleTransformDistribution& d, std::size_t n,
                           std::uint64_t seed);

// Kolmogorov-Smirnov sup distance between the empirical CDF of `samples`
// and the quadrature CDF of d.
double ks_statistic(const ScaleTransformDistribution& d, std::vector<double> samples);

struct Location {
  double mode;
  double mean;
  double median;
};

Location location(const ScaleTransformDistribution& d);

}  // namespace schlomilch::distributions
