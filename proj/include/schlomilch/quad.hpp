#pragma once

// Double-exponential quadrature: tanh-sinh on [lo, hi], exp-sinh on (lo, inf).
//
// Tolerances are absolute. The error estimate is the difference between the
// last two levels; a result is marked converged once that difference is at or
// below tol (and at least kMinLevel levels were used).

#include <cstddef>
#include <functional>
#include <vector>

#include "schlomilch/real_function.hpp"

namespace schlomilch::quad {

inline constexpr int kMaxLevel = 12;
inline constexpr int kMinLevel = 4;
inline constexpr double kMinTol = 1e-14;
inline constexpr double kMaxTol = 1e-3;

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

QuadratureResult integrate_finite(const RealFunction& f, double lo, double hi,
                                  double tol);

// Integrand that also receives x - lo and hi - x, each accurate to full
// relative precision near its endpoint. Needed when f is singular at an
// endpoint other than 0, where hi - x would otherwise round to 0.
using EndpointFunction = std::function<double(double x, double to_lo, double to_hi)>;

QuadratureResult integrate_finite(const EndpointFunction& f, double lo,
                                  double hi, double tol);

QuadratureResult integrate_semi_infinite(const RealFunction& f, double lo,
                                         double tol);

// Split at 0; the left half is integrated as f(-x) on (0, inf).
QuadratureResult integrate_real_line(const RealFunction& f, double tol);

// Pieces [lo,p1], [p1,p2], ..., [pn, inf). Each piece gets tol/(n+1).
QuadratureResult integrate_with_splits(const RealFunction& f, double lo,
                                       const std::vector<double>& breakpoints,
                                       double tol);

// Finite interval with interior breakpoints.
QuadratureResult integrate_finite_with_splits(
    const RealFunction& f, double lo, double hi,
    const std::vector<double>& breakpoints, double tol);

QuadratureResult operator+(const QuadratureResult& a, const QuadratureResult& b);

}  // namespace schlomilch::quad
