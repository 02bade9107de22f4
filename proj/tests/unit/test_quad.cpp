#include <doctest.h>

#include <cmath>
#include <functional>
#include <thread>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/bessel.hpp>

#include "schlomilch/error.hpp"
#include "schlomilch/quad.hpp"

using namespace schlomilch;
using namespace schlomilch::quad;

namespace {

const double kSqrtPi = std::sqrt(M_PI);

void check_invariants(const QuadratureResult& r, double tol) {
  CHECK(r.evaluations > 0);
  CHECK(r.error_estimate >= 0.0);
  if (r.converged) CHECK(r.error_estimate <= tol);
}

struct Smoke {
  const char* name;
  std::function<QuadratureResult(double)> run;
  double reference;
};

std::vector<Smoke> smoke_set() {
  return {
      {"exp(-t) on [0,1]", [](double t) { return integrate_finite([](double x) { return std::exp(-x); }, 0, 1, t); }, 1 - std::exp(-1.0)},
      {"sqrt(x) on [0,1]", [](double t) { return integrate_finite([](double x) { return std::sqrt(x); }, 0, 1, t); }, 2.0 / 3},
      {"log(x) on [0,1]", [](double t) { return integrate_finite([](double x) { return std::log(x); }, 0, 1, t); }, -1.0},
      {"1/sqrt(x) on [0,1]", [](double t) { return integrate_finite([](double x) { return 1 / std::sqrt(x); }, 0, 1, t); }, 2.0},
      {"cos on [0,pi/2]", [](double t) { return integrate_finite([](double x) { return std::cos(x); }, 0, M_PI / 2, t); }, 1.0},
      {"1/(1+x^2) on [-1,1]", [](double t) { return integrate_finite([](double x) { return 1 / (1 + x * x); }, -1, 1, t); }, M_PI / 2},
      {"exp(-y^2) on [0,inf)", [](double t) { return integrate_semi_infinite([](double y) { return std::exp(-y * y); }, 0, t); }, kSqrtPi / 2},
      {"x^2/(x^2+1)^2 on [0,inf)", [](double t) { return integrate_semi_infinite([](double x) { return x * x / ((x * x + 1) * (x * x + 1)); }, 0, t); }, M_PI / 4},
      {"exp(-x) on [2,inf)", [](double t) { return integrate_semi_infinite([](double x) { return std::exp(-x); }, 2, t); }, std::exp(-2.0)},
      {"1/(1+x^2) on R", [](double t) { return integrate_real_line([](double x) { return 1 / (1 + x * x); }, t); }, M_PI},
      {"exp(-u^2) on R", [](double t) { return integrate_real_line([](double u) { return std::exp(-u * u); }, t); }, kSqrtPi},
      {"exp(-x)/sqrt(x) on [0,inf)", [](double t) { return integrate_semi_infinite([](double x) { return std::exp(-x) / std::sqrt(x); }, 0, t); }, kSqrtPi},
  };
}

}  // namespace

TEST_CASE("finite interval examples") {
  EndpointFunction arcsine = [](double, double to_lo, double to_hi) {
    return 1 / std::sqrt(to_lo * to_hi);
  };
  auto r = integrate_finite(arcsine, 0.0, 1.0, 1e-10);
  CHECK(r.converged);
  CHECK(std::fabs(r.value - M_PI) <= 1e-10);
  check_invariants(r, 1e-10);

  auto e = integrate_finite([](double t) { return std::exp(-t); }, 0.0, 1.0, 1e-12);
  CHECK(std::fabs(e.value - (1 - std::exp(-1.0))) <= 1e-12);

  // Frullani-type [0,1] integral. Oracle: 2 pi/e (I0(1) + I1(1)) from Boost,
  // and an independent Boost tanh-sinh run.
  EndpointFunction frullani = [](double t, double to_lo, double to_hi) {
    return (-std::expm1(-2 * t) / t) / std::sqrt(to_lo * to_hi);
  };
  auto fr = integrate_finite(frullani, 0.0, 1.0, 1e-12);
  double closed = 2 * M_PI / std::exp(1.0) *
                  (boost::math::cyl_bessel_i(0, 1.0) + boost::math::cyl_bessel_i(1, 1.0));
  boost::math::quadrature::tanh_sinh<double> ts;
  double boost_value = ts.integrate(
      [](double t, double tc) {
        double one_minus = t > 0.5 ? tc : 1 - t;
        return (-std::expm1(-2 * t) / t) / std::sqrt(t * one_minus);
      },
      0.0, 1.0);
  CHECK(fr.converged);
  CHECK(std::fabs(fr.value - closed) <= 1e-11);
  CHECK(std::fabs(fr.value - boost_value) <= 1e-10);
  CHECK(fr.value == doctest::Approx(4.2327935900).epsilon(1e-10));
}

TEST_CASE("semi-infinite examples") {
  auto a = integrate_semi_infinite([](double y) { return std::exp(-y * y); }, 0.0, 1e-12);
  CHECK(std::fabs(a.value - kSqrtPi / 2) <= 1e-12);
  auto b = integrate_semi_infinite(
      [](double x) { return x * x / ((x * x + 1) * (x * x + 1)); }, 0.0, 1e-12);
  CHECK(std::fabs(b.value - M_PI / 4) <= 1e-12);
  auto c = integrate_semi_infinite(
      [](double x) {
        double d = x - 1 / x;
        return std::exp(-d * d);
      },
      0.0, 1e-12);
  CHECK(std::fabs(c.value - kSqrtPi / 2) <= 1e-12);
  for (const auto& r : {a, b, c}) check_invariants(r, 1e-12);
}

TEST_CASE("real line examples") {
  auto a = integrate_real_line([](double u) { return std::exp(-u * u); }, 1e-12);
  CHECK(std::fabs(a.value - kSqrtPi) <= 1e-12);
  auto b = integrate_real_line(
      [](double u) {
        double s = std::sinh(u);
        return std::exp(u - s * s);
      },
      1e-12);
  CHECK(std::fabs(b.value - kSqrtPi) <= 1e-12);
  auto c = integrate_real_line(
      [](double x) {
        double d = x - 1 / x;
        return std::exp(-d * d);
      },
      1e-12);
  CHECK(std::fabs(c.value - kSqrtPi) <= 1e-12);
}

TEST_CASE("splits") {
  auto gauss = [](double x) { return std::exp(-x * x); };
  auto whole = integrate_semi_infinite(gauss, 0.0, 1e-12);
  auto split = integrate_with_splits(gauss, 0.0, {1.0}, 1e-12);
  CHECK(std::fabs(split.value - kSqrtPi / 2) <= 1e-12);
  auto none = integrate_with_splits(gauss, 0.0, {}, 1e-12);
  CHECK(none.value == whole.value);

  // phi(z) = z (z^2 - 4)/(z^2 - 1), pole at 1.
  auto composed = [](double x) {
    double p = x * (x * x - 4) / (x * x - 1);
    return std::exp(-p * p);
  };
  auto m = integrate_with_splits(composed, 0.0, {1.0}, 1e-11);
  CHECK(m.converged);
  CHECK(std::fabs(m.value - kSqrtPi / 2) <= 1e-10);

  auto fin = integrate_finite_with_splits([](double x) { return std::fabs(x - 0.3); }, 0.0, 1.0,
                                          {0.3}, 1e-12);
  CHECK(std::fabs(fin.value - (0.045 + 0.245)) <= 1e-12);

  CHECK_THROWS_AS(integrate_with_splits(gauss, 0.0, {2.0, 1.0}, 1e-10), PreconditionError);
  CHECK_THROWS_AS(integrate_with_splits(gauss, 1.0, {0.5}, 1e-10), PreconditionError);
}

TEST_CASE("property: splitting a smooth integrand changes the value by at most 2 tol") {
  std::vector<std::function<double(double)>> fs = {
      [](double x) { return std::exp(-x * x); },
      [](double x) { return 1 / (1 + x * x); },
      [](double x) { return std::exp(-x) * std::cos(x); },
      [](double x) { return x * std::exp(-x * x / 3); },
  };
  for (double tol : {1e-6, 1e-9, 1e-12}) {
    for (const auto& f : fs) {
      double whole = integrate_semi_infinite(f, 0.0, tol).value;
      for (std::vector<double> bps : {std::vector<double>{0.5}, {1.0, 2.0}, {0.1, 0.7, 3.0}}) {
        double pieces = integrate_with_splits(f, 0.0, bps, tol).value;
        CHECK(std::fabs(pieces - whole) <= 2 * tol);
      }
    }
  }
}

TEST_CASE("property: halving tol does not move the value away from the reference") {
  // Slack of a few ulps of the reference: both runs can sit at rounding level.
  for (const auto& s : smoke_set()) {
    for (double tol = 1e-4; tol >= 1e-13; tol /= 10) {
      double coarse = std::fabs(s.run(tol).value - s.reference);
      double fine = std::fabs(s.run(tol / 2).value - s.reference);
      CAPTURE(s.name);
      CAPTURE(tol);
      CHECK(fine <= coarse + 8 * 2.2e-16 * std::fabs(s.reference));
    }
  }
}

TEST_CASE("smoke set reaches the requested accuracy") {
  for (const auto& s : smoke_set()) {
    auto r = s.run(1e-12);
    CAPTURE(s.name);
    CHECK(r.converged);
    check_invariants(r, 1e-12);
    CHECK(std::fabs(r.value - s.reference) <= 1e-11 * std::max(1.0, std::fabs(s.reference)));
  }
}

TEST_CASE("non-finite values") {
  // Interior pole: the midpoint node hits it exactly.
  CHECK_THROWS_AS(integrate_finite([](double x) { return 1 / (x - 0.5); }, 0.0, 1.0, 1e-10),
                  IntegrationError);
  CHECK_THROWS_AS(integrate_semi_infinite([](double x) { return std::exp(x); }, 0.0, 1e-10),
                  IntegrationError);
  // Endpoint singularity returning inf at the endpoint itself is tolerated.
  auto r = integrate_finite([](double x) { return x == 0 ? INFINITY : 1 / std::sqrt(x); }, 0.0,
                            1.0, 1e-10);
  CHECK(std::fabs(r.value - 2.0) <= 1e-9);
}

TEST_CASE("divergent integrals report non-convergence") {
  auto r = integrate_semi_infinite([](double x) { return 1 / (1 + x); }, 0.0, 1e-8);
  CHECK_FALSE(r.converged);
  CHECK(r.evaluations > 0);
}

TEST_CASE("preconditions") {
  auto f = [](double x) { return x; };
  CHECK_THROWS_AS(integrate_finite(f, 0.0, 1.0, 1e-16), PreconditionError);
  CHECK_THROWS_AS(integrate_finite(f, 1.0, 0.0, 1e-8), PreconditionError);
  CHECK_THROWS_AS(integrate_semi_infinite(f, -INFINITY, 1e-8), PreconditionError);
}

TEST_CASE("concurrent calls agree") {
  auto f = [](double x) { return std::exp(-x) * std::sin(x) * std::sin(x); };
  double reference = integrate_semi_infinite(f, 0.0, 1e-12).value;
  std::vector<double> got(4);
  std::vector<std::thread> pool;
  for (int i = 0; i < 4; ++i)
    pool.emplace_back([&, i] { got[i] = integrate_semi_infinite(f, 0.0, 1e-12).value; });
  for (auto& t : pool) t.join();
  for (double g : got) CHECK(g == reference);
  CHECK(std::fabs(reference - 0.4) <= 1e-12);
}
