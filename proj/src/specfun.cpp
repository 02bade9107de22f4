#include "schlomilch/specfun.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "schlomilch/error.hpp"

namespace schlomilch::specfun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = std::numbers::pi;

// Lanczos coefficients, g = 671/128, 14 terms.
constexpr double kLanczosG = 5.24218750000000000;
constexpr std::array<double, 14> kLanczos{
    57.1562356658629235,     -59.5979603554754912,
    14.1360979747417471,     -0.491913816097620199,
    .339946499848118887e-4,  .465236289270485756e-4,
    -.983744753048795646e-4, .158088703224912494e-3,
    -.210264441724104883e-3, .217439618115212643e-3,
    -.164318106536763890e-3, .844182239838527433e-4,
    -.261908384015814087e-4, .368991826595316234e-5};

double lanczos_series(double x) {
  double ser = 0.999999999999997092;
  double y = x;
  for (double c : kLanczos) ser += c / ++y;
  return ser;
}

void require_positive(double x, const char* who) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw DomainError(std::string(who) + ": argument must be positive and finite");
}

using Big = boost::multiprecision::cpp_bin_float_50;

// Power series for I_nu / J_nu (nu in {0,1}); sign = +1 for I, -1 for J.
template <class Real>
Real bessel_series(int order, Real x, int sign, Real* abs_sum) {
  using std::abs;
  Real q = x * x / 4;
  Real term = order == 0 ? Real(1) : x / 2;
  Real sum = term;
  Real mag = abs(term);
  for (int k = 1; k < 400; ++k) {
    term *= q / (Real(k) * Real(k + order));
    if (sign < 0) term = -term;
    sum += term;
    mag += abs(term);
    if (abs(term) <= abs(sum) * Real(1e-17)) break;
  }
  if (abs_sum) *abs_sum = mag;
  return sum;
}

SpecialValue bessel_value(int order, double x, int sign, const char* who) {
  if (order != 0 && order != 1)
    throw DomainError(std::string(who) + ": order must be 0 or 1");
  if (!std::isfinite(x) || std::fabs(x) > 30.0)
    throw RangeError(std::string(who) + ": |x| > 30");
  long double mag = 0;
  long double s = bessel_series<long double>(order, x, sign, &mag);
  if (std::fabs(static_cast<double>(s)) * 1e3 >= static_cast<double>(mag)) {
    double v = static_cast<double>(s);
    return {v, 4 * kEps * std::fabs(v)};
  }
  // Heavy cancellation (J at large |x|): redo with 50 digits.
  Big bmag = 0;
  Big bs = bessel_series<Big>(order, Big(x), sign, &bmag);
  double v = bs.convert_to<double>();
  return {v, 2 * kEps * std::fabs(v) + 1e-40 * bmag.convert_to<double>()};
}

// erfc(x) for x >= 2 by the Laplace continued fraction (modified Lentz).
double erfc_cf(double x) {
  constexpr double tiny = 1e-300;
  double f = x;
  double c = x;
  double d = 0.0;
  for (int n = 1; n < 5000; ++n) {
    double an = n * 0.5;
    d = x + an * d;
    if (d == 0) d = tiny;
    c = x + an / c;
    if (c == 0) c = tiny;
    d = 1.0 / d;
    double delta = c * d;
    f *= delta;
    if (std::fabs(delta - 1.0) < kEps) break;
  }
  return std::exp(-x * x) / (std::sqrt(kPi) * f);
}

// erf(x) for |x| < 3: e^{-x^2} * sum 2^n x^{2n+1} / (2n+1)!! * 2/sqrt(pi).
// All terms positive.
double erf_series(double x) {
  double x2 = x * x;
  long double term = x;
  long double sum = term;
  for (int n = 1; n < 500; ++n) {
    term *= 2.0L * x2 / (2 * n + 1);
    sum += term;
    if (term < sum * 1e-19L) break;
  }
  return static_cast<double>(sum * std::exp(-static_cast<long double>(x2)) *
                             2.0L / std::sqrt(static_cast<long double>(kPi)));
}

// Borwein's accelerated alternating series with n = 40.
long double eta_borwein(double s) {
  constexpr int n = 40;
  std::array<long double, n + 1> d{};
  long double term = 1.0L;
  long double acc = term;
  d[0] = acc;
  for (int i = 0; i < n; ++i) {
    term *= 4.0L * (n + i) * (n - i) / ((2.0L * i + 1) * (2.0L * i + 2));
    acc += term;
    d[i + 1] = acc;
  }
  long double sum = 0.0L;
  for (int k = 0; k < n; ++k) {
    long double v = (d[n] - d[k]) / d[n] * std::pow(static_cast<long double>(k + 1),
                                                     -static_cast<long double>(s));
    sum += (k % 2 == 0) ? v : -v;
  }
  return sum;
}

void check_s(double s, const char* who) {
  if (!(s >= 0.1 && s <= 30.0))
    throw RangeError(std::string(who) + ": s outside [0.1, 30]");
}

}  // namespace

double gamma(double x) { return gamma_value(x).value; }

SpecialValue gamma_value(double x) {
  require_positive(x, "gamma");
  if (x > 170.0) throw RangeError("gamma: overflow for x > 170");
  if (x == std::floor(x) && x <= 23.0) {
    double f = 1.0;
    for (int i = 2; i < static_cast<int>(x); ++i) f *= i;
    return {f, 0.0};
  }
  double t = x + kLanczosG;
  double h = std::pow(t, (x + 0.5) / 2);
  double v = h * (h * std::exp(-t)) * (2.5066282746310005 * lanczos_series(x) / x);
  return {v, 8 * kEps * v};
}

double log_gamma(double x) {
  require_positive(x, "log_gamma");
  double t = x + kLanczosG;
  return (x + 0.5) * std::log(t) - t +
         std::log(2.5066282746310005 * lanczos_series(x) / x);
}

double beta(double p, double q) {
  require_positive(p, "beta");
  require_positive(q, "beta");
  if (p + q < 170.0) return gamma(p) * gamma(q) / gamma(p + q);
  return std::exp(log_gamma(p) + log_gamma(q) - log_gamma(p + q));
}

double pochhammer(double a, int k) {
  if (k < 0) throw DomainError("pochhammer: negative k");
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= a + i;
  return r;
}

double regularized_gamma_p(double a, double x) {
  require_positive(a, "regularized_gamma_p");
  if (!(x >= 0.0)) throw DomainError("regularized_gamma_p: x must be >= 0");
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;
  double lg = log_gamma(a);
  if (x < a + 1.0) {
    double ap = a;
    double del = 1.0 / a;
    double sum = del;
    for (int n = 0; n < 10000; ++n) {
      ap += 1.0;
      del *= x / ap;
      sum += del;
      if (std::fabs(del) < std::fabs(sum) * kEps) break;
    }
    return sum * std::exp(-x + a * std::log(x) - lg);
  }
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 10000; ++i) {
    double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) break;
  }
  return 1.0 - std::exp(-x + a * std::log(x) - lg) * h;
}

double bessel_i(int order, double x) { return bessel_i_value(order, x).value; }
double bessel_j(int order, double x) { return bessel_j_value(order, x).value; }

SpecialValue bessel_i_value(int order, double x) {
  return bessel_value(order, x, +1, "bessel_i");
}
SpecialValue bessel_j_value(int order, double x) {
  return bessel_value(order, x, -1, "bessel_j");
}

double erf(double x) { return erf_value(x).value; }

SpecialValue erf_value(double x) {
  if (std::isnan(x)) throw DomainError("erf: NaN argument");
  double ax = std::fabs(x);
  double v = ax < 3.0 ? erf_series(ax) : 1.0 - erfc_cf(ax);
  v = std::min(v, 1.0);
  return {std::copysign(v, x), 2 * kEps * v};
}

double erfc(double x) {
  if (std::isnan(x)) throw DomainError("erfc: NaN argument");
  if (x >= 2.0) return erfc_cf(x);
  if (x <= -2.0) return 2.0 - erfc_cf(-x);
  return 1.0 - erf(x);
}

double sine_integral(double x) { return sine_integral_value(x).value; }

SpecialValue sine_integral_value(double x) {
  if (!std::isfinite(x) || std::fabs(x) > 8.0)
    throw RangeError("sine_integral: |x| > 8");
  long double lx = x;
  long double x2 = lx * lx;
  long double power = lx;  // x^{2k+1} / (2k+1)!
  long double sum = lx;
  long double mag = std::fabs(lx);
  for (int k = 1; k < 200; ++k) {
    power *= -x2 / ((2.0L * k) * (2.0L * k + 1));
    long double t = power / (2 * k + 1);
    sum += t;
    mag += std::fabs(t);
    if (std::fabs(t) < 1e-22L * (1 + std::fabs(sum))) break;
  }
  return {static_cast<double>(sum),
          kEps * std::fabs(static_cast<double>(sum)) +
              1e-18 * static_cast<double>(mag)};
}

double eta(double s) { return eta_value(s).value; }

SpecialValue eta_value(double s) {
  check_s(s, "eta");
  double v = static_cast<double>(eta_borwein(s));
  return {v, 16 * kEps * std::fabs(v)};
}

double zeta(double s) { return zeta_value(s).value; }

SpecialValue zeta_value(double s) {
  check_s(s, "zeta");
  if (s == 1.0) throw DomainError("zeta: pole at s = 1");
  double denom = -std::expm1((1.0 - s) * std::numbers::ln2);
  double v = eta(s) / denom;
  return {v, 32 * kEps * std::fabs(v)};
}

double lambda_cap(double s) {
  check_s(s, "lambda_cap");
  return eta(s) * gamma(s) / 2.0;
}

double carlson_rf(double x, double y, double z) {
  if (x < 0 || y < 0 || z < 0 || std::isnan(x + y + z))
    throw DomainError("carlson_rf: negative argument");
  if ((x == 0) + (y == 0) + (z == 0) > 1)
    throw DomainError("carlson_rf: more than one zero argument");
  const double tol = std::pow(4.0 * kEps, 1.0 / 6.0);
  double xn = x, yn = y, zn = z;
  double mu = 0, dx = 0, dy = 0, dz = 0;
  for (int iter = 0; iter < 100; ++iter) {
    mu = (xn + yn + zn) / 3;
    dx = (mu - xn) / mu;
    dy = (mu - yn) / mu;
    dz = (mu - zn) / mu;
    if (std::fmax(std::fabs(dx), std::fmax(std::fabs(dy), std::fabs(dz))) < tol)
      break;
    double sx = std::sqrt(xn), sy = std::sqrt(yn), sz = std::sqrt(zn);
    double lambda = sx * sy + sy * sz + sz * sx;
    xn = (xn + lambda) / 4;
    yn = (yn + lambda) / 4;
    zn = (zn + lambda) / 4;
  }
  double e2 = dx * dy - dz * dz;
  double e3 = dx * dy * dz;
  return (1 - e2 / 10 + e3 / 14 + e2 * e2 / 24 - 3 * e2 * e3 / 44) / std::sqrt(mu);
}

double elliptic_k(double k) { return elliptic_k_value(k).value; }

SpecialValue elliptic_k_value(double k) {
  if (!(k >= 0.0 && k < 1.0)) throw DomainError("elliptic_k: k must be in [0,1)");
  double v = carlson_rf(0.0, 1.0 - k * k, 1.0);
  return {v, 8 * kEps * v};
}

double elliptic_f(double phi, double k) { return elliptic_f_value(phi, k).value; }

SpecialValue elliptic_f_value(double phi, double k) {
  if (!(k >= 0.0 && k < 1.0)) throw DomainError("elliptic_f: k must be in [0,1)");
  if (!(phi >= 0.0 && phi <= kPi / 2))
    throw DomainError("elliptic_f: phi must be in [0, pi/2]");
  if (phi == 0.0) return {0.0, 0.0};
  double s = std::sin(phi);
  double c = std::cos(phi);
  double v = s * carlson_rf(c * c, 1.0 - k * k * s * s, 1.0);
  return {v, 8 * kEps * v};
}

double hyp2f3(double a1, double a2, double b1, double b2, double b3, double z) {
  return hyp2f3_value(a1, a2, b1, b2, b3, z).value;
}

SpecialValue hyp2f3_value(double a1, double a2, double b1, double b2, double b3,
                          double z) {
  for (double b : {b1, b2, b3})
    if (b <= 0 && b == std::floor(b))
      throw DomainError("hyp2f3: lower parameter is a non-positive integer");
  if (!(std::fabs(z) <= 100.0)) throw RangeError("hyp2f3: |z| > 100");
  long double term = 1.0L;
  long double sum = 1.0L;
  long double mag = 1.0L;
  int small_run = 0;
  for (int k = 0; k < 2000; ++k) {
    long double ratio = (a1 + k) * static_cast<long double>(a2 + k) /
                        ((b1 + k) * static_cast<long double>(b2 + k) * (b3 + k) * (k + 1)) * z;
    term *= ratio;
    sum += term;
    mag += std::fabs(term);
    bool small = std::fabs(term) <= 1e-17L * std::fabs(sum);
    small_run = small ? small_run + 1 : 0;
    if (term == 0.0L || (small_run >= 3 && std::fabs(ratio) < 1.0L)) break;
  }
  double v = static_cast<double>(sum);
  return {v, 4 * kEps * std::fabs(v) + 1e-18 * static_cast<double>(mag)};
}

}  // namespace schlomilch::specfun
