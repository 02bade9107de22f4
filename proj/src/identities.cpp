#include "schlomilch/identities.hpp"

#include <cmath>
#include <functional>

#include "schlomilch/bigrational.hpp"
#include "schlomilch/error.hpp"
#include "schlomilch/specfun.hpp"

namespace schlomilch {

namespace identities {

namespace {

void check_k(int k, int max_k, const char* who) {
  if (k < 0 || k > max_k)
    throw PreconditionError(std::string(who) + ": k must be in [0, " +
                            std::to_string(max_k) + "]");
}

}  // namespace

bool wz1_check(int k) {
  check_k(k, 1000, "wz1_check");
  BigRational lhs = 0;
  BigInt choose_kj = 1;     // binom(k, j)
  BigInt central = 1;       // binom(j, floor(j/2))
  for (int j = 0; j <= k; ++j) {
    BigRational term(choose_kj * central, BigInt(1) << j);
    if (j % 2) lhs -= term; else lhs += term;
    choose_kj = choose_kj * (k - j) / (j + 1);
    int m = j / 2;
    if (j % 2 == 0)
      central = central * (2 * m + 1) / (m + 1);
    else
      central *= 2;
  }
  BigRational rhs(binomial(2L * k, k), (BigInt(1) << k) * (k + 1));
  return lhs == rhs;
}

bool se_so_check(int k) {
  check_k(k, 1000, "se_so_check");
  BigRational se = 0;
  BigRational so = 0;
  BigInt choose_even = 1;  // binom(k, 2j)
  BigInt central = 1;      // binom(2j, j)
  for (int j = 0; 2 * j <= k; ++j) {
    se += BigRational(choose_even * central, BigInt(1) << (2 * j));
    if (2 * j + 1 <= k) {
      BigInt choose_odd = choose_even * (k - 2 * j) / (2 * j + 1);  // binom(k, 2j+1)
      BigInt near_central = central * (2 * j + 1) / (j + 1);         // binom(2j+1, j)
      so += BigRational(choose_odd * near_central, BigInt(1) << (2 * j + 1));
    }
    choose_even = choose_even * (k - 2 * j) * (k - 2 * j - 1) / ((2 * j + 1) * (2 * j + 2));
    central = central * 2 * (2 * j + 1) / (j + 1);
  }
  BigRational base(binomial(2L * k, k), BigInt(1) << k);
  return se == base && so == base * BigRational(k, k + 1);
}

bool lemma62_sums_check(int k) {
  check_k(k, 300, "lemma62_sums_check");
  BigInt fk = factorial(k);
  // Terms advance by exact rational ratios from j to j + 1.
  BigRational first = BigRational(BigInt(1), fk * fk);
  BigRational second = BigRational(BigInt(1), fk * fk * (k + 1));
  BigRational sum1 = 0;
  BigRational sum2 = 0;
  for (int j = 0; j <= k; ++j) {
    sum1 += first;
    sum2 += second;
    first *= BigRational(BigInt(4) * (k - j) * (k - j), BigInt(2 * j + 1) * (2 * j + 2));
    second *= BigRational(BigInt(4) * (k - j) * (k - j + 1), BigInt(2 * j + 2) * (2 * j + 3));
  }
  BigRational rhs1(binomial(4L * k, 2L * k), factorial(2L * k));
  BigRational rhs2(binomial(4L * k + 2, 2L * k + 1) * (4 * k + 3), factorial(2L * k + 3));
  return sum1 == rhs1 && sum2 == rhs2;
}

double h_series_identity_check(double x, int terms) {
  if (!(std::fabs(x) <= 2.0)) throw PreconditionError("h_series: |x| must be <= 2");
  if (terms < 40) throw PreconditionError("h_series: need at least 40 terms");
  long double term = 1.0L;
  long double sum = 0.0L;
  for (int n = 0; n < terms; ++n) {
    sum += term;
    term *= 2.0L * (2 * n + 1) / ((n + 1.0L) * (n + 2.0L)) * x;
  }
  double closed = std::exp(2 * x) *
                  (specfun::bessel_i(0, 2 * x) - specfun::bessel_i(1, 2 * x));
  return std::fabs(static_cast<double>(sum) - closed);
}

double g_series(double c, int terms) {
  if (!(std::fabs(c) <= 2.0)) throw PreconditionError("g_series: |c| must be <= 2");
  long double c2 = static_cast<long double>(c) * c;
  long double term = 1.0L;
  long double sum = 0.0L;
  for (int k = 0; k < terms; ++k) {
    sum += term;
    term *= -c2 * (4.0L * k + 1) * (4.0L * k + 3) /
            ((2.0L * k + 1) * (k + 1.0L) * (k + 1.0L) * (2.0L * k + 3));
  }
  return static_cast<double>(sum);
}

TrigBesselResidual trig_bessel_identity_check(double c, int terms) {
  if (terms < 20) throw PreconditionError("trig_bessel: need at least 20 terms");
  double g = g_series(c, terms);
  double closed = specfun::bessel_j(0, 2 * c) * std::cos(2 * c) +
                  specfun::bessel_j(1, 2 * c) * std::sin(2 * c);
  double hyp = specfun::hyp2f3(0.25, 0.75, 0.5, 1.0, 1.5, -4 * c * c);
  return {std::fabs(g - closed), std::fabs(g - hyp)};
}

std::vector<DerivativeCheck> derivative_identity_checks() {
  using specfun::bessel_i;
  using specfun::bessel_j;
  struct Pair {
    const char* name;
    std::function<double(double)> antiderivative;
    std::function<double(double)> derivative;
  };
  const Pair pairs[] = {
      {"t e^-t (I0 + I1)",
       [](double t) { return t * std::exp(-t) * (bessel_i(0, t) + bessel_i(1, t)); },
       [](double t) { return std::exp(-t) * bessel_i(0, t); }},
      {"t (cos t J0 + sin t J1)",
       [](double t) {
         return t * (std::cos(t) * bessel_j(0, t) + std::sin(t) * bessel_j(1, t));
       },
       [](double t) { return std::cos(t) * bessel_j(0, t); }},
      {"(2x cos x - sin x) J0 + 2x sin x J1",
       [](double x) {
         return (2 * x * std::cos(x) - std::sin(x)) * bessel_j(0, x) +
                2 * x * std::sin(x) * bessel_j(1, x);
       },
       [](double x) {
         return bessel_j(0, x) * std::cos(x) + bessel_j(1, x) * std::sin(x);
       }},
  };
  constexpr double h = 1e-5;
  std::vector<DerivativeCheck> out;
  for (const auto& p : pairs) {
    double worst = 0.0;
    for (int i = 1; i <= 50; ++i) {
      double t = 2.0 * i / 50;
      double fd = (p.antiderivative(t + h) - p.antiderivative(t - h)) / (2 * h);
      worst = std::fmax(worst, std::fabs(fd - p.derivative(t)));
    }
    out.push_back({p.name, worst, worst <= 1e-8});
  }
  return out;
}

}  // namespace identities
}  // namespace schlomilch
