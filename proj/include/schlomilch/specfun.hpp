#pragma once

// Real special functions used by the closed forms. All functions are pure.
// Domain violations throw DomainError, overflow and out-of-range arguments
// throw RangeError.

namespace schlomilch::specfun {

struct SpecialValue {
  double value;
  double abs_error;  // estimated, >= 0
};

// Gamma family, positive arguments only.
double gamma(double x);  // x in (0, 170]
double log_gamma(double x);
double beta(double p, double q);
double pochhammer(double a, int k);

// Lower regularized incomplete gamma P(a, x), a > 0, x >= 0.
double regularized_gamma_p(double a, double x);

// Orders 0 and 1, |x| <= 30.
double bessel_i(int order, double x);
double bessel_j(int order, double x);

double erf(double x);
double erfc(double x);

// |x| <= 8.
double sine_integral(double x);

// s in [0.1, 30]. zeta additionally rejects s == 1.
double eta(double s);
double zeta(double s);
double lambda_cap(double s);  // eta(s) * gamma(s) / 2

// Carlson's symmetric integral; at most one of x, y, z may be zero.
double carlson_rf(double x, double y, double z);
double elliptic_k(double k);             // 0 <= k < 1
double elliptic_f(double phi, double k);  // phi in [0, pi/2]

// Generalized hypergeometric 2F3, |z| <= 100.
double hyp2f3(double a1, double a2, double b1, double b2, double b3, double z);

SpecialValue gamma_value(double x);
SpecialValue bessel_i_value(int order, double x);
SpecialValue bessel_j_value(int order, double x);
SpecialValue erf_value(double x);
SpecialValue sine_integral_value(double x);
SpecialValue eta_value(double s);
SpecialValue zeta_value(double s);
SpecialValue elliptic_k_value(double k);
SpecialValue elliptic_f_value(double phi, double k);
SpecialValue hyp2f3_value(double a1, double a2, double b1, double b2, double b3,
                          double z);

}  // namespace schlomilch::specfun
