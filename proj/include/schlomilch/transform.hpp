#pragma once

// Transformed integrands and numerical checks of the Cauchy-Schlomilch
// identity and its variants.
//
// Unless noted otherwise, an integrand f takes the squared argument: the
// identity reads  int_0^inf f((a x - b/x)^2) dx = (1/a) int_0^inf f(y^2) dy.

#include <string>
#include <vector>

#include "schlomilch/bigrational.hpp"
#include "schlomilch/quad.hpp"
#include "schlomilch/real_function.hpp"
#include "schlomilch/report.hpp"

namespace schlomilch::transform {

struct TransformSpec {
  double a;
  double b;

  TransformSpec(double a, double b);  // throws PreconditionError unless a, b > 0
};

// h(x) = sum_k c[k] x^{2k+1}.
struct OddPolynomial {
  std::vector<BigRational> c;

  explicit OddPolynomial(std::vector<BigRational> coefficients);
  double operator()(double x) const;
};

enum class SelfInverseKind { reciprocal, log_expm1, exp_log, log_sinh_ratio, sinh_asinh };

// A continuous decreasing involution of (domain_start, inf).
//   reciprocal      s(x) = b / x
//   log_expm1       s(x) = x - log(e^{ax} - 1)/a
//   exp_log         s(x) = exp(a / log x)          on (1, inf)
//   log_sinh_ratio  s(x) = -log(tanh(a x / 2))/a
//   sinh_asinh      s(x) = sinh(a / asinh x)
struct SelfInverseFn {
  SelfInverseKind kind;
  double param;  // b for reciprocal, alpha otherwise

  SelfInverseFn(SelfInverseKind kind, double param);

  double domain_start() const;
  double fixed_point() const;  // s(x0) = x0
  std::string name() const;

  // Throws DomainError when x <= domain_start().
  double operator()(double x) const;
  // Same formula without the domain check; returns NaN outside the domain.
  double eval(double x) const;
};

SelfInverseKind parse_kind(const std::string& name);  // throws PreconditionError
std::string kind_name(SelfInverseKind kind);

// phi(z) = z prod_j (z^2 - zeros_j^2) / (z^2 - poles_j^2).
struct MeromorphicMap {
  std::vector<double> poles;  // strictly increasing, > 0
  std::vector<double> zeros;  // > 0, same length

  MeromorphicMap(std::vector<double> poles, std::vector<double> zeros);

  double operator()(double z) const;
  // Res(phi; poles_j) from the factored form.
  std::vector<double> residues() const;
};

// Maps used by the test suite: N = 1, 2, 3, each with interlacing zeros.
const std::vector<MeromorphicMap>& shipped_maps();

RealFunction cs_integrand(RealFunction f, TransformSpec spec);

// Quadrature result that absorbs IntegrationError as a non-converged result.
struct Integral {
  quad::QuadratureResult result;
  std::string error;  // empty unless quadrature threw
};

// (1/scale) * int_0^inf f(y^2) dy.
Integral rhs_integral(const RealFunction& f, double scale, double quad_tol);

VerificationReport verify_cs(const RealFunction& f, TransformSpec spec, double tol);

// d_k = sum_{j>=k} binom(k+j, 2k) (2j+1)/(2k+1) (ab)^{j-k} c_j.
std::vector<BigRational> basis_change(const OddPolynomial& c, const BigRational& a,
                                      const BigRational& b);

// g(u) = u (sum_k d_k u^k)^2.
RealFunction g_polynomial(const std::vector<BigRational>& d);

VerificationReport verify_corollary(const OddPolynomial& c, const RealFunction& f,
                                    TransformSpec spec, double tol);

// int_0^inf f(b x^2/(x^4+2ax^2+1)) dx = scale * int_0^1 integrand(t) dt,
// with a* = b/(2(1+a)), scale = sqrt(b)/(2 sqrt(a*)),
// integrand(t) = f(a* t) / (t sqrt(t(1-t))).
struct ReducedIntegral {
  quad::EndpointFunction integrand;
  double scale;
  double a_star;
};

ReducedIntegral alter_reduce(RealFunction f, double a, double b);

// Integrand of the left side: x -> f(b x^2/(x^4+2ax^2+1)).
RealFunction rational_argument_integrand(RealFunction f, double a, double b);

VerificationReport verify_alter_reduce(const RealFunction& f, double a, double b,
                                       double tol);

// (pi / (2^{3/2} sqrt(1+a))) sum_{n<M} c_{n+1} binom(2n,n) u^n, u = 1/(8(1+a)).
// coefficients[n] holds c_{n+1}. M <= 60.
double series_value(const std::vector<double>& coefficients, double a);

RealFunction power_substituted_integrand(RealFunction f, double a, double r);

VerificationReport verify_power_substitution(const RealFunction& f, double a, double r,
                                             double tol);

// Here f is an even function of its argument (not the squared one):
// int_0^inf f(phi(x)) dx = int_0^inf f(x) dx.
VerificationReport meromorphic_transform_check(const MeromorphicMap& map,
                                               const RealFunction& f, double tol);

double self_inverse(const SelfInverseFn& s, double x);

// int_{start/a}^inf f((a x - s(a x))^2) dx = (1/a) int_0^inf f(y^2) dy.
VerificationReport extended_check(const SelfInverseFn& s, const RealFunction& f,
                                  double a, double tol);

}  // namespace schlomilch::transform
