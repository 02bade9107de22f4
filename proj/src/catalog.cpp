#include "schlomilch/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <sstream>
#include <thread>

#include "schlomilch/error.hpp"
#include "schlomilch/quad.hpp"
#include "schlomilch/specfun.hpp"
#include "schlomilch/transform.hpp"

namespace schlomilch::catalog {

namespace {

namespace sf = specfun;

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kPi = std::numbers::pi;
constexpr double kSqrtPi = 1.7724538509055160273;

// ---- parameter shorthands -------------------------------------------------

Parameter positive(std::string name, double def, double hi = kInf) {
  return {std::move(name), def, 0.0, hi, true, false, false};
}

// a > -1, the admissible range of the quartic x^4 + 2 a x^2 + 1.
Parameter above_minus_one(std::string name, double def, double hi = 100.0) {
  return {std::move(name), def, -1.0, hi, true, false, false};
}

Parameter fixed(std::string name, double v) {
  return {std::move(name), v, v, v, false, false, false};
}

Parameter integer(std::string name, double def, double lo, double hi) {
  return {std::move(name), def, lo, hi, false, false, true};
}

// ---- shared integrand pieces ----------------------------------------------

// q = x^2 + 2a + x^-2 = (x^4 + 2 a x^2 + 1) / x^2; +inf at both ends.
double q(double x, double a) { return x * x + 2 * a + 1 / (x * x); }

// Half-line integrand split at the given points.
Integrand half_line(RealFunction f, std::vector<double> splits = {1.0}) {
  Integrand in;
  in.f = std::move(f);
  in.splits = std::move(splits);
  return in;
}

Integrand real_line(RealFunction f) {
  Integrand in;
  in.f = std::move(f);
  in.lo = -kInf;
  return in;
}

// c = b / (8 (1 + a)) of the Bessel closed forms.
double bessel_c(const Params& p) { return p.at("b") / (8 * (1 + p.at("a"))); }

double bessel_exp_rhs(double a, double b) {
  double c = b / (8 * (1 + a));
  return kPi * b * std::exp(-2 * c) / (std::pow(2.0, 1.5) * std::sqrt(1 + a)) *
         (sf::bessel_i(0, 2 * c) + sf::bessel_i(1, 2 * c));
}

double sin_rhs(double a, double b) {
  double c = b / (8 * (1 + a));
  return kPi * b / std::sqrt(8 * (1 + a)) *
         (sf::bessel_j(0, 2 * c) * std::cos(2 * c) +
          sf::bessel_j(1, 2 * c) * std::sin(2 * c));
}

double si_rhs(double a, double b) {
  double c = b / (8 * (1 + a));
  double s = std::sin(2 * c);
  double co = std::cos(2 * c);
  return kPi * std::sqrt(2 * (1 + a)) *
         ((4 * c * co - s) * sf::bessel_j(0, 2 * c) + 4 * c * s * sf::bessel_j(1, 2 * c));
}

// J0(w) cos w + J1(w) sin w, the bracket of the printed sine examples.
double trig_bessel(double w) {
  return sf::bessel_j(0, w) * std::cos(w) + sf::bessel_j(1, w) * std::sin(w);
}

double zeta_main_rhs(double s) {
  return std::pow(2.0, -s) * sf::gamma(s + 1) * sf::eta(s);
}

// x^{2s+1} / cosh^2(x^2), evaluated in logs: sech^2 t = 4 e^{-2t} / (1 + e^{-2t})^2.
RealFunction zeta_main_integrand(double s) {
  return [s](double x) {
    double t = x * x;
    return std::exp((2 * s + 1) * std::log(x) - 2 * t + 2 * std::numbers::ln2 -
                    2 * std::log1p(std::exp(-2 * t)));
  };
}

double erf_cs_rhs(double a, double mu) {
  double beta = std::sqrt(2 * (a + 1));
  return kPi * std::exp(2 * a * mu * mu) / (2 * beta) * sf::erfc(mu * beta);
}

std::string cross_bessel_range(const Params& p) {
  return 2 * bessel_c(p) <= 30.0 ? "" : "b / (4 (1 + a)) must not exceed 30";
}

std::string cross_si_range(const Params& p) {
  return p.at("b") / (2 * (1 + p.at("a"))) <= 8.0 ? ""
                                                  : "b / (2 (1 + a)) must not exceed 8";
}

IdentityEntry jones_entry(std::string id, transform::SelfInverseKind kind,
                          std::string formula, std::string source) {
  IdentityEntry e;
  e.id = std::move(id);
  e.formula = std::move(formula);
  e.source = std::move(source);
  e.parameters = {positive("alpha", 1.0, 10.0)};
  e.lhs = [kind](const Params& p) {
    transform::SelfInverseFn s(kind, p.at("alpha"));
    double start = s.domain_start();
    Integrand in;
    in.lo = start;
    in.splits = {s.fixed_point()};
    in.f = [s, start](double x) {
      if (!(x > start)) return 0.0;
      double y = x - s.eval(x);  // s -> +inf at the start of the domain
      return std::exp(-y * y);
    };
    return in;
  };
  e.rhs = [](const Params&) { return kSqrtPi / 2; };
  return e;
}

// ---- the four forms of the three-parameter integral -----------------------

// log q(x, a), accurate for x near 0 and near infinity.
double log_q(double x, double a) {
  if (x < 1.0) return -2 * std::log(x) + std::log1p(x * x * (2 * a + x * x));
  double y = 1 / x;
  return 2 * std::log(x) + std::log1p(y * y * (2 * a + y * y));
}

// log(x^p + 1) for p > 0.
double log1p_pow(double x, double p) {
  if (x < 1.0) return std::log1p(std::pow(x, p));
  return p * std::log(x) + std::log1p(std::pow(x, -p));
}

// (x^2/(x^4+2ax^2+1))^c = q^{-c}.
RealFunction master_form(int form, double a, double c, double b) {
  switch (form) {
    case 1:
      return [a, c, b](double x) {
        return std::exp(-c * log_q(x, a) + log1p_pow(x, 2) - log1p_pow(x, b) -
                        2 * std::log(x));
      };
    case 2:
      return [a, c](double x) { return std::exp(-c * log_q(x, a) - 2 * std::log(x)); };
    case 3:
      return [a, c](double x) { return std::exp(-c * log_q(x, a)); };
    default:
      return [a, c](double x) {
        return 0.5 * std::exp(-c * log_q(x, a) + log1p_pow(x, 2) - 2 * std::log(x));
      };
  }
}

double master_rhs(double a, double c) {
  return std::pow(2.0, -0.5 - c) * std::pow(1 + a, 0.5 - c) * sf::beta(c - 0.5, 0.5);
}

quad::QuadratureResult integrate(const Integrand& in, double tol) {
  double t = std::max(tol / std::fabs(in.factor), quad::kMinTol);
  quad::QuadratureResult r;
  if (in.lo == -kInf) r = quad::integrate_real_line(in.f, t);
  else if (std::isfinite(in.hi)) r = quad::integrate_finite_with_splits(in.f, in.lo, in.hi, in.splits, t);
  else r = quad::integrate_with_splits(in.f, in.lo, in.splits, t);
  r.value *= in.factor;
  r.error_estimate *= std::fabs(in.factor);
  return r;
}

std::string format_value(double v) {
  std::ostringstream out;
  out.precision(12);
  out << v;
  return out.str();
}

bool master_extra(const Params& p, double tol, VerificationReport& r) {
  const double a = p.at("a"), c = p.at("c");
  // The forms must agree to 1e-9 on their own, independent of tol.
  const double pair_tol = 1e-9;
  double qtol = quadrature_tol(pair_tol, r.rhs);
  std::vector<std::pair<std::string, double>> values;
  bool ok = true;
  auto add = [&](std::string name, RealFunction f) {
    try {
      auto q = quad::integrate_with_splits(f, 0.0, {1.0}, qtol);
      r.evaluations += q.evaluations;
      ok = ok && q.converged;
      values.emplace_back(std::move(name), q.value);
    } catch (const IntegrationError& e) {
      r.notes.push_back(std::string("master form ") + name + ": " + e.what());
      ok = false;
    }
  };
  for (double b : {1.0, 2.0, 7.0})
    add("I1(b=" + format_value(b) + ")", master_form(1, a, c, b));
  add("I2", master_form(2, a, c, 0));
  add("I3", master_form(3, a, c, 0));
  add("I4", master_form(4, a, c, 0));
  values.emplace_back("I1(b=" + format_value(p.at("b")) + ")", r.lhs);
  double worst = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      worst = std::max(worst, std::fabs(values[i].second - values[j].second));
  double scale = std::max(1.0, std::fabs(r.rhs));
  r.notes.push_back("max pairwise difference of the four forms: " + format_value(worst));
  (void)tol;
  return ok && worst <= pair_tol * scale;
}

bool sin_master_extra(const Params& p, double, VerificationReport& r) {
  const double a = p.at("a"), b = p.at("b");
  double hyp = kPi * b / (2 * std::sqrt(2 * (1 + a))) *
               sf::hyp2f3(0.25, 0.75, 0.5, 1.0, 1.5, -b * b / (16 * (1 + a) * (1 + a)));
  double diff = std::fabs(hyp - r.rhs);
  r.notes.push_back("2F3 form differs from Bessel form by " + format_value(diff));
  return diff <= 1e-12 * std::max(1.0, std::fabs(r.rhs));
}

std::vector<IdentityEntry> build() {
  std::vector<IdentityEntry> v;
  auto add = [&v](std::string id, std::string formula, std::string source,
                  std::vector<Parameter> params) -> IdentityEntry& {
    IdentityEntry e;
    e.id = std::move(id);
    e.formula = std::move(formula);
    e.source = std::move(source);
    e.parameters = std::move(params);
    v.push_back(std::move(e));
    return v.back();
  };

  // ---- Laplace-type integrals --------------------------------------------
  {
    auto& e = add("normal", "int_0^inf exp(-y^2) dy = sqrt(pi)/2",
                  "normal integral", {});
    e.lhs = [](const Params&) {
      return half_line([](double y) { return std::exp(-y * y); }, {});
    };
    e.rhs = [](const Params&) { return kSqrtPi / 2; };
  }
  {
    auto& e = add("gr_3_325",
                  "int_0^inf exp(-a x^2 - b/x^2) dx = (1/2) sqrt(pi/a) exp(-2 sqrt(ab))",
                  "Gradshteyn-Ryzhik 3.325, via f(u) = exp(-u)",
                  {positive("a", 1.0, 100.0), positive("b", 2.0, 100.0)});
    e.lhs = [](const Params& p) {
      double a = p.at("a"), b = p.at("b");
      return half_line([a, b](double x) { return std::exp(-a * x * x - b / (x * x)); },
                       {std::pow(b / a, 0.25)});
    };
    e.rhs = [](const Params& p) {
      double a = p.at("a"), b = p.at("b");
      return 0.5 * std::sqrt(kPi / a) * std::exp(-2 * std::sqrt(a * b));
    };
  }
  {
    auto& e = add("single_param", "int_0^inf exp(-c (t - 1/t)^2) dt = (1/2) sqrt(pi/c)",
                  "Laplace's integral in the single parameter c = ab",
                  {positive("c", 1.0, 100.0)});
    e.lhs = [](const Params& p) {
      double c = p.at("c");
      return half_line([c](double t) {
        double y = t - 1 / t;
        return std::exp(-c * y * y);
      });
    };
    e.rhs = [](const Params& p) { return 0.5 * std::sqrt(kPi / p.at("c")); };
  }
  {
    auto& e = add("gr_3_324_2",
                  "int_-inf^inf exp(-(x - b/x)^{2n}) dx = (1/n) Gamma(1/(2n))",
                  "Gradshteyn-Ryzhik 3.324.2, via f(u) = exp(-u^n)",
                  {positive("b", 1.0, 100.0), integer("n", 1, 1, 4)});
    e.lhs = [](const Params& p) {
      double b = p.at("b");
      int n = static_cast<int>(p.at("n"));
      // Even in x: twice the half-line integral.
      Integrand in = half_line(
          [b, n](double x) {
            double y = x - b / x;
            if (!std::isfinite(y)) return 0.0;
            return std::exp(-std::pow(y * y, n));
          },
          {std::sqrt(b)});
      in.factor = 2.0;
      return in;
    };
    e.rhs = [](const Params& p) {
      double n = p.at("n");
      return sf::gamma(1 / (2 * n)) / n;
    };
  }
  {
    auto& e = add("sinh_laplace", "int_-inf^inf exp(u - c sinh^2 u) du = sqrt(pi/c)",
                  "Laplace's integral after t = e^u", {positive("c", 1.0, 100.0)});
    e.lhs = [](const Params& p) {
      double c = p.at("c");
      return real_line([c](double u) {
        double s = std::sinh(u);
        return std::exp(u - c * s * s);
      });
    };
    e.rhs = [](const Params& p) { return std::sqrt(kPi / p.at("c")); };
  }

  // ---- Laurent-polynomial compositions -----------------------------------
  {
    auto& e = add("laurent_x7",
                  "int_0^inf [(x^2+x^-6)(x^4-x^2+1) - 1] exp(-(x^7-x^-7)^{2n}) dx = "
                  "Gamma(1/(2n))/(14n)",
                  "odd Laurent polynomial x^7 - x^-7 in y = x - 1/x",
                  {integer("n", 1, 1, 3)});
    e.lhs = [](const Params& p) {
      int n = static_cast<int>(p.at("n"));
      return half_line([n](double x) {
        double z = std::pow(x, 7) - std::pow(x, -7);
        if (!std::isfinite(z)) return 0.0;
        double w = std::pow(z * z, n);
        // Clamp before the polynomial factor (which blows up as x -> 0) is
        // formed: exp(-w) is already below the smallest double.
        if (w > 745.0) return 0.0;
        double poly = (x * x + std::pow(x, -6)) * (std::pow(x, 4) - x * x + 1) - 1;
        return poly * std::exp(-w);
      });
    };
    e.rhs = [](const Params& p) {
      double n = p.at("n");
      return sf::gamma(1 / (2 * n)) / (14 * n);
    };
  }
  {
    auto& e = add("laurent_x7_mixed",
                  "int_0^inf [7(x^2+x^-6)(x^4-x^2+1) - 6] exp(-(x+x^7-x^-1-x^-7)^{2n}) dx = "
                  "Gamma(1/(2n))/(2n)",
                  "odd Laurent polynomial x + x^7 - x^-1 - x^-7 in y = x - 1/x",
                  {integer("n", 1, 1, 3)});
    e.lhs = [](const Params& p) {
      int n = static_cast<int>(p.at("n"));
      return half_line([n](double x) {
        double z = x + std::pow(x, 7) - 1 / x - std::pow(x, -7);
        if (!std::isfinite(z)) return 0.0;
        double w = std::pow(z * z, n);
        if (w > 745.0) return 0.0;
        double poly = 7 * (x * x + std::pow(x, -6)) * (std::pow(x, 4) - x * x + 1) - 6;
        return poly * std::exp(-w);
      });
    };
    e.rhs = [](const Params& p) {
      double n = p.at("n");
      return sf::gamma(1 / (2 * n)) / (2 * n);
    };
  }
  {
    auto& e = add("product_nu",
                  "int_0^inf (x^4-x^2+1)/x^2 prod_j [1 + (x^3-x^-3)^2 nu^{2j}]^-1 dx = "
                  "(pi/6) / (1 + nu + nu^3 + nu^6 + ...)",
                  "Laurent polynomial x^3 - x^-3 = 3y + y^3 with an infinite product",
                  {{"nu", 0.5, 0.0, 0.95, true, false, false}});
    e.lhs = [](const Params& p) {
      double nu2 = p.at("nu") * p.at("nu");
      return half_line([nu2](double x) {
        double z = x * x * x - 1 / (x * x * x);
        double z2 = z * z;
        if (!std::isfinite(z2)) return 0.0;
        double value = x * x - 1 + 1 / (x * x);
        // Truncate once nu^{2j} z^2 < 1e-18.
        for (double w = 1.0; z2 * w >= 1e-18; w *= nu2) {
          value /= 1 + z2 * w;
          if (value < 1e-320) return 0.0;
        }
        return value;
      });
    };
    e.rhs = [](const Params& p) {
      double nu = p.at("nu");
      double sum = 0.0;
      for (int k = 0;; ++k) {
        double t = std::pow(nu, k * (k + 1) / 2.0);
        sum += t;
        if (t < 1e-18 * sum) break;
      }
      return kPi / 6 / sum;
    };
  }

  // ---- three-parameter integral ------------------------------------------
  {
    auto& e = add("master_4param",
                  "int_0^inf (x^2/(x^4+2ax^2+1))^c (x^2+1)/(x^b+1) dx/x^2 = "
                  "2^{-1/2-c} (1+a)^{1/2-c} B(c-1/2, 1/2), equal to the three companion forms",
                  "Gradshteyn-Ryzhik 3.242.2, four equivalent forms",
                  {above_minus_one("a", 1.0), {"c", 1.0, 0.5, 50.0, true, false, false},
                   positive("b", 1.0, 20.0)});
    e.lhs = [](const Params& p) {
      return half_line(master_form(1, p.at("a"), p.at("c"), p.at("b")));
    };
    e.rhs = [](const Params& p) { return master_rhs(p.at("a"), p.at("c")); };
    e.extra = master_extra;
  }

  // ---- exponentials and modified Bessel functions ------------------------
  {
    auto& e = add("bessel_exp",
                  "int_0^inf (1 - exp(-b x^2/(x^4+2ax^2+1))) dx = "
                  "pi b e^{-2c} / (2^{3/2} sqrt(1+a)) (I0(2c) + I1(2c)), c = b/(8(1+a))",
                  "power-series route through the central binomial series",
                  {above_minus_one("a", 1.0), positive("b", 2.0, 200.0)});
    e.lhs = [](const Params& p) {
      double a = p.at("a"), b = p.at("b");
      return half_line([a, b](double x) { return -std::expm1(-b / q(x, a)); });
    };
    e.rhs = [](const Params& p) { return bessel_exp_rhs(p.at("a"), p.at("b")); };
    e.cross_check = cross_bessel_range;
  }
  {
    auto& e = add("bessel_exp_a0b4",
                  "int_0^inf (1 - exp(-4x^2/(x^4+1))) dx = (pi sqrt2 / e) (I0(1) + I1(1))",
                  "special case a = 0, b = 4 of bessel_exp",
                  {fixed("a", 0.0), fixed("b", 4.0)});
    e.lhs = [](const Params&) {
      return half_line([](double x) { return -std::expm1(-4 / (x * x + 1 / (x * x))); });
    };
    e.rhs = [](const Params& p) { return bessel_exp_rhs(p.at("a"), p.at("b")); };
    e.printed = [](const Params&) {
      return kPi * std::numbers::sqrt2 / std::numbers::e * (sf::bessel_i(0, 1) + sf::bessel_i(1, 1));
    };
  }
  {
    auto& e = add("bessel_exp_a1b8",
                  "int_0^inf (1 - exp(-8x^2/(x^2+1)^2)) dx = (2 pi / e) (I0(1) + I1(1))",
                  "special case a = 1, b = 8 of bessel_exp",
                  {fixed("a", 1.0), fixed("b", 8.0)});
    e.lhs = [](const Params&) {
      return half_line([](double x) {
        double t = x / (x * x + 1);
        return -std::expm1(-8 * t * t);
      });
    };
    e.rhs = [](const Params& p) { return bessel_exp_rhs(p.at("a"), p.at("b")); };
    e.printed = [](const Params&) {
      return 2 * kPi / std::numbers::e * (sf::bessel_i(0, 1) + sf::bessel_i(1, 1));
    };
  }

  // ---- sine and Bessel functions of the first kind -----------------------
  {
    auto& e = add("sin_master",
                  "int_0^inf sin(b x^2/(x^4+2ax^2+1)) dx = "
                  "pi b / sqrt(8(1+a)) [J0(2c) cos 2c + J1(2c) sin 2c], c = b/(8(1+a))",
                  "power-series route; cross-checked against the 2F3(1/4,3/4; 1/2,1,3/2) form",
                  {above_minus_one("a", 0.5), positive("b", 2.0, 200.0)});
    e.lhs = [](const Params& p) {
      double a = p.at("a"), b = p.at("b");
      return half_line([a, b](double x) { return std::sin(b / q(x, a)); });
    };
    e.rhs = [](const Params& p) { return sin_rhs(p.at("a"), p.at("b")); };
    e.cross_check = cross_bessel_range;
    e.extra = sin_master_extra;
  }
  {
    auto& e = add("sin_a0b1",
                  "int_0^inf sin(x^2/(x^4+1)) dx = pi/(2 sqrt2) [J0(1/4) cos(1/4) + J1(1/4) sin(1/4)]",
                  "special case a = 0, b = 1 of sin_master",
                  {fixed("a", 0.0), fixed("b", 1.0)});
    e.lhs = [](const Params&) {
      return half_line([](double x) { return std::sin(1 / (x * x + 1 / (x * x))); });
    };
    e.rhs = [](const Params& p) { return sin_rhs(p.at("a"), p.at("b")); };
    e.printed = [](const Params&) { return kPi / (2 * std::numbers::sqrt2) * trig_bessel(0.25); };
  }
  {
    auto& e = add("sin_a1b1",
                  "int_0^inf sin((x/(x^2+1))^2) dx = (pi/4) [J0(1/8) cos(1/8) + J1(1/8) sin(1/8)]",
                  "special case a = b = 1 of sin_master",
                  {fixed("a", 1.0), fixed("b", 1.0)});
    e.lhs = [](const Params&) {
      return half_line([](double x) {
        double t = x / (x * x + 1);
        return std::sin(t * t);
      });
    };
    e.rhs = [](const Params& p) { return sin_rhs(p.at("a"), p.at("b")); };
    e.printed = [](const Params&) { return kPi / 4 * trig_bessel(0.125); };
  }
  {
    auto& e = add("sin_laurent",
                  "int_0^inf (x^2+x^-2-1) sin((x^6+x^-6-2)/(x^12-4x^6-4x^-6+x^-12+7)) dx = "
                  "pi/(6 sqrt2) [J0(1/4) cos(1/4) + J1(1/4) sin(1/4)]",
                  "Laurent polynomial z = x^3 - x^-3 composed with sin(z^2/(z^4+1))", {});
    e.lhs = [](const Params&) {
      return half_line([](double x) {
        double z = x * x * x - 1 / (x * x * x);
        if (!std::isfinite(z)) return 0.0;
        // (x^6+x^-6-2) = z^2 and the denominator is z^4 + 1.
        double arg = 1 / (z * z + 1 / (z * z));
        return (x * x + 1 / (x * x) - 1) * std::sin(arg);
      });
    };
    e.rhs = [](const Params&) { return sin_rhs(0.0, 1.0) / 3; };
    e.printed = [](const Params&) {
      return kPi / (6 * std::numbers::sqrt2) * trig_bessel(0.25);
    };
  }

  // ---- sine integral -----------------------------------------------------
  {
    auto& e = add("si_master",
                  "int_0^inf Si(b x^2/(x^4+2ax^2+1)) dx = "
                  "pi sqrt(2(1+a)) [(4c cos 2c - sin 2c) J0(2c) + 4c sin 2c J1(2c)], c = b/(8(1+a))",
                  "sine-integral form, integrated from sin_master",
                  {above_minus_one("a", 0.5), positive("b", 2.0, 200.0)});
    e.lhs = [](const Params& p) {
      double a = p.at("a"), b = p.at("b");
      return half_line([a, b](double x) { return sf::sine_integral(b / q(x, a)); });
    };
    e.rhs = [](const Params& p) { return si_rhs(p.at("a"), p.at("b")); };
    e.cross_check = cross_si_range;
  }
  {
    auto& e = add("si_a0b1",
                  "int_0^inf Si(x^2/(x^4+1)) dx, printed as "
                  "pi/(2 sqrt2) [J0(1/4)(cos(1/4) - 2 sin(1/4)) + J1(1/4) sin(1/4)]",
                  "special case a = 0, b = 1 of si_master",
                  {fixed("a", 0.0), fixed("b", 1.0)});
    e.lhs = [](const Params&) {
      return half_line([](double x) { return sf::sine_integral(1 / (x * x + 1 / (x * x))); });
    };
    e.rhs = [](const Params& p) { return si_rhs(p.at("a"), p.at("b")); };
    e.printed = [](const Params&) {
      double w = 0.25;
      return kPi / (2 * std::numbers::sqrt2) *
             (sf::bessel_j(0, w) * (std::cos(w) - 2 * std::sin(w)) +
              sf::bessel_j(1, w) * std::sin(w));
    };
  }
  {
    auto& e = add("si_a1b1",
                  "int_0^inf Si((x/(x^2+1))^2) dx = "
                  "(pi/2) [J0(1/8)(cos(1/8) - 4 sin(1/8)) + J1(1/8) sin(1/8)]",
                  "special case a = b = 1 of si_master",
                  {fixed("a", 1.0), fixed("b", 1.0)});
    e.lhs = [](const Params&) {
      return half_line([](double x) {
        double t = x / (x * x + 1);
        return sf::sine_integral(t * t);
      });
    };
    e.rhs = [](const Params& p) { return si_rhs(p.at("a"), p.at("b")); };
    e.printed = [](const Params&) {
      double w = 0.125;
      return kPi / 2 *
             (sf::bessel_j(0, w) * (std::cos(w) - 4 * std::sin(w)) +
              sf::bessel_j(1, w) * std::sin(w));
    };
  }

  // ---- Riemann zeta --------------------------------------------------------
  {
    auto& e = add("zeta_main",
                  "int_0^inf x^{2s+1}/cosh^2(x^2) dx = 2^{-s} (1-2^{1-s}) Gamma(s+1) zeta(s)",
                  "zeta integral after the power substitution; evaluated as "
                  "2^{-s} Gamma(s+1) eta(s)",
                  {{"s", 2.0, 0.1, 5.0, false, false, false}});
    e.lhs = [](const Params& p) { return half_line(zeta_main_integrand(p.at("s"))); };
    e.rhs = [](const Params& p) { return zeta_main_rhs(p.at("s")); };
  }
  {
    auto& e = add("zeta_half",
                  "int_0^inf x^2/cosh^2(x^2) dx = -(1/4) (2 - sqrt2) zeta(1/2) sqrt(pi)",
                  "special case s = 1/2 of zeta_main", {fixed("s", 0.5)});
    e.lhs = [](const Params&) { return half_line(zeta_main_integrand(0.5)); };
    e.rhs = [](const Params& p) { return zeta_main_rhs(p.at("s")); };
    e.printed = [](const Params&) {
      return -0.25 * (2 - std::numbers::sqrt2) * sf::zeta(0.5) * kSqrtPi;
    };
  }
  {
    auto& e = add("zeta_rep",
                  "int_0^inf y^{2s-1}/(1+exp(y^2)) dy = (1/2) (1-2^{1-s}) Gamma(s) zeta(s)",
                  "Dirichlet-eta integral representation after t = y^2",
                  {{"s", 2.0, 1.0, 5.0, true, false, false}});
    e.lhs = [](const Params& p) {
      double s = p.at("s");
      return half_line([s](double y) {
        double t = y * y;
        return std::exp((2 * s - 1) * std::log(y) - t - std::log1p(std::exp(-t)));
      });
    };
    e.rhs = [](const Params& p) { return sf::lambda_cap(p.at("s")); };
  }

  // ---- error function ------------------------------------------------------
  {
    auto& e = add("erf_gr_3_466",
                  "int_0^inf exp(-mu^2 x^2)/(x^2 + beta^2) dx = "
                  "pi/(2 beta) (1 - erf(mu beta)) exp(mu^2 beta^2)",
                  "Gradshteyn-Ryzhik 3.466.1",
                  {positive("mu", 1.0, 10.0), positive("beta", 1.0, 10.0)});
    e.lhs = [](const Params& p) {
      double mu = p.at("mu"), beta = p.at("beta");
      return half_line(
          [mu, beta](double x) { return std::exp(-mu * mu * x * x) / (x * x + beta * beta); },
          {beta});
    };
    e.rhs = [](const Params& p) {
      double mu = p.at("mu"), beta = p.at("beta");
      return kPi / (2 * beta) * sf::erfc(mu * beta) * std::exp(mu * mu * beta * beta);
    };
    e.cross_check = [](const Params& p) -> std::string {
      return p.at("mu") * p.at("beta") <= 20.0 ? "" : "mu * beta must not exceed 20";
    };
  }
  {
    auto& e = add("erf_cs_general",
                  "int_0^inf exp(-mu^2 (x^2+x^-2))/(x^2+2a+x^-2) dx = "
                  "pi e^{2a mu^2} / (2 sqrt(2(a+1))) (1 - erf(mu sqrt(2(a+1))))",
                  "Gradshteyn-Ryzhik 3.466.1 under the transformation",
                  {above_minus_one("a", 0.5, 10.0), positive("mu", 1.0, 3.0)});
    e.lhs = [](const Params& p) {
      double a = p.at("a"), mu = p.at("mu");
      return half_line([a, mu](double x) {
        double w = x * x + 1 / (x * x);
        return std::exp(-mu * mu * w) / (w + 2 * a);
      });
    };
    e.rhs = [](const Params& p) { return erf_cs_rhs(p.at("a"), p.at("mu")); };
  }
  {
    auto& e = add("erf_a1mu1",
                  "int_0^inf exp(-(x^2+x^-2))/(x+x^-1)^2 dx = (pi e^2 / 4)(1 - erf 2)",
                  "special case a = mu = 1 of erf_cs_general",
                  {fixed("a", 1.0), fixed("mu", 1.0)});
    e.lhs = [](const Params&) {
      return half_line([](double x) {
        double s = x + 1 / x;
        return std::exp(-(x * x + 1 / (x * x))) / (s * s);
      });
    };
    e.rhs = [](const Params& p) { return erf_cs_rhs(p.at("a"), p.at("mu")); };
    e.printed = [](const Params&) {
      return kPi * std::exp(2.0) / 4 * (1 - sf::erf(2.0));
    };
  }
  {
    auto& e = add("erf_a0mu1",
                  "int_0^inf exp(-(x^2+x^-2))/(x^2+x^-2) dx = pi/(2 sqrt2) (1 - erf(sqrt2))",
                  "special case a = 0, mu = 1 of erf_cs_general",
                  {fixed("a", 0.0), fixed("mu", 1.0)});
    e.lhs = [](const Params&) {
      return half_line([](double x) {
        double w = x * x + 1 / (x * x);
        return std::exp(-w) / w;
      });
    };
    e.rhs = [](const Params& p) { return erf_cs_rhs(p.at("a"), p.at("mu")); };
    e.printed = [](const Params&) {
      return kPi / (2 * std::numbers::sqrt2) * (1 - sf::erf(std::numbers::sqrt2));
    };
  }

  // ---- elliptic integrals --------------------------------------------------
  {
    auto& e = add("elliptic_first",
                  "int_0^inf x^2 / sqrt((x^4+2ax^2+1)(x^4+2bx^2+1)) dx = "
                  "K(sqrt((a-b)/(a+1))) / sqrt(2(a+1))",
                  "complete elliptic integral of the first kind",
                  {above_minus_one("a", 2.0), above_minus_one("b", 1.0)});
    e.lhs = [](const Params& p) {
      double a = p.at("a"), b = p.at("b");
      // x^2 / sqrt(x^4 q_a q_b) with q = x^2 + 2a + x^-2.
      return half_line(
          [a, b](double x) { return 1 / (std::sqrt(q(x, a)) * std::sqrt(q(x, b))); });
    };
    e.rhs = [](const Params& p) {
      double a = p.at("a"), b = p.at("b");
      return sf::elliptic_k(std::sqrt((a - b) / (a + 1))) / std::sqrt(2 * (a + 1));
    };
    e.cross_check = [](const Params& p) -> std::string {
      return p.at("b") <= p.at("a") ? "" : "need b <= a";
    };
  }
  {
    auto& e = add("elliptic_incomplete",
                  "int_0^inf x^3 / sqrt((x^4+2ax^2+1)(x^4+2bx^2+1)(x^4+2cx^2+1)) dx = "
                  "F(asin sqrt((c-a)/(c+1)), sqrt((b-a)(c+1)/((b+1)(c-a)))) / (2 sqrt((b+1)(c-a)))",
                  "incomplete elliptic integral of the first kind, a <= b < c",
                  {above_minus_one("a", 0.5), above_minus_one("b", 1.0), above_minus_one("c", 3.0)});
    e.lhs = [](const Params& p) {
      double a = p.at("a"), b = p.at("b"), c = p.at("c");
      return half_line([a, b, c](double x) {
        return 1 / (std::sqrt(q(x, a)) * std::sqrt(q(x, b)) * std::sqrt(q(x, c)));
      });
    };
    e.rhs = [](const Params& p) {
      double a = p.at("a"), b = p.at("b"), c = p.at("c");
      double phi = std::asin(std::sqrt((c - a) / (c + 1)));
      double k = std::sqrt((b - a) * (c + 1) / ((b + 1) * (c - a)));
      return sf::elliptic_f(phi, k) / (2 * std::sqrt((b + 1) * (c - a)));
    };
    e.cross_check = [](const Params& p) -> std::string {
      return p.at("a") <= p.at("b") && p.at("b") < p.at("c") ? "" : "need a <= b < c";
    };
  }
  {
    auto& e = add("hyperelliptic_n1",
                  "int_0^inf (t-b^2)^2 / sqrt(t P(t) Q(t)) dt = (2/alpha) K(sqrt(alpha^2-beta^2)/alpha), "
                  "P = t^3 + (alpha^2-2a^2) t^2 + (a^4-2 alpha^2 b^2) t + alpha^2 b^4, Q likewise with beta",
                  "meromorphic transformation phi(z) = z (z^2 - a^2)/(z^2 - b^2) applied to "
                  "1/sqrt((x^2+alpha^2)(x^2+beta^2))",
                  {positive("a", 2.0, 100.0), positive("b", 1.0, 100.0),
                   positive("alpha", 2.0, 100.0), positive("beta", 1.0, 100.0)});
    e.lhs = [](const Params& p) {
      double a2 = p.at("a") * p.at("a"), b2 = p.at("b") * p.at("b");
      double al2 = p.at("alpha") * p.at("alpha"), be2 = p.at("beta") * p.at("beta");
      // P(t) = t (t - a^2)^2 + alpha^2 (t - b^2)^2: the same cubic, without
      // cancellation near t = a^2.
      return half_line(
          [a2, b2, al2, be2](double t) {
            double d = t - b2;
            double e2 = (t - a2) * (t - a2);
            double P = t * e2 + al2 * d * d;
            double Q = t * e2 + be2 * d * d;
            return (d / std::sqrt(P)) * (d / std::sqrt(Q)) / std::sqrt(t);
          },
          b2 < a2 ? std::vector<double>{b2, a2} : std::vector<double>{a2});
    };
    e.rhs = [](const Params& p) {
      double al = p.at("alpha"), be = p.at("beta");
      return 2 / al * sf::elliptic_k(std::sqrt(al * al - be * be) / al);
    };
    e.cross_check = [](const Params& p) -> std::string {
      if (!(p.at("beta") <= p.at("alpha"))) return "need beta <= alpha";
      if (!(p.at("a") > p.at("b"))) return "need a > b (negative residue at the pole b)";
      return "";
    };
  }

  // ---- self-inverse transformations --------------------------------------
  using transform::SelfInverseKind;
  v.push_back(jones_entry("jones_exp", SelfInverseKind::log_expm1,
                          "int_0^inf exp(-log^2(e^{alpha x} - 1)/alpha^2) dx = sqrt(pi)/2",
                          "self-inverse s(x) = x - log(e^{alpha x} - 1)/alpha"));
  v.push_back(jones_entry("jones_exp_log", SelfInverseKind::exp_log,
                          "int_1^inf exp(-(x - exp(alpha/log x))^2) dx = sqrt(pi)/2",
                          "self-inverse s(x) = exp(alpha/log x) on (1, inf), f(u) = exp(-u)"));
  v.push_back(jones_entry(
      "jones_log_sinh", SelfInverseKind::log_sinh_ratio,
      "int_0^inf exp(-log^2(e^{alpha x} sinh(alpha x)/(1+cosh(alpha x)))/alpha^2) dx = sqrt(pi)/2",
      "self-inverse s(x) = -log(tanh(alpha x/2))/alpha, f(u) = exp(-u)"));
  v.push_back(jones_entry("jones_sinh_asinh", SelfInverseKind::sinh_asinh,
                          "int_0^inf exp(-(x - sinh(alpha/asinh x))^2) dx = sqrt(pi)/2",
                          "self-inverse s(x) = sinh(alpha/asinh x), f(u) = exp(-u)"));

  std::sort(v.begin(), v.end(),
            [](const IdentityEntry& x, const IdentityEntry& y) { return x.id < y.id; });
  return v;
}

}  // namespace

bool Parameter::admits(double v) const {
  if (std::isnan(v)) return false;
  if (lo == hi) return v == lo;
  if (integer && v != std::floor(v)) return false;
  bool above = lo_open ? v > lo : v >= lo;
  bool below = hi_open ? v < hi : v <= hi;
  return above && below;
}

std::string Parameter::describe() const {
  std::ostringstream out;
  out << name;
  if (lo == hi) {
    out << " = " << lo << " (fixed)";
    return out.str();
  }
  out << " in " << (lo_open ? "(" : "[") << lo << ", " << hi << (hi_open ? ")" : "]");
  if (integer) out << ", integer";
  return out.str();
}

const std::vector<IdentityEntry>& entries() {
  static const std::vector<IdentityEntry> all = build();
  return all;
}

std::vector<std::string> list_entries() {
  std::vector<std::string> ids;
  for (const auto& e : entries()) ids.push_back(e.id);
  return ids;
}

const IdentityEntry& find_entry(const std::string& id) {
  const auto& all = entries();
  auto it = std::lower_bound(all.begin(), all.end(), id,
                             [](const IdentityEntry& e, const std::string& k) { return e.id < k; });
  if (it == all.end() || it->id != id) throw PreconditionError("unknown catalog entry '" + id + "'");
  return *it;
}

Params resolve_params(const IdentityEntry& entry, const Params& overrides) {
  Params p;
  for (const auto& param : entry.parameters) p[param.name] = param.default_value;
  for (const auto& [name, value] : overrides) {
    auto it = std::find_if(entry.parameters.begin(), entry.parameters.end(),
                           [&](const Parameter& x) { return x.name == name; });
    if (it == entry.parameters.end())
      throw PreconditionError(entry.id + ": unknown parameter '" + name + "'");
    if (!it->admits(value)) {
      std::ostringstream msg;
      msg << entry.id << ": " << name << " = " << value << " violates " << it->describe();
      throw PreconditionError(msg.str());
    }
    p[name] = value;
  }
  if (entry.cross_check) {
    std::string msg = entry.cross_check(p);
    if (!msg.empty()) throw PreconditionError(entry.id + ": " + msg);
  }
  return p;
}

VerificationReport verify_entry(const std::string& id, const Params& overrides, double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol))
    throw PreconditionError("tolerance must be positive and finite");
  const IdentityEntry& e = find_entry(id);
  Params p = resolve_params(e, overrides);

  VerificationReport r;
  r.id = e.id;
  r.params = p;
  r.tol = tol;
  r.rhs = e.rhs(p);
  r.converged = true;

  Integrand in = e.lhs(p);
  double qtol = quadrature_tol(tol, std::isfinite(r.rhs) ? r.rhs : 1.0);
  try {
    quad::QuadratureResult q = integrate(in, qtol);
    r.lhs = q.value;
    r.evaluations = q.evaluations;
    r.converged = q.converged;
    if (!q.converged) r.notes.push_back("lhs: quadrature did not converge");
  } catch (const IntegrationError& ex) {
    r.lhs = kNaN;
    r.converged = false;
    r.notes.push_back(std::string("lhs: ") + ex.what());
  }

  if (e.printed) {
    double pv = e.printed(p);
    r.notes.push_back("printed value " + format_value(pv));
    if (!(std::fabs(pv - r.rhs) <= tol * std::max(1.0, std::fabs(r.rhs)))) {
      r.flags.emplace_back(kDiscrepancyFlag);
      r.flags.push_back("printed-value=" + format_value(pv));
    }
  }
  bool extra_ok = e.extra ? e.extra(p, tol, r) : true;
  finalize(r, extra_ok);
  return r;
}

std::vector<VerificationReport> verify_all(double tol, unsigned workers) {
  const auto& all = entries();
  std::vector<VerificationReport> out(all.size());
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(all.size()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < all.size(); i = next++) {
      try {
        out[i] = verify_entry(all[i].id, {}, tol);
      } catch (const std::exception& ex) {
        VerificationReport r;
        r.id = all[i].id;
        r.tol = tol;
        r.lhs = r.rhs = kNaN;
        r.notes.push_back(ex.what());
        finalize(r, false);
        out[i] = std::move(r);
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return out;
}

nlohmann::json export_entries() {
  auto num = [](double v) -> nlohmann::json {
    if (!std::isfinite(v)) return nullptr;
    return v;
  };
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : entries()) {
    nlohmann::json params = nlohmann::json::array();
    for (const auto& p : e.parameters)
      params.push_back({{"name", p.name},
                        {"default", p.default_value},
                        {"lo", num(p.lo)},
                        {"hi", num(p.hi)},
                        {"lo_open", p.lo_open},
                        {"hi_open", p.hi_open},
                        {"integer", p.integer}});
    arr.push_back({{"id", e.id}, {"formula", e.formula}, {"source", e.source}, {"parameters", params}});
  }
  return arr;
}

}  // namespace schlomilch::catalog
