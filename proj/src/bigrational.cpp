#include "schlomilch/bigrational.hpp"

#include <cmath>
#include <stdexcept>

namespace schlomilch {

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

BigInt factorial(long n) {
  BigInt r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

BigRational pow2(long e) {
  BigInt p = BigInt(1) << static_cast<unsigned>(e < 0 ? -e : e);
  return e < 0 ? BigRational(BigInt(1), p) : BigRational(p);
}

BigRational to_rational(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("to_rational: non-finite value");
  int exponent = 0;
  double mantissa = std::frexp(x, &exponent);
  // 53 significant bits as an integer.
  auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
  return BigRational(BigInt(scaled)) * pow2(exponent - 53);
}

double to_double(const BigRational& q) { return q.convert_to<double>(); }

}  // namespace schlomilch
