#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace schlomilch {

// Arbitrary-precision integers and fractions. Fractions are kept in lowest
// terms with a positive denominator after every operation.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// binom(n, k) by the multiplicative formula; 0 outside 0 <= k <= n.
BigInt binomial(long n, long k);

BigInt factorial(long n);

BigRational pow2(long e);  // 2^e, any sign of e

// Every finite double is a dyadic rational; this returns it exactly.
BigRational to_rational(double x);

double to_double(const BigRational& q);

}  // namespace schlomilch
