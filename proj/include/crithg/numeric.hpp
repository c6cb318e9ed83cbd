#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace crithg {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// C(n, k) in exact arithmetic; 0 when k < 0 or k > n.
BigInt binomial(long long n, long long k);

// Smallest integer >= x.
BigInt ceil_rat(const BigRat& x);

bool is_prime(long long p);

// Largest prime strictly below `bound`, or 0 if none.
long long prev_prime(long long bound);

// Smallest integer >= coef * ln(x), where the ln is evaluated with upward
// directed rounding (MPFR) so the result is always a valid upper bound.
// Requires coef > 0 and x >= 1.
BigInt ceil_mul_ln_upper(const BigRat& coef, const BigInt& x);

// Rational lower bound on coef * log2(x) for x > 0, coef > 0 (downward rounding).
// Used for conservative strict-inequality checks against an exact rational.
BigRat mul_log2_lower(const BigRat& coef, const BigRat& x);

std::string to_string(const BigInt& v);
std::string to_string(const BigRat& v); // "num/den", or just "num" when den == 1

} // namespace crithg
