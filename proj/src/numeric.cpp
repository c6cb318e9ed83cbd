#include "crithg/numeric.hpp"

#include <mpfr.h>

#include <stdexcept>
#include <vector>

namespace crithg {

BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i; // exact at every step: result is C(n-k+i, i)
    }
    return result;
}

BigInt ceil_rat(const BigRat& x) {
    BigInt num = boost::multiprecision::numerator(x);
    BigInt den = boost::multiprecision::denominator(x); // always > 0
    BigInt q = num / den;
    if (num % den != 0 && num > 0) ++q;
    return q;
}

bool is_prime(long long p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (long long d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

long long prev_prime(long long bound) {
    for (long long q = bound - 1; q >= 2; --q)
        if (is_prime(q)) return q;
    return 0;
}

namespace {

// Set an mpfr value to an exact BigInt with the given rounding direction.
void mpfr_from_bigint(mpfr_t out, const BigInt& v, mpfr_rnd_t rnd) {
    const std::string s = v.str();
    if (mpfr_set_str(out, s.c_str(), 10, rnd) != 0 && mpfr_nan_p(out))
        throw std::runtime_error("mpfr_set_str failed for " + s);
}

BigInt bigint_from_mpfr_integral(mpfr_t v) {
    // v holds an exact integer (result of mpfr_ceil/floor at sufficient precision).
    char* s = nullptr;
    mpfr_asprintf(&s, "%.0Rf", v);
    BigInt out(s);
    mpfr_free_str(s);
    return out;
}

} // namespace

BigInt ceil_mul_ln_upper(const BigRat& coef, const BigInt& x) {
    if (coef <= 0 || x < 1) throw std::invalid_argument("ceil_mul_ln_upper: need coef > 0, x >= 1");
    if (x == 1) return 0;

    mpfr_t lx, num, den, acc;
    mpfr_inits2(256, lx, num, den, acc, (mpfr_ptr) nullptr);

    mpfr_from_bigint(lx, x, MPFR_RNDU);
    mpfr_log(lx, lx, MPFR_RNDU);

    // coef * lx rounded up throughout: numerator up, denominator down.
    mpfr_from_bigint(num, boost::multiprecision::numerator(coef), MPFR_RNDU);
    mpfr_from_bigint(den, boost::multiprecision::denominator(coef), MPFR_RNDD);
    mpfr_mul(acc, num, lx, MPFR_RNDU);
    mpfr_div(acc, acc, den, MPFR_RNDU);
    mpfr_ceil(acc, acc);

    BigInt result = bigint_from_mpfr_integral(acc);
    mpfr_clears(lx, num, den, acc, (mpfr_ptr) nullptr);
    return result;
}

BigRat mul_log2_lower(const BigRat& coef, const BigRat& x) {
    if (coef <= 0 || x <= 0) throw std::invalid_argument("mul_log2_lower: need coef > 0, x > 0");

    mpfr_t num, den, lx, c, acc;
    mpfr_inits2(256, num, den, lx, c, acc, (mpfr_ptr) nullptr);

    // log2(x) rounded down: numerator down, denominator up.
    mpfr_from_bigint(num, boost::multiprecision::numerator(x), MPFR_RNDD);
    mpfr_from_bigint(den, boost::multiprecision::denominator(x), MPFR_RNDU);
    mpfr_div(lx, num, den, MPFR_RNDD);
    mpfr_log2(lx, lx, MPFR_RNDD);

    mpfr_from_bigint(num, boost::multiprecision::numerator(coef), MPFR_RNDD);
    mpfr_from_bigint(den, boost::multiprecision::denominator(coef), MPFR_RNDU);
    mpfr_div(c, num, den, MPFR_RNDD);
    mpfr_mul(acc, c, lx, MPFR_RNDD);

    // Convert the binary float exactly to a rational: acc = mant * 2^exp.
    mpfr_exp_t exp2 = 0;
    char* mant = mpfr_get_str(nullptr, &exp2, 2, 0, acc, MPFR_RNDD);
    std::string ms(mant);
    mpfr_free_str(mant);
    mpfr_clears(num, den, lx, c, acc, (mpfr_ptr) nullptr);

    bool neg = !ms.empty() && ms[0] == '-';
    if (neg) ms.erase(ms.begin());
    BigInt m = 0;
    for (char ch : ms) m = m * 2 + (ch - '0');
    if (neg) m = -m;
    long long shift = static_cast<long long>(exp2) - static_cast<long long>(ms.size());
    BigRat r(m);
    if (shift >= 0)
        r *= BigRat(BigInt(1) << shift);
    else
        r /= BigRat(BigInt(1) << (-shift));
    return r;
}

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const BigRat& v) {
    BigInt num = boost::multiprecision::numerator(v);
    BigInt den = boost::multiprecision::denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

} // namespace crithg
