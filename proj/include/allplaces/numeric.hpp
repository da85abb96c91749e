#pragma once

// Exact integer and rational arithmetic, backed by GMP.
//
// BigInteger and Rational are the gmpxx value types. Rationals built through
// make_rational() or parse_rational() are always canonical (reduced, positive
// denominator); gmpxx keeps arithmetic results canonical.

#include <gmpxx.h>

#include <cstdint>
#include <deque>
#include <shared_mutex>
#include <string>
#include <string_view>

namespace allplaces {

using BigInteger = mpz_class;
using Rational = mpq_class;

Rational make_rational(const BigInteger& num, const BigInteger& den);
Rational make_rational(long num, long den = 1);

/// Parses "n", "-n" or "n/d" (d != 0). Throws InvalidArgument.
Rational parse_rational(std::string_view text);

/// "n" when the denominator is 1, otherwise "n/d".
std::string to_string(const Rational& x);
std::string to_string(const BigInteger& x);

BigInteger pow(const BigInteger& base, unsigned long exp);
/// Integer powers of a rational; negative exponents require x != 0.
Rational pow(const Rational& x, long exp);

Rational abs(const Rational& x);

/// Largest integer <= x.
BigInteger floor(const Rational& x);
BigInteger ceil(const Rational& x);

/// Factorials with an incrementally grown cache.
///
/// Growth takes an exclusive lock, lookups a shared one. Entries live in a
/// deque so references handed out stay valid while the cache grows.
class FactorialCache {
public:
    FactorialCache();

    const BigInteger& operator()(std::uint64_t n);

    std::uint64_t size() const;

private:
    mutable std::shared_mutex mutex_;
    std::deque<BigInteger> values_;
};

/// n! from the process-wide cache.
const BigInteger& factorial(std::uint64_t n);

/// a (a+1) ... (a+mu-1). Requires a >= 1, mu >= 1.
BigInteger rising_factorial(std::uint64_t a, std::uint64_t mu);

}  // namespace allplaces
