#pragma once

// p-adic valuations, norms and finite-precision elements of Q_p.

#include "allplaces/numeric.hpp"

#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

namespace allplaces {

/// A prime below 10^6, checked by trial division at construction.
class Prime {
public:
    static constexpr std::uint64_t kMaxPrime = 1'000'000;

    explicit Prime(std::uint64_t value);

    std::uint64_t value() const { return value_; }
    unsigned long ulong() const { return static_cast<unsigned long>(value_); }

    friend auto operator<=>(const Prime&, const Prime&) = default;

private:
    std::uint64_t value_;
};

bool is_prime(std::uint64_t n);

/// Primes 2, 3, 5, ... up to and including `bound`.
std::vector<Prime> primes_up_to(std::uint64_t bound);

/// Distinct prime divisors of |n| in increasing order (trial division).
std::vector<Prime> prime_divisors(const BigInteger& n);

/// An integer or +infinity; orders infinity above every integer.
class Valuation {
public:
    static Valuation infinity() { return Valuation(); }
    Valuation(long v) : value_(v), infinite_(false) {}

    bool is_infinite() const { return infinite_; }
    /// Requires a finite valuation.
    long value() const;

    friend bool operator==(const Valuation&, const Valuation&) = default;
    friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b);

    std::string to_string() const;

private:
    Valuation() : value_(0), infinite_(true) {}

    long value_;
    bool infinite_;
};

/// |x|_p = p^(-exponent), with exponent = +infinity for zero.
struct PadicNorm {
    Prime prime;
    Valuation exponent;

    /// Exact value as a rational; requires a finite exponent.
    Rational value() const;

    /// Norms of the same prime compare inversely to their exponents.
    friend std::strong_ordering operator<=>(const PadicNorm& a, const PadicNorm& b);
    friend bool operator==(const PadicNorm& a, const PadicNorm& b) = default;
};

long vp(const BigInteger& n, const Prime& p);  // n != 0
Valuation vp(const Rational& x, const Prime& p);

PadicNorm norm(const Rational& x, const Prime& p);

/// Sum of the base-p digits of n.
std::uint64_t digit_sum(std::uint64_t n, const Prime& p);

/// |n!|_p = p^(-(n - digit_sum(n)) / (p - 1)).
PadicNorm norm_factorial(std::uint64_t n, const Prime& p);

/// v_p(n!) by the digit-sum formula.
std::uint64_t factorial_valuation(std::uint64_t n, const Prime& p);

/// An element of Q_p known modulo p^(valuation + precision).
///
/// Nonzero values hold a unit u with 0 < u < p^precision, p not dividing u,
/// and represent p^valuation * u. The zero marker instead records the
/// absolute precision at which zero is known: it stands for the class
/// p^precision Z_p.
class PadicNumber {
public:
    static PadicNumber zero(const Prime& p, long absolute_precision);
    /// `unit` is reduced modulo p^precision; it must not be divisible by p.
    static PadicNumber from_unit(const Prime& p, long valuation, const BigInteger& unit,
                                 long precision);

    const Prime& prime() const { return prime_; }
    bool is_zero() const { return zero_; }
    Valuation valuation() const;
    /// Relative precision N for nonzero values, absolute exponent for zero.
    long precision() const { return precision_; }
    /// Exponent of p^k such that the value is known modulo p^k.
    long absolute_precision() const;
    const BigInteger& unit() const { return unit_; }

    /// d_0..d_{N-1}, little-endian. Empty for zero.
    std::vector<std::uint64_t> digits() const;

    PadicNorm norm() const;
    /// |x|_p <= 1.
    bool in_integers() const;

    /// The rational p^valuation * unit.
    Rational representative() const;

    /// Reduces to a coarser absolute precision (no-op if already coarser).
    PadicNumber truncate(long absolute_precision) const;

    /// `padic(p=<p>, val=<v>, digits=[...], prec=<N>)` or `padic(p=<p>, zero, prec=<N>)`.
    std::string to_string() const;

    friend bool operator==(const PadicNumber&, const PadicNumber&) = default;

private:
    PadicNumber(const Prime& p) : prime_(p) {}

    Prime prime_;
    bool zero_ = true;
    long valuation_ = 0;
    BigInteger unit_ = 0;
    long precision_ = 0;
};

/// Inverse of PadicNumber::to_string. Throws InvalidArgument.
PadicNumber parse_padic(std::string_view text);

/// Canonical embedding Q -> Q_p with `precision` significant digits.
PadicNumber to_padic(const Rational& x, const Prime& p, long precision);

/// Reduction of x modulo p^absolute_precision (absolute, not relative).
PadicNumber to_padic_absolute(const Rational& x, const Prime& p, long absolute_precision);

PadicNumber operator+(const PadicNumber& a, const PadicNumber& b);
PadicNumber operator-(const PadicNumber& a);
PadicNumber operator-(const PadicNumber& a, const PadicNumber& b);
PadicNumber operator*(const PadicNumber& a, const PadicNumber& b);

inline PadicNumber padic_add(const PadicNumber& a, const PadicNumber& b) { return a + b; }
inline PadicNumber padic_mul(const PadicNumber& a, const PadicNumber& b) { return a * b; }

/// {x}_p: the rational m/p^k in [0, 1) with x - {x}_p in Z_p.
Rational frac_part(const Rational& x, const Prime& p);

}  // namespace allplaces
