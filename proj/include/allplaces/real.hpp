#pragma once

// Real numbers as exact rational midpoints with a rigorous radius.

#include "allplaces/numeric.hpp"

#include <string>

namespace allplaces {

/// The real number lies in [value - error_bound, value + error_bound].
struct DecimalApproximation {
    Rational value;
    Rational error_bound;  // >= 0

    static DecimalApproximation exact(const Rational& v) { return {v, Rational(0)}; }

    bool is_exact() const { return error_bound == 0; }
    /// Upper bound on |x|.
    Rational magnitude_bound() const { return abs(value) + error_bound; }
    /// True when zero is excluded from the enclosure.
    bool bounded_away_from_zero() const { return abs(value) > error_bound; }
};

DecimalApproximation operator-(const DecimalApproximation& a);
DecimalApproximation operator+(const DecimalApproximation& a, const DecimalApproximation& b);
DecimalApproximation operator-(const DecimalApproximation& a, const DecimalApproximation& b);
DecimalApproximation operator*(const DecimalApproximation& a, const DecimalApproximation& b);
/// Throws InsufficientPrecision when the divisor's enclosure contains zero.
DecimalApproximation operator/(const DecimalApproximation& a, const DecimalApproximation& b);

/// Rounds the midpoint to a multiple of 2^-bits, widening the radius to match.
DecimalApproximation round_to_bits(const DecimalApproximation& x, unsigned long bits);

/// Enclosure of sqrt(x) with about `bits` fractional bits. Exact when x is an
/// exact rational square. Requires the enclosure of x to lie in (0, inf)
/// unless x is exactly zero.
DecimalApproximation sqrt(const DecimalApproximation& x, unsigned long bits);

/// Number of fractional bits needed to carry `digits` decimal places plus guard bits.
unsigned long bits_for_digits(unsigned digits);

/// 10^-digits as an exact rational.
Rational decimal_ulp(unsigned digits);

/// Fixed-point rendering with `digits` places after the point, rounding the
/// midpoint half-to-even. Throws InsufficientPrecision unless
/// error_bound <= 10^-digits / 2.
std::string render_decimal(const DecimalApproximation& x, unsigned digits);

/// Scientific rendering of a nonnegative bound, for reports ("3.1e-42").
std::string render_bound(const Rational& bound);

double to_double(const Rational& x);

}  // namespace allplaces
