#include "allplaces/real.hpp"

#include "allplaces/errors.hpp"

#include <cmath>
#include <cstdio>

namespace allplaces {

DecimalApproximation operator-(const DecimalApproximation& a) {
    return {Rational(-a.value), a.error_bound};
}

DecimalApproximation operator+(const DecimalApproximation& a, const DecimalApproximation& b) {
    return {a.value + b.value, a.error_bound + b.error_bound};
}

DecimalApproximation operator-(const DecimalApproximation& a, const DecimalApproximation& b) {
    return {a.value - b.value, a.error_bound + b.error_bound};
}

DecimalApproximation operator*(const DecimalApproximation& a, const DecimalApproximation& b) {
    Rational err = abs(a.value) * b.error_bound + abs(b.value) * a.error_bound +
                   a.error_bound * b.error_bound;
    return {a.value * b.value, err};
}

DecimalApproximation operator/(const DecimalApproximation& a, const DecimalApproximation& b) {
    if (!b.bounded_away_from_zero()) {
        throw InsufficientPrecision("divisor enclosure contains zero");
    }
    Rational b_abs = abs(b.value);
    Rational err = (a.error_bound * b_abs + abs(a.value) * b.error_bound) /
                   (b_abs * (b_abs - b.error_bound));
    return {a.value / b.value, err};
}

DecimalApproximation round_to_bits(const DecimalApproximation& x, unsigned long bits) {
    BigInteger scale = pow(BigInteger(2), bits);
    Rational scaled = x.value * scale;
    // Nearest integer, ties toward +inf; the half-unit radius covers either choice.
    BigInteger n = floor(scaled + Rational(1, 2));
    Rational rounded = make_rational(n, scale);
    Rational err = x.error_bound + abs(Rational(rounded - x.value));
    return {rounded, err};
}

namespace {

// floor(sqrt(x * 4^bits)) / 2^bits, a lower bound on sqrt(x) within 2^-bits.
Rational sqrt_floor(const Rational& x, unsigned long bits) {
    BigInteger scale = pow(BigInteger(2), bits);
    BigInteger n = floor(x * scale * scale);
    BigInteger root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return make_rational(root, scale);
}

bool exact_square_root(const Rational& x, Rational& root) {
    if (mpz_perfect_square_p(x.get_num_mpz_t()) == 0 ||
        mpz_perfect_square_p(x.get_den_mpz_t()) == 0) {
        return false;
    }
    BigInteger n, d;
    mpz_sqrt(n.get_mpz_t(), x.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), x.get_den_mpz_t());
    root = make_rational(n, d);
    return true;
}

}  // namespace

DecimalApproximation sqrt(const DecimalApproximation& x, unsigned long bits) {
    if (x.is_exact()) {
        if (x.value < 0) {
            throw InvalidArgument("sqrt of a negative number");
        }
        Rational root;
        if (exact_square_root(x.value, root)) {
            return DecimalApproximation::exact(root);
        }
    }
    if (x.value - x.error_bound <= 0) {
        throw InsufficientPrecision("sqrt argument enclosure is not positive");
    }
    Rational mid = sqrt_floor(x.value, bits);
    // sqrt(x0) - mid lies in [0, 2^(1-bits)).
    Rational rounding = make_rational(BigInteger(2), pow(BigInteger(2), bits));
    Rational err = rounding;
    if (x.error_bound > 0) {
        Rational low = sqrt_floor(Rational(x.value - x.error_bound), bits);
        if (low <= 0) {
            throw InsufficientPrecision("sqrt argument too close to zero");
        }
        // |sqrt(x) - sqrt(x0)| <= |x - x0| / sqrt(min(x, x0)).
        err += x.error_bound / low;
    }
    return {mid, err};
}

unsigned long bits_for_digits(unsigned digits) {
    // log2(10) < 3.33
    return static_cast<unsigned long>(digits) * 10 / 3 + 16;
}

Rational decimal_ulp(unsigned digits) {
    return make_rational(BigInteger(1), pow(BigInteger(10), digits));
}

std::string render_decimal(const DecimalApproximation& x, unsigned digits) {
    if (x.error_bound * 2 > decimal_ulp(digits)) {
        throw InsufficientPrecision("error bound " + render_bound(x.error_bound) +
                                    " exceeds half a unit in the last of " +
                                    std::to_string(digits) + " places");
    }
    BigInteger scale = pow(BigInteger(10), digits);
    Rational scaled = abs(x.value) * scale;
    BigInteger n = floor(scaled);
    Rational frac = scaled - n;
    if (frac > Rational(1, 2) || (frac == Rational(1, 2) && mpz_odd_p(n.get_mpz_t()) != 0)) {
        n += 1;
    }
    std::string body = n.get_str();
    if (body.size() <= digits) {
        body.insert(0, digits + 1 - body.size(), '0');
    }
    std::string out;
    if (x.value < 0 && n != 0) {
        out.push_back('-');
    }
    out += body.substr(0, body.size() - digits);
    if (digits > 0) {
        out.push_back('.');
        out += body.substr(body.size() - digits);
    }
    return out;
}

std::string render_bound(const Rational& bound) {
    if (bound == 0) {
        return "0";
    }
    // Decimal exponent from the sizes of numerator and denominator; then
    // scale into [1, 10) and print a couple of significant digits.
    Rational a = abs(bound);
    long e = static_cast<long>(mpz_sizeinbase(a.get_num_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(a.get_den_mpz_t(), 10));
    Rational m = a * pow(Rational(10), -e);
    while (m >= 10) {
        m /= 10;
        ++e;
    }
    while (m < 1) {
        m *= 10;
        --e;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2fe%ld", m.get_d(), e);
    return buf;
}

double to_double(const Rational& x) {
    // mpq get_d truncates but handles huge num/den without overflow.
    return x.get_d();
}

}  // namespace allplaces
