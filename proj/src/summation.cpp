#include "allplaces/summation.hpp"

#include "allplaces/errors.hpp"

namespace allplaces {

namespace {

void require_domain(const Rational& q, const Rational& x) {
    if (x == 0) {
        throw ZeroArgument("the summation identity needs x != 0");
    }
    if (q <= 0) {
        throw InvalidArgument("the summation identity needs q > 0");
    }
}

// (k!)^e for possibly negative e (only e = -1 at k = 0 or 1 in practice).
Rational factorial_pow(std::uint64_t k, long e) { return pow(Rational(factorial(k)), e); }

}  // namespace

Rational special_value(const SeriesParams& params) {
    params.validate();
    return params.nu == 0 ? coeff_I(0, params.q) : Rational(0);
}

Rational telescope_term(std::uint64_t mu, std::uint64_t nu, const Rational& q, const Rational& x,
                        std::uint64_t n) {
    require_domain(q, x);
    const std::uint64_t k = mu * n + nu;
    const long kl = static_cast<long>(k);
    return factorial_pow(k, kl - 1) * pow(x, static_cast<long>(mu * n)) /
           (q + factorial_pow(k, kl));
}

Rational summation_term(std::uint64_t mu, std::uint64_t nu, const Rational& q, const Rational& x,
                        std::uint64_t n) {
    require_domain(q, x);
    const std::uint64_t k = mu * n + nu;
    const std::uint64_t k_next = k + mu;
    const long kl = static_cast<long>(k);
    Rational lead = factorial_pow(k, kl - 1) * pow(x, static_cast<long>(mu * n));
    Rational up = factorial_pow(k_next, static_cast<long>(mu)) *
                  pow(Rational(rising_factorial(k + 1, mu)), kl - 1) *
                  pow(x, static_cast<long>(mu)) /
                  (q + factorial_pow(k_next, static_cast<long>(k_next)));
    Rational down = 1 / (q + factorial_pow(k, kl));
    return lead * (up - down);
}

Rational lhs_partial_sum(std::uint64_t mu, std::uint64_t nu, const Rational& q,
                         const Rational& x, std::uint64_t N) {
    Rational s = 0;
    for (std::uint64_t n = 0; n <= N; ++n) {
        s += summation_term(mu, nu, q, x, n);
    }
    return s;
}

Rational summation_limit(std::uint64_t nu, const Rational& q) {
    if (q <= 0) {
        throw InvalidArgument("the summation identity needs q > 0");
    }
    const long nl = static_cast<long>(nu);
    return -factorial_pow(nu, nl - 1) / (q + factorial_pow(nu, nl));
}

Rational half_series_term(std::uint64_t n) {
    const long nl = static_cast<long>(n);
    const Rational fn(factorial(n));
    const Rational fn1(factorial(n + 1));
    const Rational fn_n = pow(fn, nl);
    const Rational fn1_n = pow(fn1, nl);
    Rational num = fn1_n * (1 + Rational(static_cast<unsigned long>(n + 2)) * fn_n) + pow(fn, nl - 1);
    Rational den = (1 + fn_n) * (1 + fn1_n * fn1);
    Rational t = num / den;
    return n % 2 == 0 ? t : Rational(-t);
}

Rational half_series_partial(std::uint64_t N) {
    Rational s = 0;
    for (std::uint64_t n = 0; n <= N; ++n) {
        s += half_series_term(n);
    }
    return s;
}

}  // namespace allplaces
