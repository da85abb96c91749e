#include "allplaces/series.hpp"

#include "allplaces/errors.hpp"

namespace allplaces {

void SeriesParams::validate() const {
    if (epsilon != 1 && epsilon != -1) {
        throw InvalidArgument("epsilon must be +1 or -1");
    }
    if (mu == 0) {
        throw InvalidArgument("mu must be >= 1");
    }
    if (q < 0) {
        throw InvalidArgument("q must be >= 0");
    }
}

NamedFunction parse_named_function(std::string_view name) {
    if (name == "exp_q") return NamedFunction::exp_q;
    if (name == "cos_q") return NamedFunction::cos_q;
    if (name == "sin_q") return NamedFunction::sin_q;
    if (name == "cosh_q") return NamedFunction::cosh_q;
    if (name == "sinh_q") return NamedFunction::sinh_q;
    throw InvalidArgument("unknown function '" + std::string(name) + "'");
}

std::string_view to_string(NamedFunction fn) {
    switch (fn) {
        case NamedFunction::exp_q: return "exp_q";
        case NamedFunction::cos_q: return "cos_q";
        case NamedFunction::sin_q: return "sin_q";
        case NamedFunction::cosh_q: return "cosh_q";
        case NamedFunction::sinh_q: return "sinh_q";
    }
    return "?";
}

SeriesParams params_for(NamedFunction fn, const Rational& q) {
    switch (fn) {
        case NamedFunction::exp_q: return {1, 1, 0, q};
        case NamedFunction::cos_q: return {-1, 2, 0, q};
        case NamedFunction::sin_q: return {-1, 2, 1, q};
        case NamedFunction::cosh_q: return {1, 2, 0, q};
        case NamedFunction::sinh_q: return {1, 2, 1, q};
    }
    throw InvalidArgument("unknown function");
}

namespace {

BigInteger factorial_power(std::uint64_t k) {
    return pow(factorial(k), static_cast<unsigned long>(k));
}

int sign_of(const SeriesParams& params, std::uint64_t n) {
    return (params.epsilon == -1 && n % 2 == 1) ? -1 : 1;
}

// |x|^j / j!
Rational power_over_factorial(const Rational& x_abs, std::uint64_t j) {
    return pow(x_abs, static_cast<long>(j)) / Rational(factorial(j));
}

// |x|^mu / ((j+1)...(j+mu))
Rational step_ratio(const Rational& x_abs, std::uint64_t mu, std::uint64_t j) {
    return pow(x_abs, static_cast<long>(mu)) / Rational(rising_factorial(j + 1, mu));
}

}  // namespace

Rational coeff_I(std::uint64_t k, const Rational& q) {
    Rational f(factorial_power(k));
    return f / (q + f);
}

Rational term(const SeriesParams& params, std::uint64_t n, const Rational& x) {
    std::uint64_t k = params.degree(n);
    Rational t = coeff_I(k, params.q) * pow(x, static_cast<long>(k)) / Rational(factorial(k));
    return sign_of(params, n) < 0 ? Rational(-t) : t;
}

Rational partial_sum(const SeriesParams& params, std::uint64_t n_max, const Rational& x) {
    Rational s = 0;
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        s += term(params, n, x);
    }
    return s;
}

DecimalApproximation derivative_eval_real(const SeriesParams& params, unsigned order,
                                          const Rational& x, unsigned digits) {
    params.validate();
    const Rational x_abs = abs(x);
    const Rational threshold = decimal_ulp(digits + 2);
    Rational sum = 0;
    for (std::uint64_t n = 0;; ++n) {
        std::uint64_t k = params.degree(n);
        if (k >= order) {
            std::uint64_t j = k - order;
            Rational t = coeff_I(k, params.q) * pow(x, static_cast<long>(j)) /
                         Rational(factorial(j));
            if (sign_of(params, n) < 0) {
                sum -= t;
            } else {
                sum += t;
            }
        }
        std::uint64_t k_next = k + params.mu;
        if (k_next < order) {
            continue;
        }
        // Every later term is bounded by |x|^j/j! (I <= 1), and these bounds
        // shrink by at least the step ratio, which only decreases in j.
        std::uint64_t j_next = k_next - order;
        Rational next_bound = power_over_factorial(x_abs, j_next);
        if (next_bound <= threshold && step_ratio(x_abs, params.mu, j_next) <= Rational(1, 2)) {
            return {sum, Rational(2 * next_bound)};
        }
    }
}

DecimalApproximation eval_real(const SeriesParams& params, const Rational& x, unsigned digits) {
    return derivative_eval_real(params, 0, x, digits);
}

DecimalApproximation derivative_eval_real(const SeriesParams& params, unsigned order,
                                          const DecimalApproximation& x, unsigned digits) {
    const unsigned long bits = bits_for_digits(digits);
    DecimalApproximation arg = round_to_bits(x, bits);
    DecimalApproximation at_mid = derivative_eval_real(params, order, arg.value, digits + 2);
    at_mid = round_to_bits(at_mid, bits);
    if (arg.error_bound == 0) {
        return at_mid;
    }
    // Mean value theorem: |Phi^(order)(y) - Phi^(order)(y0)| <= delta * e^(|y0| + delta) <= delta * 3^ceil(.)
    BigInteger reach = ceil(arg.magnitude_bound());
    Rational lipschitz(pow(BigInteger(3), reach.get_ui()));
    at_mid.error_bound += arg.error_bound * lipschitz;
    return at_mid;
}

Valuation term_valuation(const SeriesParams& params, std::uint64_t n, const Rational& x,
                         const Prime& p) {
    std::uint64_t k = params.degree(n);
    if (x == 0 && k > 0) {
        return Valuation::infinity();
    }
    long vx = (k == 0) ? 0 : vp(x, p).value();
    long vfact = static_cast<long>(factorial_valuation(k, p));
    Rational denominator = params.q + Rational(factorial_power(k));
    long kk = static_cast<long>(k);
    return (kk - 1) * vfact + kk * vx - vp(denominator, p).value();
}

bool classical_domain_check(const Rational& x, const Prime& p) {
    Valuation v = vp(x, p);
    return p.value() == 2 ? v >= Valuation(2) : v >= Valuation(1);
}

bool classical_domain_check(NamedFunction, const Rational& x, const Prime& p) {
    return classical_domain_check(x, p);
}

namespace {

// Number of base-p digits of k >= 1.
long digit_count(std::uint64_t k, std::uint64_t p) {
    long d = 0;
    for (; k > 0; k /= p) {
        ++d;
    }
    return d;
}

TailCertificate certify_regularized(const Rational& q, long vx, const Prime& p, long target) {
    const long vq = vp(q, p).value();
    const std::uint64_t pv = p.value();
    const Rational pm1(static_cast<unsigned long>(pv - 1));
    for (std::uint64_t k0 = 1;; ++k0) {
        const long kl = static_cast<long>(k0);
        // Anchored bound: v_p(k!) >= a = v_p(k0!) for k >= k0, so
        // v_p((k!)^k) >= k a > v_p(q) and the term valuation is at least
        // (k-1) a + k vx - vq, nondecreasing when a + vx >= 0.
        const long a = static_cast<long>(factorial_valuation(k0, p));
        const long anchored = (kl - 1) * a + kl * vx - vq;
        if (a + vx >= 0 && kl * a > vq && anchored >= target) {
            return {k0, anchored};
        }
        if (k0 <= pv) {
            continue;
        }
        // Digit-sum bound: with d the digit count of k0 and concavity of log_p,
        //   v_p(k!) >= (k - (p-1)(log_p k + 1))/(p-1)
        //           >= k/(p-1) - d - 1 - (k - k0) p/((p-1) k0)  =  alpha k + beta.
        const Rational K(static_cast<unsigned long>(k0));
        const long d = digit_count(k0, pv);
        const Rational alpha = Rational(1) / pm1 - Rational(static_cast<unsigned long>(pv)) / (pm1 * K);
        const Rational beta = Rational(-d - 1) + Rational(static_cast<unsigned long>(pv)) / pm1;
        // v_p((k!)^k) > v_p(q) for all k >= k0, so v_p(q + (k!)^k) = v_p(q):
        //   h(k) = alpha k^2 + beta k - vq, convex; need h(k0) > 0, h'(k0) >= 0.
        const Rational h = alpha * K * K + beta * K - vq;
        const Rational dh = 2 * alpha * K + beta;
        // Term valuation lower bound g(k) = (k-1)(alpha k + beta) + k vx - vq.
        const Rational g = (K - 1) * (alpha * K + beta) + K * vx - vq;
        const Rational dg = 2 * alpha * K + beta - alpha + vx;
        if (h > 0 && dh >= 0 && dg >= 0 && g >= target) {
            return {k0, ceil(g).get_si()};
        }
    }
}

TailCertificate certify_classical(long vx, const Prime& p, long target) {
    // v_p(k!) <= (k-1)/(p-1) for k >= 1, so a term has valuation
    // >= k (vx - 1/(p-1)) + 1/(p-1), increasing in k inside the disc.
    const Rational pm1(static_cast<unsigned long>(p.value() - 1));
    const Rational slope = Rational(vx) - Rational(1) / pm1;
    for (std::uint64_t k0 = 1;; ++k0) {
        Rational g = Rational(static_cast<unsigned long>(k0)) * slope + Rational(1) / pm1;
        if (g >= target) {
            return {k0, ceil(g).get_si()};
        }
    }
}

}  // namespace

TailCertificate certify_padic_tail(const SeriesParams& params, const Rational& x,
                                   const Prime& p, long target) {
    params.validate();
    if (x == 0) {
        // Only the degree-0 term can be nonzero.
        return {1, target};
    }
    long vx = vp(x, p).value();
    if (params.q == 0) {
        if (!classical_domain_check(x, p)) {
            throw ClassicalDivergence("classical series diverges at x = " + to_string(x) +
                                      " in Q_" + std::to_string(p.value()));
        }
        return certify_classical(vx, p, target);
    }
    return certify_regularized(params.q, vx, p, target);
}

PadicEvalReport eval_padic(const SeriesParams& params, const Rational& x, const Prime& p,
                           long target) {
    if (target < 1) {
        throw InvalidArgument("p-adic target precision must be >= 1");
    }
    TailCertificate cert = certify_padic_tail(params, x, p, target);
    Rational sum = 0;
    std::uint64_t used = 0;
    for (std::uint64_t n = 0; params.degree(n) < cert.first_uncovered_degree; ++n) {
        sum += term(params, n, x);
        ++used;
    }
    return {to_padic_absolute(sum, p, target), used, cert.bound};
}

}  // namespace allplaces
