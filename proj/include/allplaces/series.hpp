#pragma once

// The regularized family
//
//   Phi(x) = sum_n eps^n I_{mu n + nu}(q) x^(mu n + nu) / (mu n + nu)!,
//   I_k(q) = (k!)^k / (q + (k!)^k),
//
// evaluated exactly term by term, over R with a certified error bound and
// over Q_p with a certified tail valuation. q = 0 gives the classical series.

#include "allplaces/numeric.hpp"
#include "allplaces/padic.hpp"
#include "allplaces/real.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace allplaces {

struct SeriesParams {
    int epsilon = 1;        // +1 or -1
    std::uint64_t mu = 1;   // >= 1
    std::uint64_t nu = 0;
    Rational q = 0;         // >= 0

    /// Throws InvalidArgument on epsilon not in {+1,-1}, mu == 0 or q < 0.
    void validate() const;

    /// Degree mu n + nu of the n-th term.
    std::uint64_t degree(std::uint64_t n) const { return mu * n + nu; }
};

enum class NamedFunction { exp_q, cos_q, sin_q, cosh_q, sinh_q };

NamedFunction parse_named_function(std::string_view name);
std::string_view to_string(NamedFunction fn);

/// (eps, mu, nu) for the named function, with the given q.
SeriesParams params_for(NamedFunction fn, const Rational& q);

/// I_k(q) = (k!)^k / (q + (k!)^k).
Rational coeff_I(std::uint64_t k, const Rational& q);

/// eps^n I_k x^k / k! with k = mu n + nu.
Rational term(const SeriesParams& params, std::uint64_t n, const Rational& x);

/// Partial sum up to and including index n_max.
Rational partial_sum(const SeriesParams& params, std::uint64_t n_max, const Rational& x);

/// Phi(x) with error_bound <= 10^-digits.
DecimalApproximation eval_real(const SeriesParams& params, const Rational& x, unsigned digits);

/// order-th termwise derivative of Phi at x with error_bound <= 10^-digits.
DecimalApproximation derivative_eval_real(const SeriesParams& params, unsigned order,
                                          const Rational& x, unsigned digits);

/// Derivative evaluated at an uncertain argument. The argument's radius is
/// propagated through |Phi^(order+1)(y)| <= exp(|y|).
DecimalApproximation derivative_eval_real(const SeriesParams& params, unsigned order,
                                          const DecimalApproximation& x, unsigned digits);

/// Exact v_p of the n-th term:
/// (k-1) v_p(k!) + k v_p(x) - v_p(q + (k!)^k), k = mu n + nu.
Valuation term_valuation(const SeriesParams& params, std::uint64_t n, const Rational& x,
                         const Prime& p);

/// Certificate that every term of degree >= first_uncovered_degree has
/// valuation >= bound.
struct TailCertificate {
    std::uint64_t first_uncovered_degree = 0;
    long bound = 0;
};

/// Smallest degree K (searched upward) past which all term valuations are
/// certified >= target. Requires q > 0, or q = 0 inside the classical disc.
TailCertificate certify_padic_tail(const SeriesParams& params, const Rational& x,
                                   const Prime& p, long target);

struct PadicEvalReport {
    PadicNumber result;
    std::uint64_t terms_used = 0;
    long tail_bound_exponent = 0;  // every omitted term has valuation >= this
};

/// Phi(x) modulo p^target. For q = 0 the classical disc is checked first and
/// ClassicalDivergence is thrown outside it.
PadicEvalReport eval_padic(const SeriesParams& params, const Rational& x, const Prime& p,
                           long target);

/// Classical exp/sin/cos/sinh/cosh converge at x in Q_p iff |x|_p < 1
/// (p odd) or |x|_2 < 1/2.
bool classical_domain_check(NamedFunction fn, const Rational& x, const Prime& p);
bool classical_domain_check(const Rational& x, const Prime& p);

}  // namespace allplaces
