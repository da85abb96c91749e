#pragma once

// The telescoping summation identity behind the regularized series with
// eps = -1, and the rational-sum series obtained from it at
// (mu, nu, q, x) = (1, 0, 1, -1).

#include "allplaces/numeric.hpp"
#include "allplaces/series.hpp"

#include <cstdint>

namespace allplaces {

/// Phi(0): 1/(q+1) when nu = 0, otherwise 0.
Rational special_value(const SeriesParams& params);

/// t_n = ((mu n + nu)!)^(mu n + nu - 1) x^(mu n) / (q + ((mu n + nu)!)^(mu n + nu)).
/// Throws ZeroArgument for x = 0, InvalidArgument for q <= 0.
Rational telescope_term(std::uint64_t mu, std::uint64_t nu, const Rational& q, const Rational& x,
                        std::uint64_t n);

/// The n-th general term of the summation formula, built from the rising
/// factorial (k+1)_mu rather than from t_{n+1} - t_n.
Rational summation_term(std::uint64_t mu, std::uint64_t nu, const Rational& q, const Rational& x,
                        std::uint64_t n);

/// Sum of summation_term over n = 0..N.
Rational lhs_partial_sum(std::uint64_t mu, std::uint64_t nu, const Rational& q,
                         const Rational& x, std::uint64_t N);

/// The limit of lhs_partial_sum: -(nu!)^(nu-1) / (q + (nu!)^nu).
Rational summation_limit(std::uint64_t nu, const Rational& q);

/// n-th term of the explicit series converging to 1/2:
/// (-1)^n [((n+1)!)^n (1 + (n+2)(n!)^n) + (n!)^(n-1)] / ([1 + (n!)^n][1 + ((n+1)!)^(n+1)]).
Rational half_series_term(std::uint64_t n);

/// Sum of half_series_term over n = 0..N.
Rational half_series_partial(std::uint64_t N);

}  // namespace allplaces
