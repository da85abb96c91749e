#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "allplaces/errors.hpp"
#include "allplaces/padic.hpp"
#include "allplaces/summation.hpp"
#include "allplaces/verify.hpp"

#include <random>

using namespace allplaces;

TEST_CASE("special values at zero") {
    CHECK(special_value(params_for(NamedFunction::sin_q, 3)) == 0);
    CHECK(special_value(params_for(NamedFunction::exp_q, 1)) == make_rational(1, 2));
    CHECK(special_value(params_for(NamedFunction::cosh_q, make_rational(1, 2))) == make_rational(2, 3));
    for (auto fn : {NamedFunction::exp_q, NamedFunction::cos_q, NamedFunction::sin_q,
                    NamedFunction::cosh_q, NamedFunction::sinh_q}) {
        auto sp = params_for(fn, make_rational(2, 7));
        CHECK(special_value(sp) == partial_sum(sp, 5, 0));
    }
}

TEST_CASE("telescope terms") {
    CHECK(telescope_term(1, 0, 1, -1, 0) == make_rational(1, 2));
    CHECK(telescope_term(1, 0, 1, -1, 1) == make_rational(-1, 2));
    CHECK(telescope_term(1, 0, 1, -1, 2) == make_rational(2, 5));
    CHECK_THROWS_AS(telescope_term(1, 0, 1, 0, 1), ZeroArgument);
    CHECK_THROWS_AS(telescope_term(1, 0, 0, 1, 1), InvalidArgument);
    CHECK_THROWS_AS(lhs_partial_sum(2, 1, 1, 0, 3), ZeroArgument);
}

TEST_CASE("partial sums of the summation formula") {
    CHECK(lhs_partial_sum(1, 0, 1, -1, 0) == -1);
    Rational t0 = telescope_term(2, 1, 1, 1, 0);
    CHECK(lhs_partial_sum(2, 1, 1, 1, 3) == telescope_term(2, 1, 1, 1, 4) - t0);
    Rational direct = 0;
    for (std::uint64_t n = 0; n <= 3; ++n) direct += summation_term(2, 1, 1, 1, n);
    CHECK(direct == telescope_term(2, 1, 1, 1, 4) - t0);
}

TEST_CASE("right-hand side values") {
    CHECK(summation_limit(0, 1) == make_rational(-1, 2));
    CHECK(summation_limit(1, 1) == make_rational(-1, 2));
    CHECK(summation_limit(2, 1) == make_rational(-2, 5));
    for (std::uint64_t nu = 0; nu <= 3; ++nu)
        for (auto q : {Rational(1), make_rational(1, 2), Rational(3)})
            CHECK(summation_limit(nu, q) == -telescope_term(1, nu, q, 1, 0));
}

TEST_CASE("rational series converging to 1/2") {
    CHECK(half_series_partial(0) == 1);
    CHECK(half_series_partial(1) == make_rational(1, 10));
    for (std::uint64_t n = 0; n <= 20; ++n) {
        CHECK(half_series_term(n) == -summation_term(1, 0, 1, -1, n));
        Rational gap = abs(Rational(half_series_partial(n) - make_rational(1, 2)));
        CHECK(gap <= abs(telescope_term(1, 0, 1, -1, n + 1)));
        CHECK(half_series_partial(n) == -lhs_partial_sum(1, 0, 1, -1, n));
    }
}

TEST_CASE("exact telescoping on seeded configurations") {
    std::mt19937_64 rng(7);
    const Rational qs[] = {1, make_rational(1, 2), 3};
    for (int i = 0; i < 200; ++i) {
        std::uint64_t mu = 1 + rng() % 3, nu = rng() % 4, N = rng() % 13;
        Rational q = qs[rng() % 3];
        Rational x = random_rational(rng, 5);
        CAPTURE(mu);
        CAPTURE(nu);
        CAPTURE(N);
        CHECK(lhs_partial_sum(mu, nu, q, x, N) ==
              telescope_term(mu, nu, q, x, N + 1) - telescope_term(mu, nu, q, x, 0));
    }
}

TEST_CASE("partial sums approach the limit in R and in every Q_p") {
    std::mt19937_64 rng(11);
    const Rational qs[] = {1, make_rational(1, 2), 3};
    for (int i = 0; i < 40; ++i) {
        std::uint64_t mu = 1 + rng() % 3, nu = rng() % 4;
        Rational q = qs[rng() % 3];
        Rational x = random_rational(rng, 5);
        // Real: the gap is |t_{N+1}| and shrinks from some small index on.
        Rational prev = -1;
        for (std::uint64_t N = 4; N <= 14; ++N) {
            Rational gap = abs(Rational(lhs_partial_sum(mu, nu, q, x, N) - summation_limit(nu, q)));
            CHECK(gap == abs(telescope_term(mu, nu, q, x, N + 1)));
            if (prev >= 0) CHECK(gap < prev);
            prev = gap;
        }
        for (const Prime& p : primes_up_to(20)) {
            Valuation early = vp(telescope_term(mu, nu, q, x, 6), p);
            Valuation late = vp(telescope_term(mu, nu, q, x, 20), p);
            CHECK(late > early);
            CHECK(late >= Valuation(10));
        }
    }
}
