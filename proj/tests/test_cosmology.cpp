#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "allplaces/cosmology.hpp"
#include "allplaces/errors.hpp"

#include <cmath>

using namespace allplaces;

namespace {

bool within(const DecimalApproximation& x, const Rational& v, const Rational& tol) {
    return abs(Rational(x.value - v)) + x.error_bound <= tol;
}

CosmoParams model(int k, const Rational& q, const Rational& lambda = 3, const Rational& kappa = 1) {
    CosmoParams p;
    p.curvature = k;
    p.q = q;
    p.lambda = lambda;
    p.kappa = kappa;
    return p;
}

double log_scale(const CosmoParams& p, double t) {
    Rational tr(t);
    return std::log(to_double(scale_factor(p, tr, 25).value));
}

}  // namespace

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(model(2, 0).validate(), InvalidArgument);
    CHECK_THROWS_AS(model(0, -1).validate(), InvalidArgument);
    CHECK_THROWS_AS(model(0, 0, 0).validate(), InvalidArgument);
    CHECK_THROWS_AS(model(0, 0, 3, -1).validate(), InvalidArgument);
    CHECK_NOTHROW(model(-1, make_rational(1, 10), make_rational(1, 2), 7).validate());
}

TEST_CASE("hubble rate squares to Lambda / 3") {
    auto H = hubble_rate(model(0, 0, 3), 30);
    CHECK(H.is_exact());
    CHECK(H.value == 1);
    H = hubble_rate(model(0, 0, 2), 30);
    CHECK(within(H * H, make_rational(2, 3), decimal_ulp(29)));
}

TEST_CASE("scale factor special values") {
    for (auto q : {Rational(0), Rational(1), make_rational(1, 3)}) {
        CHECK(within(scale_factor(model(0, q), 0, 20), 1 / (q + 1), decimal_ulp(20)));
    }
    CHECK(within(scale_factor(model(1, 1), 0, 20), make_rational(1, 2), decimal_ulp(20)));
    // H = 2 at Lambda = 12: R(0) = (1/2) / (q + 1)
    CHECK(within(scale_factor(model(1, 1, 12), 0, 20), make_rational(1, 4), decimal_ulp(20)));
    CHECK(render_decimal(scale_factor(model(0, 0), 1, 6), 6) == "2.718282");
    CHECK_THROWS_AS(scale_factor(model(-1, 1), 0, 20), DegenerateScaleFactor);
    CHECK_THROWS_AS(energy_density(model(-1, 0), 0, 20), DegenerateScaleFactor);
}

TEST_CASE("de Sitter limit is exact at q = 0") {
    for (auto t : {Rational(0), make_rational(1, 10), Rational(2)}) {
        auto rho = energy_density(model(0, 0, 6, 2), t, 20);
        auto p = pressure(model(0, 0, 6, 2), t, 20);
        CHECK(rho.is_exact());
        CHECK(rho.value == 3);
        CHECK(p.is_exact());
        CHECK(p.value == -3);
    }
}

TEST_CASE("density and pressure near q = 0") {
    auto m = model(0, make_rational(1, 1000000));
    CHECK(within(energy_density(m, 1, 20), 3, make_rational(1, 10000)));
    CHECK(within(pressure(m, 1, 20), -3, make_rational(1, 10000)));
    // I_1 = I_0 at q = 1, so the log-derivative at 0 is H.
    CHECK(within(energy_density(model(0, 1), 0, 20), 3, decimal_ulp(19)));
}

TEST_CASE("density and pressure match finite differences of ln R") {
    for (int k : {-1, 0, 1}) {
        auto m = model(k, 1);
        const double t = 1.0, h = 1e-3;
        double lm = log_scale(m, t - h), l0 = log_scale(m, t), lp = log_scale(m, t + h);
        double d1 = (lp - lm) / (2 * h), d2 = (lp - 2 * l0 + lm) / (h * h);
        double R = to_double(scale_factor(m, 1, 25).value);
        double rho = 3 * (d1 * d1 + k / (R * R));
        // p = -[2 R''/R + (R'/R)^2 + k/R^2] with R''/R = (ln R)'' + ((ln R)')^2
        double p = -(2 * (d2 + d1 * d1) + d1 * d1 + k / (R * R));
        CAPTURE(k);
        CHECK(to_double(energy_density(m, 1, 20).value) == doctest::Approx(rho).epsilon(1e-5));
        CHECK(to_double(pressure(m, 1, 20).value) == doctest::Approx(p).epsilon(1e-5));
    }
}

TEST_CASE("Friedmann residuals vanish to working precision") {
    const Rational tol = decimal_ulp(30);
    for (int k : {-1, 0, 1}) {
        for (auto q : {Rational(1), make_rational(1, 10)}) {
            for (auto t : {make_rational(1, 10), Rational(1), Rational(2)}) {
                CAPTURE(k);
                CAPTURE(to_string(q));
                CAPTURE(to_string(t));
                auto r = friedmann_residual(model(k, q), t, 40);
                CHECK(r.acceleration.magnitude_bound() <= tol);
                CHECK(r.constraint.magnitude_bound() <= tol);
            }
        }
    }
    auto r = friedmann_residual(model(0, 0), 1, 20);
    CHECK(r.acceleration.magnitude_bound() <= decimal_ulp(20));
    CHECK(r.constraint.magnitude_bound() <= decimal_ulp(20));
}

TEST_CASE("cosmo state bundles the pieces") {
    auto m = model(1, make_rational(1, 10), 5, 2);
    auto s = cosmo_state(m, 2, 20);
    CHECK(s.t == 2);
    CHECK(render_decimal(s.scale_factor, 20) == render_decimal(scale_factor(m, 2, 20), 20));
    CHECK(render_decimal(s.rho, 20) == render_decimal(energy_density(m, 2, 20), 20));
    CHECK(render_decimal(s.pressure, 20) == render_decimal(pressure(m, 2, 20), 20));
}

TEST_CASE("curved scale factors have parity") {
    for (auto t : {make_rational(1, 10), Rational(1), make_rational(5, 2)}) {
        auto even_p = scale_factor(model(1, make_rational(1, 2)), t, 25);
        auto even_m = scale_factor(model(1, make_rational(1, 2)), -t, 25);
        CHECK(within(even_p - even_m, 0, decimal_ulp(24)));
        auto odd_p = scale_factor(model(-1, make_rational(1, 2)), t, 25);
        auto odd_m = scale_factor(model(-1, make_rational(1, 2)), -t, 25);
        CHECK(within(odd_p + odd_m, 0, decimal_ulp(24)));
    }
}

TEST_CASE("gaps to de Sitter shrink with q") {
    std::vector<Rational> qs = {make_rational(1, 1000), make_rational(1, 1000000),
                                make_rational(1, 1000000000)};
    auto table = desitter_gap(model(0, 0), qs, 1, 30);
    CHECK(table.strictly_decreasing);
    REQUIRE(table.gaps.size() == 3);
    for (std::size_t i = 0; i < qs.size(); ++i) {
        CHECK(table.gaps[i].magnitude_bound() <= 3 * qs[i]);
    }
    auto zero = desitter_gap(model(0, 0), {Rational(0)}, 1, 30);
    CHECK(zero.gaps[0].is_exact());
    CHECK(zero.gaps[0].value == 0);
}
