#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "allplaces/errors.hpp"
#include "allplaces/real.hpp"

#include <random>

using namespace allplaces;

namespace {

DecimalApproximation approx(const Rational& v, const Rational& e) { return {v, e}; }

bool contains(const DecimalApproximation& x, const Rational& v) {
    return abs(Rational(x.value - v)) <= x.error_bound;
}

}  // namespace

TEST_CASE("render_decimal examples") {
    CHECK(render_decimal(DecimalApproximation::exact(make_rational(1, 2)), 3) == "0.500");
    CHECK(render_decimal(approx(make_rational(1, 3), decimal_ulp(10)), 6) == "0.333333");
    CHECK_THROWS_AS(render_decimal(approx(make_rational(1, 2), make_rational(1, 10)), 3),
                    InsufficientPrecision);
}

TEST_CASE("render_decimal rounds half to even") {
    auto exact = [](long n, long d) { return DecimalApproximation::exact(make_rational(n, d)); };
    CHECK(render_decimal(exact(1, 8), 2) == "0.12");
    CHECK(render_decimal(exact(3, 8), 2) == "0.38");
    CHECK(render_decimal(exact(5, 2), 0) == "2");
    CHECK(render_decimal(exact(7, 2), 0) == "4");
    CHECK(render_decimal(exact(-1, 8), 2) == "-0.12");
    CHECK(render_decimal(exact(-1, 1000), 2) == "0.00");
    CHECK(render_decimal(exact(12345, 1), 1) == "12345.0");
}

TEST_CASE("render_decimal accepts a bound of exactly half an ulp") {
    CHECK(render_decimal(approx(Rational(1), make_rational(1, 2000)), 3) == "1.000");
    CHECK_THROWS_AS(render_decimal(approx(Rational(1), make_rational(1, 1999)), 3),
                    InsufficientPrecision);
}

TEST_CASE("interval arithmetic encloses every point combination") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 20), err(0, 10);
    for (int i = 0; i < 300; ++i) {
        Rational a0 = make_rational(num(rng), den(rng));
        Rational b0 = make_rational(num(rng), den(rng));
        Rational ea = make_rational(err(rng), 100), eb = make_rational(err(rng), 100);
        DecimalApproximation a{a0, ea}, b{b0, eb};
        for (int sa : {-1, 0, 1}) {
            for (int sb : {-1, 0, 1}) {
                Rational x = a0 + sa * ea, y = b0 + sb * eb;
                CHECK(contains(a + b, x + y));
                CHECK(contains(a - b, x - y));
                CHECK(contains(a * b, x * y));
                if (b.bounded_away_from_zero()) {
                    CHECK(contains(a / b, x / y));
                }
            }
        }
    }
}

TEST_CASE("division by an enclosure of zero") {
    CHECK_THROWS_AS(DecimalApproximation::exact(1) / approx(make_rational(1, 10), make_rational(1, 5)),
                    InsufficientPrecision);
}

TEST_CASE("round_to_bits keeps the value enclosed") {
    DecimalApproximation x = DecimalApproximation::exact(make_rational(1, 3));
    DecimalApproximation r = round_to_bits(x, 40);
    CHECK(contains(r, make_rational(1, 3)));
    CHECK(r.error_bound <= make_rational(1, 2) * pow(Rational(2), -40));
    CHECK(r.value.get_den() <= pow(BigInteger(2), 40));
}

TEST_CASE("sqrt exact and enclosed") {
    CHECK(sqrt(DecimalApproximation::exact(1), 64).is_exact());
    CHECK(sqrt(DecimalApproximation::exact(make_rational(4, 9)), 64).value == make_rational(2, 3));
    auto s = sqrt(DecimalApproximation::exact(2), 200);
    Rational lo = s.value - s.error_bound, hi = s.value + s.error_bound;
    CHECK(lo * lo <= 2);
    CHECK(hi * hi >= 2);
    CHECK(s.error_bound < pow(Rational(2), -190));
    auto t = sqrt(approx(2, make_rational(1, 1000)), 100);
    Rational lo2 = t.value - t.error_bound, hi2 = t.value + t.error_bound;
    CHECK(lo2 * lo2 <= make_rational(1999, 1000));
    CHECK(hi2 * hi2 >= make_rational(2001, 1000));
    CHECK_THROWS_AS(sqrt(DecimalApproximation::exact(-1), 10), InvalidArgument);
}

TEST_CASE("render_bound") {
    CHECK(render_bound(0) == "0");
    CHECK(render_bound(make_rational(3, 100)) == "3.00e-2");
    CHECK(render_bound(Rational(12345)) == "1.23e4");
}
