#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "allplaces/errors.hpp"
#include "allplaces/numeric.hpp"

#include <random>
#include <thread>
#include <vector>

using namespace allplaces;

TEST_CASE("factorial small values") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(10) == 3628800);
}

TEST_CASE("factorial recurrence") {
    for (std::uint64_t n = 0; n < 200; ++n) {
        CHECK(factorial(n + 1) == factorial(n) * static_cast<unsigned long>(n + 1));
    }
}

TEST_CASE("factorial cache grows monotonically and keeps references valid") {
    FactorialCache cache;
    const BigInteger& f3 = cache(3);
    CHECK(cache.size() == 4);
    cache(500);
    CHECK(cache.size() == 501);
    CHECK(f3 == 6);
    CHECK(cache(20) == BigInteger("2432902008176640000"));
}

TEST_CASE("factorial cache is consistent under concurrent readers") {
    FactorialCache cache;
    std::vector<std::thread> pool;
    std::vector<BigInteger> seen(8);
    for (int i = 0; i < 8; ++i) {
        pool.emplace_back([&, i] {
            for (std::uint64_t n = 0; n < 150; ++n) cache(n);
            seen[i] = cache(149);
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& v : seen) CHECK(v == factorial(149));
}

TEST_CASE("rising factorial") {
    CHECK(rising_factorial(3, 2) == 12);
    CHECK(rising_factorial(1, 5) == 120);
    CHECK(rising_factorial(7, 1) == 7);
    CHECK_THROWS_AS(rising_factorial(0, 2), InvalidArgument);
    CHECK_THROWS_AS(rising_factorial(2, 0), InvalidArgument);
    for (std::uint64_t a = 1; a < 30; ++a) {
        for (std::uint64_t mu = 1; mu < 8; ++mu) {
            BigInteger expected = factorial(a + mu - 1) / factorial(a - 1);
            CHECK(rising_factorial(a, mu) == expected);
        }
    }
}

TEST_CASE("rational arithmetic is exact") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-100000, 100000), den(1, 100000);
    for (int i = 0; i < 500; ++i) {
        long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
        Rational sum = make_rational(a, b) + make_rational(c, d);
        Rational scaled = sum * Rational(BigInteger(b) * d);
        CHECK(scaled.get_den() == 1);
        CHECK(scaled.get_num() == BigInteger(a) * d + BigInteger(c) * b);
    }
}

TEST_CASE("parse_rational") {
    CHECK(parse_rational("7") == 7);
    CHECK(parse_rational("-3/6") == make_rational(-1, 2));
    CHECK(parse_rational("+10/4") == make_rational(5, 2));
    CHECK(parse_rational("0/5") == 0);
    CHECK_THROWS_AS(parse_rational(""), InvalidArgument);
    CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
    CHECK_THROWS_AS(parse_rational("1/-2"), InvalidArgument);
    CHECK_THROWS_AS(parse_rational("abc"), InvalidArgument);
    CHECK_THROWS_AS(parse_rational("1.5"), InvalidArgument);
}

TEST_CASE("to_string round trips through parse_rational") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 1000000);
    for (int i = 0; i < 200; ++i) {
        Rational r = make_rational(num(rng), den(rng));
        CHECK(parse_rational(to_string(r)) == r);
    }
}

TEST_CASE("pow, floor, ceil") {
    CHECK(pow(make_rational(2, 3), 3) == make_rational(8, 27));
    CHECK(pow(make_rational(2, 3), -2) == make_rational(9, 4));
    CHECK(pow(make_rational(-1, 2), 0) == 1);
    CHECK_THROWS_AS(pow(Rational(0), -1), InvalidArgument);
    CHECK(floor(make_rational(-7, 2)) == -4);
    CHECK(ceil(make_rational(-7, 2)) == -3);
    CHECK(floor(Rational(5)) == 5);
}
