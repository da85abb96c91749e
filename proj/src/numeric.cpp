#include "allplaces/numeric.hpp"

#include "allplaces/errors.hpp"

#include <mutex>

namespace allplaces {

Rational make_rational(const BigInteger& num, const BigInteger& den) {
    if (den == 0) {
        throw InvalidArgument("rational with zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational make_rational(long num, long den) {
    return make_rational(BigInteger(num), BigInteger(den));
}

namespace {

BigInteger parse_integer(std::string_view text, std::string_view whole) {
    std::string s(text);
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size()) {
        throw InvalidArgument("cannot parse rational '" + std::string(whole) + "'");
    }
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') {
            throw InvalidArgument("cannot parse rational '" + std::string(whole) + "'");
        }
    }
    if (s[0] == '+') {
        s.erase(0, 1);
    }
    return BigInteger(s, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text, text));
    }
    auto num = parse_integer(text.substr(0, slash), text);
    auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
        throw InvalidArgument("cannot parse rational '" + std::string(text) + "'");
    }
    auto den = parse_integer(den_text, text);
    if (den == 0) {
        throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
    }
    return make_rational(num, den);
}

std::string to_string(const Rational& x) {
    if (x.get_den() == 1) {
        return x.get_num().get_str();
    }
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_string(const BigInteger& x) { return x.get_str(); }

BigInteger pow(const BigInteger& base, unsigned long exp) {
    BigInteger r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Rational pow(const Rational& x, long exp) {
    if (exp >= 0) {
        auto e = static_cast<unsigned long>(exp);
        return make_rational(pow(x.get_num(), e), pow(x.get_den(), e));
    }
    if (x == 0) {
        throw InvalidArgument("zero raised to a negative power");
    }
    auto e = static_cast<unsigned long>(-exp);
    return make_rational(pow(x.get_den(), e), pow(x.get_num(), e));
}

Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

BigInteger floor(const Rational& x) {
    BigInteger q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

BigInteger ceil(const Rational& x) {
    BigInteger q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

FactorialCache::FactorialCache() { values_.emplace_back(1); }

const BigInteger& FactorialCache::operator()(std::uint64_t n) {
    {
        std::shared_lock lock(mutex_);
        if (n < values_.size()) {
            return values_[n];
        }
    }
    std::unique_lock lock(mutex_);
    while (values_.size() <= n) {
        BigInteger next = values_.back() * static_cast<unsigned long>(values_.size());
        values_.push_back(std::move(next));
    }
    return values_[n];
}

std::uint64_t FactorialCache::size() const {
    std::shared_lock lock(mutex_);
    return values_.size();
}

const BigInteger& factorial(std::uint64_t n) {
    static FactorialCache cache;
    return cache(n);
}

BigInteger rising_factorial(std::uint64_t a, std::uint64_t mu) {
    if (a < 1 || mu < 1) {
        throw InvalidArgument("rising_factorial requires a >= 1 and mu >= 1");
    }
    BigInteger r = 1;
    for (std::uint64_t i = 0; i < mu; ++i) {
        r *= static_cast<unsigned long>(a + i);
    }
    return r;
}

}  // namespace allplaces
