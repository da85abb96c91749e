#include "allplaces/padic.hpp"

#include "allplaces/errors.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace allplaces {

bool is_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    if (n % 2 == 0) {
        return n == 2;
    }
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

Prime::Prime(std::uint64_t value) : value_(value) {
    if (value > kMaxPrime || !is_prime(value)) {
        throw InvalidArgument(std::to_string(value) + " is not a prime below 10^6");
    }
}

std::vector<Prime> primes_up_to(std::uint64_t bound) {
    std::vector<Prime> out;
    for (std::uint64_t n = 2; n <= bound; ++n) {
        if (is_prime(n)) {
            out.emplace_back(n);
        }
    }
    return out;
}

std::vector<Prime> prime_divisors(const BigInteger& n) {
    std::vector<Prime> out;
    BigInteger m = abs(n);
    if (m == 0) {
        throw InvalidArgument("prime_divisors of zero");
    }
    for (unsigned long d = 2; BigInteger(d) * d <= m; ++d) {
        if (mpz_divisible_ui_p(m.get_mpz_t(), d) != 0) {
            out.emplace_back(d);
            while (mpz_divisible_ui_p(m.get_mpz_t(), d) != 0) {
                mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
            }
        }
    }
    if (m > 1) {
        if (!m.fits_ulong_p() || m.get_ui() > Prime::kMaxPrime) {
            throw InvalidArgument("prime factor " + m.get_str() + " exceeds the supported range");
        }
        out.emplace_back(m.get_ui());
    }
    return out;
}

long Valuation::value() const {
    if (infinite_) {
        throw InvalidArgument("infinite valuation has no integer value");
    }
    return value_;
}

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.infinite_ || b.infinite_) {
        return a.infinite_ <=> b.infinite_;
    }
    return a.value_ <=> b.value_;
}

std::string Valuation::to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

Rational PadicNorm::value() const {
    return pow(Rational(static_cast<unsigned long>(prime.value())), -exponent.value());
}

std::strong_ordering operator<=>(const PadicNorm& a, const PadicNorm& b) {
    if (a.prime != b.prime) {
        throw PrimeMismatch("comparing norms of different primes");
    }
    return b.exponent <=> a.exponent;
}

long vp(const BigInteger& n, const Prime& p) {
    if (n == 0) {
        throw InvalidArgument("vp of zero integer");
    }
    BigInteger rest;
    BigInteger prime(p.ulong());
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}

Valuation vp(const Rational& x, const Prime& p) {
    if (x == 0) {
        return Valuation::infinity();
    }
    return vp(x.get_num(), p) - vp(x.get_den(), p);
}

PadicNorm norm(const Rational& x, const Prime& p) { return {p, vp(x, p)}; }

std::uint64_t digit_sum(std::uint64_t n, const Prime& p) {
    std::uint64_t s = 0;
    for (; n > 0; n /= p.value()) {
        s += n % p.value();
    }
    return s;
}

std::uint64_t factorial_valuation(std::uint64_t n, const Prime& p) {
    return (n - digit_sum(n, p)) / (p.value() - 1);
}

PadicNorm norm_factorial(std::uint64_t n, const Prime& p) {
    return {p, static_cast<long>(factorial_valuation(n, p))};
}

namespace {

BigInteger prime_power(const Prime& p, long k) {
    return pow(BigInteger(p.ulong()), static_cast<unsigned long>(std::max(k, 0L)));
}

// Inverse of a p-free integer modulo p^k.
BigInteger inverse_mod(const BigInteger& a, const BigInteger& modulus) {
    BigInteger r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), modulus.get_mpz_t()) == 0) {
        throw InvalidArgument("no modular inverse");
    }
    return r;
}

BigInteger mod(const BigInteger& a, const BigInteger& m) {
    BigInteger r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

}  // namespace

PadicNumber PadicNumber::zero(const Prime& p, long absolute_precision) {
    PadicNumber z(p);
    z.precision_ = absolute_precision;
    return z;
}

PadicNumber PadicNumber::from_unit(const Prime& p, long valuation, const BigInteger& unit,
                                   long precision) {
    if (precision < 1) {
        throw InvalidArgument("nonzero p-adic number needs precision >= 1");
    }
    BigInteger u = mod(unit, prime_power(p, precision));
    if (mpz_divisible_ui_p(u.get_mpz_t(), p.ulong()) != 0) {
        throw InvalidArgument("p-adic unit part divisible by p");
    }
    PadicNumber x(p);
    x.zero_ = false;
    x.valuation_ = valuation;
    x.unit_ = std::move(u);
    x.precision_ = precision;
    return x;
}

Valuation PadicNumber::valuation() const {
    return zero_ ? Valuation::infinity() : Valuation(valuation_);
}

long PadicNumber::absolute_precision() const {
    return zero_ ? precision_ : valuation_ + precision_;
}

std::vector<std::uint64_t> PadicNumber::digits() const {
    std::vector<std::uint64_t> out;
    if (zero_) {
        return out;
    }
    BigInteger rest = unit_;
    for (long i = 0; i < precision_; ++i) {
        out.push_back(mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), prime_.ulong()));
    }
    return out;
}

PadicNorm PadicNumber::norm() const { return {prime_, valuation()}; }

bool PadicNumber::in_integers() const { return zero_ || valuation_ >= 0; }

Rational PadicNumber::representative() const {
    if (zero_) {
        return 0;
    }
    return Rational(unit_) * pow(Rational(prime_.ulong()), valuation_);
}

PadicNumber PadicNumber::truncate(long absolute_precision) const {
    if (absolute_precision >= this->absolute_precision()) {
        return *this;
    }
    if (zero_ || absolute_precision <= valuation_) {
        return zero(prime_, absolute_precision);
    }
    return from_unit(prime_, valuation_, unit_, absolute_precision - valuation_);
}

std::string PadicNumber::to_string() const {
    std::ostringstream os;
    os << "padic(p=" << prime_.value() << ", ";
    if (zero_) {
        os << "zero";
    } else {
        os << "val=" << valuation_ << ", digits=[";
        auto ds = digits();
        for (std::size_t i = 0; i < ds.size(); ++i) {
            os << (i ? "," : "") << ds[i];
        }
        os << "]";
    }
    os << ", prec=" << precision_ << ")";
    return os.str();
}

namespace {

class PadicParser {
public:
    explicit PadicParser(std::string_view text) : text_(text) {}

    void expect(std::string_view token) {
        if (text_.substr(pos_, token.size()) != token) {
            fail();
        }
        pos_ += token.size();
    }

    bool accept(std::string_view token) {
        if (text_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    long integer() {
        long v = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
        if (ec != std::errc()) {
            fail();
        }
        pos_ = static_cast<std::size_t>(ptr - text_.data());
        return v;
    }

    void finish() {
        if (pos_ != text_.size()) {
            fail();
        }
    }

    [[noreturn]] void fail() const {
        throw InvalidArgument("malformed p-adic literal '" + std::string(text_) + "'");
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

PadicNumber parse_padic(std::string_view text) {
    PadicParser in(text);
    in.expect("padic(p=");
    long pv = in.integer();
    if (pv < 2) {
        in.fail();
    }
    Prime p(static_cast<std::uint64_t>(pv));
    in.expect(", ");
    if (in.accept("zero, prec=")) {
        long prec = in.integer();
        in.expect(")");
        in.finish();
        return PadicNumber::zero(p, prec);
    }
    in.expect("val=");
    long val = in.integer();
    in.expect(", digits=[");
    std::vector<long> ds;
    if (!in.accept("]")) {
        do {
            ds.push_back(in.integer());
        } while (in.accept(","));
        in.expect("]");
    }
    in.expect(", prec=");
    long prec = in.integer();
    in.expect(")");
    in.finish();
    if (static_cast<long>(ds.size()) != prec || ds.empty() || ds[0] == 0) {
        in.fail();
    }
    BigInteger unit = 0;
    for (auto it = ds.rbegin(); it != ds.rend(); ++it) {
        if (*it < 0 || static_cast<std::uint64_t>(*it) >= p.value()) {
            in.fail();
        }
        unit = unit * p.ulong() + static_cast<unsigned long>(*it);
    }
    return PadicNumber::from_unit(p, val, unit, prec);
}

PadicNumber to_padic(const Rational& x, const Prime& p, long precision) {
    if (precision < 1) {
        throw InvalidArgument("p-adic precision must be >= 1");
    }
    if (x == 0) {
        return PadicNumber::zero(p, precision);
    }
    long v = vp(x, p).value();
    Rational unit_part = x * pow(Rational(p.ulong()), -v);
    BigInteger modulus = prime_power(p, precision);
    BigInteger u = mod(unit_part.get_num() * inverse_mod(unit_part.get_den(), modulus), modulus);
    return PadicNumber::from_unit(p, v, u, precision);
}

PadicNumber to_padic_absolute(const Rational& x, const Prime& p, long absolute_precision) {
    if (x == 0) {
        return PadicNumber::zero(p, absolute_precision);
    }
    long v = vp(x, p).value();
    if (v >= absolute_precision) {
        return PadicNumber::zero(p, absolute_precision);
    }
    return to_padic(x, p, absolute_precision - v);
}

PadicNumber operator+(const PadicNumber& a, const PadicNumber& b) {
    if (a.prime() != b.prime()) {
        throw PrimeMismatch("adding p-adic numbers of different primes");
    }
    const Prime& p = a.prime();
    long abs_prec = std::min(a.absolute_precision(), b.absolute_precision());
    if (a.is_zero() && b.is_zero()) {
        return PadicNumber::zero(p, abs_prec);
    }
    if (a.is_zero() || b.is_zero()) {
        return (a.is_zero() ? b : a).truncate(abs_prec);
    }
    long va = a.valuation().value();
    long vb = b.valuation().value();
    long m = std::min(va, vb);
    if (abs_prec <= m) {
        return PadicNumber::zero(p, abs_prec);
    }
    BigInteger modulus = prime_power(p, abs_prec - m);
    BigInteger s = mod(a.unit() * prime_power(p, va - m) + b.unit() * prime_power(p, vb - m),
                       modulus);
    if (s == 0) {
        return PadicNumber::zero(p, abs_prec);
    }
    long shift = vp(s, p);
    BigInteger unit;
    mpz_divexact(unit.get_mpz_t(), s.get_mpz_t(), prime_power(p, shift).get_mpz_t());
    return PadicNumber::from_unit(p, m + shift, unit, abs_prec - m - shift);
}

PadicNumber operator-(const PadicNumber& a) {
    if (a.is_zero()) {
        return a;
    }
    return PadicNumber::from_unit(a.prime(), a.valuation().value(), -a.unit(), a.precision());
}

PadicNumber operator-(const PadicNumber& a, const PadicNumber& b) { return a + (-b); }

PadicNumber operator*(const PadicNumber& a, const PadicNumber& b) {
    if (a.prime() != b.prime()) {
        throw PrimeMismatch("multiplying p-adic numbers of different primes");
    }
    const Prime& p = a.prime();
    if (a.is_zero() && b.is_zero()) {
        return PadicNumber::zero(p, a.precision() + b.precision());
    }
    if (a.is_zero() || b.is_zero()) {
        const PadicNumber& z = a.is_zero() ? a : b;
        const PadicNumber& other = a.is_zero() ? b : a;
        return PadicNumber::zero(p, z.precision() + other.valuation().value());
    }
    long prec = std::min(a.precision(), b.precision());
    return PadicNumber::from_unit(p, a.valuation().value() + b.valuation().value(),
                                  a.unit() * b.unit(), prec);
}

Rational frac_part(const Rational& x, const Prime& p) {
    if (x == 0) {
        return 0;
    }
    long v = vp(x, p).value();
    if (v >= 0) {
        return 0;
    }
    long k = -v;
    BigInteger pk = prime_power(p, k);
    // x = a / (b p^k) with p not dividing b; {x}_p = (a b^-1 mod p^k) / p^k.
    BigInteger b;
    mpz_divexact(b.get_mpz_t(), x.get_den_mpz_t(), pk.get_mpz_t());
    BigInteger m = mod(x.get_num() * inverse_mod(mod(b, pk), pk), pk);
    return make_rational(m, pk);
}

}  // namespace allplaces
