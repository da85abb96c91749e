#include "allplaces/adelic.hpp"

#include "allplaces/errors.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace allplaces {

namespace {

Rational reduce_mod_one(const Rational& a) { return a - Rational(floor(a)); }

// Primes dividing numerator or denominator of a nonzero rational.
std::set<Prime> support(const Rational& r) {
    std::set<Prime> out;
    for (const auto& p : prime_divisors(r.get_num())) out.insert(p);
    for (const auto& p : prime_divisors(r.get_den())) out.insert(p);
    return out;
}

}  // namespace

UnitAngle::UnitAngle(const Rational& a) : angle(reduce_mod_one(a)) {}

Idele Idele::principal(const Rational& r, long precision) {
    if (r == 0) {
        throw ZeroArgument("principal idele of zero");
    }
    Idele out;
    out.real_component = r;
    for (const auto& p : support(r)) {
        out.components.emplace(p, to_padic(r, p, precision));
    }
    out.tail_certificate = CofinitenessCertificate{
        "r is a unit at every prime not dividing its numerator or denominator",
        abs(Rational(r.get_num() * r.get_den())).get_num()};
    return out;
}

Rational product_norm(const Rational& r) {
    if (r == 0) {
        throw ZeroArgument("product formula needs r != 0");
    }
    Rational product = abs(r);
    for (const auto& p : support(r)) {
        product *= norm(r, p).value();
    }
    return product;
}

UnitAngle additive_character(const Rational& a, const Rational& b) {
    const Rational x = a * b;
    Rational angle = -x;
    if (x != 0) {
        // {x}_p vanishes unless p divides the denominator.
        for (const auto& p : prime_divisors(x.get_den())) {
            angle += frac_part(x, p);
        }
    }
    return UnitAngle(angle);
}

CharacterValue multiplicative_character(const Idele& lambda, const MultiplicativeCharacter& chi) {
    if (lambda.real_component == 0) {
        throw InvalidArgument("idele with zero real component");
    }
    bool integral = chi.c_infinity.is_integer();
    // (norm, exponent) factors with a non-unit norm.
    std::vector<std::pair<Rational, ComplexExponent>> factors;
    factors.emplace_back(abs(lambda.real_component), chi.c_infinity);
    for (const auto& [p, c] : chi.finite) {
        if (c.re == 0 && c.im == 0) {
            continue;
        }
        auto it = lambda.components.find(p);
        if (it == lambda.components.end()) {
            if (!lambda.tail_certificate) {
                throw SupportExceedsBudget("character exponent at p = " + std::to_string(p.value()) +
                                           " outside the idele's materialized primes");
            }
            continue;  // certified unit: factor 1
        }
        if (it->second.is_zero()) {
            throw InvalidArgument("idele component at p = " + std::to_string(p.value()) + " is zero");
        }
        integral = integral && c.is_integer();
        factors.emplace_back(it->second.norm().value(), c);
    }

    CharacterValue out;
    long double log_re = 0;
    long double log_im = 0;
    Rational exact = 1;
    for (const auto& [base, c] : factors) {
        long double ln_base = std::log(static_cast<long double>(base.get_d()));
        log_re += static_cast<long double>(c.re.get_d()) * ln_base;
        log_im += static_cast<long double>(c.im.get_d()) * ln_base;
        if (integral) {
            exact *= pow(base, c.re.get_num().get_si());
        }
    }
    if (integral) {
        out.exact = exact;
        out.approx = {exact.get_d(), 0.0};
    } else {
        long double mag = std::exp(log_re);
        out.approx = {static_cast<double>(mag * std::cos(log_im)),
                      static_cast<double>(mag * std::sin(log_im))};
    }
    return out;
}

Adele series_adele(int epsilon, std::uint64_t mu, std::uint64_t nu, const Rational& r,
                     std::uint64_t prime_budget, long precision, const SeriesAdeleOptions& options) {
    if (precision < 1) {
        throw InvalidArgument("adele precision must be >= 1");
    }
    if (options.s < 1) {
        throw InvalidArgument("q = p^-s needs s >= 1");
    }
    SeriesParams real_params{epsilon, mu, nu, options.real_q};
    real_params.validate();

    Adele out;
    out.prime_budget = prime_budget;
    out.real_component = eval_real(real_params, r, static_cast<unsigned>(precision) + 1);

    std::set<Prime> places;
    for (const auto& p : primes_up_to(prime_budget)) places.insert(p);
    if (r != 0) {
        for (const auto& p : prime_divisors(r.get_den())) places.insert(p);
    }
    for (const auto& p : places) {
        Rational q = pow(Rational(p.ulong()), -static_cast<long>(options.s));
        PadicEvalReport rep = eval_padic({epsilon, mu, nu, q}, r, p, precision);
        if (!rep.result.in_integers()) {
            out.exceptional.push_back(p);
        }
        out.components.emplace(p, std::move(rep.result));
    }
    // With q = p^-s every term has valuation (k-1) v_p(k!) + s + k v_p(r),
    // which is >= s >= 1 whenever p does not divide the denominator of r.
    std::ostringstream reason;
    reason << "v_p(term_k) = (k-1) v_p(k!) + " << options.s
           << " + k v_p(r) >= 1 for every prime not dividing " << r.get_den().get_str();
    out.tail_certificate = CofinitenessCertificate{reason.str(), r.get_den()};
    return out;
}

AdeleCheck is_adele(const Adele& a) {
    std::ostringstream report;
    bool ok = true;
    if (!a.tail_certificate) {
        return {false, "no tail certificate: cofinite integrality cannot be established"};
    }
    const auto& cert = *a.tail_certificate;
    if (cert.denominator == 0) {
        return {false, "tail certificate has a zero denominator"};
    }
    for (const auto& p : prime_divisors(cert.denominator)) {
        if (!a.components.contains(p)) {
            ok = false;
            report << "certificate prime " << p.value() << " is not materialized; ";
        }
    }
    for (const auto& [p, x] : a.components) {
        bool listed = std::find(a.exceptional.begin(), a.exceptional.end(), p) != a.exceptional.end();
        if (!listed && !x.in_integers()) {
            ok = false;
            report << "component at " << p.value() << " has norm > 1 but is not listed exceptional; ";
        }
    }
    if (ok) {
        report << a.components.size() << " places materialized, " << a.exceptional.size()
               << " exceptional; tail: " << cert.reason;
    }
    return {ok, report.str()};
}

}  // namespace allplaces
