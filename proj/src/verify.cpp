#include "allplaces/verify.hpp"

#include "allplaces/adelic.hpp"
#include "allplaces/cosmology.hpp"
#include "allplaces/errors.hpp"
#include "allplaces/fps.hpp"
#include "allplaces/padic.hpp"
#include "allplaces/real.hpp"
#include "allplaces/series.hpp"
#include "allplaces/summation.hpp"

#include <optional>
#include <sstream>

namespace allplaces {

bool SuiteReport::pass() const {
    for (const auto& c : checks) {
        if (!c.pass) return false;
    }
    return true;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "adele-cert", "characters", "friedmann", "half-series",
        "legendre", "lnq", "product-formula", "telescoping"};
    return names;
}

Rational random_rational(std::mt19937_64& rng, std::uint64_t height) {
    std::uniform_int_distribution<long> num(-static_cast<long>(height), static_cast<long>(height));
    std::uniform_int_distribution<long> den(1, static_cast<long>(height));
    long n = 0;
    while (n == 0) {
        n = num(rng);
    }
    return make_rational(n, den(rng));
}

std::uint64_t factorial_valuation_by_factoring(std::uint64_t n, std::uint64_t p) {
    std::uint64_t count = 0;
    for (std::uint64_t m = 2; m <= n; ++m) {
        for (std::uint64_t r = m; r % p == 0; r /= p) {
            ++count;
        }
    }
    return count;
}

namespace {

SuiteReport legendre_suite() {
    SuiteReport rep{"legendre", {}};
    for (const auto& p : primes_up_to(29)) {
        std::ostringstream detail;
        bool ok = true;
        for (std::uint64_t n = 0; n <= 300; ++n) {
            auto formula = norm_factorial(n, p).exponent.value();
            auto oracle = factorial_valuation_by_factoring(n, p.value());
            if (static_cast<std::uint64_t>(formula) != oracle) {
                ok = false;
                detail << "n=" << n << ": formula " << formula << " vs factoring " << oracle << "; ";
            }
        }
        if (ok) detail << "n = 0..300 agree";
        rep.checks.push_back({"p=" + std::to_string(p.value()), ok, detail.str()});
    }
    return rep;
}

SuiteReport product_formula_suite(const VerifyOptions& opt) {
    SuiteReport rep{"product-formula", {}};
    std::mt19937_64 rng(opt.seed);
    int failures = 0;
    std::string first_failure;
    for (int i = 0; i < 1000; ++i) {
        Rational r = random_rational(rng, 1'000'000);
        Rational prod = product_norm(r);
        if (prod != 1) {
            if (failures++ == 0) first_failure = to_string(r) + " -> " + to_string(prod);
        }
    }
    rep.checks.push_back({"1000 rationals of height <= 10^6", failures == 0,
                          failures == 0 ? "every product equals 1"
                                        : std::to_string(failures) + " failures, first " + first_failure});
    return rep;
}

SuiteReport telescoping_suite(const VerifyOptions& opt) {
    SuiteReport rep{"telescoping", {}};
    std::mt19937_64 rng(opt.seed);
    const std::vector<Rational> qs = {Rational(1), Rational(1, 2), Rational(3)};
    std::uniform_int_distribution<std::uint64_t> mu_d(1, 3), nu_d(0, 3), n_d(0, 12);
    std::uniform_int_distribution<std::size_t> q_d(0, qs.size() - 1);
    for (int i = 0; i < 200; ++i) {
        std::uint64_t mu = mu_d(rng), nu = nu_d(rng), N = n_d(rng);
        const Rational& q = qs[q_d(rng)];
        Rational x = random_rational(rng, 5);
        Rational lhs = lhs_partial_sum(mu, nu, q, x, N);
        Rational rhs = telescope_term(mu, nu, q, x, N + 1) - telescope_term(mu, nu, q, x, 0);
        Rational residual = lhs - rhs;
        std::ostringstream name;
        name << "mu=" << mu << " nu=" << nu << " q=" << to_string(q) << " x=" << to_string(x)
             << " N=" << N;
        rep.checks.push_back({name.str(), residual == 0, "residual " + to_string(residual)});
    }
    return rep;
}

SuiteReport half_series_suite(const VerifyOptions& opt) {
    SuiteReport rep{"half-series", {}};
    const Rational half(1, 2);
    std::vector<Rational> partials;
    Rational s = 0;
    for (std::uint64_t n = 0; n <= opt.terms; ++n) {
        s += half_series_term(n);
        partials.push_back(s);
    }
    const Rational gap = abs(Rational(partials.back() - half));
    const bool real_ok = gap < decimal_ulp(opt.digits);
    rep.checks.push_back({"real: |S_" + std::to_string(opt.terms) + " - 1/2| < 1e-" +
                              std::to_string(opt.digits),
                          real_ok, "|S_N - 1/2| = " + render_bound(gap)});
    for (std::uint64_t pv : {2, 3, 5, 7}) {
        Prime p(pv);
        // Smallest N from which v_p(S_M - 1/2) >= 25 for every M up to the last term.
        std::optional<std::uint64_t> certified;
        for (std::uint64_t n = partials.size(); n-- > 0;) {
            if (vp(Rational(partials[n] - half), p) >= Valuation(25)) {
                certified = n;
            } else {
                break;
            }
        }
        std::ostringstream detail;
        if (certified) {
            detail << "N=" << *certified << ", v_p(S_N - 1/2) = "
                   << vp(Rational(partials[*certified] - half), p).to_string();
        } else {
            detail << "no N <= " << opt.terms << " with valuation >= 25";
        }
        rep.checks.push_back({"p=" + std::to_string(pv) + ": |S_N - 1/2|_p <= p^-25",
                              certified.has_value(), detail.str()});
    }
    return rep;
}

SuiteReport lnq_suite() {
    SuiteReport rep{"lnq", {}};
    for (const auto& q : {Rational(1), Rational(1, 2), Rational(1, 3), Rational(2)}) {
        auto a = lnq_coeffs(q, 8);
        Rational a1 = q + 1;
        Rational a2 = 4 * pow(Rational(q + 1), 3) / (q + 4);
        bool ok = a[0] == a1 && a[1] == a2;
        rep.checks.push_back({"q=" + to_string(q) + ": a_1, a_2", ok,
                              "a_1 = " + to_string(a[0]) + ", a_2 = " + to_string(a[1])});
        FormalPowerSeries f = expq_tail(q, 8);
        FormalPowerSeries id = compose(f, revert(f));
        bool round_trip = id == FormalPowerSeries::identity(8);
        rep.checks.push_back({"q=" + to_string(q) + ": f(revert(f)) = y through order 8", round_trip,
                              round_trip ? "exact" : "mismatch"});
    }
    return rep;
}

SuiteReport characters_suite(const VerifyOptions& opt) {
    SuiteReport rep{"characters", {}};
    std::mt19937_64 rng(opt.seed);
    int failures = 0;
    std::string first;
    for (int i = 0; i < 200; ++i) {
        Rational a = random_rational(rng, 1000);
        Rational b = random_rational(rng, 1000);
        UnitAngle angle = additive_character(a, b);
        if (!angle.is_trivial() && failures++ == 0) {
            first = to_string(a) + ", " + to_string(b) + " -> " + to_string(angle.angle);
        }
    }
    rep.checks.push_back({"additive character trivial on 200 principal pairs", failures == 0,
                          failures == 0 ? "every angle = 0 mod 1" : first});
    // |2|^1 |2|_2^1 = 1 and |2|^2 |2|_2^1 = 2.
    Idele two = Idele::principal(2);
    MultiplicativeCharacter chi;
    chi.c_infinity = {1, 0};
    chi.finite[Prime(2)] = {1, 0};
    auto v1 = multiplicative_character(two, chi);
    chi.c_infinity = {2, 0};
    auto v2 = multiplicative_character(two, chi);
    bool ok = v1.exact == Rational(1) && v2.exact == Rational(2);
    rep.checks.push_back({"multiplicative character on principal idele 2", ok,
                          "values " + (v1.exact ? to_string(*v1.exact) : "?") + ", " +
                              (v2.exact ? to_string(*v2.exact) : "?")});
    return rep;
}

SuiteReport adele_suite(const VerifyOptions& opt) {
    SuiteReport rep{"adele-cert", {}};
    const std::vector<Rational> rs = {Rational(0), Rational(1), Rational(-1),
                                      Rational(2), Rational(1, 2), Rational(3, 7)};
    const std::vector<NamedFunction> fns = {NamedFunction::exp_q, NamedFunction::cos_q,
                                            NamedFunction::sin_q, NamedFunction::cosh_q,
                                            NamedFunction::sinh_q};
    for (auto fn : fns) {
        SeriesParams sp = params_for(fn, 0);
        for (const auto& r : rs) {
            Adele a = series_adele(sp.epsilon, sp.mu, sp.nu, r, opt.primes_up_to, 10);
            std::ostringstream detail;
            bool ok = true;
            for (const auto& [p, x] : a.components) {
                if (mpz_divisible_ui_p(r.get_den_mpz_t(), p.ulong()) != 0) continue;
                if (x.valuation() < Valuation(1)) {
                    ok = false;
                    detail << "p=" << p.value() << " has " << x.to_string() << "; ";
                }
            }
            AdeleCheck check = is_adele(a);
            ok = ok && check.ok;
            detail << (check.ok ? "is_adele: " : "not an adele: ") << check.report;
            rep.checks.push_back({std::string(to_string(fn)) + " r=" + to_string(r), ok, detail.str()});
        }
    }
    return rep;
}

SuiteReport friedmann_suite() {
    SuiteReport rep{"friedmann", {}};
    const Rational tol = decimal_ulp(30);
    for (int k : {-1, 0, 1}) {
        std::vector<Rational> ts = {Rational(1, 10), Rational(1), Rational(2)};
        if (k == -1) ts = {Rational(1), Rational(2)};
        for (const auto& q : {Rational(1), Rational(1, 10)}) {
            for (const auto& t : ts) {
                CosmoParams params{k, 3, 1, q};
                FriedmannResidual r = friedmann_residual(params, t, 40);
                Rational b1 = r.acceleration.magnitude_bound();
                Rational b2 = r.constraint.magnitude_bound();
                std::ostringstream name;
                name << "k=" << k << " q=" << to_string(q) << " t=" << to_string(t);
                rep.checks.push_back({name.str(), b1 <= tol && b2 <= tol,
                                      "residuals <= " + render_bound(b1) + ", " + render_bound(b2)});
            }
        }
    }
    return rep;
}

SuiteReport run_one(std::string_view name, const VerifyOptions& opt) {
    if (name == "legendre") return legendre_suite();
    if (name == "product-formula") return product_formula_suite(opt);
    if (name == "telescoping") return telescoping_suite(opt);
    if (name == "half-series" || name == "eq45") return half_series_suite(opt);
    if (name == "lnq") return lnq_suite();
    if (name == "characters") return characters_suite(opt);
    if (name == "adele-cert") return adele_suite(opt);
    if (name == "friedmann") return friedmann_suite();
    throw InvalidArgument("unknown suite '" + std::string(name) + "'");
}

}  // namespace

std::vector<SuiteReport> run_suites(std::string_view name, const VerifyOptions& options) {
    std::vector<SuiteReport> out;
    if (name == "all") {
        for (const auto& n : suite_names()) out.push_back(run_one(n, options));
    } else {
        out.push_back(run_one(name, options));
    }
    return out;
}

nlohmann::json to_json(const std::vector<SuiteReport>& reports, const VerifyOptions& options) {
    nlohmann::json doc;
    doc["seed"] = options.seed;
    bool all = true;
    auto suites = nlohmann::json::array();
    for (const auto& rep : reports) {
        auto checks = nlohmann::json::array();
        for (const auto& c : rep.checks) {
            checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        }
        suites.push_back({{"suite", rep.suite}, {"pass", rep.pass()}, {"checks", checks}});
        all = all && rep.pass();
    }
    doc["suites"] = suites;
    doc["pass"] = all;
    return doc;
}

std::string to_text(const std::vector<SuiteReport>& reports, const VerifyOptions& options) {
    std::ostringstream os;
    os << "seed " << options.seed << "\n";
    for (const auto& rep : reports) {
        for (const auto& c : rep.checks) {
            os << (c.pass ? "PASS " : "FAIL ") << rep.suite << " | " << c.name << " | " << c.detail << "\n";
        }
        os << rep.suite << ": " << (rep.pass() ? "pass" : "FAIL") << "\n";
    }
    return os.str();
}

}  // namespace allplaces
