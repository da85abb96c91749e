#include "allplaces/cli.hpp"

#include "allplaces/adelic.hpp"
#include "allplaces/cosmology.hpp"
#include "allplaces/errors.hpp"
#include "allplaces/series.hpp"
#include "allplaces/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <optional>
#include <ostream>
#include <sstream>

namespace allplaces {

namespace {

using nlohmann::json;

// Series selection shared by eval, eval-padic and adele.
struct SeriesFlags {
    std::string fn;
    std::string q = "1";
    int eps = 1;
    std::uint64_t mu = 1;
    std::uint64_t nu = 0;

    void add_to(CLI::App* cmd, bool with_q = true) {
        cmd->add_option("--fn", fn, "exp_q, cos_q, sin_q, cosh_q or sinh_q");
        if (with_q) cmd->add_option("--q", q, "regularization parameter, n or n/d");
        cmd->add_option("--eps", eps, "raw epsilon (+1/-1), used without --fn")
            ->check(CLI::IsMember({-1, 1}));
        cmd->add_option("--mu", mu, "raw mu, used without --fn")->check(CLI::Range(1, 1000));
        cmd->add_option("--nu", nu, "raw nu, used without --fn");
    }

    SeriesParams params(const Rational& q_value) const {
        if (q_value < 0) throw InvalidArgument("--q: must be >= 0");
        if (fn.empty()) return SeriesParams{eps, mu, nu, q_value};
        try {
            return params_for(parse_named_function(fn), q_value);
        } catch (const InvalidArgument& e) {
            throw InvalidArgument(std::string("--fn: ") + e.what());
        }
    }

    std::string label() const {
        if (!fn.empty()) return fn;
        std::ostringstream os;
        os << "eps=" << eps << ",mu=" << mu << ",nu=" << nu;
        return os.str();
    }
};

Rational rational_flag(const std::string& flag, const std::string& text) {
    try {
        return parse_rational(text);
    } catch (const InvalidArgument& e) {
        throw InvalidArgument(flag + ": " + e.what());
    }
}

std::vector<Rational> rational_list(const std::string& flag, const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(rational_flag(flag, item));
    }
    if (out.empty()) throw InvalidArgument(flag + ": empty list");
    return out;
}

std::string bound_text(const DecimalApproximation& x) { return render_bound(x.magnitude_bound()); }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Power series convergent on R and every Q_p: evaluation and verification"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit one JSON document");

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate Phi(x) over R");
    SeriesFlags eval_series;
    eval_series.add_to(eval);
    std::string eval_x;
    unsigned eval_digits = 20;
    unsigned eval_order = 0;
    eval->add_option("--x", eval_x, "argument, n or n/d")->required();
    eval->add_option("--digits", eval_digits, "decimal places")->check(CLI::Range(1u, 100000u));
    eval->add_option("--order", eval_order, "termwise derivative order");
    eval->add_flag("--json", as_json);

    // eval-padic
    auto* padic = app.add_subcommand("eval-padic", "evaluate Phi(x) in Q_p");
    SeriesFlags padic_series;
    padic_series.add_to(padic);
    std::string padic_x;
    std::uint64_t padic_p = 2;
    long padic_prec = 20;
    padic->add_option("--x", padic_x)->required();
    padic->add_option("--p", padic_p, "prime")->required();
    padic->add_option("--prec", padic_prec, "absolute precision target")->check(CLI::Range(1L, 100000L));
    padic->add_flag("--json", as_json);

    // adele
    auto* adele = app.add_subcommand("adele", "build (phi(r), Phi^{1/p}(r), ...) for rational r");
    SeriesFlags adele_series;
    adele_series.add_to(adele, false);
    std::string adele_x;
    std::string adele_real_q = "0";
    std::uint64_t adele_budget = 20;
    long adele_prec = 10;
    unsigned adele_s = 1;
    adele->add_option("--x", adele_x)->required();
    adele->add_option("--primes-up-to", adele_budget, "largest prime materialized");
    adele->add_option("--prec", adele_prec)->check(CLI::Range(1L, 100000L));
    adele->add_option("--real-q", adele_real_q, "q at the real place (0: classical series)");
    adele->add_option("--s", adele_s, "p-adic slots use q = p^-s")->check(CLI::Range(1u, 64u));
    adele->add_flag("--json", as_json);

    // cosmo
    auto* cosmo = app.add_subcommand("cosmo", "q-regularized FLRW table");
    int cosmo_k = 0;
    std::string cosmo_lambda = "3", cosmo_kappa = "1", cosmo_q = "1", cosmo_t = "1/10,1,2";
    unsigned cosmo_digits = 20;
    cosmo->add_option("--k", cosmo_k, "curvature -1, 0 or 1")->check(CLI::Range(-1, 1));
    cosmo->add_option("--lambda", cosmo_lambda);
    cosmo->add_option("--kappa", cosmo_kappa);
    cosmo->add_option("--q", cosmo_q);
    cosmo->add_option("--t", cosmo_t, "comma-separated times");
    cosmo->add_option("--digits", cosmo_digits)->check(CLI::Range(1u, 1000u));
    cosmo->add_flag("--json", as_json);

    // verify
    auto* verify = app.add_subcommand("verify", "run verification suites");
    std::string suite = "all";
    VerifyOptions vopt;
    std::vector<std::string> suite_choices = suite_names();
    suite_choices.push_back("eq45");  // alias for half-series
    suite_choices.push_back("all");
    verify->add_option("suite", suite, "suite name")->check(CLI::IsMember(suite_choices));
    verify->add_option("--seed", vopt.seed);
    verify->add_option("--terms", vopt.terms, "half-series partial-sum length");
    verify->add_option("--digits", vopt.digits, "half-series real tolerance exponent");
    verify->add_option("--primes-up-to", vopt.primes_up_to, "adele-cert prime budget");
    verify->add_flag("--json", as_json);

    std::vector<const char*> argv;
    argv.push_back("allplaces");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (eval->parsed()) {
            SeriesParams sp = eval_series.params(rational_flag("--q", eval_series.q));
            Rational x = rational_flag("--x", eval_x);
            DecimalApproximation v = derivative_eval_real(sp, eval_order, x, eval_digits + 1);
            std::string text = render_decimal(v, eval_digits);
            if (as_json) {
                out << json{{"function", eval_series.label()}, {"q", to_string(sp.q)},
                            {"x", to_string(x)}, {"order", eval_order}, {"digits", eval_digits},
                            {"value", text}, {"error_bound", render_bound(v.error_bound)}}
                           .dump()
                    << "\n";
            } else {
                out << text << "\n";
            }
            return kExitOk;
        }
        if (padic->parsed()) {
            SeriesParams sp = padic_series.params(rational_flag("--q", padic_series.q));
            Rational x = rational_flag("--x", padic_x);
            Prime p = [&] {
                try {
                    return Prime(padic_p);
                } catch (const InvalidArgument& e) {
                    throw InvalidArgument(std::string("--p: ") + e.what());
                }
            }();
            PadicEvalReport rep = eval_padic(sp, x, p, padic_prec);
            if (as_json) {
                out << json{{"function", padic_series.label()}, {"q", to_string(sp.q)},
                            {"x", to_string(x)}, {"p", p.value()}, {"target", padic_prec},
                            {"result", rep.result.to_string()}, {"terms_used", rep.terms_used},
                            {"tail_bound_exponent", rep.tail_bound_exponent}}
                           .dump()
                    << "\n";
            } else {
                out << rep.result.to_string() << "\n"
                    << "terms_used=" << rep.terms_used
                    << " tail_valuation>=" << rep.tail_bound_exponent << "\n";
            }
            return kExitOk;
        }
        if (adele->parsed()) {
            SeriesParams sp = adele_series.params(0);
            Rational r = rational_flag("--x", adele_x);
            SeriesAdeleOptions opts{rational_flag("--real-q", adele_real_q), adele_s};
            if (opts.real_q < 0) throw InvalidArgument("--real-q: must be >= 0");
            Adele a = series_adele(sp.epsilon, sp.mu, sp.nu, r, adele_budget, adele_prec, opts);
            AdeleCheck check = is_adele(a);
            std::string real_text = render_decimal(a.real_component, static_cast<unsigned>(adele_prec));
            if (as_json) {
                json comps = json::object();
                for (const auto& [p, x] : a.components) comps[std::to_string(p.value())] = x.to_string();
                json exc = json::array();
                for (const auto& p : a.exceptional) exc.push_back(p.value());
                out << json{{"function", adele_series.label()}, {"x", to_string(r)},
                            {"real", real_text}, {"components", comps}, {"exceptional", exc},
                            {"tail_certificate", a.tail_certificate ? a.tail_certificate->reason : ""},
                            {"is_adele", check.ok}}
                           .dump()
                    << "\n";
            } else {
                out << "real: " << real_text << "\n";
                for (const auto& [p, x] : a.components) out << "p=" << p.value() << ": " << x.to_string() << "\n";
                out << "exceptional: {";
                for (std::size_t i = 0; i < a.exceptional.size(); ++i) {
                    out << (i ? "," : "") << a.exceptional[i].value();
                }
                out << "}\n";
                out << "tail: " << (a.tail_certificate ? a.tail_certificate->reason : "none") << "\n";
                out << "is_adele: " << (check.ok ? "true" : "false") << "\n";
            }
            return check.ok ? kExitOk : kExitFailure;
        }
        if (cosmo->parsed()) {
            CosmoParams params{cosmo_k, rational_flag("--lambda", cosmo_lambda),
                               rational_flag("--kappa", cosmo_kappa), rational_flag("--q", cosmo_q)};
            if (params.lambda <= 0) throw InvalidArgument("--lambda: must be > 0");
            if (params.kappa <= 0) throw InvalidArgument("--kappa: must be > 0");
            if (params.q < 0) throw InvalidArgument("--q: must be >= 0");
            auto ts = rational_list("--t", cosmo_t);
            if (!as_json) out << "t\tR\trho\tp\tresidual_accel\tresidual_constraint\n";
            for (const auto& t : ts) {
                CosmoState s = cosmo_state(params, t, cosmo_digits);
                std::string R = render_decimal(s.scale_factor, cosmo_digits);
                std::string rho = render_decimal(s.rho, cosmo_digits);
                std::string p = render_decimal(s.pressure, cosmo_digits);
                if (as_json) {
                    out << json{{"t", to_string(t)}, {"R", R}, {"rho", rho}, {"p", p},
                                {"residual_accel", bound_text(s.residual.acceleration)},
                                {"residual_constraint", bound_text(s.residual.constraint)}}
                               .dump()
                        << "\n";
                } else {
                    out << to_string(t) << "\t" << R << "\t" << rho << "\t" << p << "\t"
                        << bound_text(s.residual.acceleration) << "\t"
                        << bound_text(s.residual.constraint) << "\n";
                }
            }
            return kExitOk;
        }
        if (verify->parsed()) {
            auto reports = run_suites(suite, vopt);
            bool all = true;
            for (const auto& r : reports) all = all && r.pass();
            if (as_json) {
                out << to_json(reports, vopt).dump(2) << "\n";
            } else {
                out << to_text(reports, vopt);
            }
            return all ? kExitOk : kExitFailure;
        }
    } catch (const InvalidArgument& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace allplaces
