#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "allplaces/cli.hpp"
#include "allplaces/padic.hpp"
#include "allplaces/real.hpp"
#include "allplaces/series.hpp"

#include <json.hpp>

#include <sstream>

using namespace allplaces;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("eval prints the value at zero") {
    auto r = run({"eval", "--fn", "exp_q", "--q", "1", "--x", "0", "--digits", "10"});
    CHECK(r.code == 0);
    CHECK(r.out == "0.5000000000\n");
    r = run({"eval", "--eps", "1", "--mu", "1", "--nu", "0", "--q", "0", "--x", "1", "--digits", "15"});
    CHECK(r.out == "2.718281828459045\n");
}

TEST_CASE("eval-padic reports the certified valuation") {
    auto r = run({"eval-padic", "--fn", "exp_q", "--q", "1/5", "--x", "1", "--p", "5", "--prec", "20"});
    CHECK(r.code == 0);
    auto first = r.out.substr(0, r.out.find('\n'));
    PadicNumber x = parse_padic(first);
    CHECK(x.prime() == Prime(5));
    CHECK(x.valuation() >= Valuation(1));
    CHECK(x.absolute_precision() == 20);
    SeriesParams sp = params_for(NamedFunction::exp_q, make_rational(1, 5));
    CHECK(x == eval_padic(sp, 1, Prime(5), 20).result);
}

TEST_CASE("usage errors name the flag and exit 2") {
    auto expect_usage = [](std::vector<std::string> args, const std::string& flag) {
        auto r = run(args);
        CHECK(r.code == 2);
        CHECK(r.err.find(flag) != std::string::npos);
    };
    expect_usage({"eval", "--fn", "tan_q", "--x", "1"}, "--fn");
    expect_usage({"eval", "--fn", "exp_q", "--x", "1/0"}, "--x");
    expect_usage({"eval", "--fn", "exp_q", "--q", "-1", "--x", "1"}, "--q");
    expect_usage({"eval", "--eps", "3", "--x", "1"}, "--eps");
    expect_usage({"eval-padic", "--x", "1", "--p", "9"}, "--p");
    expect_usage({"eval-padic", "--x", "1", "--p", "3", "--prec", "0"}, "--prec");
    expect_usage({"cosmo", "--k", "2"}, "--k");
    expect_usage({"cosmo", "--kappa", "0"}, "--kappa");
    expect_usage({"cosmo", "--t", "1,x"}, "--t");
    expect_usage({"eval", "--fn", "exp_q"}, "--x");
    CHECK(run({"verify", "bogus"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("computational failures exit 1") {
    auto r = run({"eval-padic", "--fn", "exp_q", "--q", "0", "--x", "1", "--p", "3"});
    CHECK(r.code == 1);
    r = run({"cosmo", "--k", "-1", "--t", "0"});
    CHECK(r.code == 1);
}

TEST_CASE("output is deterministic") {
    std::vector<std::string> args = {"verify", "characters", "--seed", "99", "--json"};
    auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(json::parse(a.out)["seed"] == 99);
    auto c = run({"adele", "--fn", "sin_q", "--x", "3/7", "--primes-up-to", "11"});
    CHECK(c.out == run({"adele", "--fn", "sin_q", "--x", "3/7", "--primes-up-to", "11"}).out);
}

TEST_CASE("JSON values re-parse to equal values") {
    auto r = run({"adele", "--fn", "cosh_q", "--x", "5/6", "--primes-up-to", "13", "--prec", "8", "--json"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(parse_rational(doc["x"].get<std::string>()) == make_rational(5, 6));
    for (auto& [key, value] : doc["components"].items()) {
        PadicNumber x = parse_padic(value.get<std::string>());
        CHECK(x.prime().value() == std::stoull(key));
        CHECK(parse_padic(x.to_string()) == x);
    }
    CHECK(doc["is_adele"] == true);

    r = run({"eval-padic", "--fn", "sinh_q", "--q", "1/2", "--x", "-27", "--p", "3", "--prec", "12", "--json"});
    REQUIRE(r.code == 0);
    doc = json::parse(r.out);
    SeriesParams sp = params_for(NamedFunction::sinh_q, make_rational(1, 2));
    CHECK(parse_padic(doc["result"].get<std::string>()) == eval_padic(sp, -27, Prime(3), 12).result);
    CHECK(parse_rational(doc["q"].get<std::string>()) == make_rational(1, 2));

    r = run({"eval", "--fn", "cos_q", "--q", "1/3", "--x", "2/3", "--digits", "25", "--json"});
    doc = json::parse(r.out);
    auto v = eval_real(params_for(NamedFunction::cos_q, make_rational(1, 3)), make_rational(2, 3), 26);
    CHECK(doc["value"] == render_decimal(v, 25));
}

TEST_CASE("cosmo prints a table with residual columns") {
    auto r = run({"cosmo", "--k", "0", "--q", "0", "--t", "1/10,1", "--digits", "8"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string header, row;
    std::getline(lines, header);
    CHECK(header == "t\tR\trho\tp\tresidual_accel\tresidual_constraint");
    std::getline(lines, row);
    CHECK(row.rfind("1/10\t1.10517092\t3.00000000\t-3.00000000\t", 0) == 0);
}

TEST_CASE("verify half-series passes and prints the seed") {
    auto r = run({"verify", "half-series", "--terms", "60", "--digits", "50"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("seed 20011\n", 0) == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(run({"verify", "eq45", "--terms", "60", "--digits", "50"}).out == r.out);
}
