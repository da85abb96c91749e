#pragma once

// Seeded verification suites that check the library's exact identities and
// certified limits. Failures are reported, never thrown.

#include "allplaces/numeric.hpp"

#include <json.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace allplaces {

struct VerifyOptions {
    std::uint64_t seed = 20011;
    unsigned terms = 60;                // half-series partial-sum length
    unsigned digits = 50;               // half-series real tolerance 10^-digits
    std::uint64_t primes_up_to = 50;    // adele-cert budget
};

struct CheckResult {
    std::string name;
    bool pass = false;
    /// Exact residual, certificate, or failure description.
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool pass() const;
};

/// legendre, product-formula, telescoping, half-series, lnq, characters, adele-cert, friedmann.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all" ("eq45" is accepted for half-series). Throws InvalidArgument on an unknown name.
std::vector<SuiteReport> run_suites(std::string_view name, const VerifyOptions& options);

nlohmann::json to_json(const std::vector<SuiteReport>& reports, const VerifyOptions& options);
std::string to_text(const std::vector<SuiteReport>& reports, const VerifyOptions& options);

/// Nonzero rational with |numerator|, denominator <= height.
Rational random_rational(std::mt19937_64& rng, std::uint64_t height);

/// Exponent of p in n! by factoring 1, 2, ..., n one at a time.
std::uint64_t factorial_valuation_by_factoring(std::uint64_t n, std::uint64_t p);

}  // namespace allplaces
