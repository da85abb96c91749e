#pragma once

// Adeles and ideles over Q with finitely many materialized places and a
// machine-checkable certificate for the rest.

#include "allplaces/numeric.hpp"
#include "allplaces/padic.hpp"
#include "allplaces/real.hpp"
#include "allplaces/series.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace allplaces {

/// Why every unmaterialized component lies in Z_p: each such prime is coprime
/// to `denominator`. Checkable by factoring the denominator.
struct CofinitenessCertificate {
    std::string reason;
    BigInteger denominator = 1;
};

struct Adele {
    DecimalApproximation real_component;
    std::map<Prime, PadicNumber> components;
    /// Materialized primes whose component falls outside Z_p.
    std::vector<Prime> exceptional;
    std::optional<CofinitenessCertificate> tail_certificate;
    std::uint64_t prime_budget = 0;
};

/// Invertible adele; unmaterialized components have unit norm when the
/// certificate is present.
struct Idele {
    Rational real_component;
    std::map<Prime, PadicNumber> components;
    std::optional<CofinitenessCertificate> tail_certificate;

    /// The constant sequence (r, r, r, ...) with components at the primes dividing r.
    static Idele principal(const Rational& r, long precision = 8);
};

/// exp(2 pi i angle), angle reduced into [0, 1).
struct UnitAngle {
    Rational angle;

    explicit UnitAngle(const Rational& a);
    bool is_trivial() const { return angle == 0; }
};

struct ComplexExponent {
    Rational re = 0;
    Rational im = 0;

    bool is_integer() const { return im == 0 && re.get_den() == 1; }
};

/// |x_inf|^c_inf prod_p |x_p|_p^c_p, with c_p = 0 outside `finite`.
struct MultiplicativeCharacter {
    ComplexExponent c_infinity;
    std::map<Prime, ComplexExponent> finite;
};

struct CharacterValue {
    /// Present when every exponent is a rational integer.
    std::optional<Rational> exact;
    std::complex<double> approx;
};

/// |r|_inf prod_p |r|_p over the primes dividing r. Throws ZeroArgument for r = 0.
Rational product_norm(const Rational& r);

/// The additive character chi_b(a) on principal adeles:
/// angle = -ab + sum_p {ab}_p (mod 1).
UnitAngle additive_character(const Rational& a, const Rational& b);

/// Throws SupportExceedsBudget when chi needs a prime that lambda neither
/// materializes nor certifies.
CharacterValue multiplicative_character(const Idele& lambda, const MultiplicativeCharacter& chi);

struct SeriesAdeleOptions {
    /// Regularization at the real place; 0 gives the classical series.
    Rational real_q = 0;
    /// The p-adic components use q = p^-s.
    unsigned s = 1;
};

/// (phi(r), Phi^{1/p^s}(r) for p <= prime_budget, ...) with the p-adic slots
/// evaluated modulo p^precision and the real slot to `precision` digits.
/// Primes dividing the denominator of r are always materialized.
Adele series_adele(int epsilon, std::uint64_t mu, std::uint64_t nu, const Rational& r,
                     std::uint64_t prime_budget, long precision, const SeriesAdeleOptions& options = {});

struct AdeleCheck {
    bool ok = false;
    std::string report;
};

AdeleCheck is_adele(const Adele& a);

}  // namespace allplaces
