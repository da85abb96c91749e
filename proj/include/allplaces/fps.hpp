#pragma once

// Truncated formal power series over Q: composition, reversion, and the
// coefficients of the inverse of exp_q.

#include "allplaces/numeric.hpp"

#include <cstddef>
#include <vector>

namespace allplaces {

/// c_0 + c_1 y + ... + c_K y^K, exact through order K and unknown beyond.
class FormalPowerSeries {
public:
    /// Zero series of the given truncation order.
    explicit FormalPowerSeries(std::size_t order);
    /// Coefficients c_0..c_K; the order is coeffs.size() - 1 (coeffs nonempty).
    explicit FormalPowerSeries(std::vector<Rational> coeffs);

    /// The series y, truncated at `order` (>= 1).
    static FormalPowerSeries identity(std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
    Rational& operator[](std::size_t i) { return coeffs_.at(i); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    /// Drops coefficients beyond `order`.
    FormalPowerSeries truncated(std::size_t order) const;

    /// Evaluates the truncated polynomial at x.
    Rational evaluate(const Rational& x) const;

    friend bool operator==(const FormalPowerSeries&, const FormalPowerSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

FormalPowerSeries operator+(const FormalPowerSeries& a, const FormalPowerSeries& b);
/// Truncated at min of the orders.
FormalPowerSeries operator*(const FormalPowerSeries& a, const FormalPowerSeries& b);

/// f(g(y)) through min(K_f, K_g). Throws NonzeroConstantTerm unless g_0 = 0.
FormalPowerSeries compose(const FormalPowerSeries& f, const FormalPowerSeries& g);

/// The compositional inverse g with f(g(y)) = y through order K.
/// Throws NonzeroConstantTerm if f_0 != 0, ZeroLinearCoefficient if f_1 = 0.
FormalPowerSeries revert(const FormalPowerSeries& f);

/// exp_q(y) - I_0 = sum_{n=1..K} I_n(q) y^n / n!.
FormalPowerSeries expq_tail(const Rational& q, std::size_t order);

/// a_1..a_K with ln_q x = sum (-1)^(n+1) a_n (x - I_0)^n / n, obtained from the
/// reversion g of expq_tail through a_n = (-1)^(n+1) n g_n. Requires q > 0.
std::vector<Rational> lnq_coeffs(const Rational& q, std::size_t order);

/// ln_q x summed through `order` terms of the expansion about I_0(q).
Rational lnq_eval(const Rational& q, const Rational& x, std::size_t order);

}  // namespace allplaces
