#include "allplaces/fps.hpp"

#include "allplaces/errors.hpp"
#include "allplaces/series.hpp"

#include <algorithm>

namespace allplaces {

FormalPowerSeries::FormalPowerSeries(std::size_t order) : coeffs_(order + 1, Rational(0)) {}

FormalPowerSeries::FormalPowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw InvalidArgument("formal power series needs at least one coefficient");
    }
}

FormalPowerSeries FormalPowerSeries::identity(std::size_t order) {
    if (order < 1) {
        throw InvalidArgument("identity series needs order >= 1");
    }
    FormalPowerSeries s(order);
    s[1] = 1;
    return s;
}

FormalPowerSeries FormalPowerSeries::truncated(std::size_t order) const {
    std::vector<Rational> c(coeffs_.begin(),
                            coeffs_.begin() + static_cast<std::ptrdiff_t>(std::min(order, this->order()) + 1));
    return FormalPowerSeries(std::move(c));
}

Rational FormalPowerSeries::evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

FormalPowerSeries operator+(const FormalPowerSeries& a, const FormalPowerSeries& b) {
    std::size_t k = std::min(a.order(), b.order());
    FormalPowerSeries r(k);
    for (std::size_t i = 0; i <= k; ++i) {
        r[i] = a[i] + b[i];
    }
    return r;
}

FormalPowerSeries operator*(const FormalPowerSeries& a, const FormalPowerSeries& b) {
    std::size_t k = std::min(a.order(), b.order());
    FormalPowerSeries r(k);
    for (std::size_t i = 0; i <= k; ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j <= k; ++j) {
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

FormalPowerSeries compose(const FormalPowerSeries& f, const FormalPowerSeries& g) {
    if (g[0] != 0) {
        throw NonzeroConstantTerm("inner series of a composition must vanish at 0");
    }
    std::size_t k = std::min(f.order(), g.order());
    FormalPowerSeries inner = g.truncated(k);
    // Horner: f_K, then acc * g + f_i down to i = 0.
    FormalPowerSeries acc(k);
    for (std::size_t i = f.order() + 1; i-- > 0;) {
        if (i > k) {
            continue;  // g^i vanishes through order k
        }
        acc = acc * inner;
        acc[0] += f[i];
    }
    return acc;
}

FormalPowerSeries revert(const FormalPowerSeries& f) {
    if (f[0] != 0) {
        throw NonzeroConstantTerm("reverted series must vanish at 0");
    }
    if (f.order() < 1 || f[1] == 0) {
        throw ZeroLinearCoefficient("reverted series needs an invertible linear coefficient");
    }
    const std::size_t k = f.order();
    FormalPowerSeries g = FormalPowerSeries::identity(k);
    g[1] = 1 / f[1];
    // [y^m] f(g) = f_1 g_m + (terms in g_1..g_{m-1}); solve order by order.
    for (std::size_t m = 2; m <= k; ++m) {
        FormalPowerSeries probe = compose(f, g.truncated(m));
        g[m] -= probe[m] / f[1];
    }
    return g;
}

FormalPowerSeries expq_tail(const Rational& q, std::size_t order) {
    FormalPowerSeries f(order);
    for (std::size_t n = 1; n <= order; ++n) {
        f[n] = coeff_I(n, q) / Rational(factorial(n));
    }
    return f;
}

std::vector<Rational> lnq_coeffs(const Rational& q, std::size_t order) {
    if (q <= 0) {
        throw InvalidArgument("ln_q coefficients require q > 0");
    }
    FormalPowerSeries g = revert(expq_tail(q, order));
    std::vector<Rational> a;
    a.reserve(order);
    for (std::size_t n = 1; n <= order; ++n) {
        Rational an = Rational(static_cast<unsigned long>(n)) * g[n];
        a.push_back(n % 2 == 1 ? an : Rational(-an));
    }
    return a;
}

Rational lnq_eval(const Rational& q, const Rational& x, std::size_t order) {
    auto a = lnq_coeffs(q, order);
    Rational shift = x - coeff_I(0, q);
    Rational sum = 0;
    Rational power = 1;
    for (std::size_t n = 1; n <= order; ++n) {
        power *= shift;
        Rational t = a[n - 1] * power / Rational(static_cast<unsigned long>(n));
        sum += (n % 2 == 1) ? t : Rational(-t);
    }
    return sum;
}

}  // namespace allplaces
