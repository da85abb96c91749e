#include "allplaces/cosmology.hpp"

#include "allplaces/errors.hpp"

namespace allplaces {

void CosmoParams::validate() const {
    if (curvature < -1 || curvature > 1) {
        throw InvalidArgument("curvature must be -1, 0 or +1");
    }
    if (lambda <= 0) {
        throw InvalidArgument("Lambda must be > 0");
    }
    if (kappa <= 0) {
        throw InvalidArgument("kappa must be > 0");
    }
    if (q < 0) {
        throw InvalidArgument("q must be >= 0");
    }
}

SeriesParams CosmoParams::scale_series() const {
    switch (curvature) {
        case 0: return params_for(NamedFunction::exp_q, q);
        case 1: return params_for(NamedFunction::cosh_q, q);
        default: return params_for(NamedFunction::sinh_q, q);
    }
}

DecimalApproximation hubble_rate(const CosmoParams& params, unsigned digits) {
    params.validate();
    return sqrt(DecimalApproximation::exact(params.lambda / 3), bits_for_digits(digits));
}

namespace {

// Working precision carried internally beyond the requested digits.
constexpr unsigned kGuardDigits = 10;

struct Kinematics {
    DecimalApproximation H;
    DecimalApproximation R;
    DecimalApproximation R_dot;
    DecimalApproximation R_ddot;
    // f, f', f'' at H t
    DecimalApproximation f0, f1, f2;
};

DecimalApproximation tidy(const DecimalApproximation& x, unsigned digits) {
    return round_to_bits(x, bits_for_digits(digits));
}

Kinematics kinematics(const CosmoParams& params, const Rational& t, unsigned digits) {
    params.validate();
    const unsigned wd = digits + kGuardDigits;
    Kinematics kin;
    kin.H = hubble_rate(params, wd);
    const SeriesParams series = params.scale_series();
    const DecimalApproximation arg = kin.H * DecimalApproximation::exact(t);
    kin.f0 = derivative_eval_real(series, 0, arg, wd);
    kin.f1 = derivative_eval_real(series, 1, arg, wd);
    kin.f2 = derivative_eval_real(series, 2, arg, wd);
    if (!kin.f0.bounded_away_from_zero()) {
        throw DegenerateScaleFactor("scale factor vanishes at t = " + to_string(t));
    }
    kin.R = tidy(kin.f0 / kin.H, wd);
    kin.R_dot = kin.f1;
    kin.R_ddot = tidy(kin.H * kin.f2, wd);
    return kin;
}

bool exact_de_sitter(const CosmoParams& params) { return params.curvature == 0 && params.q == 0; }

DecimalApproximation density_from(const CosmoParams& params, const Kinematics& kin, unsigned wd) {
    const auto kappa = DecimalApproximation::exact(params.kappa);
    const auto three = DecimalApproximation::exact(3);
    if (params.curvature == 0) {
        DecimalApproximation log_rate = tidy(kin.H * kin.f1 / kin.f0, wd);
        return tidy(three / kappa * log_rate * log_rate, wd);
    }
    DecimalApproximation hubble = tidy(kin.R_dot / kin.R, wd);
    DecimalApproximation curv = tidy(DecimalApproximation::exact(params.curvature) / (kin.R * kin.R), wd);
    return tidy(three / kappa * (hubble * hubble + curv), wd);
}

DecimalApproximation pressure_from(const CosmoParams& params, const Kinematics& kin,
                                   const DecimalApproximation& rho, unsigned wd) {
    const auto kappa = DecimalApproximation::exact(params.kappa);
    const auto two = DecimalApproximation::exact(2);
    if (params.curvature == 0) {
        // d^2/dt^2 ln f(Ht) = H^2 (f'' f - f'^2) / f^2
        DecimalApproximation second = tidy(
            kin.H * kin.H * (kin.f2 * kin.f0 - kin.f1 * kin.f1) / (kin.f0 * kin.f0), wd);
        return tidy(-rho - two / kappa * second, wd);
    }
    DecimalApproximation hubble = tidy(kin.R_dot / kin.R, wd);
    DecimalApproximation curv = tidy(DecimalApproximation::exact(params.curvature) / (kin.R * kin.R), wd);
    DecimalApproximation accel = tidy(kin.R_ddot / kin.R, wd);
    return tidy(-(two * accel + hubble * hubble + curv) / kappa, wd);
}

}  // namespace

DecimalApproximation scale_factor(const CosmoParams& params, const Rational& t, unsigned digits) {
    return kinematics(params, t, digits).R;
}

DecimalApproximation energy_density(const CosmoParams& params, const Rational& t, unsigned digits) {
    if (exact_de_sitter(params)) {
        params.validate();
        return DecimalApproximation::exact(params.lambda / params.kappa);
    }
    const Kinematics kin = kinematics(params, t, digits);
    return density_from(params, kin, digits + kGuardDigits);
}

DecimalApproximation pressure(const CosmoParams& params, const Rational& t, unsigned digits) {
    if (exact_de_sitter(params)) {
        params.validate();
        return DecimalApproximation::exact(-params.lambda / params.kappa);
    }
    const Kinematics kin = kinematics(params, t, digits);
    const unsigned wd = digits + kGuardDigits;
    return pressure_from(params, kin, density_from(params, kin, wd), wd);
}

namespace {

FriedmannResidual residual_from(const CosmoParams& params, const Kinematics& kin,
                                const DecimalApproximation& rho, const DecimalApproximation& p,
                                unsigned wd) {
    const auto kappa = DecimalApproximation::exact(params.kappa);
    DecimalApproximation hubble = tidy(kin.R_dot / kin.R, wd);
    DecimalApproximation curv = tidy(DecimalApproximation::exact(params.curvature) / (kin.R * kin.R), wd);
    DecimalApproximation accel = tidy(kin.R_ddot / kin.R, wd);
    FriedmannResidual r;
    r.acceleration = tidy(accel + kappa * (rho + DecimalApproximation::exact(3) * p) /
                                      DecimalApproximation::exact(6), wd);
    r.constraint = tidy(hubble * hubble + curv - kappa * rho / DecimalApproximation::exact(3), wd);
    return r;
}

}  // namespace

CosmoState cosmo_state(const CosmoParams& params, const Rational& t, unsigned digits) {
    const unsigned wd = digits + kGuardDigits;
    const Kinematics kin = kinematics(params, t, digits);
    CosmoState s;
    s.t = t;
    s.scale_factor = kin.R;
    if (exact_de_sitter(params)) {
        s.rho = DecimalApproximation::exact(params.lambda / params.kappa);
        s.pressure = DecimalApproximation::exact(-params.lambda / params.kappa);
    } else {
        s.rho = density_from(params, kin, wd);
        s.pressure = pressure_from(params, kin, s.rho, wd);
    }
    s.residual = residual_from(params, kin, s.rho, s.pressure, wd);
    return s;
}

FriedmannResidual friedmann_residual(const CosmoParams& params, const Rational& t, unsigned digits) {
    return cosmo_state(params, t, digits).residual;
}

DesitterGapTable desitter_gap(const CosmoParams& base, const std::vector<Rational>& qs,
                              const Rational& t, unsigned digits) {
    CosmoParams flat = base;
    flat.curvature = 0;
    flat.q = 0;
    const DecimalApproximation r0 = scale_factor(flat, t, digits);

    DesitterGapTable table;
    table.qs = qs;
    for (const auto& q : qs) {
        if (q == 0) {
            table.gaps.push_back(DecimalApproximation::exact(0));
            continue;
        }
        CosmoParams regularized = flat;
        regularized.q = q;
        DecimalApproximation diff = scale_factor(regularized, t, digits) - r0;
        table.gaps.push_back({abs(diff.value), diff.error_bound});
    }
    table.strictly_decreasing = true;
    for (std::size_t i = 0; i + 1 < table.gaps.size(); ++i) {
        const auto& a = table.gaps[i];
        const auto& b = table.gaps[i + 1];
        if (a.value - a.error_bound <= b.value + b.error_bound) {
            table.strictly_decreasing = false;
        }
    }
    return table;
}

}  // namespace allplaces
