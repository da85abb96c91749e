#pragma once

// Flat and curved FLRW models whose scale factor is a q-regularized
// exponential or hyperbolic function:
//
//   k =  0:  R(t) = exp_q(H t) / H
//   k = +1:  R(t) = cosh_q(H t) / H
//   k = -1:  R(t) = sinh_q(H t) / H,      H = sqrt(Lambda / 3),
//
// with density and pressure chosen so both Friedmann equations hold.
// Real field only.

#include "allplaces/numeric.hpp"
#include "allplaces/real.hpp"
#include "allplaces/series.hpp"

#include <utility>
#include <vector>

namespace allplaces {

struct CosmoParams {
    int curvature = 0;    // -1, 0 or +1
    Rational lambda = 3;  // > 0
    Rational kappa = 1;   // > 0
    Rational q = 0;       // >= 0; q is read as l_Planck / l for a length scale l

    void validate() const;

    /// exp_q, cosh_q or sinh_q for curvature 0, +1, -1.
    SeriesParams scale_series() const;
};

/// H = sqrt(Lambda / 3).
DecimalApproximation hubble_rate(const CosmoParams& params, unsigned digits);

/// Throws DegenerateScaleFactor where R vanishes (k = -1 at t = 0).
DecimalApproximation scale_factor(const CosmoParams& params, const Rational& t, unsigned digits);

/// k = 0: (3/kappa) (d/dt ln R)^2; k = +-1: (3/kappa) [(R'/R)^2 + k/R^2].
DecimalApproximation energy_density(const CosmoParams& params, const Rational& t, unsigned digits);

/// k = 0: -rho - (2/kappa) d^2/dt^2 ln R; k = +-1: -[2R''/R + (R'/R)^2 + k/R^2] / kappa.
DecimalApproximation pressure(const CosmoParams& params, const Rational& t, unsigned digits);

struct FriedmannResidual {
    /// R''/R + kappa (rho + 3p) / 6
    DecimalApproximation acceleration;
    /// (R'/R)^2 + k/R^2 - kappa rho / 3
    DecimalApproximation constraint;
};

FriedmannResidual friedmann_residual(const CosmoParams& params, const Rational& t, unsigned digits);

struct CosmoState {
    Rational t;
    DecimalApproximation scale_factor;
    DecimalApproximation rho;
    DecimalApproximation pressure;
    FriedmannResidual residual;
};

CosmoState cosmo_state(const CosmoParams& params, const Rational& t, unsigned digits);

struct DesitterGapTable {
    std::vector<Rational> qs;
    /// |R_q(t) - R_0(t)| for each q.
    std::vector<DecimalApproximation> gaps;
    /// Enclosures certify gap[i] > gap[i+1] for every i.
    bool strictly_decreasing = false;
};

/// Gaps between the k = 0 scale factor at each q and the de Sitter one.
DesitterGapTable desitter_gap(const CosmoParams& base, const std::vector<Rational>& qs,
                              const Rational& t, unsigned digits);

}  // namespace allplaces
