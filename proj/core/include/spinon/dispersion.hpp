#pragma once

#include "spinon/numeric.hpp"
#include "spinon/specfun.hpp"

namespace spinon {

struct Rapidity {
    double beta = 0.0;
};

// Momentum on the branch (-pi, 0); the ideal endpoints are excluded from
// rapidity_of_momentum.
struct SpinonMomentum {
    double p = -0.5 * kPi;
};

struct XxzParams {
    double epsilon = 0.0;
    EllipticModulus modulus;

    // nome e^{-epsilon}, i.e. q = -e^{-epsilon}
    static XxzParams from_epsilon(double epsilon);
    double q() const;
};

SpinonMomentum momentum_of_rapidity(Rapidity beta);
double energy_of_rapidity(Rapidity beta);
Rapidity rapidity_of_momentum(SpinonMomentum p);
// p = -pi + from_minus_pi = -from_zero; the smaller offset sets the precision.
Rapidity rapidity_of_offsets(double from_minus_pi, double from_zero);

double xxz_energy(double alpha, const XxzParams& params);
double xxz_momentum(double alpha, const XxzParams& params);

// tau(xi) at xi = i e^{i alpha}
Complex tau(double xi_angle, const XxzParams& params, const QuadratureSpec& quad = {});

// Isotropic-limit harness. Rapidity beta is fed to the anisotropic maps as
// alpha = alpha_scale * beta; the default scale is -epsilon / pi.
struct IsotropicLimitReport {
    double epsilon = 0.0;
    double max_energy_error = 0.0;
    // max over the grid of |p_xxz - p_iso - momentum_offset| reduced mod 2 pi
    double max_momentum_error = 0.0;
};

IsotropicLimitReport isotropic_limit_check(double epsilon, double beta_lo, double beta_hi,
                                           int points, double momentum_offset = kPi,
                                           double alpha_scale = 0.0);

}  // namespace spinon
