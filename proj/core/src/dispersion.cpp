#include "spinon/dispersion.hpp"

#include <cmath>

#include "spinon/errors.hpp"

namespace spinon {

XxzParams XxzParams::from_epsilon(double epsilon) {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon))
        throw DomainError("XxzParams: epsilon must be positive");
    return {epsilon, EllipticModulus::from_nome(std::exp(-epsilon))};
}

double XxzParams::q() const { return -std::exp(-epsilon); }

SpinonMomentum momentum_of_rapidity(Rapidity beta) {
    require_finite(beta.beta, "momentum_of_rapidity");
    // cot p = sinh(beta) with sin p < 0: (cos p, sin p) ~ (-tanh, -sech)
    double b = beta.beta;
    double sech = 1.0 / std::cosh(b);
    return {std::atan2(-sech, -std::tanh(b))};
}

double energy_of_rapidity(Rapidity beta) {
    require_finite(beta.beta, "energy_of_rapidity");
    return kPi / std::cosh(beta.beta);
}

Rapidity rapidity_of_momentum(SpinonMomentum p) {
    if (!(p.p > -kPi && p.p < 0.0))
        throw DomainError("rapidity_of_momentum: momentum must lie strictly inside (-pi, 0)");
    return {std::asinh(std::cos(p.p) / std::sin(p.p))};
}

Rapidity rapidity_of_offsets(double from_minus_pi, double from_zero) {
    if (!(from_minus_pi > 0.0 && from_zero > 0.0))
        throw DomainError("rapidity_of_offsets: momentum must lie strictly inside (-pi, 0)");
    double cot = from_minus_pi < from_zero ? 1.0 / std::tan(from_minus_pi) : -1.0 / std::tan(from_zero);
    return {std::asinh(cot)};
}

double xxz_energy(double alpha, const XxzParams& params) {
    const EllipticModulus& mod = params.modulus;
    double u = 2.0 * mod.bigK * alpha / kPi;
    double pref = 2.0 * mod.bigK / kPi * std::sinh(kPi * mod.bigKprime / mod.bigK);
    return pref * jacobi_dn(u, mod);
}

double xxz_momentum(double alpha, const XxzParams& params) {
    const EllipticModulus& mod = params.modulus;
    return jacobi_am(2.0 * mod.bigK * alpha / kPi, mod) + 0.5 * kPi;
}

Complex tau(double xi_angle, const XxzParams& params, const QuadratureSpec& quad) {
    const Complex i(0.0, 1.0);
    double q = params.q();
    double x = std::pow(q, 4);
    Complex xi = i * std::exp(i * xi_angle);
    Complex xi2 = xi * xi;
    return theta(x, q * xi2, quad) / (xi * theta(x, q / xi2, quad));
}

namespace {

double wrap_pi(double a) { return std::remainder(a, 2.0 * kPi); }

}  // namespace

IsotropicLimitReport isotropic_limit_check(double epsilon, double beta_lo, double beta_hi,
                                           int points, double momentum_offset,
                                           double alpha_scale) {
    if (points < 2) throw DomainError("isotropic_limit_check: need at least 2 points");
    XxzParams params = XxzParams::from_epsilon(epsilon);
    double scale = alpha_scale != 0.0 ? alpha_scale : -epsilon / kPi;
    IsotropicLimitReport r;
    r.epsilon = epsilon;
    for (int i = 0; i < points; ++i) {
        double beta = beta_lo + (beta_hi - beta_lo) * i / (points - 1);
        double alpha = scale * beta;
        double de = std::abs(xxz_energy(alpha, params) - energy_of_rapidity({beta}));
        double dp = std::abs(wrap_pi(xxz_momentum(alpha, params) -
                                     momentum_of_rapidity({beta}).p - momentum_offset));
        r.max_energy_error = std::max(r.max_energy_error, de);
        r.max_momentum_error = std::max(r.max_momentum_error, dp);
    }
    return r;
}

}  // namespace spinon
