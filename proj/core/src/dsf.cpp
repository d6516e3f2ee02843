#include "spinon/dsf.hpp"

#include <cmath>
#include <string>

#include "spinon/errors.hpp"

namespace spinon {

void GridSpec::validate() const {
    if (k_points < 2 || w_points < 2) throw DomainError("GridSpec: need at least 2 points per axis");
    if (!(w_max > 0.0)) throw DomainError("GridSpec: w_max must be positive");
    if (outer_nodes < 4 || outer_nodes % 4 != 0)
        throw DomainError("GridSpec: outer_nodes must be a positive multiple of 4");
    quad.validate();
    residue.validate();
}

double c_n(int n, double a_half) {
    if (n < 2 || n % 2 != 0) throw DomainError("c_n: n must be even and >= 2");
    if (!(a_half > 0.0)) throw DomainError("c_n: |A-(i pi/2)|^2 must be positive");
    int e2 = (-3 * n * n + 2 * n + 4) / 2;
    int epi = 7 * n * (2 - n) / 4;
    int eg = n * (n - 2);
    double fact = std::tgamma(n + 1.0);
    double v = std::ldexp(1.0, e2) * std::pow(kPi, epi) /
               (fact * std::pow(std::tgamma(0.25), eg) * std::pow(a_half, eg / 2));
    require_finite(v, "c_n");
    return v;
}

double a_half_constant(const QuadratureSpec& quad) { return a_minus_sq({0.0, 0.5 * kPi}, quad); }

namespace {

double amin(double x, const QuadratureSpec& quad, AminusSource source) {
    if (x == 0.0) return 0.0;
    return source == AminusSource::table ? AMinusTable::shared()(x) : a_minus_sq_real(x, quad);
}

}  // namespace

double s2_pm(double w, double k, const QuadratureSpec& quad, AminusSource source) {
    Boundaries b = boundaries(k);
    if (!(w > b.w_l && w < b.w_u)) return 0.0;
    double x = rapidity_difference(w, k);
    return amin(x, quad, source) / std::sqrt((b.w_u - w) * (b.w_u + w));
}

double s2_pm_generic(double w, double k, const QuadratureSpec& quad, AminusSource source) {
    Boundaries b = boundaries(k);
    if (!(w > b.w_l && w < b.w_u)) return 0.0;
    PairSolutions ps = four_pair_set(w, k);
    double sum = 0.0;
    for (const MomentumPair& p : ps.pairs) {
        std::vector<Rapidity> betas = {rapidity_of_momentum(p.p1), rapidity_of_momentum(p.p2)};
        double f = amin(betas[1].beta - betas[0].beta, quad, source);
        sum += f * g_sum_sq(2, betas);
    }
    // C_2 carries no |A-(i pi/2)| dependence
    double c2 = c_n(2, 1.0);
    return 2.0 * c2 * sum / std::sqrt((b.w_u - w) * (b.w_u + w));
}

double s_component(Axis, int n, double w, double k, const GridSpec& grid) {
    if (n == 2) return 2.0 * s2_pm(w, k, grid.quad, AminusSource::table);
    if (n == 4) return 2.0 * s4_pm(w, k, grid).value;
    throw DomainError("s_component: n must be 2 or 4, got " + std::to_string(n));
}

}  // namespace spinon
