#include <cmath>

#include "spinon/dsf.hpp"
#include "spinon/errors.hpp"
#include "spinon/quadrature.hpp"

namespace spinon {

double sum_rule_integral(SumRuleScheme scheme, int k_nodes, int w_nodes, double* coarse) {
    const AMinusTable& table = AMinusTable::shared();
    TanhSinhRule outer(k_nodes);
    TanhSinhRule inner(w_nodes);
    double fine = 0.0;
    double rough = 0.0;
    if (scheme == SumRuleScheme::zone) {
        // S^zz = 2 S^{+-}; k in [pi, 2 pi] mirrors [0, pi]
        for (const auto& kn : outer.map(0.0, kPi)) {
            Boundaries b = boundaries(kn.x);
            if (!(b.w_u > b.w_l)) continue;
            double f = 0.0, c = 0.0;
            for (const auto& wn : inner.map(b.w_l, b.w_u)) {
                double up = wn.from_hi * (b.w_u + wn.x);
                double dn = wn.from_lo * (wn.x + b.w_l);
                if (!(up > 0.0) || !(dn > 0.0)) continue;
                double x = 2.0 * std::asinh(std::sqrt(up / dn));
                double v = 2.0 * table(x) / std::sqrt(up);
                f += wn.weight * v;
                c += wn.coarse_weight * v;
            }
            fine += 2.0 * kn.weight * f;
            rough += 2.0 * kn.coarse_weight * c;
        }
    } else {
        for (const auto& pn : outer.map(-kPi, 0.0)) {
            double b1 = rapidity_of_offsets(pn.from_lo, pn.from_hi).beta;
            double f = 0.0, c = 0.0;
            for (const auto& qn : inner.map(-kPi, 0.0)) {
                double v = table(rapidity_of_offsets(qn.from_lo, qn.from_hi).beta - b1);
                f += qn.weight * v;
                c += qn.coarse_weight * v;
            }
            fine += pn.weight * f;
            rough += pn.coarse_weight * c;
        }
    }
    require_finite(fine, "sum_rule_integral");
    if (coarse) *coarse = rough;
    return fine;
}

SumRuleReport sum_rule_fraction(const GridSpec& grid) {
    grid.validate();
    if (grid.k_points % 4 != 0 || grid.w_points % 4 != 0)
        throw DomainError("sum_rule_fraction: k_points and w_points must be multiples of 4");
    SumRuleReport r;
    double coarse = 0.0;
    r.integrated_intensity = sum_rule_integral(SumRuleScheme::zone, grid.k_points, grid.w_points, &coarse);
    r.grid_resolution = {grid.k_points, grid.w_points};
    r.refinement_delta = std::abs(r.integrated_intensity - coarse);
    r.alternative_scheme = sum_rule_integral(SumRuleScheme::momenta, grid.k_points, grid.w_points);
    r.fraction = r.integrated_intensity / (4.0 * kPi * kPi);
    return r;
}

}  // namespace spinon
