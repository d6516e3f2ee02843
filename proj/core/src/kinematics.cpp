#include "spinon/kinematics.hpp"

#include <cmath>

#include "spinon/errors.hpp"

namespace spinon {

double reduce_momentum(double K) {
    double r = std::fmod(K, 2.0 * kPi);
    if (r < 0.0) r += 2.0 * kPi;
    if (K == 2.0 * kPi) r = 2.0 * kPi;
    return r;
}

double fold_momentum(double K) {
    double r = reduce_momentum(K);
    return r <= kPi ? r : 2.0 * kPi - r;
}

Boundaries boundaries(double K) {
    double k = fold_momentum(K);
    return {2.0 * kPi * std::sin(0.5 * k), kPi * std::sin(k)};
}

PairSolutions solve_pairs(double W, double K) {
    PairSolutions out;
    Boundaries b = boundaries(K);
    if (!(W > b.w_l && W < b.w_u)) return out;
    double k = reduce_momentum(K);
    for (double S : {-k, -k + 2.0 * kPi, -k - 2.0 * kPi}) {
        if (S < -2.0 * kPi || S > 0.0) continue;
        double s = std::sin(0.5 * S);
        if (s == 0.0) continue;
        double c = -W / (2.0 * kPi * s);
        if (c > 1.0 || c < -1.0) continue;
        double half = std::acos(c);
        for (double h : {half, -half}) {
            double p1 = 0.5 * S + h;
            double p2 = 0.5 * S - h;
            if (p1 < -kPi || p1 > 0.0 || p2 < -kPi || p2 > 0.0) continue;
            bool dup = false;
            for (const MomentumPair& q : out.pairs) {
                if (std::abs(q.p1.p - p1) < 1e-12 && std::abs(q.p2.p - p2) < 1e-12) dup = true;
            }
            if (!dup) out.pairs.push_back({{p1}, {p2}});
        }
    }
    return out;
}

PairSolutions four_pair_set(double W, double K) {
    PairSolutions base = solve_pairs(W, K);
    PairSolutions out;
    if (base.pairs.empty()) return out;
    const MomentumPair& a = base.pairs.front();
    double p1 = a.p1.p;
    double p2 = a.p2.p;
    out.pairs = {{{p1}, {p2}}, {{p2}, {p1}}, {{-p1 - kPi}, {-p2 - kPi}}, {{-p2 - kPi}, {-p1 - kPi}}};
    return out;
}

double rapidity_difference(double w, double k) {
    Boundaries b = boundaries(k);
    if (!(w > b.w_l && w <= b.w_u))
        throw DomainError("rapidity_difference: w outside (w_l, w_u]");
    double num = (b.w_u - w) * (b.w_u + w);
    double den = (w - b.w_l) * (w + b.w_l);
    return 2.0 * std::asinh(std::sqrt(num / den));
}

}  // namespace spinon
