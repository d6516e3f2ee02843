#pragma once

#include <vector>

#include "spinon/dispersion.hpp"

namespace spinon {

struct TransferPoint {
    double w = 0.0;
    double k = 0.0;
};

struct Boundaries {
    double w_u = 0.0;
    double w_l = 0.0;
};

struct MomentumPair {
    SpinonMomentum p1;
    SpinonMomentum p2;
};

struct PairSolutions {
    std::vector<MomentumPair> pairs;
};

// K reduced to [0, 2 pi].
double reduce_momentum(double K);
// Representative of {K, 2 pi - K} in [0, pi].
double fold_momentum(double K);

Boundaries boundaries(double K);

// Ordered (p1, p2) in [-pi, 0]^2 with W = -pi (sin p1 + sin p2), K = -p1 - p2 mod 2 pi.
PairSolutions solve_pairs(double W, double K);

// The two ordered solutions together with their images under p -> -p - pi,
// without merging. This is the multiplicity used by the n-spinon integrand.
PairSolutions four_pair_set(double W, double K);

// beta(p1) - beta(p2) >= 0 for the pair at (w, k); requires w_l < w <= w_u.
double rapidity_difference(double w, double k);

}  // namespace spinon
