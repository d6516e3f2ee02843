#pragma once

#include <vector>

#include "spinon/dispersion.hpp"
#include "spinon/numeric.hpp"

namespace spinon {

struct SpinConfig {
    std::vector<int> eps;  // entries +1 / -1

    int size() const { return static_cast<int>(eps.size()); }
    // sum eps == -2
    bool selected() const;
    void validate() const;
};

// 0-based positions with eps = +1; empty when the selection fails.
struct LSet {
    std::vector<int> indices;
    bool selected = false;
};

LSet l_set(const SpinConfig& cfg);

// Every admissible configuration of length n (sum eps = -2), in lexicographic order of eps
// with -1 < +1.
std::vector<SpinConfig> admissible_configs(int n);

struct PoleSite {
    int ell = 0;    // contour position (0-based)
    int j = 0;      // rapidity index (0-based)
    int m = 0;      // depth: location beta_j + i pi/2 - 2 pi i m
    Complex location;
    int order = 1;
};

// Candidate sites from the enclosure description: beta_j + i pi/2 and
// beta_j - (2m+1) i pi/2 for 1 <= m <= m_max.
struct PoleCandidate {
    int j = 0;
    int m = 0;  // 0 for beta_j + i pi/2, else the index in -(2m+1) i pi/2
    Complex location;
    bool genuine = false;
};

std::vector<PoleCandidate> enclosed_candidates(const std::vector<Rapidity>& betas, int m_max);

// Genuine poles of the integrand for one contour, depth-major, j-minor order.
// DegeneracyError when two rapidities are within 1e-8.
std::vector<PoleSite> genuine_poles(const std::vector<Rapidity>& betas, int ell, int depth_max);

struct ResidueSpec {
    enum class Acceleration { levin, none };

    int m_max = 200;
    double tail_tol = 1e-8;
    int consecutive_small = 2;
    Acceleration acceleration = Acceleration::levin;

    void validate() const;
};

struct GResult {
    Complex value;
    double est_error = 0.0;
    int depth = 0;         // residue depth consumed
    int onset_depth = 0;   // terms decrease monotonically from here on
};

GResult g_value_detailed(const SpinConfig& cfg, const std::vector<Rapidity>& betas,
                         const ResidueSpec& spec = {});
Complex g_value(const SpinConfig& cfg, const std::vector<Rapidity>& betas,
                const ResidueSpec& spec = {});

// Sum over admissible eps of |g|^2. n = 2 gives exactly 1.
double g_sum_sq(int n, const std::vector<Rapidity>& betas, const ResidueSpec& spec = {});

// Sequence-limit helper exposed for tests: Levin u-transform of partial sums
// S_0..S_k with terms a_0..a_k.
Complex levin_u(const Complex* partial, const Complex* terms, int k);

}  // namespace spinon
