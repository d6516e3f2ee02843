#pragma once

#include <utility>
#include <vector>

#include "spinon/aminus.hpp"
#include "spinon/gfunction.hpp"
#include "spinon/kinematics.hpp"
#include "spinon/numeric.hpp"

namespace spinon {

// Public (w, k) is the physical transfer in the first zone. The lineshape
// with edges w_u = 2 pi sin(k/2), w_l = pi |sin k| is reported at that k; the
// half-zone shift of the form-factor representation is internal.
struct DsfPoint {
    double w = 0.0;
    double k = 0.0;
    int n = 2;
    double value = 0.0;
    double est_error = 0.0;
};

struct GridSpec {
    int k_points = 64;
    int w_points = 64;
    double w_max = 2.0 * kPi;
    // tanh-sinh nodes per axis for the n = 4 outer integral (multiple of 4)
    int outer_nodes = 48;
    QuadratureSpec quad;
    ResidueSpec residue;

    void validate() const;
};

enum class Axis { x, y, z };

struct SumRuleReport {
    double integrated_intensity = 0.0;
    std::pair<int, int> grid_resolution{0, 0};
    double refinement_delta = 0.0;
    // same integral over (p1, p2) in [-pi, 0]^2
    double alternative_scheme = 0.0;
    // integrated_intensity / (2 pi)^2
    double fraction = 0.0;
};

// |A-|^2 provider for the lineshapes: direct quadrature or the shared table.
enum class AminusSource { direct, table };

double c_n(int n, double a_half);

// |A-(i pi/2)|^2 by direct quadrature.
double a_half_constant(const QuadratureSpec& quad = {});

double s2_pm(double w, double k, const QuadratureSpec& quad = {},
             AminusSource source = AminusSource::direct);

// Generic n-spinon representation at n = 2: four-pair sum, g-sum, C_2 and the
// sublattice doubling, with no outer integral.
double s2_pm_generic(double w, double k, const QuadratureSpec& quad = {},
                     AminusSource source = AminusSource::direct);

double s_component(Axis mu, int n, double w, double k, const GridSpec& grid);

DsfPoint s4_pm(double w, double k, const GridSpec& grid);

// Integrand of the n = 4 outer integral in (Q, h) = (-(p3 + p4), (p3 - p4) / 2),
// h >= 0. Offsets are carried separately so that corners near Q = 0, 2 pi and
// near p3 = 0, p4 = -pi keep full relative precision.
// `reduced` uses permutation and beta -> -beta invariance (2 g-sums per node);
// otherwise every preimage and every pair is summed (8 g-sums).
struct FourSpinonNode {
    double q_lo = 0.0;  // Q
    double q_hi = 0.0;  // 2 pi - Q
    double h = 0.0;
    double r = 0.0;     // min(Q, 2 pi - Q) / 2 - h
    double j12 = 0.0;   // sqrt(W_u(K)^2 - W^2)
};

double four_spinon_integrand(double w, double k, const FourSpinonNode& node,
                             const ResidueSpec& residue, bool reduced = true);

// Range of h at fixed Q. hi34 = W_u(Q); lo12, hi12 bound W' = hi34 cos h.
struct FourSpinonSlice {
    double h_lo = 0.0, h_hi = 0.0, h_max = 0.0;
    double hi34 = 0.0, lo12 = 0.0, hi12 = 0.0;
    bool empty() const { return !(h_hi > h_lo); }
};

FourSpinonSlice four_spinon_h_interval(double w, double k, double q_lo, double q_hi);

// Panels in Q on which the W' interval [a(Q), b(Q)] is non-empty.
std::vector<std::pair<double, double>> four_spinon_q_panels(double w, double k);
std::pair<double, double> four_spinon_w_interval(double w, double k, double Q);

enum class SumRuleScheme { zone, momenta };

SumRuleReport sum_rule_fraction(const GridSpec& grid);
double sum_rule_integral(SumRuleScheme scheme, int k_nodes, int w_nodes, double* coarse = nullptr);

}  // namespace spinon
