#pragma once

#include <functional>
#include <span>
#include <vector>

#include "spinon/numeric.hpp"

namespace spinon {

struct QuadResult {
    double value = 0.0;
    double abs_error = 0.0;
    int intervals = 0;
};

// Globally adaptive 15-point Gauss-Kronrod over the panels given by sorted
// breakpoints. Bisects the worst panel until the summed error estimate meets
// max(abs_tol, rel_tol*|I|); ConvergenceError past quad.max_subdivisions.
QuadResult integrate_adaptive(const std::function<double(double)>& f,
                              std::span<const double> breakpoints,
                              const QuadratureSpec& quad);

// Fixed 20-point Gauss-Legendre on `panels` equal pieces of [a, b].
double integrate_gauss_panels(const std::function<double(double)>& f, double a, double b,
                              int panels);

// Tanh-sinh rule on [-1, 1] with 2M+1 nodes t_k = k*t_max/M. The even-k
// subset (step 2h) is the embedded coarse rule used for error estimates.
class TanhSinhRule {
public:
    TanhSinhRule(int nodes_per_axis, double t_max = 3.0);

    struct Node {
        double x;        // position in [a, b]
        double from_lo;  // x - a, accurate near a
        double from_hi;  // b - x, accurate near b
        double weight;   // fine-rule weight
        double coarse_weight;  // 0 for odd k
    };

    std::vector<Node> map(double a, double b) const;
    int size() const { return static_cast<int>(s_.size()); }

private:
    std::vector<double> s_;     // abscissa in (-1, 1)
    std::vector<double> comp_;  // 1 - |s|
    std::vector<double> w_;
    std::vector<double> wc_;
};

}  // namespace spinon
