#pragma once

#include <filesystem>
#include <vector>

#include "spinon/numeric.hpp"

namespace spinon {

struct AminusArg {
    double x = 0.0;
    double y = 0.0;  // in [0, pi)
};

// Integrand of the exponent at t > 0, written without cancellation at small t.
double a_minus_integrand(double t, AminusArg arg);

// Exponent I with |A-|^2 = exp(-I). Adaptive Gauss-Kronrod on [0, T] with
// T = quad.tail_truncation, plus the closed form 2 Re E1((2y/pi - 2ix/pi) T)
// of the large-t asymptote on [T, inf).
double a_minus_exponent(AminusArg arg, const QuadratureSpec& quad = {});

// Returns exactly 0 at (0, 0).
double a_minus_sq(AminusArg arg, const QuadratureSpec& quad = {});

// y = 0; even in x. DomainError at x = 0.
double a_minus_sq_real(double x, const QuadratureSpec& quad = {});

// Cubic interpolation table of ln(|A-(x)|^2 / x^2) on cell-centred nodes.
// Beyond x_max it falls back to direct quadrature. Immutable once built.
class AMinusTable {
public:
    static constexpr double kDefaultStep = 1.0 / 32.0;
    static constexpr double kDefaultXMax = 80.0;

    static AMinusTable build(double step = kDefaultStep, double x_max = kDefaultXMax,
                             const QuadratureSpec& quad = {});

    // Process-wide instance. Loaded from $SPINON_DSF_CACHE/aminus_table.csv when
    // that file matches the default layout, otherwise built and written there.
    static const AMinusTable& shared();

    double operator()(double x) const;  // |A-(x)|^2, 0 at x = 0
    double max_interpolation_error() const { return max_error_; }
    double step() const { return step_; }
    double x_max() const { return x_max_; }
    std::size_t size() const { return phi_.size(); }

    // columns x, value, est_error
    void write_csv(const std::filesystem::path& path) const;
    static AMinusTable read_csv(const std::filesystem::path& path, double step,
                                const QuadratureSpec& quad = {});

private:
    double phi(int i) const;

    double step_ = kDefaultStep;
    double x_max_ = 0.0;
    QuadratureSpec quad_;
    std::vector<double> phi_;
    std::vector<double> node_error_;
    double max_error_ = 0.0;
};

}  // namespace spinon
