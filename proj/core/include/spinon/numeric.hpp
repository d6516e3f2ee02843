#pragma once

#include <complex>
#include <numbers>

namespace spinon {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

struct QuadratureSpec {
    double abs_tol = 1e-14;
    double rel_tol = 1e-12;
    int max_subdivisions = 4000;
    // minimum product length for q-Pochhammer, split point T for |A-|^2
    int tail_truncation = 30;

    void validate() const;
    QuadratureSpec tightened(double factor) const;
};

// Throws Error if any component of z is NaN or infinite.
void require_finite(Complex z, const char* where);
void require_finite(double x, const char* where);

}  // namespace spinon
