#pragma once

// Independent reference implementations used only by the tests. None of these
// calls into spinon_core numerics.

#include <complex>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;

// Lanczos (g = 7, 9 terms) applied at z + 8, then the recurrence down to z.
Complex gamma(Complex z);

// Plain product of (1 - y x^k) until |y| x^k < 1e-18.
Complex q_pochhammer(Complex y, double x);

// K(m) and F(phi | m) by composite Gauss-Legendre in the angle.
double elliptic_k(double m);
double elliptic_f(double phi, double m);
// am(u | m) by Newton on F(phi | m) = u.
double jacobi_am(double u, double m);

// E1(z) = e^{-z} int_0^inf e^{-u} / (z + u) du, |arg z| < pi.
Complex exp_integral_e1(Complex z);

// |A-(x + i y)|^2 from the raw exponent integrand, segmented at half periods
// of cos(2 x t / pi) and extrapolated with Wynn's epsilon algorithm.
double a_minus_sq(double x, double y = 0.0);

// One-contour g (n = 4, eps = +1 at index ell) as trapezoid sums over circles
// around beta_j + i pi/2 plus the line Im(alpha) = -pi traversed right to left.
Complex g_contour(const std::vector<double>& betas, int ell);

// Wynn epsilon limit of a sequence of partial sums.
double wynn_epsilon(const std::vector<double>& s);

}  // namespace oracle
