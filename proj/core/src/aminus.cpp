#include "spinon/aminus.hpp"

#include <cmath>
#include <vector>

#include "spinon/errors.hpp"
#include "spinon/quadrature.hpp"
#include "spinon/specfun.hpp"

namespace spinon {

namespace {

void check_arg(AminusArg arg) {
    require_finite(arg.x, "a_minus_sq");
    if (!(arg.y >= 0.0 && arg.y < kPi)) throw DomainError("a_minus_sq: y must lie in [0, pi)");
}

}  // namespace

double a_minus_integrand(double t, AminusArg arg) {
    double b = 1.0 - arg.y / kPi;
    double c = 2.0 * arg.x / kPi;
    double e2 = std::exp(-2.0 * t);
    double w = 4.0 * e2 * (t / -std::expm1(-4.0 * t)) / (1.0 + e2);
    double sh = std::sinh(b * t) / t;
    double sn = std::sin(0.5 * c * t) / t;
    return (2.0 * sh * sh * std::cos(c * t) - 2.0 * sn * sn) * w;
}

double a_minus_exponent(AminusArg arg, const QuadratureSpec& quad) {
    check_arg(arg);
    quad.validate();
    double c = 2.0 * std::abs(arg.x) / kPi;
    double a = 2.0 * arg.y / kPi;
    if (c == 0.0 && a == 0.0) return HUGE_VAL;
    double T = quad.tail_truncation;
    double width = c > 0.0 ? std::min(1.0, kPi / c) : 1.0;
    int panels = static_cast<int>(std::ceil(T / width));
    std::vector<double> br(panels + 1);
    for (int i = 0; i <= panels; ++i) br[i] = T * i / panels;
    AminusArg folded{std::abs(arg.x), arg.y};
    QuadResult core = integrate_adaptive([folded](double t) { return a_minus_integrand(t, folded); },
                                         br, quad);
    double tail = 2.0 * exp_integral_e1(Complex(a * T, -c * T)).real();
    return core.value + tail;
}

double a_minus_sq(AminusArg arg, const QuadratureSpec& quad) {
    check_arg(arg);
    if (arg.x == 0.0 && arg.y == 0.0) return 0.0;
    double v = std::exp(-a_minus_exponent(arg, quad));
    require_finite(v, "a_minus_sq");
    return v;
}

double a_minus_sq_real(double x, const QuadratureSpec& quad) {
    if (x == 0.0) throw DomainError("a_minus_sq_real: x = 0 (use a_minus_sq)");
    return a_minus_sq({std::abs(x), 0.0}, quad);
}

}  // namespace spinon
