#include "spinon/specfun.hpp"

#include <array>
#include <cmath>
#include <string>

#include "spinon/errors.hpp"

namespace spinon {

void QuadratureSpec::validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
        throw DomainError("QuadratureSpec: tolerances must be positive");
    if (max_subdivisions < 1) throw DomainError("QuadratureSpec: max_subdivisions < 1");
    if (tail_truncation < 1) throw DomainError("QuadratureSpec: tail_truncation < 1");
}

QuadratureSpec QuadratureSpec::tightened(double factor) const {
    QuadratureSpec q = *this;
    q.abs_tol *= factor;
    q.rel_tol *= factor;
    return q;
}

void require_finite(Complex z, const char* where) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw Error(std::string(where) + ": non-finite result (overflow)");
}

void require_finite(double x, const char* where) {
    if (!std::isfinite(x)) throw Error(std::string(where) + ": non-finite result (overflow)");
}

namespace {

constexpr double kLogSqrt2Pi = 0.91893853320467274178;

// B_2k / (2k (2k-1))
constexpr std::array<double, 9> kStirling = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
};

Complex log_gamma_stirling(Complex w) {
    Complex inv = 1.0 / w;
    Complex inv2 = inv * inv;
    Complex series = 0.0;
    Complex p = inv;
    for (double c : kStirling) {
        series += c * p;
        p *= inv2;
    }
    return (w - 0.5) * std::log(w) - w + kLogSqrt2Pi + series;
}

Complex log_gamma_right(Complex z) {
    constexpr double kShift = 15.0;
    Complex shift_log = 0.0;
    while (z.real() < kShift) {
        shift_log += std::log(z);
        z += 1.0;
    }
    return log_gamma_stirling(z) - shift_log;
}

// log sin(w) without overflow for large |Im w|
Complex log_sin(Complex w) {
    if (w.imag() < 0.0) return std::conj(log_sin(std::conj(w)));
    const Complex i(0.0, 1.0);
    Complex e = std::exp(2.0 * i * w);
    return -i * w + std::log(1.0 - e) + std::log(Complex(0.0, 0.5));
}

}  // namespace

Complex log_gamma(Complex z) {
    require_finite(z, "log_gamma");
    double re = z.real();
    if (re <= 0.5 && std::abs(z.imag()) < 1e-14) {
        double n = std::round(re);
        if (n <= 0.0 && std::abs(re - n) < 1e-14)
            throw PoleError("log_gamma: pole at non-positive integer " + std::to_string(n));
    }
    Complex r;
    if (re < 0.5) {
        r = std::log(kPi) - log_sin(kPi * z) - log_gamma_right(1.0 - z);
    } else {
        r = log_gamma_right(z);
    }
    require_finite(r, "log_gamma");
    return r;
}

Complex q_pochhammer(Complex y, double x, const QuadratureSpec& quad) {
    quad.validate();
    if (!(x < 1.0)) throw ConvergenceError("q_pochhammer: base x >= 1, product does not converge");
    if (!(x >= 0.0)) throw DomainError("q_pochhammer: base x must lie in [0, 1)");
    double ay = std::abs(y);
    if (ay > 0.0 && x > 0.0) {
        double need = std::log(quad.rel_tol * (1.0 - x) / ay) / std::log(x);
        if (need > 5e7) throw ConvergenceError("q_pochhammer: base too close to 1");
    }
    Complex prod = 1.0;
    double xn = 1.0;
    for (long n = 0;; ++n) {
        prod *= 1.0 - y * xn;
        xn *= x;
        if (n + 1 >= quad.tail_truncation && ay * xn / (1.0 - x) < quad.rel_tol) break;
    }
    require_finite(prod, "q_pochhammer");
    return prod;
}

Complex theta(double x, Complex y, const QuadratureSpec& quad) {
    if (y == Complex(0.0, 0.0)) throw DomainError("theta: y = 0");
    if (!(x > 0.0 && x < 1.0)) {
        if (!(x < 1.0)) throw ConvergenceError("theta: base x >= 1");
        throw DomainError("theta: base x must lie in (0, 1)");
    }
    return q_pochhammer(x, x, quad) * q_pochhammer(y, x, quad) * q_pochhammer(x / y, x, quad);
}

Complex exp_integral_e1(Complex z) {
    require_finite(z, "exp_integral_e1");
    if (z == Complex(0.0, 0.0)) throw PoleError("exp_integral_e1: z = 0");
    constexpr double kEulerGamma = 0.57721566490153286061;
    if (z.real() < 0.0 && std::abs(z) >= 2.0)
        throw DomainError("exp_integral_e1: only Re z >= 0 or |z| < 2 supported");
    if (std::abs(z) < 2.0) {
        Complex sum = 0.0;
        Complex term = 1.0;
        for (int k = 1; k < 500; ++k) {
            term *= -z / static_cast<double>(k);
            Complex add = term / static_cast<double>(k);
            sum += add;
            if (std::abs(add) < 1e-17 * std::abs(sum)) break;
        }
        return -kEulerGamma - std::log(z) - sum;
    }
    // modified Lentz on the even continued fraction
    constexpr double kTiny = 1e-300;
    Complex b = z + 1.0;
    Complex c = 1.0 / kTiny;
    Complex d = 1.0 / b;
    Complex h = d;
    for (int i = 1; i < 10000; ++i) {
        double an = -static_cast<double>(i) * i;
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        Complex del = c * d;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) return h * std::exp(-z);
    }
    throw ConvergenceError("exp_integral_e1: continued fraction did not converge");
}

double cos_integral(double x) {
    if (!(x > 0.0)) throw DomainError("cos_integral: x must be positive");
    return -exp_integral_e1(Complex(0.0, x)).real();
}

}  // namespace spinon
