#pragma once

#include "spinon/numeric.hpp"

namespace spinon {

// Principal-branch log Gamma up to 2*pi*i; only exp(result) is normative.
Complex log_gamma(Complex z);

// (y; x)_inf. Stops once |y| x^n / (1 - x) < quad.rel_tol and at least
// quad.tail_truncation factors have been taken.
Complex q_pochhammer(Complex y, double x, const QuadratureSpec& quad = {});

// theta_x(y) = (x;x)(y;x)(x/y;x)
Complex theta(double x, Complex y, const QuadratureSpec& quad = {});

double elliptic_k(double m);

struct EllipticModulus {
    double nome = 0.0;
    double bigK = 0.0;
    double bigKprime = 0.0;
    double m = 0.0;
    // 1 - m; may underflow to 0 near the isotropic point, the theta route
    // below never divides by it
    double m1 = 1.0;

    static EllipticModulus from_parameter(double m);
    static EllipticModulus from_nome(double nome);

    // log of the conjugate nome exp(-pi K / K')
    double log_conjugate_nome() const;
};

double jacobi_am(double u, double m);
double jacobi_dn(double u, double m);
double jacobi_am(double u, const EllipticModulus& mod);
double jacobi_dn(double u, const EllipticModulus& mod);

// Below this complement the conjugate-nome theta quotients replace Landen descent.
inline constexpr double kThetaRouteComplement = 1e-3;

namespace detail {
double am_landen(double u, double m, double m1);
double dn_landen(double u, double m, double m1);
double am_theta(double u, const EllipticModulus& mod);
double dn_theta(double u, const EllipticModulus& mod);
}  // namespace detail

Complex exp_integral_e1(Complex z);
// Ci(x), x > 0
double cos_integral(double x);

}  // namespace spinon
