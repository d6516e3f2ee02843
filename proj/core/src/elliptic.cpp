#include <array>
#include <cmath>

#include "spinon/errors.hpp"
#include "spinon/specfun.hpp"

namespace spinon {

namespace {

double agm(double a, double b) {
    for (int i = 0; i < 64; ++i) {
        double an = 0.5 * (a + b);
        double bn = std::sqrt(a * b);
        if (std::abs(an - bn) <= 1e-16 * an) return 0.5 * (an + bn);
        a = an;
        b = bn;
    }
    return a;
}

void check_parameter(double m, const char* where) {
    if (!(m >= 0.0 && m < 1.0))
        throw DomainError(std::string(where) + ": parameter m must lie in [0, 1)");
}

// Sum_{n in Z} exp(n^2 lq + n s + shift) for lq < 0, without forming overflowing pieces.
double gauss_sum(double lq, double s, double shift, int sign_alternate) {
    double total = 0.0;
    for (int dir : {1, -1}) {
        for (int n = (dir == 1 ? 0 : -1);; n += dir) {
            double ex = double(n) * n * lq + n * s + shift;
            double sign = (sign_alternate && (n & 1)) ? -1.0 : 1.0;
            if (ex < -745.0) {
                // exponent is concave in n; past the vertex nothing more can contribute
                double vertex = -s / (2.0 * lq);
                if ((dir == 1 && n > vertex) || (dir == -1 && n < vertex)) break;
                continue;
            }
            total += sign * std::exp(ex);
        }
    }
    return total;
}

struct ThetaConstants {
    double t2, t3, t4;  // t2 without the q^{1/4} prefactor
};

ThetaConstants theta_constants(double lq) {
    ThetaConstants c{};
    c.t3 = gauss_sum(lq, 0.0, 0.0, 0);
    c.t4 = gauss_sum(lq, 0.0, 0.0, 1);
    // sum_{n>=0} q^{n(n+1)} = 0.5 * sum_{n in Z} q^{n^2 + n}
    c.t2 = 2.0 * 0.5 * gauss_sum(lq, lq, 0.0, 0);
    return c;
}

}  // namespace

double elliptic_k(double m) {
    check_parameter(m, "elliptic_k");
    return 0.5 * kPi / agm(1.0, std::sqrt(1.0 - m));
}

EllipticModulus EllipticModulus::from_parameter(double m) {
    if (!(m > 0.0 && m < 1.0)) throw DomainError("EllipticModulus: parameter must lie in (0, 1)");
    EllipticModulus e;
    e.m = m;
    e.m1 = 1.0 - m;
    e.bigK = elliptic_k(m);
    e.bigKprime = 0.5 * kPi / agm(1.0, std::sqrt(m));
    e.nome = std::exp(-kPi * e.bigKprime / e.bigK);
    return e;
}

EllipticModulus EllipticModulus::from_nome(double nome) {
    if (!(nome > 0.0 && nome < 1.0)) throw DomainError("EllipticModulus: nome must lie in (0, 1)");
    EllipticModulus e;
    e.nome = nome;
    double lq = std::log(nome);
    if (lq <= -kPi) {
        ThetaConstants c = theta_constants(lq);
        double r2 = 2.0 * std::exp(0.25 * lq) * c.t2 / c.t3;
        double r4 = c.t4 / c.t3;
        e.m = std::pow(r2, 4);
        e.m1 = std::pow(r4, 4);
        e.bigK = 0.5 * kPi * c.t3 * c.t3;
        e.bigKprime = e.bigK * (-lq) / kPi;
    } else {
        double lqc = kPi * kPi / lq;
        ThetaConstants c = theta_constants(lqc);
        double r2 = 2.0 * std::exp(0.25 * lqc) * c.t2 / c.t3;
        double r4 = c.t4 / c.t3;
        e.m1 = std::pow(r2, 4);
        e.m = std::pow(r4, 4);
        e.bigKprime = 0.5 * kPi * c.t3 * c.t3;
        e.bigK = e.bigKprime * kPi / (-lq);
    }
    return e;
}

double EllipticModulus::log_conjugate_nome() const { return -kPi * bigK / bigKprime; }

namespace detail {

namespace {

// Descending Landen phases; returns phi_0 and phi_1.
std::array<double, 2> landen_phases(double u, double m, double m1) {
    constexpr int kMax = 40;
    std::array<double, kMax + 1> a{}, c{};
    a[0] = 1.0;
    double b = std::sqrt(m1);
    c[0] = std::sqrt(m);
    int n = 0;
    while (n < kMax && std::abs(c[n]) > 1e-17 * a[n]) {
        a[n + 1] = 0.5 * (a[n] + b);
        c[n + 1] = 0.5 * (a[n] - b);
        b = std::sqrt(a[n] * b);
        ++n;
    }
    double phi = std::ldexp(a[n] * u, n);
    double phi_prev = phi;
    for (int k = n; k > 0; --k) {
        phi_prev = phi;
        phi = 0.5 * (phi + std::asin(c[k] * std::sin(phi) / a[k]));
    }
    return {phi, phi_prev};
}

}  // namespace

double am_landen(double u, double m, double m1) {
    if (m == 0.0) return u;
    return landen_phases(u, m, m1)[0];
}

double dn_landen(double u, double m, double m1) {
    if (m == 0.0) return 1.0;
    auto ph = landen_phases(u, m, m1);
    return std::cos(ph[0]) / std::cos(ph[1] - ph[0]);
}

namespace {

struct Reduced {
    double y;
    double turns;
};

Reduced reduce(double u, const EllipticModulus& mod) {
    double period = 2.0 * mod.bigK;
    double j = std::round(u / period);
    double ur = u - j * period;
    return {0.5 * kPi * ur / mod.bigKprime, j};
}

}  // namespace

double dn_theta(double u, const EllipticModulus& mod) {
    double lq = mod.log_conjugate_nome();
    Reduced r = reduce(u, mod);
    double ay = std::abs(r.y);
    double num = gauss_sum(lq, 2.0 * r.y, -ay, 0);
    double num0 = gauss_sum(lq, 0.0, 0.0, 0);
    // 0.5 * sum_{n in Z} q^{n(n+1)} e^{(2n+1) y}
    double den = 0.5 * gauss_sum(lq, lq + 2.0 * r.y, r.y - ay, 0);
    double den0 = 0.5 * gauss_sum(lq, lq, 0.0, 0);
    return (num / num0) / (den / den0);
}

double am_theta(double u, const EllipticModulus& mod) {
    double lq = mod.log_conjugate_nome();
    Reduced r = reduce(u, mod);
    double ay = std::abs(r.y);
    double t3 = gauss_sum(lq, 0.0, 0.0, 0);
    double s0 = 0.5 * gauss_sum(lq, lq, 0.0, 0);
    double s = 0.5 * gauss_sum(lq, lq + 2.0 * r.y, r.y - ay, 1);
    double t4y = gauss_sum(lq, 2.0 * r.y, -ay, 1);
    return std::atan2(t3 * s, s0 * t4y) + kPi * r.turns;
}

}  // namespace detail

double jacobi_am(double u, double m) {
    check_parameter(m, "jacobi_am");
    return detail::am_landen(u, m, 1.0 - m);
}

double jacobi_dn(double u, double m) {
    check_parameter(m, "jacobi_dn");
    return detail::dn_landen(u, m, 1.0 - m);
}

double jacobi_am(double u, const EllipticModulus& mod) {
    if (mod.m1 < kThetaRouteComplement) return detail::am_theta(u, mod);
    return detail::am_landen(u, mod.m, mod.m1);
}

double jacobi_dn(double u, const EllipticModulus& mod) {
    if (mod.m1 < kThetaRouteComplement) return detail::dn_theta(u, mod);
    return detail::dn_landen(u, mod.m, mod.m1);
}

}  // namespace spinon
