#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace oracle {

namespace {

constexpr double kPi = std::numbers::pi;

// 32-point Gauss-Legendre on [-1, 1], nodes by Newton on P_n.
struct Legendre {
    std::vector<double> x, w;
    explicit Legendre(int n) {
        for (int i = 0; i < n; ++i) {
            double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
            double dp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = 0.0;
                for (int j = 1; j <= n; ++j) {
                    double p2 = p1;
                    p1 = p0;
                    p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / j;
                }
                dp = n * (z * p0 - p1) / (z * z - 1.0);
                double dz = p0 / dp;
                z -= dz;
                if (std::abs(dz) < 1e-16) break;
            }
            x.push_back(z);
            w.push_back(2.0 / ((1.0 - z * z) * dp * dp));
        }
    }
};

const Legendre& gl() {
    static const Legendre rule(32);
    return rule;
}

template <class F>
auto panel(F f, double a, double b) {
    const Legendre& r = gl();
    double h = 0.5 * (b - a), m = 0.5 * (a + b);
    decltype(f(m)) s{};
    for (std::size_t i = 0; i < r.x.size(); ++i) s += r.w[i] * f(m + h * r.x[i]);
    return s * h;
}

template <class F>
auto composite(F f, double a, double b, int panels) {
    decltype(f(a)) s{};
    for (int i = 0; i < panels; ++i) s += panel(f, a + (b - a) * i / panels, a + (b - a) * (i + 1) / panels);
    return s;
}

}  // namespace

Complex gamma(Complex z) {
    static const double c[9] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                                771.32342877765313,   -176.61502916214059,   12.507343278686905,
                                -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    Complex zz = z + 8.0;
    Complex x = c[0];
    Complex zm = zz - 1.0;
    for (int i = 1; i < 9; ++i) x += c[i] / (zm + static_cast<double>(i));
    Complex t = zm + 7.5;
    Complex g = std::sqrt(2.0 * kPi) * std::pow(t, zm + 0.5) * std::exp(-t) * x;
    for (int i = 7; i >= 0; --i) g /= z + static_cast<double>(i);
    return g;
}

Complex q_pochhammer(Complex y, double x) {
    Complex p = 1.0;
    Complex term = y;
    while (std::abs(term) >= 1e-18) {
        p *= 1.0 - term;
        term *= x;
    }
    return p;
}

double elliptic_f(double phi, double m) {
    return composite([m](double t) { return 1.0 / std::sqrt(1.0 - m * std::sin(t) * std::sin(t)); }, 0.0, phi,
                     std::max(8, static_cast<int>(std::abs(phi) * 16)));
}

double elliptic_k(double m) {
    // theta = pi/2 (1 - s^2) softens the log endpoint; good to ~1e-12 up to m = 0.999
    auto f = [m](double s) {
        double th = 0.5 * kPi * (1.0 - s * s);
        return kPi * s / std::sqrt(1.0 - m * std::sin(th) * std::sin(th));
    };
    return composite(f, 0.0, 1.0, 64);
}

double jacobi_am(double u, double m) {
    double phi = u;
    for (int it = 0; it < 60; ++it) {
        double r = elliptic_f(phi, m) - u;
        double d = std::sqrt(1.0 - m * std::sin(phi) * std::sin(phi));
        phi -= r * d;
        if (std::abs(r) < 1e-15) break;
    }
    return phi;
}

Complex exp_integral_e1(Complex z) {
    // u = s / (1 - s) maps [0, 1) onto [0, inf)
    auto f = [z](double s) -> Complex {
        if (s >= 1.0) return 0.0;
        double u = s / (1.0 - s);
        return std::exp(-u) / (z + u) / ((1.0 - s) * (1.0 - s));
    };
    return std::exp(-z) * composite(f, 0.0, 1.0, 200);
}

double wynn_epsilon(const std::vector<double>& s) {
    std::size_t n = s.size();
    std::vector<double> prev(n + 1, 0.0), cur(s.begin(), s.end());
    double best = s.back();
    for (std::size_t k = 1; k < n; ++k) {
        std::vector<double> next(n - k);
        for (std::size_t i = 0; i + k < n; ++i) {
            double d = cur[i + 1] - cur[i];
            next[i] = (d == 0.0 ? 1e300 : prev[i + 1] + 1.0 / d);
        }
        prev = cur;
        cur = next;
        if (k % 2 == 0 && !cur.empty() && std::abs(cur.back()) < 1e100) best = cur.back();
    }
    return best;
}

double a_minus_sq(double x, double y) {
    double b = 1.0 - y / kPi;
    double c = 2.0 * std::abs(x) / kPi;
    // (cosh(2bt) cos(ct) - 1) e^t / (t sinh 2t cosh t), with the hyperbolic
    // ratio multiplied through by e^{-3t}
    auto f = [b, c](double t) {
        double ratio = 2.0 * (std::exp((2.0 * b - 2.0) * t) + std::exp(-(2.0 * b + 2.0) * t)) /
                       ((1.0 - std::exp(-4.0 * t)) * (1.0 + std::exp(-2.0 * t)));
        double rest = 2.0 * std::exp(-2.0 * t) / ((1.0 - std::exp(-4.0 * t)) * (1.0 + std::exp(-2.0 * t)));
        return (ratio * std::cos(c * t) - 2.0 * rest) / t;
    };
    auto safe = [&](double t) { return t < 1e-6 ? f(1e-6) : f(t); };
    double head = composite(safe, 0.0, 20.0, 400);
    if (c == 0.0) return std::exp(-(head + composite(safe, 20.0, 60.0, 200)));
    double half = kPi / c;
    double t0 = std::ceil(20.0 / half) * half;
    head += composite(safe, 20.0, t0, std::max(8, static_cast<int>((t0 - 20.0) * 8)));
    std::vector<double> sums;
    double acc = head;
    int per = std::max(4, static_cast<int>(half * 2));
    for (int i = 0; i < 40; ++i) {
        acc += composite(safe, t0 + i * half, t0 + (i + 1) * half, per);
        sums.push_back(acc);
    }
    return std::exp(-wynn_epsilon(sums));
}

Complex g_contour(const std::vector<double>& betas, int ell) {
    const Complex I(0.0, 1.0);
    auto integrand = [&](Complex a) {
        Complex v = 1.0;
        for (int j = 0; j < static_cast<int>(betas.size()); ++j) {
            if (j < ell) v *= a - betas[j] + 0.5 * kPi * I;
            if (j > ell) v *= betas[j] - a + 0.5 * kPi * I;
            Complex s = (a - betas[j]) / (2.0 * kPi * I);
            v *= gamma(-0.25 + s) * gamma(-0.25 - s);
        }
        return v * std::sinh(a);
    };
    double gap = 1e300;
    for (std::size_t i = 0; i < betas.size(); ++i)
        for (std::size_t j = i + 1; j < betas.size(); ++j) gap = std::min(gap, std::abs(betas[i] - betas[j]));
    double r = std::min(0.3, 0.45 * gap);
    Complex total = 0.0;
    const int nc = 256;
    for (double b : betas) {
        Complex centre = Complex(b, 0.5 * kPi);
        Complex s = 0.0;
        for (int k = 0; k < nc; ++k) {
            Complex e = std::polar(1.0, 2.0 * kPi * k / nc);
            s += integrand(centre + r * e) * r * e;
        }
        total += s / static_cast<double>(nc);  // (1 / 2 pi i) * i dtheta
    }
    const double h = 0.01, L = 60.0;
    Complex line = 0.0;
    for (int k = 0; k <= static_cast<int>(2 * L / h); ++k) {
        double x = -L + k * h;
        double wt = (k == 0 || k == static_cast<int>(2 * L / h)) ? 0.5 : 1.0;
        line += wt * integrand(Complex(x, -kPi));
    }
    total -= line * h / (2.0 * kPi * I);
    return total;
}

}  // namespace oracle
