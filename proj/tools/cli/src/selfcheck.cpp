#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>

#include "spinon/aminus.hpp"
#include "spinon/dispersion.hpp"
#include "spinon/dsf.hpp"
#include "spinon/gfunction.hpp"
#include "spinon/kinematics.hpp"
#include "spinon_cli/cli.hpp"

namespace spinon::cli {

namespace {

std::string fmt(const char* f, double a, double b = 0.0) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

// Each check returns a detail string and sets `ok`.
using Check = std::function<std::string(bool& ok)>;

std::vector<std::pair<std::string, Check>> checks() {
    std::vector<std::pair<std::string, Check>> c;
    c.emplace_back("dispersion: e(beta) = -pi sin p(beta)", [](bool& ok) {
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> u(-20.0, 20.0);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            double b = u(rng);
            worst = std::max(worst, std::abs(energy_of_rapidity({b}) + kPi * std::sin(momentum_of_rapidity({b}).p)));
        }
        ok = worst < 1e-12;
        return fmt("max deviation %.3g", worst);
    });
    c.emplace_back("dispersion: rapidity round trip", [](bool& ok) {
        double worst = 0.0;
        for (double b = -15.0; b <= 15.0; b += 0.37)
            worst = std::max(worst, std::abs(rapidity_of_momentum(momentum_of_rapidity({b})).beta - b));
        ok = worst < 1e-8;
        return fmt("max deviation %.3g", worst);
    });
    c.emplace_back("dispersion: XXZ energies approach the isotropic ones", [](bool& ok) {
        double prev = HUGE_VAL;
        ok = true;
        std::string d;
        for (double eps : {0.1, 0.05, 0.01}) {
            IsotropicLimitReport r = isotropic_limit_check(eps, -3.0, 3.0, 61);
            ok = ok && r.max_energy_error < prev && r.max_momentum_error < 1e-9;
            prev = r.max_energy_error;
            d += fmt("%.2g:%.2e ", eps, r.max_energy_error);
        }
        ok = ok && prev < 0.05;
        return d;
    });
    c.emplace_back("kinematics: rapidity difference at (pi, pi)", [](bool& ok) {
        double dev = std::abs(rapidity_difference(kPi, kPi) - 2.0 * std::log(2.0 + std::sqrt(3.0)));
        ok = dev < 1e-12;
        return fmt("deviation %.3g", dev);
    });
    c.emplace_back("kinematics: pair solutions conserve w and k", [](bool& ok) {
        double worst = 0.0;
        for (double k : {0.4, 1.3, kPi, 4.0, 5.9}) {
            Boundaries b = boundaries(k);
            for (double t : {0.1, 0.5, 0.9}) {
                double w = b.w_l + t * (b.w_u - b.w_l);
                for (const MomentumPair& p : solve_pairs(w, k).pairs) {
                    double dw = std::abs(-kPi * (std::sin(p.p1.p) + std::sin(p.p2.p)) - w);
                    double dk = std::abs(std::remainder(-p.p1.p - p.p2.p - k, 2.0 * kPi));
                    worst = std::max({worst, dw, dk});
                }
            }
        }
        ok = worst < 1e-12;
        return fmt("max residual %.3g", worst);
    });
    c.emplace_back("aminus: table matches direct quadrature", [](bool& ok) {
        const AMinusTable& t = AMinusTable::shared();
        double worst = 0.0;
        for (double x : {0.5, 1.0, 2.0, 4.0, 9.5}) {
            double d = a_minus_sq_real(x);
            worst = std::max(worst, std::abs(t(x) - d) / d);
        }
        ok = worst < 1e-7;
        return fmt("max relative deviation %.3g", worst);
    });
    c.emplace_back("aminus: even in x and vanishing at 0", [](bool& ok) {
        double a = a_minus_sq_real(0.2), b = a_minus_sq_real(0.1), s = a_minus_sq_real(0.05);
        double odd = std::abs(a_minus_sq_real(-1.3) - a_minus_sq_real(1.3));
        ok = a > b && b > s && s > 0.0 && odd == 0.0;
        return fmt("|A(0.05)|^2 = %.3g, asymmetry %.3g", s, odd);
    });
    c.emplace_back("gfun: n = 2 value is exactly 1", [](bool& ok) {
        ok = g_value({{-1, -1}}, {{0.7}, {-2.1}}) == Complex(1.0) && g_sum_sq(2, {{0.7}, {-2.1}}) == 1.0;
        return std::string();
    });
    c.emplace_back("gfun: n = 4 sum |g|^2 symmetric", [](bool& ok) {
        double a = g_sum_sq(4, {{0.3}, {-0.2}, {0.9}, {-1.1}});
        double b = g_sum_sq(4, {{0.9}, {-1.1}, {-0.2}, {0.3}});
        double c2 = g_sum_sq(4, {{-0.3}, {0.2}, {-0.9}, {1.1}});
        double dev = std::max(std::abs(a - b), std::abs(a - c2)) / a;
        ok = dev < 1e-8;
        return fmt("relative spread %.3g", dev);
    });
    c.emplace_back("dsf2: support, reflection, non-negativity", [](bool& ok) {
        ok = s2_pm(0.5, 1.0) == 0.0 && s2_pm(7.0, 2.0) == 0.0;
        double worst = 0.0;
        for (double k : {0.7, 1.9, 2.8}) {
            Boundaries b = boundaries(k);
            for (double t : {0.2, 0.6, 0.95}) {
                double w = b.w_l + t * (b.w_u - b.w_l);
                double v = s2_pm(w, k);
                ok = ok && v > 0.0;
                worst = std::max(worst, std::abs(v - s2_pm(w, 2.0 * kPi - k)) / v);
            }
        }
        ok = ok && worst < 1e-12;
        return fmt("reflection deviation %.3g", worst);
    });
    c.emplace_back("dsf2: generic pipeline equals closed form", [](bool& ok) {
        double worst = 0.0;
        for (double k : {0.9, 2.2, kPi}) {
            Boundaries b = boundaries(k);
            for (double t : {0.3, 0.7}) {
                double w = b.w_l + t * (b.w_u - b.w_l);
                double ref = s2_pm(w, k);
                worst = std::max(worst, std::abs(s2_pm_generic(w, k) - ref) / ref);
            }
        }
        ok = worst < 1e-9;
        return fmt("max relative deviation %.3g", worst);
    });
    c.emplace_back("dsf2: vanishes at the upper edge", [](bool& ok) {
        double wu = boundaries(kPi).w_u;
        double a = s2_pm(wu - 1e-2, kPi), b = s2_pm(wu - 1e-3, kPi), d = s2_pm(wu - 1e-4, kPi);
        ok = a > b && b > d && d > 0.0;
        return fmt("S2(w_u - 1e-4, pi) = %.3g", d);
    });
    c.emplace_back("sumrule: schemes agree", [](bool& ok) {
        double z = sum_rule_integral(SumRuleScheme::zone, 32, 32);
        double m = sum_rule_integral(SumRuleScheme::momenta, 32, 32);
        double dev = std::abs(z - m) / z;
        ok = dev < 1e-4;
        return fmt("fraction %.6f, scheme spread %.2g", z / (4.0 * kPi * kPi), dev);
    });
    c.emplace_back("dsf4: reduced integrand equals the full pair sum", [](bool& ok) {
        double w = 4.0, k = kPi;
        auto panels = four_spinon_q_panels(w, k);
        auto widest = *std::max_element(panels.begin(), panels.end(), [](auto a, auto b) {
            return a.second - a.first < b.second - b.first;
        });
        double Q = 0.5 * (widest.first + widest.second);
        FourSpinonSlice s = four_spinon_h_interval(w, k, Q, 2.0 * kPi - Q);
        double h = 0.5 * (s.h_lo + s.h_hi);
        double wp = s.hi34 * std::cos(h);
        double j12 = std::sqrt((wp - s.lo12) * ((w - s.lo12) + (w - wp)));
        FourSpinonNode node{Q, 2.0 * kPi - Q, h, s.h_max - h, j12};
        double a = four_spinon_integrand(w, k, node, {}, true);
        double b = four_spinon_integrand(w, k, node, {}, false);
        double dev = std::abs(a - b) / std::abs(b);
        ok = dev < 1e-9 && a > 0.0;
        return fmt("relative deviation %.3g", dev);
    });
    return c;
}

}  // namespace

std::vector<CheckLine> selfcheck() {
    std::vector<CheckLine> out;
    for (auto& [name, fn] : checks()) {
        CheckLine l{name, false, ""};
        try {
            l.detail = fn(l.pass);
        } catch (const std::exception& e) {
            l.pass = false;
            l.detail = std::string("threw: ") + e.what();
        }
        out.push_back(std::move(l));
    }
    return out;
}

}  // namespace spinon::cli
