#include "spinon/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <queue>
#include <string>

#include "spinon/errors.hpp"

namespace spinon {

namespace {

using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
using GL = boost::math::quadrature::gauss<double, 20>;

struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk_panel(const std::function<double(double)>& f, double a, double b) {
    const auto& x = GK::abscissa();
    const auto& wk = GK::weights();
    const auto& wg = boost::math::quadrature::gauss<double, 7>::weights();
    double c = 0.5 * (a + b);
    double h = 0.5 * (b - a);
    double f0 = f(c);
    double k = wk[0] * f0;
    double g = wg[0] * f0;
    for (std::size_t i = 1; i < x.size(); ++i) {
        double fp = f(c + h * x[i]);
        double fm = f(c - h * x[i]);
        k += wk[i] * (fp + fm);
        if (i % 2 == 0) g += wg[i / 2] * (fp + fm);
    }
    return {a, b, k * h, std::abs((k - g) * h)};
}

}  // namespace

QuadResult integrate_adaptive(const std::function<double(double)>& f,
                              std::span<const double> breakpoints,
                              const QuadratureSpec& quad) {
    quad.validate();
    std::priority_queue<Panel> heap;
    double total = 0.0;
    double err = 0.0;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (!(breakpoints[i + 1] > breakpoints[i])) continue;
        Panel p = gk_panel(f, breakpoints[i], breakpoints[i + 1]);
        total += p.value;
        err += p.error;
        heap.push(p);
    }
    int count = static_cast<int>(heap.size());
    while (!heap.empty() && err > std::max(quad.abs_tol, quad.rel_tol * std::abs(total))) {
        if (count >= quad.max_subdivisions)
            throw ConvergenceError("integrate_adaptive: subdivision limit " +
                                   std::to_string(quad.max_subdivisions) + " reached, error " +
                                   std::to_string(err));
        Panel p = heap.top();
        heap.pop();
        double mid = 0.5 * (p.a + p.b);
        if (!(mid > p.a && mid < p.b)) {
            throw ConvergenceError("integrate_adaptive: panel width at machine resolution");
        }
        Panel l = gk_panel(f, p.a, mid);
        Panel r = gk_panel(f, mid, p.b);
        total += l.value + r.value - p.value;
        err += l.error + r.error - p.error;
        heap.push(l);
        heap.push(r);
        ++count;
    }
    // recompute in a fixed order to shed the running-sum rounding
    double v = 0.0;
    double e = 0.0;
    std::vector<Panel> panels;
    panels.reserve(heap.size());
    while (!heap.empty()) {
        panels.push_back(heap.top());
        heap.pop();
    }
    std::sort(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
    for (const Panel& p : panels) {
        v += p.value;
        e += p.error;
    }
    require_finite(v, "integrate_adaptive");
    return {v, e, count};
}

double integrate_gauss_panels(const std::function<double(double)>& f, double a, double b,
                              int panels) {
    if (panels < 1) throw DomainError("integrate_gauss_panels: panels < 1");
    double h = (b - a) / panels;
    double sum = 0.0;
    for (int i = 0; i < panels; ++i) {
        double lo = a + i * h;
        double hi = (i + 1 == panels) ? b : lo + h;
        sum += GL::integrate(f, lo, hi);
    }
    return sum;
}

TanhSinhRule::TanhSinhRule(int nodes_per_axis, double t_max) {
    if (nodes_per_axis < 4 || nodes_per_axis % 4 != 0)
        throw DomainError("TanhSinhRule: nodes per axis must be a positive multiple of 4");
    int m = nodes_per_axis / 2;
    double h = t_max / m;
    for (int k = -m; k <= m; ++k) {
        double t = k * h;
        double s = 0.5 * kPi * std::sinh(t);
        double as = std::abs(s);
        // 1 - tanh|s| = 2 e^{-2|s|} / (1 + e^{-2|s|})
        double e2 = std::exp(-2.0 * as);
        double comp = 2.0 * e2 / (1.0 + e2);
        double ch = std::cosh(s);
        double w = h * 0.5 * kPi * std::cosh(t) / (ch * ch);
        s_.push_back(std::copysign(1.0 - comp, s));
        comp_.push_back(comp);
        w_.push_back(w);
        wc_.push_back(k % 2 == 0 ? 2.0 * w : 0.0);
    }
}

std::vector<TanhSinhRule::Node> TanhSinhRule::map(double a, double b) const {
    std::vector<Node> out;
    out.reserve(s_.size());
    double half = 0.5 * (b - a);
    for (std::size_t i = 0; i < s_.size(); ++i) {
        double lo, hi;
        if (s_[i] < 0.0) {
            lo = half * comp_[i];
            hi = (b - a) - lo;
        } else {
            hi = half * comp_[i];
            lo = (b - a) - hi;
        }
        out.push_back({a + lo, lo, hi, half * w_[i], half * wc_[i]});
    }
    return out;
}

}  // namespace spinon
