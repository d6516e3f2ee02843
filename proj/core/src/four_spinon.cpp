#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "spinon/dsf.hpp"
#include "spinon/errors.hpp"
#include "spinon/quadrature.hpp"

namespace spinon {

namespace {

struct Edges {
    double lo34, hi34, lo12, hi12;
};

Edges edges(double w, double k, double Q) {
    double K = k - Q;
    return {kPi * std::abs(std::sin(Q)), 2.0 * kPi * std::sin(0.5 * Q),
            w - 2.0 * kPi * std::abs(std::sin(0.5 * K)), w - kPi * std::abs(std::sin(K))};
}

double cached_a_half() {
    static const double v = a_half_constant();
    return v;
}

bool interior(double p) { return p > -kPi && p < 0.0; }

double f_product(const std::array<double, 4>& b) {
    const AMinusTable& table = AMinusTable::shared();
    double f = 1.0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) f *= table(b[j] - b[i]);
    return f;
}

double weight(const std::array<double, 4>& b, const ResidueSpec& residue) {
    double f = f_product(b);
    if (f == 0.0) return 0.0;
    try {
        return f * g_sum_sq(4, {{b[0]}, {b[1]}, {b[2]}, {b[3]}}, residue);
    } catch (const DegeneracyError&) {
        // g stays finite as two rapidities merge while f carries |A_-(0)|^2 = 0
        return 0.0;
    }
}

}  // namespace

FourSpinonSlice four_spinon_h_interval(double w, double k, double q_lo, double q_hi) {
    FourSpinonSlice s;
    s.h_max = 0.5 * std::min(q_lo, q_hi);
    s.hi34 = 2.0 * kPi * std::sin(s.h_max);
    double Q = q_lo <= q_hi ? q_lo : 2.0 * kPi - q_hi;
    double K = k - Q;
    s.lo12 = w - 2.0 * kPi * std::abs(std::sin(0.5 * K));
    s.hi12 = w - kPi * std::abs(std::sin(K));
    if (!(s.hi34 > 0.0)) return s;
    double lo34 = s.hi34 * std::cos(s.h_max);
    if (s.lo12 <= lo34)
        s.h_hi = s.h_max;
    else
        s.h_hi = s.lo12 < s.hi34 ? std::acos(s.lo12 / s.hi34) : 0.0;
    if (s.hi12 >= s.hi34)
        s.h_lo = 0.0;
    else
        s.h_lo = s.hi12 > lo34 ? std::acos(s.hi12 / s.hi34) : s.h_max;
    return s;
}

std::pair<double, double> four_spinon_w_interval(double w, double k, double Q) {
    Edges e = edges(w, k, Q);
    return {std::max(e.lo34, e.lo12), std::min(e.hi34, e.hi12)};
}

std::vector<std::pair<double, double>> four_spinon_q_panels(double w, double k) {
    const double two_pi = 2.0 * kPi;
    std::vector<double> br = {0.0, two_pi};
    for (double c : {kPi, k, k - kPi, k + kPi, k - two_pi, k + two_pi})
        if (c > 0.0 && c < two_pi) br.push_back(c);
    auto diffs = [&](double Q) {
        Edges e = edges(w, k, Q);
        return std::array<double, 4>{e.lo34 - e.lo12, e.hi34 - e.hi12, e.lo34 - e.hi12,
                                     e.lo12 - e.hi34};
    };
    constexpr int kSamples = 4096;
    std::array<double, 4> prev = diffs(0.0);
    double qprev = 0.0;
    for (int i = 1; i <= kSamples; ++i) {
        double q = two_pi * i / kSamples;
        std::array<double, 4> cur = diffs(q);
        for (int d = 0; d < 4; ++d) {
            if (cur[d] == 0.0) {
                br.push_back(q);
            } else if (prev[d] * cur[d] < 0.0) {
                double lo = qprev, hi = q;
                for (int it = 0; it < 80 && hi - lo > 1e-15; ++it) {
                    double mid = 0.5 * (lo + hi);
                    if (diffs(mid)[d] * prev[d] > 0.0)
                        lo = mid;
                    else
                        hi = mid;
                }
                br.push_back(0.5 * (lo + hi));
            }
        }
        prev = cur;
        qprev = q;
    }
    std::sort(br.begin(), br.end());
    std::vector<std::pair<double, double>> panels;
    for (std::size_t i = 0; i + 1 < br.size(); ++i) {
        double a = br[i], b = br[i + 1];
        if (b - a < 1e-12) continue;
        auto iv = four_spinon_w_interval(w, k, 0.5 * (a + b));
        if (iv.second > iv.first) panels.emplace_back(a, b);
    }
    return panels;
}

double four_spinon_integrand(double w, double k, const FourSpinonNode& node,
                             const ResidueSpec& residue, bool reduced) {
    if (!(node.j12 > 0.0) || !(node.r > 0.0) || !(node.h > 0.0)) return 0.0;
    double h_max = 0.5 * std::min(node.q_lo, node.q_hi);
    double Q = node.q_lo <= node.q_hi ? node.q_lo : 2.0 * kPi - node.q_hi;
    double gap = 0.5 * std::abs(node.q_hi - node.q_lo);
    double p3_zero = node.q_lo <= node.q_hi ? node.r : gap + node.r;
    double p4_pi = node.q_lo <= node.q_hi ? gap + node.r : node.r;
    double b3 = rapidity_of_offsets(0.5 * node.q_hi + node.h, p3_zero).beta;
    double b4 = rapidity_of_offsets(p4_pi, 0.5 * node.q_lo + node.h).beta;
    double W = w - 2.0 * kPi * std::sin(h_max) * std::cos(node.h);
    double K = k - Q;
    PairSolutions ps = solve_pairs(W, K);
    if (ps.pairs.empty()) return 0.0;
    double p1 = ps.pairs.front().p1.p;
    double p2 = ps.pairs.front().p2.p;
    if (!interior(p1) || !interior(p2)) return 0.0;
    double b1 = rapidity_of_momentum({p1}).beta;
    double b2 = rapidity_of_momentum({p2}).beta;
    if (reduced) {
        double direct = weight({b1, b2, b3, b4}, residue);
        double reflected = weight({-b1, -b2, b3, b4}, residue);
        return 4.0 * (direct + reflected) / node.j12;
    }
    double sum = 0.0;
    for (auto pre : {std::array<double, 2>{b3, b4}, std::array<double, 2>{b4, b3}}) {
        for (const MomentumPair& pr : four_pair_set(W, K).pairs) {
            double c1 = rapidity_of_momentum(pr.p1).beta;
            double c2 = rapidity_of_momentum(pr.p2).beta;
            sum += weight({c1, c2, pre[0], pre[1]}, residue);
        }
    }
    return sum / node.j12;
}

namespace {

// Corners approached along the outer rule need offsets far below the default
// tanh-sinh reach; pieces touching Q = 0 or 2 pi use a longer t range.
constexpr double kCornerTmax = 3.6;
constexpr double kTwoPi = 2.0 * kPi;

struct Piece {
    double a, b, weight;
};

// The integrand is symmetric under exchanging the (12) and (34) pairs, so the
// slab |k - Q| < delta carries the same mass as Q in [0, delta) U (2 pi - delta, 2 pi].
// The slab is dropped and the end slabs are counted twice.
std::vector<Piece> pieces(const std::vector<std::pair<double, double>>& panels, double k) {
    std::vector<Piece> out;
    std::vector<double> br = {0.0, kTwoPi, k};
    for (auto [a, b] : panels) {
        br.push_back(a);
        br.push_back(b);
    }
    double delta = 0.25 * std::min(k, kTwoPi - k);
    for (double x : br) {
        if (std::abs(x - k) > 1e-12) delta = std::min(delta, 0.5 * std::abs(x - k));
        if (x > 1e-12) delta = std::min(delta, 0.5 * x);
        if (kTwoPi - x > 1e-12) delta = std::min(delta, 0.5 * (kTwoPi - x));
    }
    if (!(delta > 1e-6)) {
        for (auto [a, b] : panels) out.push_back({a, b, 1.0});
        return out;
    }
    auto emit = [&](double a, double b) {
        if (!(b > a)) return;
        std::vector<double> cuts = {a};
        for (double c : {delta, kTwoPi - delta})
            if (c > a && c < b) cuts.push_back(c);
        cuts.push_back(b);
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            double lo = cuts[i], hi = cuts[i + 1];
            bool end_slab = hi <= delta || lo >= kTwoPi - delta;
            out.push_back({lo, hi, end_slab ? 2.0 : 1.0});
        }
    };
    for (auto [a, b] : panels) {
        emit(a, std::min(b, k - delta));
        emit(std::max(a, k + delta), b);
    }
    return out;
}

struct EdgeSample {
    double offset, value;
};

// Mass below the innermost resolved node, from a local power law G ~ d^(c-1).
double end_tail(std::vector<EdgeSample> s) {
    std::sort(s.begin(), s.end(), [](const EdgeSample& x, const EdgeSample& y) { return x.offset < y.offset; });
    std::size_t i = 0;
    while (i < s.size() && s[i].value == 0.0) ++i;
    if (i + 1 >= s.size()) return 0.0;
    double g1 = std::abs(s[i].value), g2 = std::abs(s[i + 1].value);
    double d1 = s[i].offset, d2 = s[i + 1].offset;
    if (!(g2 > 0.0) || !(d2 > d1) || !(d1 > 0.0)) return 0.0;
    double c = 1.0 + std::log(g1 / g2) / std::log(d1 / d2);
    c = std::max(c, 0.05);
    return g1 * d1 / c;
}

struct SliceEval {
    double w, k;
    const ResidueSpec& residue;
    double q_lo, q_hi;
    const FourSpinonSlice& s;

    double operator()(double from_lo, double from_hi) const {
        double h = s.h_lo + from_lo;
        if (from_hi < from_lo) h = s.h_hi - from_hi;
        double r = (s.h_max - s.h_hi) + from_hi;
        double wp = s.hi34 * std::cos(h);
        double d12 = s.h_hi < s.h_max ? 2.0 * s.hi34 * std::sin(0.5 * (h + s.h_hi)) * std::sin(0.5 * from_hi)
                                      : wp - s.lo12;
        double sum12 = (w - s.lo12) + (w - wp);
        FourSpinonNode node{q_lo, q_hi, h, r, std::sqrt(std::max(d12, 0.0) * sum12)};
        return four_spinon_integrand(w, k, node, residue, true);
    }
};

}  // namespace

DsfPoint s4_pm(double w, double k, const GridSpec& grid) {
    grid.validate();
    DsfPoint pt{w, k, 4, 0.0, 0.0};
    if (!(k >= 0.0 && k <= kTwoPi)) throw DomainError("s4_pm: k must lie in [0, 2 pi]");
    if (!(w > 0.0 && w < 4.0 * kPi)) return pt;
    TanhSinhRule rule(grid.outer_nodes);
    TanhSinhRule corner_rule(grid.outer_nodes, kCornerTmax);
    double fine = 0.0;
    double coarse = 0.0;
    double tail = 0.0;
    for (const Piece& pc : pieces(four_spinon_q_panels(w, k), k)) {
        bool corner = pc.a == 0.0 || pc.b == kTwoPi;
        std::vector<EdgeSample> lower, upper;
        for (const TanhSinhRule::Node& qn : (corner ? corner_rule : rule).map(pc.a, pc.b)) {
            auto& side = qn.from_lo < qn.from_hi ? lower : upper;
            double offset = std::min(qn.from_lo, qn.from_hi);
            double q_lo = pc.a == 0.0 ? qn.from_lo : qn.x;
            double q_hi = pc.b == kTwoPi ? qn.from_hi : kTwoPi - qn.x;
            FourSpinonSlice s = four_spinon_h_interval(w, k, q_lo, q_hi);
            if (s.empty()) {
                side.push_back({offset, 0.0});
                continue;
            }
            SliceEval eval{w, k, grid.residue, q_lo, q_hi, s};
            double inner_fine = 0.0;
            double inner_coarse = 0.0;
            for (const TanhSinhRule::Node& hn : rule.map(s.h_lo, s.h_hi)) {
                double v = eval(hn.from_lo, hn.from_hi);
                inner_fine += hn.weight * v;
                inner_coarse += hn.coarse_weight * v;
            }
            fine += pc.weight * qn.weight * inner_fine;
            coarse += pc.weight * qn.coarse_weight * inner_coarse;
            side.push_back({offset, pc.weight * inner_fine});
        }
        tail += end_tail(std::move(lower)) + end_tail(std::move(upper));
    }
    double scale = 2.0 * c_n(4, cached_a_half());
    pt.value = scale * fine;
    pt.est_error = scale * (std::abs(fine - coarse) + tail);
    require_finite(pt.value, "s4_pm");
    return pt;
}

}  // namespace spinon
