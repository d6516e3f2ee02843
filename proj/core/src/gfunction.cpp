#include "spinon/gfunction.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <string>

#include "spinon/errors.hpp"
#include "spinon/specfun.hpp"

namespace spinon {

namespace {

const Complex kI(0.0, 1.0);
const Complex kHalfPiI(0.0, 0.5 * kPi);
const Complex kTwoPiI(0.0, 2.0 * kPi);

constexpr double kDegenerateGap = 1e-8;
constexpr int kLevinStart = 5;
constexpr int kLevinMaxOrder = 14;
constexpr double kScaleFloor = 1e-3;
// round-off amplification allowed for cancelling families and the Levin weights
constexpr double kNoiseGain = 2e4;

void check_rapidities(const std::vector<Rapidity>& betas) {
    for (std::size_t a = 0; a < betas.size(); ++a) {
        require_finite(betas[a].beta, "g-function rapidity");
        for (std::size_t b = a + 1; b < betas.size(); ++b) {
            if (std::abs(betas[a].beta - betas[b].beta) < kDegenerateGap)
                throw DegeneracyError("g-function: rapidities " + std::to_string(a) + " and " +
                                      std::to_string(b) + " coincide, residue sites merge");
        }
    }
}

// Residues of the Gamma and sinh part of one contour integrand at
// beta_j + i pi/2 - 2 pi i m. Shared by every contour variable and every
// configuration; only the linear prefactors and couplings differ. Rows are
// generated on demand up to `depth`.
class SiteTable {
public:
    int n = 0;
    int depth = 0;
    std::vector<double> betas;

    SiteTable() = default;
    SiteTable(const std::vector<Rapidity>& bs, int max_depth) : n(static_cast<int>(bs.size())), depth(max_depth) {
        for (const Rapidity& b : bs) betas.push_back(b.beta);
        z1_.resize(n * n);
        z2_.resize(n * n);
        for (int j = 0; j < n; ++j) {
            Complex a0 = betas[j] + kHalfPiI;
            Complex lg = 0.0;
            for (int jj = 0; jj < n; ++jj) {
                Complex s = (a0 - betas[jj]) / kTwoPiI;
                z1_[j * n + jj] = -0.25 + s;
                z2_[j * n + jj] = -0.25 - s;
                if (jj != j) lg += log_gamma(z1_[j * n + jj]);
                lg += log_gamma(z2_[j * n + jj]);
            }
            Complex common = kTwoPiI * std::exp(lg) * std::sinh(a0);
            require_finite(common, "g-function residue seed");
            a0_.push_back(a0);
            common_.push_back(common);
        }
    }

    Complex at(int m, int j) { return row(m)[2 * j]; }
    Complex w(int m, int j) { return row(m)[2 * j + 1]; }

private:
    std::vector<Complex> a0_, common_, z1_, z2_;
    std::vector<Complex> rows_;  // [m][j] -> (site, weight)

    const Complex* row(int m) {
        while (static_cast<int>(rows_.size()) <= 2 * n * m) extend();
        return rows_.data() + 2 * n * m;
    }

    void extend() {
        int m = static_cast<int>(rows_.size()) / (2 * n);
        for (int j = 0; j < n; ++j) {
            // sinh has period 2 pi i
            rows_.push_back(a0_[j] - kTwoPiI * static_cast<double>(m));
            rows_.push_back(common_[j]);
            Complex f = -1.0 / (m + 1.0);
            for (int jj = 0; jj < n; ++jj) {
                Complex& z1 = z1_[j * n + jj];
                Complex& z2 = z2_[j * n + jj];
                if (jj != j) {
                    f /= z1 - 1.0;
                    z1 -= 1.0;
                }
                f *= z2;
                z2 += 1.0;
            }
            common_[j] *= f;
        }
    }
};

Complex prefactor(SiteTable& t, int ell, Complex a) {
    Complex p = 1.0;
    for (int j = 0; j < ell; ++j) p *= a - t.betas[j] + kHalfPiI;
    for (int j = ell + 1; j < t.n; ++j) p *= t.betas[j] - a + kHalfPiI;
    return p;
}

Complex coupling(Complex a_lo, Complex a_hi) {
    Complex d = a_lo - a_hi;
    return (d + Complex(0.0, kPi)) * std::sinh(d);
}

struct Term {
    Complex value;
    double magnitude;  // sum of |contributions| before cancellation
};

// Sum of term(m), m = 0, 1, ..., accelerated as spec.acceleration selects.
GResult accelerate(const std::function<Term(int)>& term, const ResidueSpec& spec) {
    std::vector<Complex> a, s;
    GResult r;
    Complex prev = 0.0;
    bool have_prev = false;
    int small = 0;
    // series that cancel to ~0 are judged against the size of their partial sums
    double scale = 0.0;
    double raw = 0.0;
    for (int m = 0; m < spec.m_max; ++m) {
        Term t = term(m);
        raw = std::max(raw, t.magnitude);
        a.push_back(t.value);
        s.push_back((m ? s.back() : Complex(0.0)) + a.back());
        scale = std::max(scale, std::abs(s.back()));
        Complex est = s.back();
        bool ready = true;
        if (spec.acceleration == ResidueSpec::Acceleration::levin) {
            int k = m - kLevinStart;
            if (k < 2) {
                ready = false;
            } else {
                int order = std::min(k, kLevinMaxOrder);
                int start = m - order;
                Complex l = levin_u(s.data() + start, a.data() + start, order);
                if (std::isfinite(l.real()) && std::isfinite(l.imag())) est = l;
            }
        }
        if (!ready) continue;
        if (have_prev) {
            double delta = std::abs(est - prev);
            double noise = kNoiseGain * std::numeric_limits<double>::epsilon() * raw;
            if (delta <= std::max(spec.tail_tol * std::max(std::abs(est), kScaleFloor * scale), noise)) {
                ++small;
            } else {
                small = 0;
            }
            if (small >= spec.consecutive_small) {
                r.value = est;
                r.est_error = std::max(delta, noise);
                r.depth = m + 1;
                int onset = m;
                while (onset > 0 && std::abs(a[onset]) < std::abs(a[onset - 1])) --onset;
                r.onset_depth = onset;
                return r;
            }
        }
        prev = est;
        have_prev = true;
    }
    throw ConvergenceError("g-function: residue series not converged within depth " +
                           std::to_string(spec.m_max));
}

GResult nested_sum(SiteTable& t, const std::vector<int>& ells, std::size_t level,
                   std::vector<Complex>& fixed, const ResidueSpec& spec) {
    int ell = ells[level];
    GResult deepest;
    auto term = [&](int m) {
        if (m >= t.depth) throw ConvergenceError("g-function: site table exhausted");
        Complex sum = 0.0;
        double mag = 0.0;
        for (int j = 0; j < t.n; ++j) {
            Complex a = t.at(m, j);
            Complex v = t.w(m, j) * prefactor(t, ell, a);
            if (v == Complex(0.0)) continue;
            for (Complex lo : fixed) v *= coupling(lo, a);
            if (level + 1 < ells.size()) {
                fixed.push_back(a);
                GResult inner = nested_sum(t, ells, level + 1, fixed, spec);
                fixed.pop_back();
                v *= inner.value;
                deepest.depth = std::max(deepest.depth, inner.depth);
            }
            sum += v;
            mag += std::abs(v);
        }
        return Term{sum, mag};
    };
    GResult r = accelerate(term, spec);
    r.depth = std::max(r.depth, deepest.depth);
    return r;
}

GResult evaluate(SiteTable& t, const LSet& ls, const ResidueSpec& spec) {
    GResult r;
    if (!ls.selected) {
        r.value = 0.0;
        return r;
    }
    if (ls.indices.empty()) {
        r.value = 1.0;
        return r;
    }
    std::vector<Complex> fixed;
    GResult g = nested_sum(t, ls.indices, 0, fixed, spec);
    require_finite(g.value, "g_value");
    return g;
}

}  // namespace

bool SpinConfig::selected() const { return std::accumulate(eps.begin(), eps.end(), 0) == -2; }

void SpinConfig::validate() const {
    if (eps.size() < 2) throw DomainError("SpinConfig: length must be at least 2");
    for (int e : eps)
        if (e != 1 && e != -1) throw DomainError("SpinConfig: entries must be +1 or -1");
}

LSet l_set(const SpinConfig& cfg) {
    cfg.validate();
    if (cfg.size() % 2 != 0) throw DomainError("l_set: configuration length must be even");
    LSet ls;
    ls.selected = cfg.selected();
    if (!ls.selected) return ls;
    for (int j = 0; j < cfg.size(); ++j)
        if (cfg.eps[j] == 1) ls.indices.push_back(j);
    return ls;
}

std::vector<SpinConfig> admissible_configs(int n) {
    if (n < 2 || n % 2 != 0 || n > 30) throw DomainError("admissible_configs: n must be even, 2..30");
    std::vector<SpinConfig> out;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        SpinConfig c;
        // most significant position first so that the order is lexicographic in eps
        for (int j = 0; j < n; ++j) c.eps.push_back((mask >> (n - 1 - j)) & 1u ? 1 : -1);
        if (c.selected()) out.push_back(std::move(c));
    }
    return out;
}

std::vector<PoleCandidate> enclosed_candidates(const std::vector<Rapidity>& betas, int m_max) {
    std::vector<PoleCandidate> out;
    for (int j = 0; j < static_cast<int>(betas.size()); ++j) {
        out.push_back({j, 0, betas[j].beta + kHalfPiI, true});
        for (int m = 1; m <= m_max; ++m) {
            // beta_j - (2m+1) i pi/2 = beta_j + i pi/2 - 2 pi i (m+1)/2
            out.push_back({j, m, Complex(betas[j].beta, -(2.0 * m + 1.0) * 0.5 * kPi), m % 2 == 1});
        }
    }
    return out;
}

std::vector<PoleSite> genuine_poles(const std::vector<Rapidity>& betas, int ell, int depth_max) {
    check_rapidities(betas);
    std::vector<PoleSite> out;
    for (int m = 0; m <= depth_max; ++m)
        for (int j = 0; j < static_cast<int>(betas.size()); ++j)
            out.push_back({ell, j, m, betas[j].beta + kHalfPiI - kTwoPiI * static_cast<double>(m), 1});
    return out;
}

void ResidueSpec::validate() const {
    if (m_max < 1) throw DomainError("ResidueSpec: m_max < 1");
    if (!(tail_tol > 0.0)) throw DomainError("ResidueSpec: tail_tol must be positive");
    if (consecutive_small < 2) throw DomainError("ResidueSpec: consecutive_small < 2");
}

Complex levin_u(const Complex* partial, const Complex* terms, int k) {
    Complex num = 0.0;
    Complex den = 0.0;
    double binom = 1.0;
    for (int j = 0; j <= k; ++j) {
        if (terms[j] == Complex(0.0)) return partial[k];
        double c = ((j % 2) ? -1.0 : 1.0) * binom *
                   std::pow((1.0 + j) / (1.0 + k), static_cast<double>(k - 1));
        Complex omega = (1.0 + j) * terms[j];
        num += c * partial[j] / omega;
        den += c / omega;
        binom = binom * (k - j) / (j + 1.0);
    }
    if (den == Complex(0.0)) return partial[k];
    return num / den;
}

GResult g_value_detailed(const SpinConfig& cfg, const std::vector<Rapidity>& betas,
                         const ResidueSpec& spec) {
    spec.validate();
    LSet ls = l_set(cfg);
    if (static_cast<int>(betas.size()) != cfg.size())
        throw DomainError("g_value: rapidity count differs from configuration length");
    if (!ls.selected || ls.indices.empty()) {
        SiteTable empty;
        return evaluate(empty, ls, spec);
    }
    check_rapidities(betas);
    SiteTable t(betas, spec.m_max);
    return evaluate(t, ls, spec);
}

Complex g_value(const SpinConfig& cfg, const std::vector<Rapidity>& betas, const ResidueSpec& spec) {
    return g_value_detailed(cfg, betas, spec).value;
}

double g_sum_sq(int n, const std::vector<Rapidity>& betas, const ResidueSpec& spec) {
    spec.validate();
    if (n < 2 || n % 2 != 0) throw DomainError("g_sum_sq: n must be even and >= 2");
    if (static_cast<int>(betas.size()) != n) throw DomainError("g_sum_sq: need n rapidities");
    if (n == 2) return 1.0;
    check_rapidities(betas);
    SiteTable t(betas, spec.m_max);
    double total = 0.0;
    for (const SpinConfig& c : admissible_configs(n)) total += std::norm(evaluate(t, l_set(c), spec).value);
    return total;
}

}  // namespace spinon
