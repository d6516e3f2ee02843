#include <benchmark/benchmark.h>

#include <algorithm>
#include <cmath>

#include "spinon/aminus.hpp"
#include "spinon/dsf.hpp"
#include "spinon/gfunction.hpp"
#include "spinon/specfun.hpp"

using namespace spinon;

static void BM_LogGamma(benchmark::State& st) {
    Complex z(0.3, 1.7);
    for (auto _ : st) {
        benchmark::DoNotOptimize(log_gamma(z));
        z += Complex(1e-9, 0.0);
    }
}
BENCHMARK(BM_LogGamma);

static void BM_AminusDirect(benchmark::State& st) {
    double x = 1.3;
    for (auto _ : st) benchmark::DoNotOptimize(a_minus_sq_real(x));
}
BENCHMARK(BM_AminusDirect);

static void BM_AminusTable(benchmark::State& st) {
    const AMinusTable& t = AMinusTable::shared();
    double x = 1.3;
    for (auto _ : st) benchmark::DoNotOptimize(t(x));
}
BENCHMARK(BM_AminusTable);

static void BM_GSumSqFour(benchmark::State& st) {
    std::vector<Rapidity> b{{0.3}, {-0.2}, {0.9}, {-1.1}};
    for (auto _ : st) benchmark::DoNotOptimize(g_sum_sq(4, b));
}
BENCHMARK(BM_GSumSqFour)->Unit(benchmark::kMicrosecond);

static void BM_S2(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(s2_pm(3.0, 2.0));
}
BENCHMARK(BM_S2)->Unit(benchmark::kMicrosecond);

static void BM_S4Node(benchmark::State& st) {
    AMinusTable::shared();
    const double w = 4.0, k = kPi;
    auto panels = four_spinon_q_panels(w, k);
    auto widest = *std::max_element(panels.begin(), panels.end(),
                                    [](auto a, auto b) { return a.second - a.first < b.second - b.first; });
    const double Q = 0.5 * (widest.first + widest.second);
    FourSpinonSlice s = four_spinon_h_interval(w, k, Q, 2.0 * kPi - Q);
    double h = 0.5 * (s.h_lo + s.h_hi);
    double wp = s.hi34 * std::cos(h);
    FourSpinonNode node{Q, 2.0 * kPi - Q, h, s.h_max - h, std::sqrt((wp - s.lo12) * ((w - s.lo12) + (w - wp)))};
    for (auto _ : st) benchmark::DoNotOptimize(four_spinon_integrand(w, k, node, {}));
}
BENCHMARK(BM_S4Node)->Unit(benchmark::kMicrosecond);

static void BM_S4Point(benchmark::State& st) {
    AMinusTable::shared();
    GridSpec g;
    g.outer_nodes = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(s4_pm(4.0, kPi, g));
}
BENCHMARK(BM_S4Point)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK_MAIN();
