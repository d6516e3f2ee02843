#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "spinon/errors.hpp"
#include "spinon/gfunction.hpp"

using namespace spinon;

namespace {

std::vector<Rapidity> rap(std::initializer_list<double> b) {
    std::vector<Rapidity> out;
    for (double v : b) out.push_back({v});
    return out;
}

SpinConfig up_at(int ell) {
    SpinConfig c{{-1, -1, -1, -1}};
    c.eps[ell] = 1;
    return c;
}

}  // namespace

TEST(Configs, AdmissibleAtFour) {
    auto cs = admissible_configs(4);
    ASSERT_EQ(cs.size(), 4u);
    EXPECT_EQ(cs[0].eps, (std::vector<int>{-1, -1, -1, 1}));
    EXPECT_EQ(cs[3].eps, (std::vector<int>{1, -1, -1, -1}));
    EXPECT_EQ(admissible_configs(6).size(), 15u);
    EXPECT_EQ(admissible_configs(2).size(), 1u);
}

TEST(Configs, LSet) {
    LSet a = l_set({{-1, 1, -1, -1}});
    EXPECT_TRUE(a.selected);
    EXPECT_EQ(a.indices, (std::vector<int>{1}));
    LSet b = l_set({{1, 1, -1, -1}});
    EXPECT_FALSE(b.selected);
    EXPECT_TRUE(b.indices.empty());
    EXPECT_THROW(l_set({{1, 0, -1, -1}}), DomainError);
}

TEST(Configs, UnselectedGivesZero) {
    EXPECT_EQ(g_value({{1, 1, -1, -1}}, rap({0.1, 0.2, 0.3, 0.4})), Complex(0.0));
}

TEST(Poles, Candidates) {
    auto c = enclosed_candidates(rap({0.5, -1.0}), 3);
    ASSERT_EQ(c.size(), 8u);
    EXPECT_TRUE(c[0].genuine);
    EXPECT_NEAR(c[0].location.imag(), kPi / 2.0, 1e-15);
    EXPECT_TRUE(c[1].genuine);
    EXPECT_FALSE(c[2].genuine);
    EXPECT_NEAR(c[1].location.imag(), -1.5 * kPi, 1e-15);
    auto g = genuine_poles(rap({0.5, -1.0}), 0, 2);
    ASSERT_EQ(g.size(), 6u);
    EXPECT_NEAR(g[5].location.imag(), kPi / 2.0 - 4.0 * kPi, 1e-14);
    EXPECT_THROW(genuine_poles(rap({0.5, 0.5 + 1e-10}), 0, 2), DegeneracyError);
}

TEST(GValue, TwoSpinonIsExactlyOne) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-8.0, 8.0);
    for (int i = 0; i < 50; ++i) {
        auto b = rap({u(rng), u(rng)});
        EXPECT_EQ(g_value({{-1, -1}}, b), Complex(1.0));
        EXPECT_EQ(g_sum_sq(2, b), 1.0);
    }
}

TEST(GValue, FrozenFourSpinonValues) {
    // per ell = 0..3, from mp_fixtures.py
    const Complex a[4] = {{15975.368301008, 1550.88210377981},
                          {-373.532434935306, 1470.52942436863},
                          {-1508.80773315028, 4554.04959383165},
                          {14840.093002793, 4634.40227324283}};
    const Complex b[4] = {{-383360.864437853, -127286.97627129},
                          {-19381.2479575864, -124450.181955291},
                          {47045.1751756995, 198380.006557352},
                          {-316934.441304567, 195543.212241353}};
    for (int ell = 0; ell < 4; ++ell) {
        EXPECT_LT(std::abs(g_value(up_at(ell), rap({0.3, -0.2, 0.9, -1.1})) - a[ell]) / std::abs(a[ell]), 1e-8);
        EXPECT_LT(std::abs(g_value(up_at(ell), rap({2.0, -1.5, 0.4, 3.1})) - b[ell]) / std::abs(b[ell]), 1e-8);
    }
    EXPECT_NEAR(g_sum_sq(4, rap({0.3, -0.2, 0.9, -1.1})) / 524641524.1610368617, 1.0, 1e-8);
    EXPECT_NEAR(g_sum_sq(4, rap({2.0, -1.5, 0.4, 3.1})) / 359283470719.63696247, 1.0, 1e-8);
}

TEST(GValue, ContourOracle) {
    std::vector<double> b{-0.7, 0.15, 1.05, 2.2};
    for (int ell = 0; ell < 4; ++ell) {
        Complex ref = oracle::g_contour(b, ell);
        EXPECT_LT(std::abs(g_value(up_at(ell), rap({b[0], b[1], b[2], b[3]})) - ref) / std::abs(ref), 1e-7);
    }
}

TEST(GValue, SumSqInvariances) {
    double a = g_sum_sq(4, rap({0.3, -0.2, 0.9, -1.1}));
    EXPECT_NEAR(g_sum_sq(4, rap({0.9, -1.1, -0.2, 0.3})) / a, 1.0, 1e-8);
    EXPECT_NEAR(g_sum_sq(4, rap({-0.3, 0.2, -0.9, 1.1})) / a, 1.0, 1e-8);
}

TEST(GValue, DetailedReportsDepthAndError) {
    GResult r = g_value_detailed(up_at(2), rap({0.3, -0.2, 0.9, -1.1}));
    EXPECT_GT(r.depth, 0);
    EXPECT_LE(r.depth, ResidueSpec{}.m_max);
    EXPECT_LT(r.est_error, 1e-6 * std::abs(r.value));
}

TEST(GValue, Errors) {
    EXPECT_THROW(g_value(up_at(0), rap({0.1, 0.2, 0.3})), DomainError);
    EXPECT_THROW(g_sum_sq(3, rap({0.1, 0.2, 0.3})), DomainError);
    EXPECT_THROW(g_value(up_at(0), rap({0.1, 0.1, 0.3, 0.4})), DegeneracyError);
    ResidueSpec bad;
    bad.m_max = 0;
    EXPECT_THROW(bad.validate(), DomainError);
    ResidueSpec shallow;
    shallow.m_max = 2;
    shallow.tail_tol = 1e-14;
    EXPECT_THROW(g_value(up_at(0), rap({0.3, -0.2, 0.9, -1.1}), shallow), ConvergenceError);
}

TEST(Levin, GeometricSeriesIsExact) {
    Complex partial[8], terms[8];
    Complex s = 0.0, t = 1.0;
    for (int i = 0; i < 8; ++i) {
        terms[i] = t;
        s += t;
        partial[i] = s;
        t *= Complex(-0.9, 0.0);
    }
    EXPECT_NEAR(std::abs(levin_u(partial, terms, 7) - 1.0 / 1.9), 0.0, 1e-12);
}

TEST(Levin, AlternatingHarmonic) {
    Complex partial[12], terms[12];
    Complex s = 0.0;
    for (int i = 0; i < 12; ++i) {
        terms[i] = (i % 2 ? -1.0 : 1.0) / (i + 1.0);
        s += terms[i];
        partial[i] = s;
    }
    EXPECT_NEAR(levin_u(partial, terms, 11).real(), std::log(2.0), 1e-10);
}
