#include <gtest/gtest.h>

#include <cmath>

#include "spinon/dsf.hpp"
#include "spinon/errors.hpp"

using namespace spinon;

TEST(Constants, NormalisationPrefactors) {
    double ah = a_half_constant();
    EXPECT_NEAR(ah, 0.57446688117670018466, 1e-12);
    EXPECT_NEAR(c_n(2, ah), 0.125, 1e-15);
    EXPECT_NEAR(c_n(4, ah) / 5.3584851814542852608e-18, 1.0, 1e-12);
    EXPECT_THROW(c_n(3, ah), DomainError);
}

TEST(TwoSpinon, FrozenCentreValue) {
    EXPECT_NEAR(s2_pm(kPi, kPi) / 0.54976073048955999751, 1.0, 1e-10);
}

TEST(TwoSpinon, SupportAndSign) {
    for (double k = 0.15; k < 2.0 * kPi; k += 0.41) {
        Boundaries b = boundaries(k);
        EXPECT_EQ(s2_pm(b.w_l - 1e-3, k), 0.0);
        EXPECT_EQ(s2_pm(b.w_u + 1e-3, k), 0.0);
        for (double t = 0.05; t < 1.0; t += 0.1) EXPECT_GT(s2_pm(b.w_l + t * (b.w_u - b.w_l), k), 0.0);
    }
}

TEST(TwoSpinon, Reflection) {
    for (double k : {0.3, 1.1, 2.5}) {
        Boundaries b = boundaries(k);
        for (double t : {0.1, 0.5, 0.9}) {
            double w = b.w_l + t * (b.w_u - b.w_l);
            double v = s2_pm(w, k);
            EXPECT_NEAR(s2_pm(w, 2.0 * kPi - k) / v, 1.0, 1e-12);
        }
    }
}

TEST(TwoSpinon, UpperEdgeVanishes) {
    for (double k : {kPi / 3.0, kPi / 2.0, kPi}) {
        double wu = boundaries(k).w_u;
        double a = s2_pm(wu - 1e-2, k), b = s2_pm(wu - 1e-3, k), c = s2_pm(wu - 1e-4, k);
        EXPECT_GT(a, b) << k;
        EXPECT_GT(b, c) << k;
        EXPECT_GE(c, 0.0);
    }
}

TEST(TwoSpinon, LowerEdgeDiverges) {
    for (double k : {0.7, kPi / 2.0, 2.4}) {
        double wl = boundaries(k).w_l;
        double a = s2_pm(wl + 1e-2, k), b = s2_pm(wl + 1e-3, k), c = s2_pm(wl + 1e-4, k);
        EXPECT_LT(a, b) << k;
        EXPECT_LT(b, c) << k;
    }
}

TEST(TwoSpinon, GenericPipelineEqualsClosedForm) {
    for (double k : {0.4, 1.9, kPi, 4.4}) {
        Boundaries b = boundaries(k);
        for (double t : {0.05, 0.5, 0.95}) {
            double w = b.w_l + t * (b.w_u - b.w_l);
            EXPECT_NEAR(s2_pm_generic(w, k) / s2_pm(w, k), 1.0, 1e-9);
        }
    }
}

TEST(TwoSpinon, TableSourceAgrees) {
    for (double k : {0.9, 2.0}) {
        Boundaries b = boundaries(k);
        double w = 0.5 * (b.w_l + b.w_u);
        EXPECT_NEAR(s2_pm(w, k, {}, AminusSource::table) / s2_pm(w, k), 1.0, 1e-7);
    }
}

TEST(Components, IsotropicAndDoubled) {
    GridSpec g;
    for (double k : {0.8, kPi}) {
        double w = 0.5 * (boundaries(k).w_l + boundaries(k).w_u);
        double x = s_component(Axis::x, 2, w, k, g);
        EXPECT_EQ(x, s_component(Axis::y, 2, w, k, g));
        EXPECT_EQ(x, s_component(Axis::z, 2, w, k, g));
        EXPECT_NEAR(x / s2_pm(w, k, g.quad, AminusSource::table), 2.0, 1e-15);
    }
    EXPECT_EQ(s_component(Axis::z, 2, 7.0, 2.0, g), 0.0);
    EXPECT_THROW(s_component(Axis::z, 6, 1.0, 1.0, g), DomainError);
}

TEST(Grid, Validation) {
    GridSpec g;
    g.outer_nodes = 30;
    EXPECT_THROW(g.validate(), DomainError);
    g.outer_nodes = 48;
    g.k_points = 1;
    EXPECT_THROW(g.validate(), DomainError);
}
