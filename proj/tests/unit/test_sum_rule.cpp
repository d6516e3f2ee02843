#include <gtest/gtest.h>

#include <cmath>

#include "spinon/dsf.hpp"
#include "spinon/errors.hpp"

using namespace spinon;

namespace {

SumRuleReport at(int n) {
    GridSpec g;
    g.k_points = g.w_points = n;
    return sum_rule_fraction(g);
}

}  // namespace

TEST(SumRule, FrozenFraction) {
    SumRuleReport r = at(64);
    EXPECT_NEAR(r.fraction, 0.72891327479287038, 1e-12);
    EXPECT_NEAR(r.integrated_intensity, r.fraction * 4.0 * kPi * kPi, 1e-12);
    EXPECT_EQ(r.grid_resolution, std::make_pair(64, 64));
}

TEST(SumRule, SchemesAgree) {
    SumRuleReport r = at(64);
    EXPECT_NEAR(r.alternative_scheme / r.integrated_intensity, 1.0, 1e-6);
}

TEST(SumRule, RefinementDeltaShrinks) {
    double prev = HUGE_VAL;
    for (int n : {16, 32, 64}) {
        SumRuleReport r = at(n);
        EXPECT_GT(r.integrated_intensity, 0.0);
        EXPECT_LT(r.refinement_delta, prev) << n;
        prev = r.refinement_delta;
    }
}

TEST(SumRule, GridMustBeMultipleOfFour) {
    GridSpec g;
    g.k_points = 30;
    EXPECT_THROW(sum_rule_fraction(g), DomainError);
}
