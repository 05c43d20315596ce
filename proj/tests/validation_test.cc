// Copyright 2026 The catruler Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "catruler/validation.h"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"

using namespace catruler;

TEST(OracleCases, reproducible_and_in_range) {
    auto a = random_oracle_cases(20, 3, 5);
    auto b = random_oracle_cases(20, 3, 5);
    ASSERT_EQ(a.size(), 20u);
    for (size_t k = 0; k < a.size(); ++k) {
        EXPECT_EQ(a[k].alpha, b[k].alpha);
        EXPECT_EQ(a[k].theta, b[k].theta);
        EXPECT_GT(a[k].alpha, 0);
        EXPECT_LE(a[k].alpha, 3);
        EXPECT_GE(a[k].theta, 0);
        EXPECT_LT(a[k].theta, 2 * std::numbers::pi);
    }
    EXPECT_TRUE(random_oracle_cases(0, 3, 1).empty());
    EXPECT_THROW(random_oracle_cases(-1, 3, 1), std::invalid_argument);
}

TEST(ValidateAgainstOracle, passes_on_small_sample) {
    auto report = validate_against_oracle(random_oracle_cases(6, 3, 11));
    EXPECT_TRUE(report.passed());
    EXPECT_LT(report.max_probability_deviation, kOracleProbabilityTolerance);
    EXPECT_LT(report.max_closure, kClosureTolerance);
    EXPECT_LT(report.max_oracle_norm_defect, 1e-8);
}

TEST(ValidateAgainstOracle, detects_perturbed_coefficient) {
    auto report = validate_against_oracle(random_oracle_cases(3, 2, 11), 1e-3);
    EXPECT_FALSE(report.probabilities_pass);
    EXPECT_FALSE(report.passed());
}

TEST(ValidateAgainstOracle, empty_case_list_never_passes) {
    EXPECT_FALSE(validate_against_oracle({}).passed());
}

TEST(PowerLawFit, exact_power_law) {
    EXPECT_NEAR(fit_power_law_exponent({1, 2, 4, 8}, {3, 0.75, 0.1875, 0.046875}), -2, 1e-14);
    EXPECT_THROW(fit_power_law_exponent({1}, {1}), std::invalid_argument);
    EXPECT_THROW(fit_power_law_exponent({1, 1}, {1, 2}), std::invalid_argument);
    EXPECT_THROW(fit_power_law_exponent({1, 2}, {1, -2}), std::invalid_argument);
}

TEST(AutoThetaSpan, three_periods_each_side) {
    auto [lo, hi] = auto_theta_span(10);
    EXPECT_NEAR(hi, 3 * 2 * std::numbers::pi / 100, 1e-15);
    EXPECT_EQ(lo, -hi);
}

TEST(WidthScaling, single_alpha_has_no_ratios) {
    auto w = width_scaling({10}, 401);
    EXPECT_EQ(w.widths.size(), 1u);
    EXPECT_TRUE(w.ratios.empty());
    EXPECT_GT(w.widths[0], 0);
}

TEST(WidthScaling, exponent_stable_under_refinement) {
    auto coarse = width_scaling({5, 10, 20}, 801, NormalizationMode::kConditional, 4);
    auto fine = width_scaling({5, 10, 20}, 1601, NormalizationMode::kConditional, 4);
    EXPECT_NEAR(coarse.exponent, -2, 0.2);
    EXPECT_NEAR(coarse.exponent, fine.exponent, 0.05);
}

TEST(QuantumRuler, twenty_gives_one_and_a_quarter_nanometres) {
    auto r = quantum_ruler(20, 1e-6, 801, 4);
    EXPECT_NEAR(r.ruler_interval, 1.25e-9, 1e-22);
    EXPECT_NEAR(r.standard_interval, 5e-7, 1e-20);
    EXPECT_LT(r.relative_deviation, 0.05);
    EXPECT_NEAR(r.scan_period / r.ruler_interval, 2, 0.1);
}

TEST(CompareSnr, factor_of_four_disappears_with_resource_accounting) {
    auto c = compare_snr(200, 1e-6);
    EXPECT_GE(c.ratio, 3.8);
    EXPECT_LE(c.ratio, 4.2);
    EXPECT_NEAR(c.resource_adjusted_ratio, 1, 0.05);
    auto zero = compare_snr(200, 0);
    EXPECT_EQ(zero.snr_ideal, 0);
    EXPECT_EQ(zero.snr_squeezed, 0);
    EXPECT_EQ(zero.ratio, 0);
}
