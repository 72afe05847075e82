// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include <gtest/gtest.h>

#include "qassert/assertions.hpp"
#include "qassert/builtin_examples.hpp"
#include "qassert/errors.hpp"

using namespace qassert;

namespace {

Circuit bell() {
    Circuit c(2);
    c.h(0).cx(0, 1);
    return c;
}

Circuit x_both() {
    Circuit c(2);
    c.x(0).x(1);
    return c;
}

Circuit h_both() {
    Circuit c(2);
    c.h(0).h(1);
    return c;
}

}  // namespace

TEST(default_shots, per_kind) {
    EXPECT_EQ(default_shots(AssertionKind::Classical), 1000u);
    EXPECT_EQ(default_shots(AssertionKind::Uniform), 10000u);
    EXPECT_EQ(default_shots(AssertionKind::Product), 10000u);
}

TEST(contingency, tabulation) {
    const MeasurementDistribution d(2, {{"00", 300}, {"01", 200}, {"10", 250}, {"11", 250}});
    EXPECT_EQ(build_contingency_table(d, {0}, {1}), (ContingencyTable{{300, 200}, {250, 250}}));
    EXPECT_EQ(build_contingency_table(d, {1}, {0}), (ContingencyTable{{300, 250}, {200, 250}}));

    const MeasurementDistribution x(2, {{"11", 1000}});
    EXPECT_EQ(build_contingency_table(x, {0}, {1}), (ContingencyTable{{0, 0}, {0, 1000}}));
    EXPECT_THROW(build_contingency_table(x, {0}, {0}), ArgumentError);
}

TEST(contingency, bv_shape_is_32_by_2) {
    const auto c = build_example("bv");
    const auto at = c.assertion_indices()[1];
    const auto table = build_contingency_table(sample(c, at, 1000, 0), {0, 1, 2, 3, 4}, {5});
    EXPECT_EQ(table.rows(), 32u);
    EXPECT_EQ(table.cols(), 2u);
    EXPECT_EQ(table.total(), 1000u);
}

TEST(classical, all_shots_on_target) {
    const MeasurementDistribution d(2, {{"11", 1000}});
    const auto t = classical_pvalue(d, std::string("11"));
    EXPECT_EQ(t.p_value.value, 1.0);
    EXPECT_EQ(t.target, "11");
}

TEST(classical, split_distribution_fails) {
    const MeasurementDistribution d(1, {{"0", 5000}, {"1", 5000}});
    const auto t = classical_pvalue(d, std::string("0"));
    EXPECT_LT(t.p_value.value, 1e-100);
    EXPECT_EQ(t.p_value.degrees_of_freedom, 1);
}

TEST(classical, single_stray_shot) {
    // Target 999, one stray: expected (999.5, 0.5), chi-square 0.25/999.5 + 0.25/0.5.
    const MeasurementDistribution d(2, {{"11", 999}, {"01", 1}});
    const auto t = classical_pvalue(d, std::nullopt);
    EXPECT_EQ(t.target, "11");
    const double stat = 0.25 / 999.5 + 0.25 / 0.5;
    EXPECT_NEAR(t.p_value.value, std::erfc(std::sqrt(stat / 2.0)), 1e-12);
}

TEST(classical, unseen_expected_target) {
    const MeasurementDistribution d(2, {{"11", 1000}});
    const auto t = classical_pvalue(d, std::string("00"));
    EXPECT_LT(t.p_value.value, 1e-100);
    EXPECT_THROW(classical_pvalue(d, std::string("0")), ArgumentError);
    EXPECT_THROW(classical_pvalue(d, std::string("0x")), ArgumentError);
}

TEST(classical, mode_is_default_target) {
    const MeasurementDistribution d(2, {{"00", 10}, {"10", 990}});
    EXPECT_EQ(classical_pvalue(d, std::nullopt).target, "10");
}

TEST(classical, stable_at_low_and_high_shots) {
    const auto c = x_both();
    for (std::size_t shots : {500u, 1000u, 10000u}) {
        const auto r = assert_classical(c, c.size(), {0, 1}, std::string("11"), 0.05, shots, 1);
        EXPECT_TRUE(r.passed) << shots;
        EXPECT_EQ(r.p_value.value, 1.0);
        EXPECT_EQ(r.shots_used, shots);
    }
}

TEST(uniform, h_on_both_qubits_mostly_passes) {
    const auto c = h_both();
    int passed = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) passed += assert_uniform(c, c.size(), {0, 1}, 0.05, 10000, seed).passed;
    EXPECT_GE(passed, 90);
}

TEST(uniform, classical_state_fails) {
    const MeasurementDistribution d(2, {{"11", 1000}});
    const auto p = uniform_pvalue(d);
    EXPECT_LT(p.value, 1e-100);
    EXPECT_EQ(p.degrees_of_freedom, 3);
}

TEST(uniform, qft_input_is_not_uniform) {
    const auto c = build_example("qft");
    const auto at = c.assertion_indices()[1];
    EXPECT_FALSE(assert_uniform(c, at, {0, 1, 2, 3, 4}, 0.05, 10000, 0).passed);
}

TEST(uniform, shot_budget_checks) {
    const auto c = h_both();
    try {
        assert_uniform(c, c.size(), {0, 1}, 0.05, 3, 0);
        FAIL() << "expected InfeasibleShotsError";
    } catch (const InfeasibleShotsError &e) {
        EXPECT_EQ(e.required_shots(), 4u);
        EXPECT_NE(std::string(e.what()).find("at least 4 shots"), std::string::npos);
    }
    const auto low = assert_uniform(c, c.size(), {0, 1}, 0.05, 12, 0);
    EXPECT_EQ(low.warnings.size(), 1u);
    EXPECT_TRUE(assert_uniform(c, c.size(), {0, 1}, 0.05, 20, 0).warnings.empty());
}

TEST(product, x_gate_passes_with_p_one) {
    const auto c = x_both();
    const auto r = assert_product(c, c.size(), {0}, {1}, 0.05, 10000, 9999, 0);
    EXPECT_EQ(r.p_value.value, 1.0);
    EXPECT_EQ(r.p_value.method, TestMethod::FisherExact);
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.table_shape, std::make_pair(std::size_t{2}, std::size_t{2}));

    const auto legacy = assert_product(c, c.size(), {0}, {1}, 0.05, 10000, 9999, 0, true);
    EXPECT_LT(legacy.p_value.value, 0.05);
    EXPECT_FALSE(legacy.passed);
}

TEST(product, bell_always_fails) {
    const auto c = bell();
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto r = assert_product(c, c.size(), {0}, {1}, 0.05, 1000, 9999, seed);
        EXPECT_LT(r.p_value.value, 1e-6) << seed;
        EXPECT_FALSE(r.passed);
    }
}

TEST(product, independent_qubits_mostly_pass) {
    const auto c = h_both();
    int passed = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) passed += assert_product(c, c.size(), {0}, {1}, 0.05, 10000, 9999, seed).passed;
    EXPECT_GE(passed, 90);
}

TEST(product, overlapping_groups_rejected) {
    const auto c = bell();
    EXPECT_THROW(assert_product(c, c.size(), {0, 1}, {1}, 0.05, 100, 99, 0), ArgumentError);
    EXPECT_THROW(assert_product(c, c.size(), {}, {1}, 0.05, 100, 99, 0), ArgumentError);
}

TEST(verdict, passed_is_p_greater_than_alpha) {
    const auto c = bell();
    const MeasurementDistribution d(2, {{"00", 999}, {"01", 1}});
    const double p = classical_pvalue(d, std::nullopt).p_value.value;
    ASSERT_GT(p, 0.0);
    ASSERT_LT(p, 1.0);

    Circuit one_stray(1);
    one_stray.add(GateOp::rotation(GateKind::RY, 0.1, 0));
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto base = assert_classical(one_stray, one_stray.size(), {0}, std::nullopt, 0.05, 200, seed);
        const double pv = base.p_value.value;
        EXPECT_EQ(base.passed, pv > 0.05);
        if (pv <= 0.0 || pv >= 1.0) continue;
        // Moving alpha across p flips only the verdict.
        const auto below = assert_classical(one_stray, one_stray.size(), {0}, std::nullopt, std::nextafter(pv, 0.0), 200, seed);
        const auto at = assert_classical(one_stray, one_stray.size(), {0}, std::nullopt, pv, 200, seed);
        EXPECT_TRUE(below.passed);
        EXPECT_FALSE(at.passed);
        EXPECT_EQ(below.p_value, at.p_value);
        EXPECT_EQ(below.classical_target, at.classical_target);
    }
    EXPECT_THROW(assert_classical(c, c.size(), {0}, std::nullopt, 0.0, 10, 0), ArgumentError);
    EXPECT_THROW(assert_classical(c, c.size(), {0}, std::nullopt, 1.0, 10, 0), ArgumentError);
}

TEST(verdict, deterministic_for_equal_inputs) {
    const auto c = build_example("teleport");
    const auto at = c.assertion_indices()[0];
    const AssertionConfig config{.seed = 9, .shots = 2000, .resamples = 499};
    EXPECT_EQ(evaluate_checkpoint(c, at, config), evaluate_checkpoint(c, at, config));
}

TEST(evaluate_checkpoint, shot_precedence) {
    Circuit c(2);
    c.h(0);
    auto with_shots = AssertionDirective::uniform({0});
    with_shots.shots = 64;
    c.add(AssertionDirective::uniform({0})).add(with_shots);

    AssertionConfig config;
    EXPECT_EQ(evaluate_checkpoint(c, 1, config).shots_used, 10000u);
    EXPECT_EQ(evaluate_checkpoint(c, 2, config).shots_used, 64u);
    config.shots = 300;
    EXPECT_EQ(evaluate_checkpoint(c, 1, config).shots_used, 300u);
    EXPECT_EQ(evaluate_checkpoint(c, 2, config).shots_used, 64u);
    EXPECT_THROW(evaluate_checkpoint(c, 0, config), ArgumentError);
}

TEST(evaluate_checkpoint, bv_walkthrough) {
    const auto c = build_example("bv");
    const AssertionConfig config;
    const auto idx = c.assertion_indices();
    ASSERT_EQ(idx.size(), 5u);
    EXPECT_TRUE(evaluate_checkpoint(c, idx[0], config).passed);

    const auto bug = build_example("bv", {}, "drop-setup-hadamard");
    const auto bug_idx = bug.assertion_indices();
    const auto r = evaluate_checkpoint(bug, bug_idx[0], config);
    EXPECT_FALSE(r.passed);
    EXPECT_EQ(r.matches_expected, false);
}

TEST(evaluate_checkpoint, qft_bug_flips_post_transform_pair) {
    const auto bug = build_example("qft", {}, "drop-qft-hadamard");
    const auto idx = bug.assertion_indices();
    const AssertionConfig config;
    EXPECT_TRUE(evaluate_checkpoint(bug, idx[2], config).passed);
    EXPECT_FALSE(evaluate_checkpoint(bug, idx[3], config).passed);
}

TEST(checkpoint_seed, distinct_per_item_and_run) {
    EXPECT_NE(checkpoint_seed(0, 1), checkpoint_seed(0, 2));
    EXPECT_NE(checkpoint_seed(0, 1), checkpoint_seed(1, 1));
    EXPECT_EQ(checkpoint_seed(5, 3), checkpoint_seed(5, 3));
}
