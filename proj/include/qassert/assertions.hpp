// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qassert/circuit.hpp"
#include "qassert/contingency_table.hpp"
#include "qassert/sampling.hpp"
#include "qassert/stats.hpp"

namespace qassert {

inline constexpr double kDefaultAlpha = 0.05;

/// Expected count given to each non-target cell by the classical assertion.
inline constexpr double kClassicalOffPeakExpected = 0.5;

/// Expected count per category below which the uniform assertion warns.
inline constexpr double kUniformMinExpected = 5.0;

/// Run-wide settings that directives fall back to.
struct AssertionConfig {
    std::uint64_t seed = 0;
    double alpha = kDefaultAlpha;
    /// Replaces default_shots() for directives without their own shots=.
    std::optional<std::size_t> shots;
    std::size_t resamples = kDefaultResamples;
    /// Route product assertions through legacy_chisq_add1.
    bool legacy_chisq = false;
    friend bool operator==(const AssertionConfig &, const AssertionConfig &) = default;
};

struct AssertionResult {
    AssertionDirective directive;
    std::size_t item_index = 0;
    PValue p_value;
    double alpha = kDefaultAlpha;
    /// p_value.value > alpha for every kind.
    bool passed = false;
    std::size_t shots_used = 0;
    /// Peak bitstring tested by a classical assertion.
    std::optional<std::string> classical_target;
    /// Table shape of a product assertion (rows, cols).
    std::optional<std::pair<std::size_t, std::size_t>> table_shape;
    std::optional<bool> matches_expected;
    std::vector<std::string> warnings;

    friend bool operator==(const AssertionResult &, const AssertionResult &) = default;
};

/// CLASSICAL 1000, UNIFORM 10000, PRODUCT 10000.
std::size_t default_shots(AssertionKind kind) noexcept;

/// Full 2^|group0| x 2^|group1| table of `dist`; row i / column j are the
/// integer encodings of the group substrings (first listed qubit is the MSB).
ContingencyTable build_contingency_table(const MeasurementDistribution &dist, const std::vector<std::size_t> &group0,
                                         const std::vector<std::size_t> &group1);

struct ClassicalTest {
    PValue p_value;
    std::string target;
};

/// Single-peak test on an already marginalized distribution. The target is
/// `expected` when given, else the most frequent outcome (ties go to the
/// lexicographically smallest). Off-peak cells use an expected count of 0.5.
ClassicalTest classical_pvalue(const MeasurementDistribution &dist, const std::optional<std::string> &expected);

/// Chi-square test against the uniform distribution over all 2^n outcomes.
/// Throws InfeasibleShotsError when fewer than one shot per outcome is
/// expected; `warnings` gets a note below five.
PValue uniform_pvalue(const MeasurementDistribution &dist, std::vector<std::string> *warnings = nullptr);

AssertionResult assert_classical(const Circuit &circuit, std::size_t at, const std::vector<std::size_t> &qubits,
                                 const std::optional<std::string> &expected_bitstring, double alpha, std::size_t shots,
                                 std::uint64_t seed);

AssertionResult assert_uniform(const Circuit &circuit, std::size_t at, const std::vector<std::size_t> &qubits, double alpha,
                               std::size_t shots, std::uint64_t seed);

/// passed == true means "consistent with a product state".
AssertionResult assert_product(const Circuit &circuit, std::size_t at, const std::vector<std::size_t> &group0,
                               const std::vector<std::size_t> &group1, double alpha, std::size_t shots,
                               std::size_t resamples, std::uint64_t seed, bool legacy_chisq = false);

/// Seed used for the checkpoint at `item_index` of a run seeded with `run_seed`.
std::uint64_t checkpoint_seed(std::uint64_t run_seed, std::size_t item_index) noexcept;

/// Evaluates the directive stored at `item_index`, sampling items before it.
AssertionResult evaluate_checkpoint(const Circuit &circuit, std::size_t item_index, const AssertionConfig &config);

}  // namespace qassert
