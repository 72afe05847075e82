// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qassert/contingency_table.hpp"
#include "qassert/rng.hpp"

namespace qassert {

/// Permutation resamples drawn by the Monte Carlo independence test.
inline constexpr std::size_t kDefaultResamples = 9999;

enum class TestMethod { ChiSquare, FisherExact, MonteCarlo, LegacyChiSquareAdd1 };

std::string_view test_method_name(TestMethod method) noexcept;  // "CHI_SQUARE", ...
std::optional<TestMethod> test_method_from_name(std::string_view name) noexcept;

struct PValue {
    double value = 1.0;
    TestMethod method = TestMethod::ChiSquare;
    std::optional<std::size_t> resamples;      // Monte Carlo only
    std::optional<int> degrees_of_freedom;     // chi-square variants only

    friend bool operator==(const PValue &, const PValue &) = default;
};

/// Pearson statistic sum (O - E)^2 / E. Every E must be positive; a zero or
/// negative expected cell raises InvalidExpectedError because the statistic
/// is undefined there.
double chi_square_statistic(std::span<const double> observed, std::span<const double> expected);

/// Goodness of fit of `observed` counts against category probabilities,
/// with expected counts total * p_i and k - 1 degrees of freedom.
PValue chi_square_gof_pvalue(std::span<const double> observed, std::span<const double> expected_probs,
                             std::uint64_t total);

/// Two-sided Fisher exact test on a 2x2 table.
///
/// Sums the hypergeometric probability of every table sharing the observed
/// margins whose probability does not exceed the observed one (relative
/// slack 1e-7). Works in log space, so N up to 10^6 is fine.
PValue fisher_exact_2x2(const ContingencyTable &table);

/// Log-probability of the table under independence with fixed margins:
/// sum log R_i! + sum log C_j! - log N! - sum log O_ij!.
double table_log_probability(const ContingencyTable &table);

/// Random table with the given margins, drawn by pairing a fixed sequence of
/// row labels with a uniformly shuffled sequence of column labels.
ContingencyTable generate_table_fixed_margins(std::span<const std::uint64_t> row_sums,
                                              std::span<const std::uint64_t> col_sums, Rng &rng);

/// Monte Carlo permutation test of independence for any r x c table.
///
/// p = (1 + #{resampled tables at most as probable as the observed}) / (1 + resamples).
/// Resample i draws from substream(seed, i).
PValue monte_carlo_independence(const ContingencyTable &table, std::size_t resamples = kDefaultResamples,
                                std::uint64_t seed = 0);

/// Chi-square independence test after adding 1 to every cell. Kept only to
/// show how the smoothing misjudges sparse tables; never used by default.
PValue legacy_chisq_add1(const ContingencyTable &table);

/// Fisher for 2x2 tables, Monte Carlo for every other shape.
PValue independence_test(const ContingencyTable &table, std::size_t resamples = kDefaultResamples,
                         std::uint64_t seed = 0);

}  // namespace qassert
