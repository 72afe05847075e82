// SPDX-License-Identifier: Apache-2.0

#include "qassert/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qassert/errors.hpp"
#include "qassert/special_functions.hpp"

namespace qassert {

namespace {

constexpr double kFisherRelativeSlack = 1e-7;
constexpr double kMonteCarloLogSlack = 1e-9;

double clamp01(double p) { return std::fmin(1.0, std::fmax(0.0, p)); }

double log_probability_with(const ContingencyTable &table, const std::vector<double> &lf) {
    double lp = -lf[table.total()];
    for (auto r : table.row_sums()) lp += lf[r];
    for (auto c : table.col_sums()) lp += lf[c];
    for (auto o : table.cells()) lp -= lf[o];
    return lp;
}

__extension__ using uint128 = unsigned __int128;

// Unbiased integer in [0, bound) (Lemire's multiply-shift rejection method).
std::uint64_t bounded(Rng &rng, std::uint64_t bound) {
    uint128 m = static_cast<uint128>(rng()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (low < threshold) {
            m = static_cast<uint128>(rng()) * bound;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

// Label-shuffle sampler for tables with fixed margins: a fixed sequence of
// row labels is paired with a uniformly permuted sequence of column labels.
//
// The largest row's labels occupy the tail of the row sequence. Its cells are
// forced by the column margins once the other rows are tabulated, so only the
// first N - max(R_i) positions of the permutation are drawn (a partial
// Fisher-Yates shuffle, which has the same law on those positions as a full
// one). Column labels are reset to canonical order before each draw, so a
// draw depends only on its rng.
class MarginSampler {
  public:
    MarginSampler(std::span<const std::uint64_t> row_sums, std::span<const std::uint64_t> col_sums)
        : rows_(row_sums.size()), cols_(col_sums.size()), col_sums_(col_sums.begin(), col_sums.end()) {
        const auto n_rows = std::accumulate(row_sums.begin(), row_sums.end(), std::uint64_t{0});
        const auto n_cols = std::accumulate(col_sums.begin(), col_sums.end(), std::uint64_t{0});
        if (rows_ == 0 || cols_ == 0) throw ArgumentError("margins must be non-empty");
        if (n_rows != n_cols) {
            throw ArgumentError("row sums total " + std::to_string(n_rows) + " but column sums total " + std::to_string(n_cols));
        }
        if (n_rows == 0) throw ArgumentError("margins must have a positive total");
        tail_row_ = static_cast<std::size_t>(std::max_element(row_sums.begin(), row_sums.end()) - row_sums.begin());
        for (std::uint32_t i = 0; i < rows_; ++i) {
            if (i != tail_row_) row_labels_.insert(row_labels_.end(), row_sums[i], i);
        }
        canonical_cols_.reserve(n_rows);
        for (std::uint32_t j = 0; j < cols_; ++j) canonical_cols_.insert(canonical_cols_.end(), col_sums[j], j);
        shuffled_ = canonical_cols_;
    }

    void draw(Rng &rng, ContingencyTable &out) {
        std::copy(canonical_cols_.begin(), canonical_cols_.end(), shuffled_.begin());
        const std::size_t n = shuffled_.size();
        const std::size_t head = row_labels_.size();
        for (std::size_t k = 0; k < head; ++k) {
            std::swap(shuffled_[k], shuffled_[k + bounded(rng, n - k)]);
        }
        out.clear();
        for (std::size_t k = 0; k < head; ++k) ++out.at(row_labels_[k], shuffled_[k]);
        for (std::size_t c = 0; c < cols_; ++c) {
            std::uint64_t used = 0;
            for (std::size_t r = 0; r < rows_; ++r) used += out.at(r, c);
            out.at(tail_row_, c) = col_sums_[c] - used;
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

  private:
    std::size_t rows_;
    std::size_t cols_;
    std::size_t tail_row_ = 0;
    std::vector<std::uint64_t> col_sums_;
    std::vector<std::uint32_t> row_labels_;
    std::vector<std::uint32_t> canonical_cols_;
    std::vector<std::uint32_t> shuffled_;
};

}  // namespace

std::string_view test_method_name(TestMethod method) noexcept {
    switch (method) {
        case TestMethod::ChiSquare: return "CHI_SQUARE";
        case TestMethod::FisherExact: return "FISHER_EXACT";
        case TestMethod::MonteCarlo: return "MONTE_CARLO";
        case TestMethod::LegacyChiSquareAdd1: return "LEGACY_CHI_SQUARE_ADD1";
    }
    return "?";
}

std::optional<TestMethod> test_method_from_name(std::string_view name) noexcept {
    for (auto m : {TestMethod::ChiSquare, TestMethod::FisherExact, TestMethod::MonteCarlo, TestMethod::LegacyChiSquareAdd1}) {
        if (test_method_name(m) == name) return m;
    }
    return std::nullopt;
}

double chi_square_statistic(std::span<const double> observed, std::span<const double> expected) {
    if (observed.size() != expected.size()) {
        throw ArgumentError("observed and expected lists differ in length");
    }
    double stat = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        if (!(expected[i] > 0.0)) {
            throw InvalidExpectedError("expected count in cell " + std::to_string(i) +
                                       " is not positive; the chi-square statistic is undefined (division by zero)");
        }
        const double diff = observed[i] - expected[i];
        stat += diff * diff / expected[i];
    }
    return stat;
}

PValue chi_square_gof_pvalue(std::span<const double> observed, std::span<const double> expected_probs,
                             std::uint64_t total) {
    if (observed.size() < 2) throw ArgumentError("goodness of fit needs at least two categories");
    if (observed.size() != expected_probs.size()) throw ArgumentError("observed and probability lists differ in length");
    if (total == 0) throw ArgumentError("goodness of fit needs a positive total");
    const double psum = std::accumulate(expected_probs.begin(), expected_probs.end(), 0.0);
    if (std::abs(psum - 1.0) > 1e-9) throw ArgumentError("expected probabilities sum to " + std::to_string(psum));

    std::vector<double> expected(expected_probs.size());
    std::transform(expected_probs.begin(), expected_probs.end(), expected.begin(),
                   [total](double p) { return static_cast<double>(total) * p; });
    const double stat = chi_square_statistic(observed, expected);
    const int dof = static_cast<int>(observed.size()) - 1;
    return PValue{clamp01(chi_square_survival(stat, dof)), TestMethod::ChiSquare, std::nullopt, dof};
}

PValue fisher_exact_2x2(const ContingencyTable &table) {
    if (!table.is_2x2()) throw ArgumentError("Fisher's exact test needs a 2x2 table, got " + std::to_string(table.rows()) + "x" +
                                             std::to_string(table.cols()));
    const std::uint64_t a = table.at(0, 0);
    const auto rows = table.row_sums();
    const auto cols = table.col_sums();
    const std::uint64_t n = table.total();
    PValue result{1.0, TestMethod::FisherExact, std::nullopt, std::nullopt};
    if (rows[0] == 0 || rows[1] == 0 || cols[0] == 0 || cols[1] == 0) return result;

    const double margin_term =
        log_factorial(rows[0]) + log_factorial(rows[1]) + log_factorial(cols[0]) + log_factorial(cols[1]) - log_factorial(n);
    // Table with top-left cell x; the other three cells follow from the margins.
    auto log_p = [&](std::uint64_t x) {
        return margin_term - log_factorial(x) - log_factorial(rows[0] - x) - log_factorial(cols[0] - x) -
               log_factorial(rows[1] + x - cols[0]);
    };
    const std::uint64_t lo = cols[0] > rows[1] ? cols[0] - rows[1] : 0;
    const std::uint64_t hi = std::min(rows[0], cols[0]);
    const double threshold = log_p(a) + std::log1p(kFisherRelativeSlack);

    double p = 0.0;
    for (std::uint64_t x = lo; x <= hi; ++x) {
        const double lp = log_p(x);
        if (lp <= threshold) p += std::exp(lp);
    }
    result.value = clamp01(p);
    return result;
}

double table_log_probability(const ContingencyTable &table) {
    return log_probability_with(table, log_factorial_table(table.total()));
}

ContingencyTable generate_table_fixed_margins(std::span<const std::uint64_t> row_sums,
                                              std::span<const std::uint64_t> col_sums, Rng &rng) {
    MarginSampler sampler(row_sums, col_sums);
    ContingencyTable out(sampler.rows(), sampler.cols());
    sampler.draw(rng, out);
    return out;
}

PValue monte_carlo_independence(const ContingencyTable &table, std::size_t resamples, std::uint64_t seed) {
    if (resamples == 0) throw ArgumentError("Monte Carlo test needs at least one resample");
    if (table.total() == 0) throw ArgumentError("Monte Carlo test needs a table with N >= 1");
    const auto rows = table.row_sums();
    const auto cols = table.col_sums();
    const auto lf = log_factorial_table(table.total());
    const double observed = log_probability_with(table, lf);

    MarginSampler sampler(rows, cols);
    ContingencyTable scratch(table.rows(), table.cols());
    std::size_t extreme = 0;
    for (std::size_t i = 0; i < resamples; ++i) {
        Rng rng = substream(seed, i);
        sampler.draw(rng, scratch);
        if (log_probability_with(scratch, lf) <= observed + kMonteCarloLogSlack) ++extreme;
    }
    const double p = static_cast<double>(1 + extreme) / static_cast<double>(1 + resamples);
    return PValue{clamp01(p), TestMethod::MonteCarlo, resamples, std::nullopt};
}

PValue legacy_chisq_add1(const ContingencyTable &table) {
    const ContingencyTable smoothed = table.with_added(1);
    const auto rows = smoothed.row_sums();
    const auto cols = smoothed.col_sums();
    const double n = static_cast<double>(smoothed.total());
    std::vector<double> observed;
    std::vector<double> expected;
    for (std::size_t r = 0; r < smoothed.rows(); ++r) {
        for (std::size_t c = 0; c < smoothed.cols(); ++c) {
            observed.push_back(static_cast<double>(smoothed.at(r, c)));
            expected.push_back(static_cast<double>(rows[r]) * static_cast<double>(cols[c]) / n);
        }
    }
    const int dof = static_cast<int>((smoothed.rows() - 1) * (smoothed.cols() - 1));
    PValue result{1.0, TestMethod::LegacyChiSquareAdd1, std::nullopt, dof};
    if (dof == 0) return result;
    result.value = clamp01(chi_square_survival(chi_square_statistic(observed, expected), dof));
    return result;
}

PValue independence_test(const ContingencyTable &table, std::size_t resamples, std::uint64_t seed) {
    return table.is_2x2() ? fisher_exact_2x2(table) : monte_carlo_independence(table, resamples, seed);
}

}  // namespace qassert
