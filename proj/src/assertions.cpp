// SPDX-License-Identifier: Apache-2.0

#include "qassert/assertions.hpp"

#include <algorithm>
#include <cmath>

#include "qassert/errors.hpp"
#include "qassert/special_functions.hpp"

namespace qassert {

namespace {

std::size_t encode(const std::string &bits, const std::vector<std::size_t> &group) {
    std::size_t value = 0;
    for (auto q : group) value = (value << 1) | static_cast<std::size_t>(bits[q] == '1');
    return value;
}

void check_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw ArgumentError("alpha must lie strictly between 0 and 1");
}

AssertionResult make_result(AssertionDirective directive, std::size_t at, PValue p, double alpha, std::size_t shots) {
    AssertionResult r;
    r.directive = std::move(directive);
    r.item_index = at;
    r.p_value = p;
    r.alpha = alpha;
    r.passed = p.value > alpha;
    r.shots_used = shots;
    return r;
}

std::uint64_t resample_seed(std::uint64_t seed) { return mix64(seed ^ 0x6d6f6e74656361ULL); }

}  // namespace

std::size_t default_shots(AssertionKind kind) noexcept {
    switch (kind) {
        case AssertionKind::Classical: return 1000;
        case AssertionKind::Uniform: return 10000;
        case AssertionKind::Product: return 10000;
    }
    return kDefaultShots;
}

ContingencyTable build_contingency_table(const MeasurementDistribution &dist, const std::vector<std::size_t> &group0,
                                         const std::vector<std::size_t> &group1) {
    AssertionDirective probe = AssertionDirective::product(group0, group1);
    validate_directive(probe, dist.n_qubits());
    if (group0.size() + group1.size() > kMaxQubits) throw CapacityError("contingency table too large");
    ContingencyTable table(std::size_t{1} << group0.size(), std::size_t{1} << group1.size());
    for (const auto &[bits, c] : dist.counts()) table.at(encode(bits, group0), encode(bits, group1)) += c;
    return table;
}

ClassicalTest classical_pvalue(const MeasurementDistribution &dist, const std::optional<std::string> &expected) {
    std::string target;
    if (expected) {
        if (expected->size() != dist.n_qubits()) {
            throw ArgumentError("expected bitstring '" + *expected + "' has the wrong length for " +
                                std::to_string(dist.n_qubits()) + " qubits");
        }
        parse_bits(*expected);
        target = *expected;
    } else {
        std::uint64_t best = 0;
        for (const auto &[bits, c] : dist.counts()) {
            if (c > best) {
                best = c;
                target = bits;
            }
        }
    }

    const double shots = static_cast<double>(dist.shots());
    if (dist.count(target) == dist.shots()) {
        return {PValue{1.0, TestMethod::ChiSquare, std::nullopt, 0}, target};
    }

    // Target cell first, then every observed off-target outcome.
    std::vector<double> observed{static_cast<double>(dist.count(target))};
    for (const auto &[bits, c] : dist.counts()) {
        if (bits != target) observed.push_back(static_cast<double>(c));
    }
    const std::size_t k = observed.size();
    std::vector<double> expected_counts(k, kClassicalOffPeakExpected);
    expected_counts[0] = shots - kClassicalOffPeakExpected * static_cast<double>(k - 1);

    const double stat = chi_square_statistic(observed, expected_counts);
    const int dof = static_cast<int>(k - 1);
    return {PValue{chi_square_survival(stat, dof), TestMethod::ChiSquare, std::nullopt, dof}, target};
}

PValue uniform_pvalue(const MeasurementDistribution &dist, std::vector<std::string> *warnings) {
    const std::size_t categories = std::size_t{1} << dist.n_qubits();
    const double expected = static_cast<double>(dist.shots()) / static_cast<double>(categories);
    if (expected < 1.0) {
        throw InfeasibleShotsError("uniform assertion over " + std::to_string(dist.n_qubits()) + " qubits needs at least " +
                                       std::to_string(categories) + " shots (got " + std::to_string(dist.shots()) + ")",
                                   categories);
    }
    if (expected < kUniformMinExpected && warnings) {
        warnings->push_back("only " + std::to_string(dist.shots()) + " shots for " + std::to_string(categories) +
                            " outcomes; at least " + std::to_string(categories * 5) + " recommended");
    }
    std::vector<double> observed(categories, 0.0);
    for (const auto &[bits, c] : dist.counts()) observed[parse_bits(bits)] = static_cast<double>(c);
    const std::vector<double> probs(categories, 1.0 / static_cast<double>(categories));
    return chi_square_gof_pvalue(observed, probs, dist.shots());
}

AssertionResult assert_classical(const Circuit &circuit, std::size_t at, const std::vector<std::size_t> &qubits,
                                 const std::optional<std::string> &expected_bitstring, double alpha, std::size_t shots,
                                 std::uint64_t seed) {
    check_alpha(alpha);
    auto directive = AssertionDirective::classical(qubits, expected_bitstring);
    validate_directive(directive, circuit.n_qubits());
    const auto dist = marginalize(sample(circuit, at, shots, seed), qubits);
    auto test = classical_pvalue(dist, expected_bitstring);
    auto result = make_result(std::move(directive), at, test.p_value, alpha, shots);
    result.classical_target = std::move(test.target);
    return result;
}

AssertionResult assert_uniform(const Circuit &circuit, std::size_t at, const std::vector<std::size_t> &qubits, double alpha,
                               std::size_t shots, std::uint64_t seed) {
    check_alpha(alpha);
    auto directive = AssertionDirective::uniform(qubits);
    validate_directive(directive, circuit.n_qubits());
    const std::size_t categories = std::size_t{1} << qubits.size();
    if (shots < categories) {
        throw InfeasibleShotsError("uniform assertion over " + std::to_string(qubits.size()) + " qubits needs at least " +
                                       std::to_string(categories) + " shots (got " + std::to_string(shots) + ")",
                                   categories);
    }
    const auto dist = marginalize(sample(circuit, at, shots, seed), qubits);
    std::vector<std::string> warnings;
    const auto p = uniform_pvalue(dist, &warnings);
    auto result = make_result(std::move(directive), at, p, alpha, shots);
    result.warnings = std::move(warnings);
    return result;
}

AssertionResult assert_product(const Circuit &circuit, std::size_t at, const std::vector<std::size_t> &group0,
                               const std::vector<std::size_t> &group1, double alpha, std::size_t shots,
                               std::size_t resamples, std::uint64_t seed, bool legacy_chisq) {
    check_alpha(alpha);
    auto directive = AssertionDirective::product(group0, group1);
    validate_directive(directive, circuit.n_qubits());
    const auto table = build_contingency_table(sample(circuit, at, shots, seed), group0, group1);
    const PValue p = legacy_chisq ? legacy_chisq_add1(table) : independence_test(table, resamples, resample_seed(seed));
    auto result = make_result(std::move(directive), at, p, alpha, shots);
    result.table_shape = std::make_pair(table.rows(), table.cols());
    return result;
}

std::uint64_t checkpoint_seed(std::uint64_t run_seed, std::size_t item_index) noexcept {
    return mix64(run_seed ^ mix64(static_cast<std::uint64_t>(item_index)));
}

AssertionResult evaluate_checkpoint(const Circuit &circuit, std::size_t item_index, const AssertionConfig &config) {
    if (item_index >= circuit.size()) throw ArgumentError("checkpoint index out of range");
    const auto *directive = std::get_if<AssertionDirective>(&circuit.items()[item_index]);
    if (!directive) throw ArgumentError("item " + std::to_string(item_index) + " is not an assertion directive");

    const double alpha = directive->alpha.value_or(config.alpha);
    const std::size_t shots = directive->shots.value_or(config.shots.value_or(default_shots(directive->kind)));
    const std::size_t resamples = directive->resamples.value_or(config.resamples);
    const std::uint64_t seed = checkpoint_seed(config.seed, item_index);

    AssertionResult result;
    switch (directive->kind) {
        case AssertionKind::Classical:
            result = assert_classical(circuit, item_index, directive->qubits, directive->expected_bitstring, alpha, shots, seed);
            break;
        case AssertionKind::Uniform:
            result = assert_uniform(circuit, item_index, directive->qubits, alpha, shots, seed);
            break;
        case AssertionKind::Product:
            result = assert_product(circuit, item_index, directive->group0, directive->group1, alpha, shots, resamples, seed,
                                    config.legacy_chisq);
            break;
    }
    result.directive = *directive;
    if (directive->expected_verdict) result.matches_expected = (result.passed == *directive->expected_verdict);
    return result;
}

}  // namespace qassert
