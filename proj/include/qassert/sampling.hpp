// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qassert/circuit.hpp"

namespace qassert {

inline constexpr std::size_t kDefaultShots = 1000;
/// Limit on mid-circuit measurements for exact_distribution (2^16 branches).
inline constexpr std::size_t kMaxMeasurementBranches = 16;

/// Shot counts per observed bitstring. Zero-count outcomes are never stored.
class MeasurementDistribution {
  public:
    using Counts = std::map<std::string, std::uint64_t>;

    /// Validates every invariant: keys are `n_qubits` characters of 0/1,
    /// counts are positive and sum to `shots`. Throws ArgumentError otherwise.
    MeasurementDistribution(std::size_t n_qubits, Counts counts);

    std::size_t n_qubits() const noexcept { return n_qubits_; }
    std::uint64_t shots() const noexcept { return shots_; }
    const Counts &counts() const noexcept { return counts_; }

    /// Count for `bits`, zero if unobserved.
    std::uint64_t count(const std::string &bits) const;

    friend bool operator==(const MeasurementDistribution &, const MeasurementDistribution &) = default;

  private:
    std::size_t n_qubits_;
    std::uint64_t shots_ = 0;
    Counts counts_;
};

using ProbabilityMap = std::map<std::string, double>;

/// Samples the full register after items [0, upto) for `shots` shots.
///
/// Without mid-circuit measurements the prefix is evolved once and every
/// shot draws from the final |amplitude|^2; otherwise each shot runs its own
/// trajectory. Shot i always uses substream(seed, i).
MeasurementDistribution sample(const Circuit &circuit, std::size_t upto, std::size_t shots, std::uint64_t seed);

/// Per-shot trajectory sampling even when the prefix has no measurements.
MeasurementDistribution sample_trajectories(const Circuit &circuit, std::size_t upto, std::size_t shots,
                                            std::uint64_t seed);

/// Exact outcome probabilities of the full register after items [0, upto),
/// branching on each mid-circuit measurement. Throws CapacityError if the
/// prefix holds more than kMaxMeasurementBranches measurements.
ProbabilityMap exact_distribution(const Circuit &circuit, std::size_t upto);

/// Re-keys counts to the substring formed by `qubits`, in the given order.
MeasurementDistribution marginalize(const MeasurementDistribution &dist, const std::vector<std::size_t> &qubits);

/// Marginal of an exact distribution over `qubits`.
ProbabilityMap marginalize(const ProbabilityMap &probs, const std::vector<std::size_t> &qubits);

/// Total-variation distance between the empirical frequencies and `probs`.
double total_variation(const MeasurementDistribution &dist, const ProbabilityMap &probs);
double total_variation(const MeasurementDistribution &a, const MeasurementDistribution &b);

}  // namespace qassert
