// SPDX-License-Identifier: Apache-2.0

#include "qassert/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "qassert/errors.hpp"

namespace qassert {

namespace {

// Exact probabilities below this are treated as structural zeros.
constexpr double kNegligibleProbability = 1e-16;

std::vector<double> cumulative(const StateVector &state) {
    auto probs = state.probabilities();
    std::partial_sum(probs.begin(), probs.end(), probs.begin());
    return probs;
}

std::size_t draw_index(const std::vector<double> &cdf, Rng &rng) {
    const double u = uniform01(rng) * cdf.back();
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) --it;
    return static_cast<std::size_t>(it - cdf.begin());
}

void check_sample_args(const Circuit &circuit, std::size_t upto, std::size_t shots) {
    if (shots == 0) throw ArgumentError("shots must be at least 1");
    if (upto > circuit.size()) throw ArgumentError("prefix extends past the end of the circuit");
}

MeasurementDistribution tally(std::size_t n_qubits, const std::vector<std::size_t> &index_counts) {
    MeasurementDistribution::Counts counts;
    for (std::size_t i = 0; i < index_counts.size(); ++i) {
        if (index_counts[i] != 0) counts.emplace(format_bits(i, n_qubits), index_counts[i]);
    }
    return MeasurementDistribution(n_qubits, std::move(counts));
}

void check_marginal_qubits(const std::vector<std::size_t> &qubits, std::size_t n_qubits) {
    if (qubits.empty()) throw ArgumentError("marginal needs at least one qubit");
    std::set<std::size_t> seen;
    for (auto q : qubits) {
        if (q >= n_qubits) throw ArgumentError("marginal qubit " + std::to_string(q) + " out of range");
        if (!seen.insert(q).second) throw ArgumentError("marginal lists qubit " + std::to_string(q) + " twice");
    }
}

std::string select(const std::string &bits, const std::vector<std::size_t> &qubits) {
    std::string out;
    out.reserve(qubits.size());
    for (auto q : qubits) out.push_back(bits[q]);
    return out;
}

void branch(const Circuit &circuit, std::size_t upto, std::size_t pos, StateVector state, std::vector<int> bits,
            double weight, std::vector<double> &acc) {
    const auto &items = circuit.items();
    for (; pos < upto; ++pos) {
        if (const auto *g = std::get_if<GateOp>(&items[pos])) {
            if (g->classical_condition && bits[*g->classical_condition] != 1) continue;
            apply_gate(state, *g);
        } else if (const auto *m = std::get_if<Measurement>(&items[pos])) {
            const double p1 = probability_of_one(state, m->qubit);
            const double p0 = 1.0 - p1;
            const std::size_t mask = state.mask(m->qubit);
            for (int outcome : {0, 1}) {
                const double p = outcome ? p1 : p0;
                if (p <= kNegligibleProbability) continue;
                StateVector collapsed = state;
                auto amps = collapsed.amplitudes();
                const double scale = 1.0 / std::sqrt(p);
                for (std::size_t i = 0; i < amps.size(); ++i) {
                    amps[i] = (((i & mask) != 0) == (outcome == 1)) ? amps[i] * scale : Complex{0.0, 0.0};
                }
                auto next_bits = bits;
                next_bits[m->classical_bit] = outcome;
                branch(circuit, upto, pos + 1, std::move(collapsed), std::move(next_bits), weight * p, acc);
            }
            return;
        }
    }
    const auto probs = state.probabilities();
    for (std::size_t i = 0; i < probs.size(); ++i) acc[i] += weight * probs[i];
}

}  // namespace

MeasurementDistribution::MeasurementDistribution(std::size_t n_qubits, Counts counts)
    : n_qubits_(n_qubits), counts_(std::move(counts)) {
    if (n_qubits == 0) throw ArgumentError("distribution needs at least one qubit");
    for (const auto &[bits, c] : counts_) {
        if (bits.size() != n_qubits) {
            throw ArgumentError("outcome '" + bits + "' does not have " + std::to_string(n_qubits) + " characters");
        }
        parse_bits(bits);
        if (c == 0) throw ArgumentError("outcome '" + bits + "' stored with zero count");
        shots_ += c;
    }
    if (shots_ == 0) throw ArgumentError("distribution has no shots");
}

std::uint64_t MeasurementDistribution::count(const std::string &bits) const {
    auto it = counts_.find(bits);
    return it == counts_.end() ? 0 : it->second;
}

MeasurementDistribution sample(const Circuit &circuit, std::size_t upto, std::size_t shots, std::uint64_t seed) {
    check_sample_args(circuit, upto, shots);
    if (circuit.measurement_count(upto) > 0) return sample_trajectories(circuit, upto, shots, seed);

    // No stochastic branch in the prefix: the trajectory ignores its rng.
    Rng unused = substream(seed, 0);
    const auto cdf = cumulative(run_trajectory(circuit, upto, unused).state);
    std::vector<std::size_t> index_counts(cdf.size(), 0);
    for (std::size_t shot = 0; shot < shots; ++shot) {
        Rng rng = substream(seed, shot);
        ++index_counts[draw_index(cdf, rng)];
    }
    return tally(circuit.n_qubits(), index_counts);
}

MeasurementDistribution sample_trajectories(const Circuit &circuit, std::size_t upto, std::size_t shots,
                                            std::uint64_t seed) {
    check_sample_args(circuit, upto, shots);
    std::vector<std::size_t> index_counts(std::size_t{1} << circuit.n_qubits(), 0);
    for (std::size_t shot = 0; shot < shots; ++shot) {
        Rng rng = substream(seed, shot);
        const auto traj = run_trajectory(circuit, upto, rng);
        ++index_counts[draw_index(cumulative(traj.state), rng)];
    }
    return tally(circuit.n_qubits(), index_counts);
}

ProbabilityMap exact_distribution(const Circuit &circuit, std::size_t upto) {
    if (upto > circuit.size()) throw ArgumentError("prefix extends past the end of the circuit");
    const auto m = circuit.measurement_count(upto);
    if (m > kMaxMeasurementBranches) {
        throw CapacityError("prefix has " + std::to_string(m) + " mid-circuit measurements; exact enumeration supports " +
                            std::to_string(kMaxMeasurementBranches));
    }
    // Surfaces unwritten-bit conditionals before branching.
    for (std::size_t i = 0; i < upto; ++i) {
        if (const auto *g = std::get_if<GateOp>(&circuit.items()[i]); g && g->classical_condition) {
            bool written = false;
            for (std::size_t j = 0; j < i; ++j) {
                const auto *mm = std::get_if<Measurement>(&circuit.items()[j]);
                if (mm && mm->classical_bit == *g->classical_condition) written = true;
            }
            if (!written) throw CircuitError("conditional gate reads an unwritten classical bit");
        }
    }
    std::vector<double> acc(std::size_t{1} << circuit.n_qubits(), 0.0);
    branch(circuit, upto, 0, StateVector(circuit.n_qubits()), std::vector<int>(circuit.n_classical_bits(), 0), 1.0, acc);
    ProbabilityMap out;
    for (std::size_t i = 0; i < acc.size(); ++i) {
        if (acc[i] > kNegligibleProbability) out.emplace(format_bits(i, circuit.n_qubits()), acc[i]);
    }
    return out;
}

MeasurementDistribution marginalize(const MeasurementDistribution &dist, const std::vector<std::size_t> &qubits) {
    check_marginal_qubits(qubits, dist.n_qubits());
    MeasurementDistribution::Counts counts;
    for (const auto &[bits, c] : dist.counts()) counts[select(bits, qubits)] += c;
    return MeasurementDistribution(qubits.size(), std::move(counts));
}

ProbabilityMap marginalize(const ProbabilityMap &probs, const std::vector<std::size_t> &qubits) {
    if (probs.empty()) return {};
    check_marginal_qubits(qubits, probs.begin()->first.size());
    ProbabilityMap out;
    for (const auto &[bits, p] : probs) out[select(bits, qubits)] += p;
    return out;
}

double total_variation(const MeasurementDistribution &dist, const ProbabilityMap &probs) {
    const double shots = static_cast<double>(dist.shots());
    double tv = 0.0;
    for (const auto &[bits, p] : probs) tv += std::abs(static_cast<double>(dist.count(bits)) / shots - p);
    for (const auto &[bits, c] : dist.counts()) {
        if (!probs.contains(bits)) tv += static_cast<double>(c) / shots;
    }
    return 0.5 * tv;
}

double total_variation(const MeasurementDistribution &a, const MeasurementDistribution &b) {
    ProbabilityMap pb;
    for (const auto &[bits, c] : b.counts()) pb[bits] = static_cast<double>(c) / static_cast<double>(b.shots());
    return total_variation(a, pb);
}

}  // namespace qassert
