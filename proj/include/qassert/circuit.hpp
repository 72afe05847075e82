// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qassert/rng.hpp"
#include "qassert/state_vector.hpp"

namespace qassert {

struct Measurement {
    std::size_t qubit = 0;
    std::size_t classical_bit = 0;

    friend bool operator==(const Measurement &, const Measurement &) = default;
};

enum class AssertionKind { Classical, Uniform, Product };

std::string_view assertion_kind_name(AssertionKind kind) noexcept;  // "CLASSICAL", ...

/// A statistical checkpoint embedded in a circuit. It does not act on the
/// state; evaluating it samples the circuit prefix that precedes it.
struct AssertionDirective {
    AssertionKind kind = AssertionKind::Classical;
    /// Asserted register for CLASSICAL and UNIFORM.
    std::vector<std::size_t> qubits;
    /// The two groups compared by PRODUCT.
    std::vector<std::size_t> group0;
    std::vector<std::size_t> group1;
    /// Critical p-value; unset means the run's default.
    std::optional<double> alpha;
    std::optional<std::size_t> shots;
    std::optional<std::size_t> resamples;
    /// CLASSICAL only. Unset means "whatever the mode of the sample is".
    std::optional<std::string> expected_bitstring;
    /// The verdict a correct program should produce, for regression checks.
    std::optional<bool> expected_verdict;

    friend bool operator==(const AssertionDirective &, const AssertionDirective &) = default;

    static AssertionDirective classical(std::vector<std::size_t> qubits, std::optional<std::string> expected = std::nullopt);
    static AssertionDirective uniform(std::vector<std::size_t> qubits);
    static AssertionDirective product(std::vector<std::size_t> group0, std::vector<std::size_t> group1);

    AssertionDirective &expect(bool verdict) {
        expected_verdict = verdict;
        return *this;
    }
};

/// Throws ArgumentError/IndexError if the directive is malformed for an
/// `n_qubits` register.
void validate_directive(const AssertionDirective &directive, std::size_t n_qubits);

using CircuitItem = std::variant<GateOp, Measurement, AssertionDirective>;

class Circuit {
  public:
    /// Throws CapacityError outside 1..kMaxQubits.
    explicit Circuit(std::size_t n_qubits);

    std::size_t n_qubits() const noexcept { return n_qubits_; }
    std::size_t n_classical_bits() const noexcept { return n_classical_bits_; }
    const std::vector<CircuitItem> &items() const noexcept { return items_; }
    std::size_t size() const noexcept { return items_.size(); }

    /// Each append validates the new item against the circuit so far.
    Circuit &add(GateOp gate);
    Circuit &measure(std::size_t qubit, std::size_t classical_bit);
    Circuit &add(AssertionDirective directive);

    /// Convenience forms for the common gates.
    Circuit &h(std::size_t q) { return add(GateOp::single(GateKind::H, q)); }
    Circuit &x(std::size_t q) { return add(GateOp::single(GateKind::X, q)); }
    Circuit &z(std::size_t q) { return add(GateOp::single(GateKind::Z, q)); }
    Circuit &cx(std::size_t c, std::size_t t) { return add(GateOp::controlled(GateKind::CX, c, t)); }

    /// Item indices of every assertion directive, in circuit order.
    std::vector<std::size_t> assertion_indices() const;

    /// Number of Measurement items among the first `upto` items.
    std::size_t measurement_count(std::size_t upto) const;

    /// Re-checks every invariant; throws CircuitError (or the item's own error).
    void validate() const;

    friend bool operator==(const Circuit &, const Circuit &) = default;

  private:
    std::size_t n_qubits_;
    std::size_t n_classical_bits_ = 0;
    std::vector<CircuitItem> items_;
};

struct Trajectory {
    StateVector state;
    std::vector<int> bits;
};

/// Executes items [0, upto) of `circuit`: gates are applied (conditionals are
/// resolved against the classical register), measurements collapse the state
/// using `rng`, and assertion directives are skipped.
Trajectory run_trajectory(const Circuit &circuit, std::size_t upto, Rng &rng);

}  // namespace qassert
