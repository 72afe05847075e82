// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qassert/rng.hpp"

namespace qassert {

using Complex = std::complex<double>;

/// Largest register the dense simulator accepts (2^20 amplitudes).
inline constexpr std::size_t kMaxQubits = 20;

/// Dense state vector over 2^n basis states.
///
/// Basis index b encodes qubit i in bit (n - 1 - i) of b: qubit 0 is the most
/// significant bit and the leftmost character of a formatted bitstring.
class StateVector {
  public:
    /// |0...0> on `n_qubits` qubits. Throws CapacityError unless 0 < n <= kMaxQubits.
    explicit StateVector(std::size_t n_qubits);

    std::size_t n_qubits() const noexcept { return n_qubits_; }
    std::size_t dimension() const noexcept { return amplitudes_.size(); }

    std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
    std::span<Complex> amplitudes() noexcept { return amplitudes_; }

    double norm_squared() const noexcept;

    /// |amplitude|^2 of each basis state.
    std::vector<double> probabilities() const;

    /// Bit mask selecting qubit q inside a basis index.
    std::size_t mask(std::size_t qubit) const noexcept { return std::size_t{1} << (n_qubits_ - 1 - qubit); }

  private:
    std::size_t n_qubits_;
    std::vector<Complex> amplitudes_;
};

enum class GateKind { H, X, Y, Z, S, T, RX, RY, RZ, R1, CX, CZ, CR1, SWAP };

std::string_view gate_name(GateKind kind) noexcept;
std::optional<GateKind> gate_from_name(std::string_view name) noexcept;
bool is_parameterized(GateKind kind) noexcept;
/// Number of control qubits the kind takes (CX, CZ, CR1 take one).
std::size_t control_count(GateKind kind) noexcept;
/// Number of target qubits the kind takes (SWAP takes two).
std::size_t target_count(GateKind kind) noexcept;
bool is_self_inverse(GateKind kind) noexcept;

struct GateOp {
    GateKind kind = GateKind::H;
    std::optional<double> angle;
    std::vector<std::size_t> targets;
    std::vector<std::size_t> controls;
    /// When set, the gate only fires if this classical bit reads 1.
    std::optional<std::size_t> classical_condition;

    friend bool operator==(const GateOp &, const GateOp &) = default;

    static GateOp single(GateKind kind, std::size_t target);
    static GateOp rotation(GateKind kind, double angle, std::size_t target);
    static GateOp controlled(GateKind kind, std::size_t control, std::size_t target);
    static GateOp controlled_phase(double angle, std::size_t control, std::size_t target);
    static GateOp swap(std::size_t a, std::size_t b);

    /// Copy of this gate conditioned on classical bit `bit`.
    GateOp when(std::size_t bit) const;
};

/// Checks arity, angle presence and index range/distinctness against a
/// register of `n_qubits`. Throws IndexError or ArgumentError.
void validate_gate(const GateOp &gate, std::size_t n_qubits);

/// Applies the gate's unitary in place. The classical condition is ignored;
/// resolving it is the caller's job.
void apply_gate(StateVector &state, const GateOp &gate);

/// Probability that measuring `qubit` yields 1.
double probability_of_one(const StateVector &state, std::size_t qubit);

/// Projective Z measurement of one qubit. Collapses and renormalizes `state`.
int measure_qubit(StateVector &state, std::size_t qubit, Rng &rng);

/// Formats the low `n_qubits` bits of a basis index, qubit 0 first.
std::string format_bits(std::size_t basis_index, std::size_t n_qubits);

/// Inverse of format_bits. Throws ArgumentError on characters other than 0/1.
std::size_t parse_bits(std::string_view bits);

}  // namespace qassert
