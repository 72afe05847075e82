// SPDX-License-Identifier: Apache-2.0

#include "qassert/state_vector.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "qassert/errors.hpp"

namespace qassert {

namespace {

using Matrix2 = std::array<Complex, 4>;  // row-major

constexpr Complex kI{0.0, 1.0};

Matrix2 matrix_for(const GateOp &gate) {
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    const double theta = gate.angle.value_or(0.0);
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    switch (gate.kind) {
        case GateKind::H:
            return {inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2};
        case GateKind::X:
        case GateKind::CX:
            return {0.0, 1.0, 1.0, 0.0};
        case GateKind::Y:
            return {0.0, -kI, kI, 0.0};
        case GateKind::Z:
        case GateKind::CZ:
            return {1.0, 0.0, 0.0, -1.0};
        case GateKind::S:
            return {1.0, 0.0, 0.0, kI};
        case GateKind::T:
            return {1.0, 0.0, 0.0, std::polar(1.0, std::numbers::pi / 4.0)};
        case GateKind::RX:
            return {c, -kI * s, -kI * s, c};
        case GateKind::RY:
            return {c, -s, s, c};
        case GateKind::RZ:
            return {std::polar(1.0, -theta / 2.0), 0.0, 0.0, std::polar(1.0, theta / 2.0)};
        case GateKind::R1:
        case GateKind::CR1:
            return {1.0, 0.0, 0.0, std::polar(1.0, theta)};
        case GateKind::SWAP:
            break;
    }
    throw ArgumentError("gate has no 2x2 matrix");
}

struct GateInfo {
    GateKind kind;
    std::string_view name;
    bool parameterized;
    std::size_t controls;
    std::size_t targets;
    bool self_inverse;
};

constexpr std::array<GateInfo, 14> kGateTable{{
    {GateKind::H, "h", false, 0, 1, true},
    {GateKind::X, "x", false, 0, 1, true},
    {GateKind::Y, "y", false, 0, 1, true},
    {GateKind::Z, "z", false, 0, 1, true},
    {GateKind::S, "s", false, 0, 1, false},
    {GateKind::T, "t", false, 0, 1, false},
    {GateKind::RX, "rx", true, 0, 1, false},
    {GateKind::RY, "ry", true, 0, 1, false},
    {GateKind::RZ, "rz", true, 0, 1, false},
    {GateKind::R1, "r1", true, 0, 1, false},
    {GateKind::CX, "cx", false, 1, 1, true},
    {GateKind::CZ, "cz", false, 1, 1, true},
    {GateKind::CR1, "cr1", true, 1, 1, false},
    {GateKind::SWAP, "swap", false, 0, 2, true},
}};

const GateInfo &info(GateKind kind) noexcept {
    return kGateTable[static_cast<std::size_t>(kind)];
}

}  // namespace

StateVector::StateVector(std::size_t n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits == 0 || n_qubits > kMaxQubits) {
        throw CapacityError("register size " + std::to_string(n_qubits) + " outside supported range 1.." +
                            std::to_string(kMaxQubits));
    }
    amplitudes_.assign(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
    amplitudes_[0] = 1.0;
}

double StateVector::norm_squared() const noexcept {
    double total = 0.0;
    for (const auto &a : amplitudes_) total += std::norm(a);
    return total;
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> out(amplitudes_.size());
    std::transform(amplitudes_.begin(), amplitudes_.end(), out.begin(), [](const Complex &a) { return std::norm(a); });
    return out;
}

std::string_view gate_name(GateKind kind) noexcept { return info(kind).name; }

std::optional<GateKind> gate_from_name(std::string_view name) noexcept {
    for (const auto &g : kGateTable) {
        if (g.name == name) return g.kind;
    }
    return std::nullopt;
}

bool is_parameterized(GateKind kind) noexcept { return info(kind).parameterized; }
std::size_t control_count(GateKind kind) noexcept { return info(kind).controls; }
std::size_t target_count(GateKind kind) noexcept { return info(kind).targets; }
bool is_self_inverse(GateKind kind) noexcept { return info(kind).self_inverse; }

GateOp GateOp::single(GateKind kind, std::size_t target) { return GateOp{kind, std::nullopt, {target}, {}, std::nullopt}; }

GateOp GateOp::rotation(GateKind kind, double angle, std::size_t target) {
    return GateOp{kind, angle, {target}, {}, std::nullopt};
}

GateOp GateOp::controlled(GateKind kind, std::size_t control, std::size_t target) {
    return GateOp{kind, std::nullopt, {target}, {control}, std::nullopt};
}

GateOp GateOp::controlled_phase(double angle, std::size_t control, std::size_t target) {
    return GateOp{GateKind::CR1, angle, {target}, {control}, std::nullopt};
}

GateOp GateOp::swap(std::size_t a, std::size_t b) { return GateOp{GateKind::SWAP, std::nullopt, {a, b}, {}, std::nullopt}; }

GateOp GateOp::when(std::size_t bit) const {
    GateOp copy = *this;
    copy.classical_condition = bit;
    return copy;
}

void validate_gate(const GateOp &gate, std::size_t n_qubits) {
    const auto &gi = info(gate.kind);
    if (gate.targets.size() != gi.targets || gate.controls.size() != gi.controls) {
        throw ArgumentError("gate '" + std::string(gi.name) + "' expects " + std::to_string(gi.controls) +
                            " control(s) and " + std::to_string(gi.targets) + " target(s)");
    }
    if (gate.angle.has_value() != gi.parameterized) {
        throw ArgumentError("gate '" + std::string(gi.name) + (gi.parameterized ? "' requires an angle" : "' takes no angle"));
    }
    std::vector<std::size_t> all = gate.targets;
    all.insert(all.end(), gate.controls.begin(), gate.controls.end());
    for (auto q : all) {
        if (q >= n_qubits) {
            throw IndexError("qubit " + std::to_string(q) + " out of range for " + std::to_string(n_qubits) + "-qubit register");
        }
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
        throw IndexError("gate '" + std::string(gi.name) + "' uses a qubit more than once");
    }
}

void apply_gate(StateVector &state, const GateOp &gate) {
    validate_gate(gate, state.n_qubits());
    auto amps = state.amplitudes();

    std::size_t control_mask = 0;
    for (auto c : gate.controls) control_mask |= state.mask(c);

    if (gate.kind == GateKind::SWAP) {
        const std::size_t ma = state.mask(gate.targets[0]);
        const std::size_t mb = state.mask(gate.targets[1]);
        for (std::size_t i = 0; i < amps.size(); ++i) {
            // visit each pair once, from the side with a=1, b=0
            if ((i & ma) && !(i & mb) && (i & control_mask) == control_mask) {
                std::swap(amps[i], amps[(i ^ ma) | mb]);
            }
        }
        return;
    }

    const Matrix2 u = matrix_for(gate);
    const std::size_t tm = state.mask(gate.targets[0]);
    for (std::size_t i0 = 0; i0 < amps.size(); ++i0) {
        if ((i0 & tm) || (i0 & control_mask) != control_mask) continue;
        const std::size_t i1 = i0 | tm;
        const Complex a = amps[i0];
        const Complex b = amps[i1];
        amps[i0] = u[0] * a + u[1] * b;
        amps[i1] = u[2] * a + u[3] * b;
    }
}

double probability_of_one(const StateVector &state, std::size_t qubit) {
    if (qubit >= state.n_qubits()) throw IndexError("qubit " + std::to_string(qubit) + " out of range");
    const std::size_t m = state.mask(qubit);
    const auto amps = state.amplitudes();
    double p = 0.0;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (i & m) p += std::norm(amps[i]);
    }
    return p;
}

int measure_qubit(StateVector &state, std::size_t qubit, Rng &rng) {
    const double p1 = probability_of_one(state, qubit);
    const double total = state.norm_squared();
    const double p0 = total - p1;
    if (!(total > 0.0) || (p0 <= 0.0 && p1 <= 0.0)) {
        throw NumericalError("measurement outcome probabilities are both zero; state is not normalized");
    }
    const int bit = uniform01(rng) < p1 / total ? 1 : 0;
    const double kept = bit ? p1 : std::max(p0, 0.0);
    const double scale = 1.0 / std::sqrt(kept);
    const std::size_t m = state.mask(qubit);
    auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const bool is_one = (i & m) != 0;
        amps[i] = (is_one == (bit == 1)) ? amps[i] * scale : Complex{0.0, 0.0};
    }
    return bit;
}

std::string format_bits(std::size_t basis_index, std::size_t n_qubits) {
    std::string s(n_qubits, '0');
    for (std::size_t q = 0; q < n_qubits; ++q) {
        if (basis_index & (std::size_t{1} << (n_qubits - 1 - q))) s[q] = '1';
    }
    return s;
}

std::size_t parse_bits(std::string_view bits) {
    std::size_t value = 0;
    for (char ch : bits) {
        if (ch != '0' && ch != '1') throw ArgumentError("bitstring '" + std::string(bits) + "' contains a character other than 0/1");
        value = (value << 1) | static_cast<std::size_t>(ch - '0');
    }
    return value;
}

}  // namespace qassert
