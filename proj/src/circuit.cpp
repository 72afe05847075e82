// SPDX-License-Identifier: Apache-2.0

#include "qassert/circuit.hpp"

#include <algorithm>

#include "qassert/errors.hpp"

namespace qassert {

namespace {

void check_qubit_list(const std::vector<std::size_t> &qubits, std::size_t n_qubits, std::string_view what) {
    if (qubits.empty()) throw ArgumentError(std::string(what) + " must name at least one qubit");
    for (auto q : qubits) {
        if (q >= n_qubits) {
            throw IndexError(std::string(what) + " references qubit " + std::to_string(q) + " of a " +
                             std::to_string(n_qubits) + "-qubit register");
        }
    }
    auto sorted = qubits;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw IndexError(std::string(what) + " lists a qubit twice");
    }
}

}  // namespace

std::string_view assertion_kind_name(AssertionKind kind) noexcept {
    switch (kind) {
        case AssertionKind::Classical: return "CLASSICAL";
        case AssertionKind::Uniform: return "UNIFORM";
        case AssertionKind::Product: return "PRODUCT";
    }
    return "?";
}

AssertionDirective AssertionDirective::classical(std::vector<std::size_t> qubits, std::optional<std::string> expected) {
    AssertionDirective d;
    d.kind = AssertionKind::Classical;
    d.qubits = std::move(qubits);
    d.expected_bitstring = std::move(expected);
    return d;
}

AssertionDirective AssertionDirective::uniform(std::vector<std::size_t> qubits) {
    AssertionDirective d;
    d.kind = AssertionKind::Uniform;
    d.qubits = std::move(qubits);
    return d;
}

AssertionDirective AssertionDirective::product(std::vector<std::size_t> group0, std::vector<std::size_t> group1) {
    AssertionDirective d;
    d.kind = AssertionKind::Product;
    d.group0 = std::move(group0);
    d.group1 = std::move(group1);
    return d;
}

void validate_directive(const AssertionDirective &d, std::size_t n_qubits) {
    if (d.alpha && !(*d.alpha > 0.0 && *d.alpha < 1.0)) {
        throw ArgumentError("alpha must lie strictly between 0 and 1");
    }
    if (d.shots && *d.shots == 0) throw ArgumentError("shots must be positive");
    if (d.resamples && *d.resamples == 0) throw ArgumentError("resamples must be positive");
    switch (d.kind) {
        case AssertionKind::Classical:
        case AssertionKind::Uniform:
            check_qubit_list(d.qubits, n_qubits, "assertion");
            if (!d.group0.empty() || !d.group1.empty()) throw ArgumentError("only product assertions take qubit groups");
            if (d.resamples) throw ArgumentError("resamples only applies to product assertions");
            break;
        case AssertionKind::Product: {
            check_qubit_list(d.group0, n_qubits, "product group 0");
            check_qubit_list(d.group1, n_qubits, "product group 1");
            if (!d.qubits.empty()) throw ArgumentError("product assertions take two groups, not a qubit list");
            for (auto q : d.group0) {
                if (std::find(d.group1.begin(), d.group1.end(), q) != d.group1.end()) {
                    throw ArgumentError("product groups overlap on qubit " + std::to_string(q));
                }
            }
            break;
        }
    }
    if (d.expected_bitstring) {
        if (d.kind != AssertionKind::Classical) throw ArgumentError("expect= only applies to classical assertions");
        if (d.expected_bitstring->size() != d.qubits.size()) {
            throw ArgumentError("expected bitstring '" + *d.expected_bitstring + "' has " +
                                std::to_string(d.expected_bitstring->size()) + " characters for " +
                                std::to_string(d.qubits.size()) + " asserted qubits");
        }
        parse_bits(*d.expected_bitstring);
    }
}

Circuit::Circuit(std::size_t n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits == 0 || n_qubits > kMaxQubits) {
        throw CapacityError("register size " + std::to_string(n_qubits) + " outside supported range 1.." +
                            std::to_string(kMaxQubits));
    }
}

Circuit &Circuit::add(GateOp gate) {
    validate_gate(gate, n_qubits_);
    if (gate.classical_condition) {
        const auto bit = *gate.classical_condition;
        const bool written = std::any_of(items_.begin(), items_.end(), [bit](const CircuitItem &item) {
            const auto *m = std::get_if<Measurement>(&item);
            return m && m->classical_bit == bit;
        });
        if (!written) {
            throw CircuitError("conditional gate reads classical bit " + std::to_string(bit) +
                               " before any measurement writes it");
        }
    }
    items_.emplace_back(std::move(gate));
    return *this;
}

Circuit &Circuit::measure(std::size_t qubit, std::size_t classical_bit) {
    if (qubit >= n_qubits_) throw IndexError("measured qubit " + std::to_string(qubit) + " out of range");
    n_classical_bits_ = std::max(n_classical_bits_, classical_bit + 1);
    items_.emplace_back(Measurement{qubit, classical_bit});
    return *this;
}

Circuit &Circuit::add(AssertionDirective directive) {
    validate_directive(directive, n_qubits_);
    items_.emplace_back(std::move(directive));
    return *this;
}

std::vector<std::size_t> Circuit::assertion_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < items_.size(); ++i) {
        if (std::holds_alternative<AssertionDirective>(items_[i])) out.push_back(i);
    }
    return out;
}

std::size_t Circuit::measurement_count(std::size_t upto) const {
    upto = std::min(upto, items_.size());
    return static_cast<std::size_t>(std::count_if(items_.begin(), items_.begin() + static_cast<std::ptrdiff_t>(upto),
                                                  [](const CircuitItem &it) { return std::holds_alternative<Measurement>(it); }));
}

void Circuit::validate() const {
    std::vector<bool> written(n_classical_bits_, false);
    for (const auto &item : items_) {
        if (const auto *g = std::get_if<GateOp>(&item)) {
            validate_gate(*g, n_qubits_);
            if (g->classical_condition &&
                (*g->classical_condition >= written.size() || !written[*g->classical_condition])) {
                throw CircuitError("conditional gate reads classical bit " + std::to_string(*g->classical_condition) +
                                   " before any measurement writes it");
            }
        } else if (const auto *m = std::get_if<Measurement>(&item)) {
            if (m->qubit >= n_qubits_) throw IndexError("measured qubit out of range");
            if (m->classical_bit >= written.size()) throw CircuitError("classical bit index out of range");
            written[m->classical_bit] = true;
        } else {
            validate_directive(std::get<AssertionDirective>(item), n_qubits_);
        }
    }
}

Trajectory run_trajectory(const Circuit &circuit, std::size_t upto, Rng &rng) {
    if (upto > circuit.size()) {
        throw ArgumentError("prefix length " + std::to_string(upto) + " exceeds circuit length " +
                            std::to_string(circuit.size()));
    }
    Trajectory t{StateVector(circuit.n_qubits()), std::vector<int>(circuit.n_classical_bits(), 0)};
    std::vector<bool> written(circuit.n_classical_bits(), false);
    const auto &items = circuit.items();
    for (std::size_t i = 0; i < upto; ++i) {
        if (const auto *g = std::get_if<GateOp>(&items[i])) {
            if (g->classical_condition) {
                const auto bit = *g->classical_condition;
                if (bit >= written.size() || !written[bit]) {
                    throw CircuitError("conditional gate at item " + std::to_string(i) + " reads unwritten classical bit " +
                                       std::to_string(bit));
                }
                if (t.bits[bit] != 1) continue;
            }
            apply_gate(t.state, *g);
        } else if (const auto *m = std::get_if<Measurement>(&items[i])) {
            t.bits[m->classical_bit] = measure_qubit(t.state, m->qubit, rng);
            written[m->classical_bit] = true;
        }
    }
    return t;
}

}  // namespace qassert
