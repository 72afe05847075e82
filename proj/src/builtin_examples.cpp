// SPDX-License-Identifier: Apache-2.0

#include "qassert/builtin_examples.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>

#include "qassert/errors.hpp"

namespace qassert {

namespace {

std::vector<std::size_t> range(std::size_t n) {
    std::vector<std::size_t> out(n);
    std::iota(out.begin(), out.end(), std::size_t{0});
    return out;
}

std::string bits_param(const ExampleParams &params, const std::string &key, std::size_t max_len) {
    const auto &value = params.at(key);
    if (value.empty() || value.size() > max_len || value.find_first_not_of("01") != std::string::npos) {
        throw ArgumentError(key + " must be a bitstring of 1.." + std::to_string(max_len) + " characters, got '" + value + "'");
    }
    return value;
}

double real_param(const ExampleParams &params, const std::string &key) {
    const auto &value = params.at(key);
    double out = 0.0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || ptr != value.data() + value.size() || !std::isfinite(out)) {
        throw ArgumentError(key + " must be a real number, got '" + value + "'");
    }
    return out;
}

Circuit bell() {
    Circuit c(2);
    c.h(0).cx(0, 1);
    c.add(AssertionDirective::product({0}, {1}).expect(false));
    return c;
}

Circuit xgate() {
    Circuit c(2);
    c.x(0).x(1);
    c.add(AssertionDirective::product({0}, {1}).expect(true));
    return c;
}

Circuit teleport(double angle) {
    Circuit c(3);
    c.add(GateOp::rotation(GateKind::RX, angle, 0));
    c.h(1).cx(1, 2);
    c.cx(0, 1);
    // q0 is correlated with the pair (q1, q2) until Alice's Hadamard.
    c.add(AssertionDirective::product({0}, {1, 2}).expect(false));
    c.h(0);
    c.measure(0, 0).measure(1, 1);
    c.add(GateOp::single(GateKind::X, 2).when(1));
    c.add(GateOp::single(GateKind::Z, 2).when(0));
    return c;
}

Circuit bernstein_vazirani(const std::string &secret, bool drop_setup_hadamard) {
    const std::size_t n = secret.size();
    const std::size_t aux = n;
    const auto data = range(n);
    Circuit c(n + 1);
    c.x(aux).h(aux);
    if (!drop_setup_hadamard) {
        for (auto q : data) c.h(q);
    }
    c.add(AssertionDirective::uniform(data).expect(true));
    c.add(AssertionDirective::product(data, {aux}).expect(true));
    for (std::size_t i = 0; i < n; ++i) {
        if (secret[i] == '1') c.cx(i, aux);
    }
    c.add(AssertionDirective::uniform(data).expect(true));
    c.add(AssertionDirective::product(data, {aux}).expect(true));
    for (auto q : data) c.h(q);
    c.add(AssertionDirective::classical(data, secret).expect(true));
    return c;
}

Circuit qft(const std::string &input, bool drop_qft_hadamard) {
    const std::size_t n = input.size();
    const auto all = range(n);
    Circuit c(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (input[i] == '1') c.x(i);
    }
    c.add(AssertionDirective::classical(all).expect(true));
    c.add(AssertionDirective::uniform(all).expect(false));
    for (std::size_t i = 0; i < n; ++i) {
        if (!drop_qft_hadamard) c.h(i);
        for (std::size_t j = i + 1; j < n; ++j) {
            const double angle = 2.0 * std::numbers::pi / std::ldexp(1.0, static_cast<int>(j - i + 1));
            c.add(GateOp::controlled_phase(angle, j, i));
        }
    }
    c.add(AssertionDirective::classical(all).expect(false));
    c.add(AssertionDirective::uniform(all).expect(true));
    return c;
}

}  // namespace

std::vector<ExampleInfo> builtin_examples() {
    return {
        {"bell", "Bell pair; product assertion detects the entanglement", {}, {}},
        {"xgate", "X on both qubits of |00>; product assertion must report independence", {}, {}},
        {"teleport", "quantum teleportation with a product assertion on the entangled register",
         {{"angle", "1.5707963267948966"}}, {}},
        {"bv", "Bernstein-Vazirani with uniform, product and classical checkpoints", {{"secret", "01011"}},
         {"drop-setup-hadamard"}},
        {"qft", "quantum Fourier transform with classical/uniform checkpoints", {{"input", "10000"}}, {"drop-qft-hadamard"}},
    };
}

Circuit build_example(std::string_view name, const ExampleParams &params, std::optional<std::string_view> bug) {
    const auto catalogue = builtin_examples();
    const auto it = std::find_if(catalogue.begin(), catalogue.end(), [&](const ExampleInfo &e) { return e.name == name; });
    if (it == catalogue.end()) throw LookupError("unknown example '" + std::string(name) + "'");

    ExampleParams merged = it->params;
    for (const auto &[key, value] : params) {
        if (!merged.contains(key)) throw LookupError("example '" + it->name + "' has no parameter '" + key + "'");
        merged[key] = value;
    }
    if (bug && std::find(it->bugs.begin(), it->bugs.end(), *bug) == it->bugs.end()) {
        throw LookupError("example '" + it->name + "' has no injectable bug '" + std::string(*bug) + "'");
    }
    const bool injected = bug.has_value();

    if (name == "bell") return bell();
    if (name == "xgate") return xgate();
    if (name == "teleport") return teleport(real_param(merged, "angle"));
    if (name == "bv") return bernstein_vazirani(bits_param(merged, "secret", kMaxQubits - 1), injected);
    return qft(bits_param(merged, "input", kMaxQubits), injected);
}

}  // namespace qassert
