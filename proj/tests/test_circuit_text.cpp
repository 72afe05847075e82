// SPDX-License-Identifier: Apache-2.0

#include <random>

#include <gtest/gtest.h>

#include "qassert/builtin_examples.hpp"
#include "qassert/circuit_text.hpp"
#include "qassert/errors.hpp"

using namespace qassert;

namespace {

std::size_t error_line(std::string_view text) {
    try {
        parse_circuit(text);
    } catch (const ParseError &e) {
        return e.line();
    }
    return 0;
}

// Random valid program text over the whole statement grammar.
std::string random_program(std::mt19937_64 &rng) {
    const std::size_t n = 2 + rng() % 4;
    std::string text = "qubits " + std::to_string(n) + "\n";
    std::size_t bits_written = 0;
    auto q = [&] { return std::to_string(rng() % n); };
    auto two = [&] {
        const std::size_t a = rng() % n;
        const std::size_t b = (a + 1 + rng() % (n - 1)) % n;
        return std::to_string(a) + " " + std::to_string(b);
    };
    auto angle = [&] { return std::to_string(std::uniform_real_distribution<double>(-7, 7)(rng)); };
    for (int i = 0; i < 25; ++i) {
        switch (rng() % 11) {
            case 0: text += "h " + q(); break;
            case 1: text += "t " + q() + "  # comment"; break;
            case 2: text += "ry " + angle() + " " + q(); break;
            case 3: text += "cx " + two(); break;
            case 4: text += "cr1 " + angle() + " " + two(); break;
            case 5: text += "swap " + two(); break;
            case 6: text += "measure " + q() + " -> " + std::to_string(bits_written++); break;
            case 7:
                text += bits_written ? "cif " + std::to_string(rng() % bits_written) + " x " + q() : "z " + q();
                break;
            case 8: text += "assert_uniform " + q() + " alpha=0.01 verdict=pass"; break;
            case 9: text += "assert_classical " + q() + " expect=1 shots=50 verdict=fail"; break;
            case 10: text += "assert_product [0] [1] resamples=99"; break;
        }
        text += "\n";
    }
    return text;
}

}  // namespace

TEST(parse_circuit, bell_program) {
    const auto c = parse_circuit("qubits 2\nh 0\ncx 0 1\nassert_product [0] [1] alpha=0.05");
    Circuit want(2);
    auto product = AssertionDirective::product({0}, {1});
    product.alpha = 0.05;
    want.h(0).cx(0, 1).add(product);
    EXPECT_EQ(c, want);
    EXPECT_EQ(c.assertion_indices(), std::vector<std::size_t>{2});
}

TEST(parse_circuit, unknown_gate_reports_line) {
    try {
        parse_circuit("qubits 1\nbadgate 0");
        FAIL() << "expected ParseError";
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_EQ(e.column(), 1u);
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    }
}

TEST(parse_circuit, error_locations) {
    EXPECT_EQ(error_line("qubits 2\nh 0\ncx 0\n"), 3u);
    EXPECT_EQ(error_line("qubits 2\nh 2\n"), 2u);
    EXPECT_EQ(error_line("qubits 2\n\n# note\nrx 0\n"), 4u);
    EXPECT_EQ(error_line("qubits 2\ncif 0 x 1\n"), 2u);
    EXPECT_EQ(error_line("qubits 2\nassert_product [0] [0]\n"), 2u);
    EXPECT_EQ(error_line("qubits 2\nassert_uniform 0 alpha=1.5\n"), 2u);
    EXPECT_EQ(error_line("qubits 2\nassert_classical 0 1 expect=101\n"), 2u);
    EXPECT_EQ(error_line("qubits 2\nassert_uniform 0 verdict=maybe\n"), 2u);
    EXPECT_EQ(error_line("h 0\n"), 1u);
    EXPECT_EQ(error_line("qubits 2\nqubits 3\n"), 2u);
    EXPECT_EQ(error_line("qubits 0\n"), 1u);

    try {
        parse_circuit("qubits 2\nh   7\n");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.column(), 5u);
    }
}

TEST(parse_circuit, full_grammar) {
    const auto c = parse_circuit(
        "# teleport-like\n"
        "qubits 3\n"
        "rx 0.5 0\n"
        "cr1 1.25 0 2\n"
        "measure 0 -> 0\n"
        "cif 0 x 2\n"
        "cif 0 rz 0.25 1\n"
        "assert_classical 0 1 expect=01 alpha=0.01 shots=500 verdict=fail\n"
        "assert_product [0, 1] [2] resamples=199 verdict=pass\n");
    ASSERT_EQ(c.size(), 7u);
    EXPECT_EQ(std::get<GateOp>(c.items()[0]), GateOp::rotation(GateKind::RX, 0.5, 0));
    EXPECT_EQ(std::get<GateOp>(c.items()[1]), GateOp::controlled_phase(1.25, 0, 2));
    EXPECT_EQ(std::get<Measurement>(c.items()[2]), (Measurement{0, 0}));
    EXPECT_EQ(std::get<GateOp>(c.items()[3]), GateOp::single(GateKind::X, 2).when(0));
    EXPECT_EQ(std::get<GateOp>(c.items()[4]), GateOp::rotation(GateKind::RZ, 0.25, 1).when(0));
    const auto &classical = std::get<AssertionDirective>(c.items()[5]);
    EXPECT_EQ(classical.expected_bitstring, "01");
    EXPECT_EQ(classical.alpha, 0.01);
    EXPECT_EQ(classical.shots, 500u);
    EXPECT_EQ(classical.expected_verdict, false);
    const auto &product = std::get<AssertionDirective>(c.items()[6]);
    EXPECT_EQ(product.group0, (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(product.resamples, 199u);
    EXPECT_EQ(c.n_classical_bits(), 1u);
}

TEST(format_circuit, round_trip_of_builtins) {
    for (const auto &info : builtin_examples()) {
        const auto c = build_example(info.name);
        EXPECT_EQ(parse_circuit(format_circuit(c)), c) << info.name;
        for (const auto &bug : info.bugs) {
            const auto b = build_example(info.name, {}, bug);
            EXPECT_EQ(parse_circuit(format_circuit(b)), b) << info.name << " " << bug;
        }
    }
}

TEST(format_circuit, round_trip_of_random_programs) {
    std::mt19937_64 rng(606);
    for (int trial = 0; trial < 200; ++trial) {
        const std::string text = random_program(rng);
        const auto once = parse_circuit(text);
        EXPECT_EQ(parse_circuit(format_circuit(once)), once) << text;
    }
}

TEST(load_circuit_file, shipped_bv_matches_builtin) {
    const auto c = load_circuit_file(std::string(QASSERT_SOURCE_DIR) + "/circuits/bv.qc");
    EXPECT_EQ(c, build_example("bv"));
    EXPECT_EQ(c.assertion_indices().size(), 5u);
}

TEST(load_circuit_file, shipped_files_match_builtins) {
    for (const auto &info : builtin_examples()) {
        const auto c = load_circuit_file(std::string(QASSERT_SOURCE_DIR) + "/circuits/" + info.name + ".qc");
        EXPECT_EQ(c, build_example(info.name)) << info.name;
    }
}

TEST(load_circuit_file, missing_file) { EXPECT_THROW(load_circuit_file("/nonexistent/file.qc"), Error); }
