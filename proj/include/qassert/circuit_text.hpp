// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

#include "qassert/circuit.hpp"

namespace qassert {

/// Parses the line-based circuit format:
///
///     # comment
///     qubits 3
///     h 0
///     rx 1.5707963 1
///     cx 0 1
///     cr1 0.785398 1 0          # angle, control, target
///     measure 0 -> 0
///     cif 0 x 2                 # apply "x 2" when classical bit 0 is 1
///     assert_classical 0 1 expect=01 alpha=0.05 shots=500 verdict=pass
///     assert_uniform 0 1 2 alpha=0.01
///     assert_product [0] [1 2] resamples=9999 verdict=fail
///
/// `qubits N` must be the first statement. Errors carry 1-based line and
/// column numbers (ParseError).
Circuit parse_circuit(std::string_view text);

/// Canonical text form; parse_circuit(format_circuit(c)) == c.
std::string format_circuit(const Circuit &circuit);

/// Reads and parses a file. Throws Error if it cannot be opened.
Circuit load_circuit_file(const std::string &path);

}  // namespace qassert
