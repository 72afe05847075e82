// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qassert/circuit.hpp"

namespace qassert {

using ExampleParams = std::map<std::string, std::string>;

struct ExampleInfo {
    std::string name;
    std::string summary;
    /// Parameter name -> default value.
    ExampleParams params;
    /// Names accepted by --inject-bug.
    std::vector<std::string> bugs;
};

/// Catalogue of the built-in circuits: bell, xgate, teleport, bv, qft.
std::vector<ExampleInfo> builtin_examples();

/// Builds a built-in circuit with its checkpoints and expected verdicts.
///
///  - bell:     H, CX; product [0] [1] expected to fail.
///  - xgate:    X on both qubits of |00>; product [0] [1] expected to pass.
///  - teleport: param angle (rx on the input qubit, default pi/2); product
///              [0] [1 2] after Alice's CX and before her Hadamard, expected
///              to fail, followed by the measurements and corrections.
///  - bv:       param secret (default 01011); data qubits 0..n-1, auxiliary
///              qubit n. Uniform + product after setup, uniform + product
///              after the oracle, classical (expect=secret) at the end.
///              Bug drop-setup-hadamard removes the data-register Hadamards.
///  - qft:      param input (default 10000). Classical + uniform after state
///              preparation (expected pass, fail) and after the transform
///              (expected fail, pass). Bug drop-qft-hadamard removes the
///              transform's Hadamards.
///
/// Throws LookupError for unknown names, parameters or bugs, ArgumentError
/// for malformed parameter values.
Circuit build_example(std::string_view name, const ExampleParams &params = {},
                      std::optional<std::string_view> bug = std::nullopt);

}  // namespace qassert
