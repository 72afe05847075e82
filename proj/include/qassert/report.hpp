// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

#include "qassert/program.hpp"

namespace qassert {

/// TEXT: a header, one line per checkpoint (item index, kind, qubits, test
/// method, p-value to 6 significant digits, verdict, expected-match flag)
/// and a summary line "N checkpoints: ...".
///
/// JSON schema (keys are emitted in sorted order, 2-space indent):
///
///     {
///       "source": string,
///       "config": {"seed", "alpha", "shots" (int|null), "resamples",
///                  "legacy_chisq", "format": "text"|"json"},
///       "checkpoints": [{
///         "item_index": int,
///         "directive": {"kind": "CLASSICAL"|"UNIFORM"|"PRODUCT",
///                       "qubits": [int], "group0": [int], "group1": [int],
///                       "alpha", "shots", "resamples", "expect", "verdict"
///                       (each null when unset; verdict is "pass"|"fail")},
///         "result": null | {"p_value": number, "method": string,
///                   "degrees_of_freedom": int|null, "resamples": int|null,
///                   "alpha": number, "passed": bool, "shots_used": int,
///                   "classical_target": string|null,
///                   "table_shape": [rows, cols]|null,
///                   "matches_expected": bool|null, "warnings": [string]},
///         "error": string|null
///       }],
///       "summary": {"checkpoints", "passed", "failed", "errors",
///                   "mismatched", "ok"}
///     }
std::string render_report(const RunReport &report, ReportFormat format);

/// Inverse of the JSON rendering. Throws ArgumentError on schema mismatch.
RunReport report_from_json(std::string_view json_text);

std::string_view format_name(ReportFormat format) noexcept;

}  // namespace qassert
