// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qassert/assertions.hpp"
#include "qassert/circuit.hpp"

namespace qassert {

enum class ReportFormat { Text, Json };

struct ProgramConfig {
    AssertionConfig assertion;
    ReportFormat format = ReportFormat::Text;

    /// Throws ArgumentError unless alpha is in (0,1), resamples >= 1 and any
    /// shots override is positive.
    void validate() const;

    friend bool operator==(const ProgramConfig &, const ProgramConfig &) = default;
};

/// Outcome of one checkpoint: a result, or the error that stopped it.
struct CheckpointEntry {
    std::size_t item_index = 0;
    AssertionDirective directive;
    std::optional<AssertionResult> result;
    std::optional<std::string> error;

    friend bool operator==(const CheckpointEntry &, const CheckpointEntry &) = default;
};

struct RunSummary {
    std::size_t checkpoints = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t errors = 0;
    std::size_t mismatched = 0;
};

struct RunReport {
    std::string source;
    ProgramConfig config;
    /// One entry per assertion directive, in circuit order.
    std::vector<CheckpointEntry> checkpoints;

    RunSummary summary() const;
    /// True when nothing errored and every expected verdict matched; this
    /// is the CLI's exit-status contract.
    bool ok() const;

    friend bool operator==(const RunReport &, const RunReport &) = default;
};

/// Evaluates every checkpoint of `circuit`. Per-checkpoint failures are
/// recorded in the entry; an invalid config throws before anything runs.
RunReport run_program(const Circuit &circuit, const ProgramConfig &config, std::string source = {});

}  // namespace qassert
