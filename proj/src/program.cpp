// SPDX-License-Identifier: Apache-2.0

#include "qassert/program.hpp"

#include <future>

#include "qassert/errors.hpp"

namespace qassert {

void ProgramConfig::validate() const {
    if (!(assertion.alpha > 0.0 && assertion.alpha < 1.0)) throw ArgumentError("alpha must lie strictly between 0 and 1");
    if (assertion.resamples == 0) throw ArgumentError("resamples must be at least 1");
    if (assertion.shots && *assertion.shots == 0) throw ArgumentError("shots must be at least 1");
}

RunSummary RunReport::summary() const {
    RunSummary s;
    s.checkpoints = checkpoints.size();
    for (const auto &c : checkpoints) {
        if (c.error) {
            ++s.errors;
            continue;
        }
        if (c.result->passed) {
            ++s.passed;
        } else {
            ++s.failed;
        }
        if (c.result->matches_expected == false) ++s.mismatched;
    }
    return s;
}

bool RunReport::ok() const {
    const auto s = summary();
    return s.errors == 0 && s.mismatched == 0;
}

RunReport run_program(const Circuit &circuit, const ProgramConfig &config, std::string source) {
    config.validate();
    circuit.validate();

    // Checkpoints sample their own prefixes with their own seeds, so they can
    // run concurrently; entries are collected back in circuit order.
    const auto indices = circuit.assertion_indices();
    std::vector<std::future<CheckpointEntry>> pending;
    pending.reserve(indices.size());
    for (auto index : indices) {
        pending.push_back(std::async(std::launch::async, [&circuit, &config, index] {
            CheckpointEntry entry;
            entry.item_index = index;
            entry.directive = std::get<AssertionDirective>(circuit.items()[index]);
            try {
                entry.result = evaluate_checkpoint(circuit, index, config.assertion);
            } catch (const Error &e) {
                entry.error = e.what();
            }
            return entry;
        }));
    }

    RunReport report;
    report.source = std::move(source);
    report.config = config;
    for (auto &f : pending) report.checkpoints.push_back(f.get());
    return report;
}

}  // namespace qassert
