// SPDX-License-Identifier: Apache-2.0

// Command-line front end: run circuit files or built-in examples and report
// every assertion checkpoint.

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qassert/builtin_examples.hpp"
#include "qassert/circuit_text.hpp"
#include "qassert/errors.hpp"
#include "qassert/program.hpp"
#include "qassert/report.hpp"

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct RunFlags {
    std::optional<std::size_t> shots;
    std::optional<std::uint64_t> seed;
    double alpha = qassert::kDefaultAlpha;
    std::size_t resamples = qassert::kDefaultResamples;
    bool legacy_chisq = false;
    std::string format = "text";
};

void add_run_flags(CLI::App *cmd, RunFlags &flags) {
    cmd->add_option("--shots", flags.shots, "Shots for checkpoints without their own shots= (default: per kind)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", flags.seed, "Run seed (default: $QASSERT_SEED, else 0)");
    cmd->add_option("--alpha", flags.alpha, "Default critical p-value")->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--resamples", flags.resamples, "Monte Carlo resamples")->check(CLI::PositiveNumber);
    cmd->add_flag("--legacy-chisq", flags.legacy_chisq, "Evaluate product assertions with the add-1 chi-square test");
    cmd->add_option("--format", flags.format, "Report format")->check(CLI::IsMember({"text", "json"}));
}

qassert::ProgramConfig to_config(const RunFlags &flags) {
    qassert::ProgramConfig config;
    config.assertion.shots = flags.shots;
    config.assertion.alpha = flags.alpha;
    config.assertion.resamples = flags.resamples;
    config.assertion.legacy_chisq = flags.legacy_chisq;
    config.format = flags.format == "json" ? qassert::ReportFormat::Json : qassert::ReportFormat::Text;
    if (flags.seed) {
        config.assertion.seed = *flags.seed;
    } else if (const char *env = std::getenv("QASSERT_SEED"); env && *env) {
        try {
            config.assertion.seed = std::stoull(env);
        } catch (const std::exception &) {
            throw qassert::ArgumentError(std::string("QASSERT_SEED is not an unsigned integer: ") + env);
        }
    }
    return config;
}

int run_and_report(const qassert::Circuit &circuit, const qassert::ProgramConfig &config, const std::string &source) {
    const auto report = qassert::run_program(circuit, config, source);
    std::cout << qassert::render_report(report, config.format);
    return report.ok() ? EXIT_SUCCESS : kExitMismatch;
}

qassert::ExampleParams parse_params(const std::vector<std::string> &raw) {
    qassert::ExampleParams params;
    for (const auto &kv : raw) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) throw qassert::ArgumentError("--param expects key=value, got '" + kv + "'");
        params[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    return params;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Statistical assertion checkpoints for state-vector quantum circuits"};
    app.require_subcommand(1);

    RunFlags run_flags;
    std::string file;
    auto *run = app.add_subcommand("run", "Run every checkpoint in a circuit file");
    run->add_option("FILE", file, "Circuit file")->required();
    add_run_flags(run, run_flags);

    RunFlags example_flags;
    std::string example_name;
    std::vector<std::string> raw_params;
    std::optional<std::string> bug;
    auto *example = app.add_subcommand("example", "Run a built-in example circuit");
    example->add_option("NAME", example_name, "Example name (see list-examples)")->required();
    example->add_option("--param", raw_params, "Example parameter key=value (repeatable)");
    example->add_option("--inject-bug", bug, "Inject a named bug into the example");
    add_run_flags(example, example_flags);

    bool print_circuit = false;
    example->add_flag("--print-circuit", print_circuit, "Print the example in circuit-file form instead of running it");

    auto *list = app.add_subcommand("list-examples", "List the built-in examples");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*list) {
            for (const auto &e : qassert::builtin_examples()) {
                std::cout << e.name << "  " << e.summary << '\n';
                for (const auto &[key, value] : e.params) std::cout << "    --param " << key << "=" << value << '\n';
                for (const auto &b : e.bugs) std::cout << "    --inject-bug " << b << '\n';
            }
            return EXIT_SUCCESS;
        }
        if (*run) {
            const auto config = to_config(run_flags);
            return run_and_report(qassert::load_circuit_file(file), config, file);
        }
        const auto circuit = qassert::build_example(example_name, parse_params(raw_params),
                                                    bug ? std::optional<std::string_view>(*bug) : std::nullopt);
        if (print_circuit) {
            std::cout << qassert::format_circuit(circuit);
            return EXIT_SUCCESS;
        }
        std::string source = "example " + example_name;
        for (const auto &p : raw_params) source += " " + p;
        if (bug) source += " +bug " + *bug;
        return run_and_report(circuit, to_config(example_flags), source);
    } catch (const qassert::Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
