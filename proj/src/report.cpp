// SPDX-License-Identifier: Apache-2.0

#include "qassert/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "qassert/errors.hpp"

namespace qassert {

namespace {

using nlohmann::json;

template <typename T>
json optional_json(const std::optional<T> &v) {
    return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const json &j, const char *key) {
    const auto &v = j.at(key);
    if (v.is_null()) return std::nullopt;
    return v.get<T>();
}

AssertionKind kind_from_name(const std::string &name) {
    for (auto k : {AssertionKind::Classical, AssertionKind::Uniform, AssertionKind::Product}) {
        if (assertion_kind_name(k) == name) return k;
    }
    throw ArgumentError("unknown assertion kind '" + name + "' in report");
}

json directive_to_json(const AssertionDirective &d) {
    json j;
    j["kind"] = std::string(assertion_kind_name(d.kind));
    j["qubits"] = d.qubits;
    j["group0"] = d.group0;
    j["group1"] = d.group1;
    j["alpha"] = optional_json(d.alpha);
    j["shots"] = optional_json(d.shots);
    j["resamples"] = optional_json(d.resamples);
    j["expect"] = optional_json(d.expected_bitstring);
    j["verdict"] = d.expected_verdict ? json(*d.expected_verdict ? "pass" : "fail") : json(nullptr);
    return j;
}

AssertionDirective directive_from_json(const json &j) {
    AssertionDirective d;
    d.kind = kind_from_name(j.at("kind").get<std::string>());
    d.qubits = j.at("qubits").get<std::vector<std::size_t>>();
    d.group0 = j.at("group0").get<std::vector<std::size_t>>();
    d.group1 = j.at("group1").get<std::vector<std::size_t>>();
    d.alpha = optional_from<double>(j, "alpha");
    d.shots = optional_from<std::size_t>(j, "shots");
    d.resamples = optional_from<std::size_t>(j, "resamples");
    d.expected_bitstring = optional_from<std::string>(j, "expect");
    if (const auto v = optional_from<std::string>(j, "verdict")) d.expected_verdict = (*v == "pass");
    return d;
}

json result_to_json(const AssertionResult &r) {
    json j;
    j["p_value"] = r.p_value.value;
    j["method"] = std::string(test_method_name(r.p_value.method));
    j["degrees_of_freedom"] = optional_json(r.p_value.degrees_of_freedom);
    j["resamples"] = optional_json(r.p_value.resamples);
    j["alpha"] = r.alpha;
    j["passed"] = r.passed;
    j["shots_used"] = r.shots_used;
    j["classical_target"] = optional_json(r.classical_target);
    j["table_shape"] = r.table_shape ? json::array({r.table_shape->first, r.table_shape->second}) : json(nullptr);
    j["matches_expected"] = optional_json(r.matches_expected);
    j["warnings"] = r.warnings;
    return j;
}

AssertionResult result_from_json(const json &j, const CheckpointEntry &entry) {
    AssertionResult r;
    r.directive = entry.directive;
    r.item_index = entry.item_index;
    r.p_value.value = j.at("p_value").get<double>();
    const auto method = test_method_from_name(j.at("method").get<std::string>());
    if (!method) throw ArgumentError("unknown test method in report");
    r.p_value.method = *method;
    r.p_value.degrees_of_freedom = optional_from<int>(j, "degrees_of_freedom");
    r.p_value.resamples = optional_from<std::size_t>(j, "resamples");
    r.alpha = j.at("alpha").get<double>();
    r.passed = j.at("passed").get<bool>();
    r.shots_used = j.at("shots_used").get<std::size_t>();
    r.classical_target = optional_from<std::string>(j, "classical_target");
    if (const auto &shape = j.at("table_shape"); !shape.is_null()) {
        r.table_shape = std::make_pair(shape.at(0).get<std::size_t>(), shape.at(1).get<std::size_t>());
    }
    r.matches_expected = optional_from<bool>(j, "matches_expected");
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    return r;
}

json report_to_json(const RunReport &report) {
    json j;
    j["source"] = report.source;
    const auto &a = report.config.assertion;
    j["config"] = {{"seed", a.seed},
                   {"alpha", a.alpha},
                   {"shots", optional_json(a.shots)},
                   {"resamples", a.resamples},
                   {"legacy_chisq", a.legacy_chisq},
                   {"format", std::string(format_name(report.config.format))}};
    json entries = json::array();
    for (const auto &c : report.checkpoints) {
        entries.push_back({{"item_index", c.item_index},
                           {"directive", directive_to_json(c.directive)},
                           {"result", c.result ? result_to_json(*c.result) : json(nullptr)},
                           {"error", optional_json(c.error)}});
    }
    j["checkpoints"] = std::move(entries);
    const auto s = report.summary();
    j["summary"] = {{"checkpoints", s.checkpoints}, {"passed", s.passed},         {"failed", s.failed},
                    {"errors", s.errors},           {"mismatched", s.mismatched}, {"ok", report.ok()}};
    return j;
}

std::string format_p(double p) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", p);
    return buf;
}

std::string join(const std::vector<std::size_t> &qs) {
    std::string s;
    for (std::size_t i = 0; i < qs.size(); ++i) s += (i ? " " : "") + std::to_string(qs[i]);
    return s;
}

std::string qubit_field(const AssertionDirective &d) {
    if (d.kind == AssertionKind::Product) return "[" + join(d.group0) + "] [" + join(d.group1) + "]";
    return join(d.qubits);
}

std::string render_text(const RunReport &report) {
    std::ostringstream os;
    const auto &a = report.config.assertion;
    os << "report " << (report.source.empty() ? "<circuit>" : report.source) << " (seed " << a.seed << ", alpha "
       << format_p(a.alpha) << ", resamples " << a.resamples << (a.legacy_chisq ? ", legacy chi-square" : "") << ")\n";
    for (const auto &c : report.checkpoints) {
        os << "item " << c.item_index << "  " << assertion_kind_name(c.directive.kind) << "  qubits " << qubit_field(c.directive)
           << "  ";
        if (c.error) {
            os << "ERROR  " << *c.error << '\n';
            continue;
        }
        const auto &r = *c.result;
        os << test_method_name(r.p_value.method) << "  p=" << format_p(r.p_value.value) << "  "
           << (r.passed ? "passed" : "failed") << "  expected ";
        if (!r.matches_expected) {
            os << "-";
        } else {
            os << (*c.directive.expected_verdict ? "pass" : "fail") << (*r.matches_expected ? " (match)" : " (MISMATCH)");
        }
        os << "  shots " << r.shots_used;
        if (r.table_shape) os << "  table " << r.table_shape->first << "x" << r.table_shape->second;
        if (r.classical_target) os << "  target " << *r.classical_target;
        os << '\n';
        for (const auto &w : r.warnings) os << "  warning: " << w << '\n';
    }
    const auto s = report.summary();
    os << s.checkpoints << " checkpoints: " << s.passed << " passed, " << s.failed << " failed, " << s.errors << " errors, "
       << s.mismatched << " mismatched\n";
    return os.str();
}

}  // namespace

std::string_view format_name(ReportFormat format) noexcept { return format == ReportFormat::Json ? "json" : "text"; }

std::string render_report(const RunReport &report, ReportFormat format) {
    if (format == ReportFormat::Json) return report_to_json(report).dump(2) + "\n";
    return render_text(report);
}

RunReport report_from_json(std::string_view json_text) {
    try {
        const json j = json::parse(json_text);
        RunReport report;
        report.source = j.at("source").get<std::string>();
        const auto &cfg = j.at("config");
        auto &a = report.config.assertion;
        a.seed = cfg.at("seed").get<std::uint64_t>();
        a.alpha = cfg.at("alpha").get<double>();
        a.shots = optional_from<std::size_t>(cfg, "shots");
        a.resamples = cfg.at("resamples").get<std::size_t>();
        a.legacy_chisq = cfg.at("legacy_chisq").get<bool>();
        report.config.format = cfg.at("format").get<std::string>() == "json" ? ReportFormat::Json : ReportFormat::Text;
        for (const auto &e : j.at("checkpoints")) {
            CheckpointEntry entry;
            entry.item_index = e.at("item_index").get<std::size_t>();
            entry.directive = directive_from_json(e.at("directive"));
            if (!e.at("result").is_null()) entry.result = result_from_json(e.at("result"), entry);
            entry.error = optional_from<std::string>(e, "error");
            report.checkpoints.push_back(std::move(entry));
        }
        return report;
    } catch (const nlohmann::json::exception &e) {
        throw ArgumentError(std::string("malformed report JSON: ") + e.what());
    }
}

}  // namespace qassert
