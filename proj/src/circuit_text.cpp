// SPDX-License-Identifier: Apache-2.0

#include "qassert/circuit_text.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "qassert/errors.hpp"

namespace qassert {

namespace {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto is_break = [&](std::size_t k) {
        const char ch = line[k];
        return ch == ' ' || ch == '\t' || ch == '\r' || ch == ',' || ch == '[' || ch == ']' ||
               (ch == '-' && k + 1 < line.size() && line[k + 1] == '>');
    };
    while (i < line.size()) {
        const char ch = line[i];
        if (ch == '#') break;
        if (ch == ' ' || ch == '\t' || ch == '\r' || ch == ',') {
            ++i;
        } else if (ch == '[' || ch == ']') {
            out.push_back({line.substr(i, 1), i + 1});
            ++i;
        } else if (ch == '-' && i + 1 < line.size() && line[i + 1] == '>') {
            out.push_back({line.substr(i, 2), i + 1});
            i += 2;
        } else {
            const std::size_t start = i;
            while (i < line.size() && line[i] != '#' && !is_break(i)) ++i;
            out.push_back({line.substr(start, i - start), start + 1});
        }
    }
    return out;
}

class LineParser {
  public:
    LineParser(std::size_t line_no, std::vector<Token> tokens, std::size_t line_length)
        : line_(line_no), tokens_(std::move(tokens)), end_column_(line_length + 1) {}

    [[noreturn]] void fail(const Token &at, const std::string &message) const { throw ParseError(line_, at.column, message); }
    [[noreturn]] void fail_here(const std::string &message) const {
        throw ParseError(line_, pos_ < tokens_.size() ? tokens_[pos_].column : end_column_, message);
    }

    bool done() const { return pos_ >= tokens_.size(); }
    const Token &peek() const { return tokens_[pos_]; }
    const Token &next(const std::string &what) {
        if (done()) fail_here("expected " + what);
        return tokens_[pos_++];
    }

    std::size_t index(const std::string &what, std::size_t limit, const std::string &limit_name) {
        const Token &t = next(what);
        std::size_t value = 0;
        const auto *first = t.text.data();
        const auto *last = first + t.text.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last) fail(t, "expected " + what + ", got '" + std::string(t.text) + "'");
        if (value >= limit) {
            fail(t, what + " " + std::to_string(value) + " out of range (" + limit_name + " " + std::to_string(limit) + ")");
        }
        return value;
    }

    double real(const std::string &what) {
        const Token &t = next(what);
        double value = 0.0;
        const auto *first = t.text.data();
        const auto *last = first + t.text.size();
        if (first != last && *first == '+') ++first;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
            fail(t, "expected " + what + ", got '" + std::string(t.text) + "'");
        }
        return value;
    }

    void expect(std::string_view literal) {
        const Token &t = next("'" + std::string(literal) + "'");
        if (t.text != literal) fail(t, "expected '" + std::string(literal) + "', got '" + std::string(t.text) + "'");
    }

    void finish() const {
        if (!done()) fail(tokens_[pos_], "unexpected token '" + std::string(tokens_[pos_].text) + "'");
    }

    std::size_t line() const { return line_; }
    std::size_t pos() const { return pos_; }

  private:
    std::size_t line_;
    std::vector<Token> tokens_;
    std::size_t end_column_;
    std::size_t pos_ = 0;
};

GateOp parse_gate(LineParser &p, std::size_t n_qubits) {
    const Token &name = p.next("gate name");
    const auto kind = gate_from_name(name.text);
    if (!kind) p.fail(name, "unknown gate '" + std::string(name.text) + "'");
    GateOp gate;
    gate.kind = *kind;
    if (is_parameterized(*kind)) gate.angle = p.real("angle");
    for (std::size_t i = 0; i < control_count(*kind); ++i) gate.controls.push_back(p.index("qubit index", n_qubits, "register size"));
    for (std::size_t i = 0; i < target_count(*kind); ++i) gate.targets.push_back(p.index("qubit index", n_qubits, "register size"));
    return gate;
}

std::vector<std::size_t> parse_group(LineParser &p, std::size_t n_qubits) {
    p.expect("[");
    std::vector<std::size_t> group;
    while (!p.done() && p.peek().text != "]") group.push_back(p.index("qubit index", n_qubits, "register size"));
    p.expect("]");
    return group;
}

void parse_options(LineParser &p, AssertionDirective &d) {
    while (!p.done()) {
        const Token &t = p.next("option");
        const auto eq = t.text.find('=');
        if (eq == std::string_view::npos) p.fail(t, "expected key=value option, got '" + std::string(t.text) + "'");
        const auto key = t.text.substr(0, eq);
        const auto value = t.text.substr(eq + 1);
        auto number = [&](auto &out) {
            const auto *first = value.data();
            const auto *last = first + value.size();
            auto [ptr, ec] = std::from_chars(first, last, out);
            if (ec != std::errc() || ptr != last || value.empty()) p.fail(t, "malformed value for '" + std::string(key) + "'");
        };
        if (key == "alpha") {
            double a = 0.0;
            number(a);
            if (!(a > 0.0 && a < 1.0)) p.fail(t, "alpha must lie strictly between 0 and 1");
            d.alpha = a;
        } else if (key == "shots") {
            std::size_t s = 0;
            number(s);
            if (s == 0) p.fail(t, "shots must be positive");
            d.shots = s;
        } else if (key == "resamples" && d.kind == AssertionKind::Product) {
            std::size_t r = 0;
            number(r);
            if (r == 0) p.fail(t, "resamples must be positive");
            d.resamples = r;
        } else if (key == "expect" && d.kind == AssertionKind::Classical) {
            if (value.empty() || value.find_first_not_of("01") != std::string_view::npos) {
                p.fail(t, "expect= takes a bitstring of 0/1");
            }
            if (value.size() != d.qubits.size()) {
                p.fail(t, "expect= has " + std::to_string(value.size()) + " bits for " + std::to_string(d.qubits.size()) + " qubits");
            }
            d.expected_bitstring = std::string(value);
        } else if (key == "verdict") {
            if (value == "pass") {
                d.expected_verdict = true;
            } else if (value == "fail") {
                d.expected_verdict = false;
            } else {
                p.fail(t, "verdict must be 'pass' or 'fail'");
            }
        } else {
            p.fail(t, "unknown option '" + std::string(key) + "' for " + std::string(assertion_kind_name(d.kind)));
        }
    }
}

AssertionDirective parse_assertion(LineParser &p, const Token &head, std::size_t n_qubits) {
    AssertionDirective d;
    if (head.text == "assert_product") {
        d.kind = AssertionKind::Product;
        d.group0 = parse_group(p, n_qubits);
        d.group1 = parse_group(p, n_qubits);
        if (d.group0.empty() || d.group1.empty()) p.fail(head, "product assertion groups must be non-empty");
    } else {
        d.kind = head.text == "assert_classical" ? AssertionKind::Classical : AssertionKind::Uniform;
        while (!p.done() && p.peek().text.find('=') == std::string_view::npos) {
            d.qubits.push_back(p.index("qubit index", n_qubits, "register size"));
        }
        if (d.qubits.empty()) p.fail(head, "assertion needs at least one qubit");
    }
    parse_options(p, d);
    return d;
}

std::string format_real(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

void append_indices(std::ostringstream &os, const std::vector<std::size_t> &qs) {
    for (std::size_t i = 0; i < qs.size(); ++i) os << (i ? " " : "") << qs[i];
}

void format_gate(std::ostringstream &os, const GateOp &g) {
    os << gate_name(g.kind);
    if (g.angle) os << ' ' << format_real(*g.angle);
    for (auto c : g.controls) os << ' ' << c;
    for (auto t : g.targets) os << ' ' << t;
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
    std::optional<Circuit> circuit;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        const auto line = text.substr(start, end - start);
        ++line_no;
        start = end + 1;

        auto tokens = tokenize(line);
        if (tokens.empty()) {
            if (end == text.size()) break;
            continue;
        }
        LineParser p(line_no, tokens, line.size());
        const Token head = p.next("statement");

        if (head.text == "qubits") {
            if (circuit) p.fail(head, "'qubits' declared twice");
            const std::size_t n = p.index("qubit count", kMaxQubits + 1, "maximum");
            if (n == 0) p.fail(head, "register must have at least one qubit");
            p.finish();
            circuit.emplace(n);
            continue;
        }
        if (!circuit) p.fail(head, "the first statement must be 'qubits N'");
        const std::size_t n = circuit->n_qubits();

        try {
            if (head.text == "measure") {
                const std::size_t q = p.index("qubit index", n, "register size");
                p.expect("->");
                const std::size_t cb = p.index("classical bit index", kMaxQubits * 64, "limit");
                p.finish();
                circuit->measure(q, cb);
            } else if (head.text == "cif") {
                const std::size_t cb = p.index("classical bit index", kMaxQubits * 64, "limit");
                GateOp g = parse_gate(p, n);
                p.finish();
                circuit->add(g.when(cb));
            } else if (head.text == "assert_classical" || head.text == "assert_uniform" || head.text == "assert_product") {
                auto d = parse_assertion(p, head, n);
                circuit->add(std::move(d));
            } else {
                LineParser gate_parser(line_no, tokens, line.size());
                GateOp g = parse_gate(gate_parser, n);
                gate_parser.finish();
                circuit->add(std::move(g));
            }
        } catch (const ParseError &) {
            throw;
        } catch (const Error &e) {
            p.fail(head, e.what());
        }
        if (end == text.size()) break;
    }
    if (!circuit) throw ParseError(1, 1, "missing 'qubits N' declaration");
    return std::move(*circuit);
}

std::string format_circuit(const Circuit &circuit) {
    std::ostringstream os;
    os << "qubits " << circuit.n_qubits() << '\n';
    for (const auto &item : circuit.items()) {
        if (const auto *g = std::get_if<GateOp>(&item)) {
            if (g->classical_condition) os << "cif " << *g->classical_condition << ' ';
            format_gate(os, *g);
        } else if (const auto *m = std::get_if<Measurement>(&item)) {
            os << "measure " << m->qubit << " -> " << m->classical_bit;
        } else {
            const auto &d = std::get<AssertionDirective>(item);
            switch (d.kind) {
                case AssertionKind::Classical: os << "assert_classical "; append_indices(os, d.qubits); break;
                case AssertionKind::Uniform: os << "assert_uniform "; append_indices(os, d.qubits); break;
                case AssertionKind::Product:
                    os << "assert_product [";
                    append_indices(os, d.group0);
                    os << "] [";
                    append_indices(os, d.group1);
                    os << ']';
                    break;
            }
            if (d.expected_bitstring) os << " expect=" << *d.expected_bitstring;
            if (d.alpha) os << " alpha=" << format_real(*d.alpha);
            if (d.shots) os << " shots=" << *d.shots;
            if (d.resamples) os << " resamples=" << *d.resamples;
            if (d.expected_verdict) os << " verdict=" << (*d.expected_verdict ? "pass" : "fail");
        }
        os << '\n';
    }
    return os.str();
}

Circuit load_circuit_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open circuit file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_circuit(buf.str());
}

}  // namespace qassert
