// Copyright 2026 The qmt Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "format.hpp"
#include "qmt/circuit.hpp"

namespace qmt {

namespace {

constexpr int kMaxCircuitQubits = 12;

std::vector<std::string_view> split_words(std::string_view line) {
    std::vector<std::string_view> words;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos])) != 0) {
            ++pos;
        }
        const std::size_t start = pos;
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos])) == 0) {
            ++pos;
        }
        if (pos > start) {
            words.push_back(line.substr(start, pos - start));
        }
    }
    return words;
}

class LineParser {
  public:
    LineParser(int line, std::vector<std::string_view> words) : line_(line), words_(std::move(words)) {}

    [[nodiscard]] std::string_view directive() const { return words_.front(); }
    [[nodiscard]] std::size_t arg_count() const { return words_.size() - 1; }
    [[nodiscard]] std::string_view arg(std::size_t k) const { return words_[k + 1]; }

    void expect_args(std::size_t lo, std::size_t hi) const {
        const std::size_t got = arg_count();
        if (got < lo || got > hi) {
            const std::string want = lo == hi ? std::to_string(lo) : std::to_string(lo) + " to " + std::to_string(hi);
            const std::string_view token = got > hi ? arg(hi) : directive();
            fail(ParseErrorKind::arity, token,
                 "'" + std::string(directive()) + "' expects " + want + " argument(s), got " + std::to_string(got));
        }
    }

    [[noreturn]] void fail(ParseErrorKind kind, std::string_view token, const std::string& detail) const {
        throw ParseError(kind, line_, std::string(token), detail);
    }

    long integer(std::size_t k) const {
        const std::string_view tok = arg(k);
        long value = 0;
        const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size()) {
            fail(ParseErrorKind::invalid_number, tok, "expected an integer");
        }
        return value;
    }

    int qubit(std::size_t k, int n_qubits) const {
        const long q = integer(k);
        if (q < 0 || q >= n_qubits) {
            fail(ParseErrorKind::qubit_out_of_range, arg(k),
                 "qubit index outside [0, " + std::to_string(n_qubits) + ")");
        }
        return static_cast<int>(q);
    }

    cplx complex_entry(std::size_t k) const {
        const std::string_view tok = arg(k);
        const std::size_t comma = tok.find(',');
        if (comma == std::string_view::npos) {
            fail(ParseErrorKind::invalid_number, tok, "expected a complex entry re,im");
        }
        return {real_part(tok, tok.substr(0, comma)), real_part(tok, tok.substr(comma + 1))};
    }

  private:
    double real_part(std::string_view whole, std::string_view part) const {
        double v = 0.0;
        const auto res = std::from_chars(part.data(), part.data() + part.size(), v);
        if (part.empty() || res.ec != std::errc{} || res.ptr != part.data() + part.size() || !std::isfinite(v)) {
            fail(ParseErrorKind::invalid_number, whole, "expected a complex entry re,im with finite parts");
        }
        return v;
    }

    int line_;
    std::vector<std::string_view> words_;
};

std::optional<Strategy> optional_strategy(const LineParser& p, std::size_t k) {
    if (p.arg_count() <= k) {
        return std::nullopt;
    }
    const auto s = parse_strategy(p.arg(k));
    if (!s) {
        p.fail(ParseErrorKind::invalid_strategy, p.arg(k), "strategy must be sim, binary, brute or threshold");
    }
    return s;
}

GateMatrix matrix_args(const LineParser& p, std::size_t first_arg, std::size_t dim) {
    std::vector<cplx> entries;
    for (std::size_t k = 0; k < dim * dim; ++k) {
        entries.push_back(p.complex_entry(first_arg + k));
    }
    return GateMatrix(dim, std::move(entries));
}

Instruction parse_instruction(const LineParser& p, int n) {
    const std::string_view d = p.directive();
    if (d == "h" || d == "x" || d == "z") {
        p.expect_args(1, 1);
        const std::string name(1, static_cast<char>(d[0] - 'a' + 'A'));
        return GateInstr{std::string(d), GateOp::one(p.qubit(0, n), standard_gate(name))};
    }
    if (d == "cnot") {
        p.expect_args(2, 2);
        const int control = p.qubit(0, n);
        const int target = p.qubit(1, n);
        if (control == target) {
            p.fail(ParseErrorKind::control_equals_target, p.arg(1), "control equals target");
        }
        return GateInstr{"cnot", GateOp::controlled_not(control, target)};
    }
    if (d == "gate1") {
        p.expect_args(5, 5);
        const int q = p.qubit(0, n);
        return GateInstr{"gate1", GateOp::one(q, matrix_args(p, 1, 2))};
    }
    if (d == "gate2") {
        p.expect_args(18, 18);
        const int first = p.qubit(0, n);
        const int second = p.qubit(1, n);
        if (first == second) {
            p.fail(ParseErrorKind::control_equals_target, p.arg(1), "gate2 qubits must differ");
        }
        return GateInstr{"gate2", GateOp::two(first, second, matrix_args(p, 2, 4))};
    }
    if (d == "measure") {
        p.expect_args(1, 2);
        const int q = p.qubit(0, n);
        return MeasureInstr{q, optional_strategy(p, 1)};
    }
    if (d == "measure_all") {
        p.expect_args(0, 1);
        return MeasureAllInstr{optional_strategy(p, 0)};
    }
    if (d == "dump") {
        p.expect_args(2, 2);
        const auto kind = parse_dump_kind(p.arg(0));
        if (!kind) {
            p.fail(ParseErrorKind::invalid_dump_kind, p.arg(0), "dump kind must be state, time or spectrum");
        }
        return DumpInstr{*kind, std::string(p.arg(1))};
    }
    p.fail(ParseErrorKind::unknown_directive, d, "unknown directive");
}

bool is_known_directive(std::string_view d) {
    for (std::string_view known : {"h", "x", "z", "cnot", "gate1", "gate2", "measure", "measure_all", "dump"}) {
        if (d == known) {
            return true;
        }
    }
    return false;
}

std::string format_entry(cplx c) {
    return detail::format_double(c.real()) + "," + detail::format_double(c.imag());
}

}  // namespace

std::string_view to_string(Strategy s) {
    switch (s) {
        case Strategy::sim: return "sim";
        case Strategy::binary: return "binary";
        case Strategy::brute: return "brute";
        case Strategy::threshold: return "threshold";
    }
    return "?";
}

std::string_view to_string(DumpKind k) {
    switch (k) {
        case DumpKind::state: return "state";
        case DumpKind::time: return "time";
        case DumpKind::spectrum: return "spectrum";
    }
    return "?";
}

std::optional<Strategy> parse_strategy(std::string_view token) {
    for (Strategy s : {Strategy::sim, Strategy::binary, Strategy::brute, Strategy::threshold}) {
        if (token == to_string(s)) {
            return s;
        }
    }
    return std::nullopt;
}

std::optional<DumpKind> parse_dump_kind(std::string_view token) {
    for (DumpKind k : {DumpKind::state, DumpKind::time, DumpKind::spectrum}) {
        if (token == to_string(k)) {
            return k;
        }
    }
    return std::nullopt;
}

std::string_view to_string(ParseErrorKind kind) {
    switch (kind) {
        case ParseErrorKind::unknown_directive: return "unknown directive";
        case ParseErrorKind::arity: return "arity mismatch";
        case ParseErrorKind::qubit_out_of_range: return "qubit out of range";
        case ParseErrorKind::invalid_number: return "invalid number";
        case ParseErrorKind::invalid_qubit_count: return "invalid qubit count";
        case ParseErrorKind::control_equals_target: return "control equals target";
        case ParseErrorKind::missing_qubits: return "missing qubits directive";
        case ParseErrorKind::duplicate_qubits: return "duplicate qubits directive";
        case ParseErrorKind::invalid_strategy: return "invalid strategy";
        case ParseErrorKind::invalid_dump_kind: return "invalid dump kind";
    }
    return "?";
}

ParseError::ParseError(ParseErrorKind kind, int line, std::string token, const std::string& detail)
    : std::runtime_error("line " + std::to_string(line) + ": " + std::string(to_string(kind)) + " at '" + token +
                         "': " + detail),
      kind_(kind),
      line_(line),
      token_(std::move(token)) {}

CircuitProgram parse_circuit(std::string_view text) {
    CircuitProgram program;
    bool have_qubits = false;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        std::vector<std::string_view> words = split_words(line);
        if (words.empty()) {
            continue;
        }
        const LineParser p(line_no, std::move(words));

        if (p.directive() == "qubits") {
            if (have_qubits) {
                p.fail(ParseErrorKind::duplicate_qubits, p.directive(), "qubit count already declared");
            }
            p.expect_args(1, 1);
            const long n = p.integer(0);
            if (n < 1 || n > kMaxCircuitQubits) {
                p.fail(ParseErrorKind::invalid_qubit_count, p.arg(0),
                       "qubit count must be in [1, " + std::to_string(kMaxCircuitQubits) + "]");
            }
            program.n_qubits = static_cast<int>(n);
            have_qubits = true;
            continue;
        }
        if (!have_qubits) {
            if (!is_known_directive(p.directive())) {
                p.fail(ParseErrorKind::unknown_directive, p.directive(), "unknown directive");
            }
            p.fail(ParseErrorKind::missing_qubits, p.directive(), "'qubits N' must come first");
        }
        program.instructions.push_back(parse_instruction(p, program.n_qubits));
        program.lines.push_back(line_no);
    }
    return program;
}

std::string print_circuit(const CircuitProgram& program) {
    std::ostringstream out;
    if (program.n_qubits == 0 && program.instructions.empty()) {
        return {};
    }
    out << "qubits " << program.n_qubits << '\n';
    for (const Instruction& ins : program.instructions) {
        if (const auto* g = std::get_if<GateInstr>(&ins)) {
            out << g->directive;
            if (g->directive == "cnot" || g->directive == "gate2") {
                out << ' ' << g->op.first << ' ' << g->op.second;
            } else {
                out << ' ' << g->op.first;
            }
            if (g->directive == "gate1" || g->directive == "gate2") {
                for (const cplx& c : g->op.matrix.entries()) {
                    out << ' ' << format_entry(c);
                }
            }
        } else if (const auto* m = std::get_if<MeasureInstr>(&ins)) {
            out << "measure " << m->qubit;
            if (m->strategy) {
                out << ' ' << to_string(*m->strategy);
            }
        } else if (const auto* ma = std::get_if<MeasureAllInstr>(&ins)) {
            out << "measure_all";
            if (ma->strategy) {
                out << ' ' << to_string(*ma->strategy);
            }
        } else if (const auto* dmp = std::get_if<DumpInstr>(&ins)) {
            out << "dump " << to_string(dmp->kind) << ' ' << dmp->path;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace qmt
