// Copyright 2026 The qmt Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file
 * Circuit files, the program runner, and plot-data dumps.
 *
 * Grammar (one directive per line, '#' starts a comment):
 *
 *     qubits N
 *     h I | x I | z I
 *     cnot CTRL TGT
 *     gate1 I re,im re,im re,im re,im          (row-major 2x2)
 *     gate2 I J re,im ... (16 entries)         (row-major 4x4, I is the high label bit)
 *     measure I [sim|binary|brute|threshold]
 *     measure_all [sim|binary|brute|threshold]
 *     dump state|time|spectrum PATH
 */

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qmt/gates.hpp"
#include "qmt/measure.hpp"
#include "qmt/signal.hpp"

namespace qmt {

enum class Strategy { sim, binary, brute, threshold };
enum class DumpKind { state, time, spectrum };
enum class OutputFormat { csv, structured };

std::string_view to_string(Strategy s);
std::string_view to_string(DumpKind k);
std::optional<Strategy> parse_strategy(std::string_view token);
std::optional<DumpKind> parse_dump_kind(std::string_view token);

struct GateInstr {
    std::string directive;  ///< h, x, z, cnot, gate1 or gate2
    GateOp op;

    friend bool operator==(const GateInstr&, const GateInstr&) = default;
};

struct MeasureInstr {
    int qubit;
    std::optional<Strategy> strategy;

    friend bool operator==(const MeasureInstr&, const MeasureInstr&) = default;
};

struct MeasureAllInstr {
    std::optional<Strategy> strategy;

    friend bool operator==(const MeasureAllInstr&, const MeasureAllInstr&) = default;
};

struct DumpInstr {
    DumpKind kind;
    std::string path;

    friend bool operator==(const DumpInstr&, const DumpInstr&) = default;
};

using Instruction = std::variant<GateInstr, MeasureInstr, MeasureAllInstr, DumpInstr>;

struct CircuitProgram {
    int n_qubits = 0;
    std::vector<Instruction> instructions;
    std::vector<int> lines;  ///< source line of each instruction; not part of equality

    friend bool operator==(const CircuitProgram& a, const CircuitProgram& b) {
        return a.n_qubits == b.n_qubits && a.instructions == b.instructions;
    }
};

enum class ParseErrorKind {
    unknown_directive,
    arity,
    qubit_out_of_range,
    invalid_number,
    invalid_qubit_count,
    control_equals_target,
    missing_qubits,
    duplicate_qubits,
    invalid_strategy,
    invalid_dump_kind,
};

std::string_view to_string(ParseErrorKind kind);

class ParseError : public std::runtime_error {
  public:
    ParseError(ParseErrorKind kind, int line, std::string token, const std::string& detail);

    [[nodiscard]] ParseErrorKind kind() const { return kind_; }
    [[nodiscard]] int line() const { return line_; }
    [[nodiscard]] const std::string& token() const { return token_; }

  private:
    ParseErrorKind kind_;
    int line_;
    std::string token_;
};

/// @throws ParseError with the line number and offending token.
CircuitProgram parse_circuit(std::string_view text);

/// Canonical text form; parse_circuit(print_circuit(p)) == p.
std::string print_circuit(const CircuitProgram& program);

struct RunOptions {
    std::uint64_t seed = 0;
    std::optional<double> snr_db;  ///< noise added once, right after the last gate
    int shots = 1;
    Strategy default_strategy = Strategy::sim;
    bool oracle = false;
    std::filesystem::path out_dir;  ///< base for relative dump paths
    OutputFormat format = OutputFormat::csv;
    ThresholdConfig threshold{};
    int max_threshold_attempts = 100;
};

struct StepRecord {
    int qubit;
    Weights weights;
    double p0;
    std::optional<int> bit;  ///< empty when threshold detection failed
    int attempts = 1;
};

struct MeasurementRecord {
    std::size_t instruction;
    bool all_qubits;
    Strategy strategy;
    std::vector<StepRecord> first_shot;
    std::map<std::string, int> histogram;
};

struct RunReport {
    int n_qubits = 0;
    int shots = 0;
    std::vector<MeasurementRecord> measurements;
    std::optional<double> oracle_divergence;  ///< max |amplitude difference| over noiseless steps
    std::vector<std::string> dumps;
};

class RunError : public std::runtime_error {
  public:
    RunError(std::size_t instruction, const std::string& what);
    [[nodiscard]] std::size_t instruction() const { return instruction_; }

  private:
    std::size_t instruction_;
};

/// @throws RunError naming the instruction index on engine failures.
RunReport run_program(const CircuitProgram& program, const RunOptions& options);

std::string report_to_json(const RunReport& report);
std::string report_to_csv(const RunReport& report);

/// Columns and rows of a dump: (x, re, im), (t_k, re, im) or (bin * delta_omega, |c|, arg c).
struct DumpTable {
    std::array<std::string, 3> columns;
    std::vector<std::array<double, 3>> rows;
};

DumpTable dump_table(const QmtSignal& psi, DumpKind kind);

/// Renders a dump table as text in the requested format.
std::string render_dump(const QmtSignal& psi, DumpKind kind, OutputFormat format);

/// Writes render_dump() to `path`, creating parent directories. @throws std::runtime_error if unwritable.
void dump_outputs(const QmtSignal& psi, DumpKind kind, const std::filesystem::path& path, OutputFormat format);

}  // namespace qmt
