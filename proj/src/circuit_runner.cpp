// Copyright 2026 The qmt Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "json.hpp"

#include "format.hpp"
#include "qmt/circuit.hpp"
#include "qmt/noise.hpp"
#include "qmt/oracle.hpp"
#include "qmt/projection.hpp"

namespace qmt {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
constexpr std::uint32_t kPrefixStream = 0xffffffffU;

std::mt19937_64 stream_rng(std::uint64_t seed, std::uint32_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), stream};
    return std::mt19937_64(seq);
}

double open_unit(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    double u = 0.0;
    while (u == 0.0) {
        u = uniform(rng);
    }
    return u;
}

double safe_p0(const Weights& w) {
    return w.total() > 0.0 ? w.q0 / w.total() : std::numeric_limits<double>::quiet_NaN();
}

std::string outcome_label(int qubit, const std::optional<int>& bit) {
    return "qubit" + std::to_string(qubit) + "=" + (bit ? std::to_string(*bit) : std::string("none"));
}

struct Machine {
    QmtSignal psi;
    std::optional<oracle::StateVector> sv;
    bool diverged = false;  // noise or a threshold realization entered the signal
};

class Runner {
  public:
    Runner(const CircuitProgram& program, const RunOptions& options)
        : program_(program), options_(options), plan_(make_plan(program.n_qubits)) {
        report_.n_qubits = program.n_qubits;
        report_.shots = options.shots;
        for (std::size_t k = 0; k < program.instructions.size(); ++k) {
            const Instruction& ins = program.instructions[k];
            if (std::holds_alternative<GateInstr>(ins)) {
                last_gate_ = k;
            }
            const auto* m = std::get_if<MeasureInstr>(&ins);
            const auto* ma = std::get_if<MeasureAllInstr>(&ins);
            if ((m != nullptr || ma != nullptr) && first_measure_ == kNone) {
                first_measure_ = k;
            }
            if (m != nullptr || ma != nullptr) {
                record_of_[k] = report_.measurements.size();
                const Strategy s = (m != nullptr ? m->strategy : ma->strategy).value_or(options.default_strategy);
                report_.measurements.push_back(MeasurementRecord{k, ma != nullptr, s, {}, {}});
            }
        }
        if (first_measure_ == kNone) {
            first_measure_ = program.instructions.size();
        }
        if (options.oracle) {
            report_.oracle_divergence = 0.0;
        }
    }

    RunReport run() {
        Machine base{basis_signal(plan_, QubitSet::range(program_.n_qubits), 0), std::nullopt, false};
        if (options_.oracle) {
            base.sv = oracle::StateVector(program_.n_qubits);
        }
        std::mt19937_64 prefix_rng = stream_rng(options_.seed, kPrefixStream);
        if (last_gate_ == kNone) {
            inject_noise(base, prefix_rng);
        }
        execute(0, first_measure_, base, prefix_rng, true);

        for (int shot = 0; shot < options_.shots; ++shot) {
            Machine m = base;
            if (shot > 0) {
                m.sv.reset();
            }
            std::mt19937_64 rng = stream_rng(options_.seed, static_cast<std::uint32_t>(shot));
            execute(first_measure_, program_.instructions.size(), m, rng, shot == 0);
        }
        return report_;
    }

  private:
    void execute(std::size_t from, std::size_t to, Machine& m, std::mt19937_64& rng, bool primary) {
        for (std::size_t k = from; k < to; ++k) {
            try {
                step(k, m, rng, primary);
            } catch (const RunError&) {
                throw;
            } catch (const std::exception& e) {
                const int line = k < program_.lines.size() ? program_.lines[k] : 0;
                throw RunError(k, "instruction " + std::to_string(k) + (line > 0 ? " (line " + std::to_string(line) + ")" : "") +
                                      ": " + e.what());
            }
        }
    }

    void step(std::size_t k, Machine& m, std::mt19937_64& rng, bool primary) {
        const Instruction& ins = program_.instructions[k];
        if (const auto* g = std::get_if<GateInstr>(&ins)) {
            m.psi = apply_gate(m.psi, g->op);
            if (m.sv) {
                *m.sv = oracle::sv_apply(*m.sv, g->op);
            }
            compare(m);
            if (k == last_gate_) {
                inject_noise(m, rng);
            }
        } else if (const auto* meas = std::get_if<MeasureInstr>(&ins)) {
            MeasurementRecord& rec = report_.measurements[record_of_.at(k)];
            const StepRecord s = measure_one(m, meas->qubit, rec.strategy, rng);
            ++rec.histogram[outcome_label(s.qubit, s.bit)];
            if (primary) {
                rec.first_shot.push_back(s);
            }
        } else if (std::holds_alternative<MeasureAllInstr>(ins)) {
            MeasurementRecord& rec = report_.measurements[record_of_.at(k)];
            std::vector<int> order;
            for (int q = 0; q < program_.n_qubits; ++q) {
                order.push_back(q);
            }
            if (rec.strategy == Strategy::binary) {
                std::reverse(order.begin(), order.end());
            }
            std::vector<std::optional<int>> bits(static_cast<std::size_t>(program_.n_qubits));
            for (int q : order) {
                const StepRecord s = measure_one(m, q, rec.strategy, rng);
                bits[static_cast<std::size_t>(q)] = s.bit;
                if (primary) {
                    rec.first_shot.push_back(s);
                }
            }
            std::string label;
            for (int q = program_.n_qubits - 1; q >= 0; --q) {
                label += outcome_label(q, bits[static_cast<std::size_t>(q)]);
                if (q > 0) {
                    label += ",";
                }
            }
            ++rec.histogram[label];
        } else if (const auto* d = std::get_if<DumpInstr>(&ins)) {
            if (!primary) {
                return;
            }
            std::filesystem::path path(d->path);
            if (path.is_relative() && !options_.out_dir.empty()) {
                path = options_.out_dir / path;
            }
            dump_outputs(m.psi, d->kind, path, options_.format);
            report_.dumps.push_back(path.string());
        }
    }

    StepRecord measure_one(Machine& m, int qubit, Strategy strategy, std::mt19937_64& rng) {
        if (strategy == Strategy::threshold) {
            ThresholdResult r =
                measure_threshold_retry(m.psi, qubit, options_.threshold, rng, options_.max_threshold_attempts);
            // On detection the state becomes the projected realization; otherwise it is left untouched.
            if (r.bit) {
                m.psi = std::move(r.collapsed);
                m.diverged = true;
                if (m.sv) {
                    *m.sv = oracle::sv_project(*m.sv, qubit, *r.bit);
                }
            }
            return StepRecord{qubit, r.weights, safe_p0(r.weights), r.bit, r.attempts};
        }
        MeasurementOutcome out = [&] {
            switch (strategy) {
                case Strategy::binary: return measure_dominant(m.psi, qubit);
                case Strategy::brute: return measure_brute(m.psi, qubit, open_unit(rng));
                default: return measure_simulated(m.psi, qubit, open_unit(rng));
            }
        }();
        m.psi = std::move(out.collapsed);
        if (m.sv) {
            *m.sv = oracle::sv_project(*m.sv, qubit, out.bit);
        }
        compare(m);
        return StepRecord{qubit, out.weights, safe_p0(out.weights), out.bit, 1};
    }

    void inject_noise(Machine& m, std::mt19937_64& rng) {
        if (!options_.snr_db) {
            return;
        }
        if (!(norm_sq(m.psi) > 0.0)) {
            return;
        }
        m.psi = add_white_noise(m.psi, snr_to_sigma(m.psi, *options_.snr_db, rng()));
        m.diverged = true;
    }

    void compare(const Machine& m) {
        if (!m.sv || m.diverged || !report_.oracle_divergence) {
            return;
        }
        const Amplitudes alpha = analyze(m.psi);
        double worst = *report_.oracle_divergence;
        for (std::size_t x = 0; x < alpha.size(); ++x) {
            worst = std::max(worst, std::abs(alpha[x] - (*m.sv)[x]));
        }
        report_.oracle_divergence = worst;
    }

    const CircuitProgram& program_;
    const RunOptions& options_;
    FrequencyPlan plan_;
    RunReport report_;
    std::size_t last_gate_ = kNone;
    std::size_t first_measure_ = kNone;
    std::map<std::size_t, std::size_t> record_of_;
};

nlohmann::ordered_json number_or_null(double v) {
    return std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json(nullptr);
}

}  // namespace

RunError::RunError(std::size_t instruction, const std::string& what)
    : std::runtime_error(what), instruction_(instruction) {}

RunReport run_program(const CircuitProgram& program, const RunOptions& options) {
    if (options.shots < 1) {
        throw std::invalid_argument("run_program: shots must be >= 1");
    }
    validate(options.threshold);
    if (program.n_qubits == 0) {
        if (!program.instructions.empty()) {
            throw std::invalid_argument("run_program: instructions without a qubit count");
        }
        RunReport empty;
        empty.shots = options.shots;
        if (options.oracle) {
            empty.oracle_divergence = 0.0;
        }
        return empty;
    }
    return Runner(program, options).run();
}

std::string report_to_json(const RunReport& report) {
    nlohmann::ordered_json doc;
    doc["n_qubits"] = report.n_qubits;
    doc["shots"] = report.shots;
    doc["measurements"] = nlohmann::ordered_json::array();
    for (const MeasurementRecord& rec : report.measurements) {
        nlohmann::ordered_json m;
        m["instruction"] = rec.instruction;
        m["kind"] = rec.all_qubits ? "measure_all" : "measure";
        m["strategy"] = std::string(to_string(rec.strategy));
        m["steps"] = nlohmann::ordered_json::array();
        for (const StepRecord& s : rec.first_shot) {
            nlohmann::ordered_json js;
            js["qubit"] = s.qubit;
            js["q0"] = s.weights.q0;
            js["q1"] = s.weights.q1;
            js["p0"] = number_or_null(s.p0);
            js["p1"] = number_or_null(1.0 - s.p0);
            js["bit"] = s.bit ? nlohmann::ordered_json(*s.bit) : nlohmann::ordered_json(nullptr);
            js["attempts"] = s.attempts;
            m["steps"].push_back(js);
        }
        nlohmann::ordered_json hist = nlohmann::ordered_json::object();
        nlohmann::ordered_json freq = nlohmann::ordered_json::object();
        for (const auto& [label, count] : rec.histogram) {
            hist[label] = count;
            freq[label] = static_cast<double>(count) / static_cast<double>(report.shots);
        }
        m["histogram"] = hist;
        m["frequencies"] = freq;
        doc["measurements"].push_back(m);
    }
    if (report.oracle_divergence) {
        doc["oracle_divergence"] = *report.oracle_divergence;
    }
    doc["dumps"] = report.dumps;
    return doc.dump(2) + "\n";
}

std::string report_to_csv(const RunReport& report) {
    std::ostringstream out;
    out << "n_qubits," << report.n_qubits << "\nshots," << report.shots << "\n";
    out << "\nstep,instruction,strategy,qubit,q0,q1,p0,bit,attempts\n";
    for (const MeasurementRecord& rec : report.measurements) {
        for (const StepRecord& s : rec.first_shot) {
            out << "step," << rec.instruction << ',' << to_string(rec.strategy) << ',' << s.qubit << ','
                << detail::format_double(s.weights.q0) << ',' << detail::format_double(s.weights.q1) << ','
                << (std::isfinite(s.p0) ? detail::format_double(s.p0) : std::string()) << ','
                << (s.bit ? std::to_string(*s.bit) : std::string("none")) << ',' << s.attempts << '\n';
        }
    }
    out << "\nhistogram,instruction,label,count,frequency\n";
    for (const MeasurementRecord& rec : report.measurements) {
        for (const auto& [label, count] : rec.histogram) {
            out << "histogram," << rec.instruction << ",\"" << label << "\"," << count << ','
                << detail::format_double(static_cast<double>(count) / static_cast<double>(report.shots)) << '\n';
        }
    }
    if (report.oracle_divergence) {
        out << "\noracle_divergence," << detail::format_double(*report.oracle_divergence) << '\n';
    }
    for (const std::string& path : report.dumps) {
        out << "dump," << path << '\n';
    }
    return out.str();
}

}  // namespace qmt
