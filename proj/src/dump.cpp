// Copyright 2026 The qmt Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "format.hpp"
#include "qmt/circuit.hpp"
#include "spectrum.hpp"

namespace qmt {

namespace {

// Bins below this magnitude are reported with phase 0 so that round-off does not
// produce arbitrary angles.
constexpr double kPhaseFloor = 1e-12;

}  // namespace

DumpTable dump_table(const QmtSignal& psi, DumpKind kind) {
    DumpTable table;
    const FrequencyPlan& plan = psi.plan();
    switch (kind) {
        case DumpKind::state: {
            table.columns = {"x", "re", "im"};
            const Amplitudes alpha = analyze(psi);
            for (std::size_t x = 0; x < alpha.size(); ++x) {
                table.rows.push_back({static_cast<double>(x), alpha[x].real(), alpha[x].imag()});
            }
            break;
        }
        case DumpKind::time: {
            table.columns = {"t", "re", "im"};
            for (std::size_t k = 0; k < psi.size(); ++k) {
                table.rows.push_back({plan.sample_time(k), psi[k].real(), psi[k].imag()});
            }
            break;
        }
        case DumpKind::spectrum: {
            table.columns = {"omega", "magnitude", "phase"};
            const Samples c = detail::spectrum(psi.samples());
            const long n = static_cast<long>(c.size());
            for (long m = -n / 2; m < n / 2; ++m) {
                const cplx v = c[detail::bin_index(m, c.size())];
                const double mag = std::abs(v);
                table.rows.push_back({static_cast<double>(m) * plan.delta_omega, mag, mag < kPhaseFloor ? 0.0 : std::arg(v)});
            }
            break;
        }
    }
    return table;
}

std::string render_dump(const QmtSignal& psi, DumpKind kind, OutputFormat format) {
    const DumpTable table = dump_table(psi, kind);
    if (format == OutputFormat::csv) {
        std::string out = table.columns[0] + "," + table.columns[1] + "," + table.columns[2] + "\n";
        for (const auto& row : table.rows) {
            out += detail::format_double(row[0]) + "," + detail::format_double(row[1]) + "," +
                   detail::format_double(row[2]) + "\n";
        }
        return out;
    }
    nlohmann::ordered_json doc;
    doc["kind"] = std::string(to_string(kind));
    doc["n_qubits"] = psi.plan().n_qubits;
    doc["qubits"] = psi.qubits().values();
    doc["delta_omega"] = psi.plan().delta_omega;
    doc["columns"] = table.columns;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        doc["rows"].push_back(row);
    }
    return doc.dump(2) + "\n";
}

void dump_outputs(const QmtSignal& psi, DumpKind kind, const std::filesystem::path& path, OutputFormat format) {
    const std::string text = render_dump(psi, kind, format);
    std::error_code ec;
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open dump file '" + path.string() + "' for writing");
    }
    out << text;
    out.flush();
    if (!out) {
        throw std::runtime_error("failed writing dump file '" + path.string() + "'");
    }
}

}  // namespace qmt
