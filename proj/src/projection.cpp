// Copyright 2026 The qmt Authors
// SPDX-License-Identifier: Apache-2.0

#include "qmt/projection.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "spectrum.hpp"

namespace qmt {

namespace {

void require_bit(int bit) {
    if (bit != 0 && bit != 1) {
        throw std::invalid_argument("bit value must be 0 or 1, got " + std::to_string(bit));
    }
}

void require_member(const QubitSet& qubits, int qubit, const char* op) {
    if (!qubits.contains(qubit)) {
        throw std::invalid_argument(std::string(op) + ": qubit " + std::to_string(qubit) +
                                    " is not in the signal's qubit set");
    }
}

cplx dc_value(const QmtSignal& constant) {
    cplx acc{};
    for (const cplx& v : constant.samples()) {
        acc += v;
    }
    return acc / static_cast<double>(constant.size());
}

void cascade(const QmtSignal& psi, std::uint64_t prefix, Amplitudes& out) {
    const QubitSet& qubits = psi.qubits();
    if (qubits.empty()) {
        out[prefix] = dc_value(psi);
        return;
    }
    const int top = qubits[qubits.size() - 1];
    const std::uint64_t shift = qubits.size() - 1;
    for (int a = 0; a < 2; ++a) {
        cascade(partial_projection(psi, top, a), prefix | (static_cast<std::uint64_t>(a) << shift), out);
    }
}

}  // namespace

QmtSignal mix(const QmtSignal& psi, int qubit, int bit) {
    require_member(psi.qubits(), qubit, "mix");
    require_bit(bit);
    const long shift = bit == 0 ? -(1L << qubit) : (1L << qubit);
    const std::size_t n = psi.size();
    Samples out(n);
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = psi[k] * detail::unit_tone(shift, k, n);
    }
    return QmtSignal(psi.plan(), psi.qubits(), std::move(out));
}

PassbandSet passband_set(int n_qubits, const QubitSet& qubits, int qubit, int bit) {
    if (!qubits.empty() && qubits.values().back() >= n_qubits) {
        throw std::invalid_argument("passband_set: qubit set exceeds register size");
    }
    require_member(qubits, qubit, "passband_set");
    require_bit(bit);
    const QubitSet rest = qubits.without(qubit);
    PassbandSet keep;
    for (std::uint64_t b = 0; b < rest.dimension(); ++b) {
        keep.allowed_bins.insert(basis_bin(rest, b));
    }
    return keep;
}

PassbandSet passband_set(int n_qubits, int qubit, int bit) {
    return passband_set(n_qubits, QubitSet::range(n_qubits), qubit, bit);
}

QmtSignal spectral_mask(const QmtSignal& raw, const PassbandSet& keep) {
    const std::size_t n = raw.size();
    const Samples coefficients = detail::spectrum(raw.samples());
    Samples kept(n);
    for (long m : keep.allowed_bins) {
        const std::size_t k = detail::bin_index(m, n);
        kept[k] = coefficients[k];
    }
    return QmtSignal(raw.plan(), raw.qubits(), detail::from_spectrum(kept));
}

QmtSignal partial_projection(const QmtSignal& psi, int qubit, int bit) {
    const QmtSignal mixed = mix(psi, qubit, bit);
    const PassbandSet keep = passband_set(psi.plan().n_qubits, psi.qubits(), qubit, bit);
    return spectral_mask(mixed, keep).relabeled(psi.qubits().without(qubit));
}

QmtSignal projection(const QmtSignal& psi, int qubit, int bit) {
    const QmtSignal partial = partial_projection(psi, qubit, bit);
    return tensor_product(basis_signal(psi.plan(), QubitSet{qubit}, static_cast<std::uint64_t>(bit)), partial);
}

DualPartials dual_partials(const QmtSignal& psi, int first, int second) {
    if (first == second) {
        throw std::invalid_argument("dual_partials: addressed qubits must differ");
    }
    require_member(psi.qubits(), first, "dual_partials");
    require_member(psi.qubits(), second, "dual_partials");
    const QmtSignal p0 = partial_projection(psi, first, 0);
    const QmtSignal p1 = partial_projection(psi, first, 1);
    return DualPartials{first,
                        second,
                        {partial_projection(p0, second, 0), partial_projection(p0, second, 1),
                         partial_projection(p1, second, 0), partial_projection(p1, second, 1)}};
}

Amplitudes cascade_readout(const QmtSignal& psi) {
    Amplitudes out(psi.qubits().dimension());
    cascade(psi, 0, out);
    return out;
}

std::vector<double> template_signal(const FrequencyPlan& plan, const QubitSet& qubits, int qubit) {
    require_member(qubits, qubit, "template_signal");
    const std::size_t n = plan.samples_per_period;
    const double gain = std::ldexp(1.0, static_cast<int>(qubits.size()) - 1);
    std::vector<double> out(n, gain);
    for (int j : qubits) {
        if (j == qubit) {
            continue;
        }
        for (std::size_t k = 0; k < n; ++k) {
            out[k] *= detail::unit_tone(1L << j, k, n).real();
        }
    }
    return out;
}

QmtSignal convolve_project(const QmtSignal& psi, int qubit, int bit) {
    const QmtSignal mixed = mix(psi, qubit, bit);
    const std::vector<double> comb = template_signal(psi.plan(), psi.qubits(), qubit);
    const std::size_t n = psi.size();
    Samples out(n);
    for (std::size_t k = 0; k < n; ++k) {
        cplx acc{};
        for (std::size_t j = 0; j < n; ++j) {
            acc += mixed[j] * comb[(k + n - j) % n];
        }
        out[k] = acc / static_cast<double>(n);
    }
    return QmtSignal(psi.plan(), psi.qubits().without(qubit), std::move(out));
}

}  // namespace qmt
