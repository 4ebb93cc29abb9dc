// Copyright 2026 The qmt Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file
 * Qubit-addressed projections built from a mixer and a comb bandpass filter.
 *
 * To address qubit i with value a, the signal is shifted by e^{-i omega_i t}
 * (a = 0) or e^{+i omega_i t} (a = 1). The wanted branch then sits exactly on
 * the basis bins of the remaining qubits, which a comb filter keeps while
 * rejecting the other branch. The filter depends only on the qubit set and
 * the addressed qubit, never on the state.
 */

#pragma once

#include <array>
#include <set>
#include <vector>

#include "qmt/signal.hpp"

namespace qmt {

/// Signed bins (units of delta_omega) passed by a comb filter.
struct PassbandSet {
    std::set<long> allowed_bins;

    friend bool operator==(const PassbandSet&, const PassbandSet&) = default;
};

/// Multiplies by e^{-i omega_i t} (bit 0) or e^{+i omega_i t} (bit 1). The result is not canonical.
QmtSignal mix(const QmtSignal& psi, int qubit, int bit);

/// {sum_{j in S \ {i}} (-1)^{b_j} 2^j}. Identical for bit 0 and bit 1.
PassbandSet passband_set(int n_qubits, const QubitSet& qubits, int qubit, int bit);
/// Passband set over the full register {0, ..., n-1}.
PassbandSet passband_set(int n_qubits, int qubit, int bit);

/// Ideal filter: zero every DFT bin not in `keep` (taken modulo N_s).
QmtSignal spectral_mask(const QmtSignal& raw, const PassbandSet& keep);

/// psi_a^(i) over S \ {i}; a constant signal equal to alpha_a when |S| = 1.
QmtSignal partial_projection(const QmtSignal& psi, int qubit, int bit);

/// Pi_a^(i) psi = |a>_i (x) psi_a^(i), over the same qubit set as psi.
QmtSignal projection(const QmtSignal& psi, int qubit, int bit);

/// psi_ab^(ij) for (a, b) in {0,1}^2, stored at index 2a + b.
struct DualPartials {
    int first;
    int second;
    std::array<QmtSignal, 4> partials;

    [[nodiscard]] const QmtSignal& at(int a, int b) const { return partials[static_cast<std::size_t>(2 * a + b)]; }
};

/// Projects on qubit i then on qubit j. @throws std::invalid_argument if i == j.
DualPartials dual_partials(const QmtSignal& psi, int first, int second);

/// Every alpha_x by chaining partial projections from the highest qubit down.
Amplitudes cascade_readout(const QmtSignal& psi);

/// 2^(|S|-1) prod_{j in S \ {i}} cos(omega_j t_k): a unit comb on the passband bins of qubit i.
std::vector<double> template_signal(const FrequencyPlan& plan, const QubitSet& qubits, int qubit);

/**
 * Partial projection by circular convolution of the mixed signal with the
 * template over one full period, divided by the comb gain N_s.
 */
QmtSignal convolve_project(const QmtSignal& psi, int qubit, int bit);

}  // namespace qmt
