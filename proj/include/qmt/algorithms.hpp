// Copyright 2026 The qmt Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file
 * End-to-end drivers: teleportation of one qubit between distinct carrier
 * tones, and Deutsch-Jozsa with full recovery of the oracle parameter.
 */

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "qmt/gates.hpp"
#include "qmt/signal.hpp"

namespace qmt {

/// Qubit roles inside the three-qubit teleportation plan.
struct TeleportLayout {
    static constexpr int alice = 2;
    static constexpr int shared = 1;
    static constexpr int bob = 0;
};

struct TeleportResult {
    int x;  ///< bit selected on Alice's qubit
    int y;  ///< bit selected on the shared qubit
    std::array<cplx, 2> alice_state_in;
    std::array<cplx, 2> bob_state_out;  ///< raw amplitudes on Bob's qubit; a scalar multiple of the input
    double residual;                     ///< max |c * out - in| for the best scalar c
    double fidelity;                     ///< |<in|out>|^2 / (||in||^2 ||out||^2)
    QmtSignal entangled;                 ///< after Alice's CNOT and Hadamard
    QmtSignal corrected;                 ///< selected projection after Bob's correction
};

/**
 * Runs the protocol on signals, picking projection (x, y) instead of a random
 * outcome. @throws std::invalid_argument if (alpha, beta) = (0, 0) or x, y are not bits.
 */
TeleportResult teleport(cplx alpha, cplx beta, int x, int y);

/// The same circuit on the dense state vector; returns Bob's amplitudes.
std::array<cplx, 2> teleport_reference(cplx alpha, cplx beta, int x, int y);

/// Gates for U_f in application order: X_0 if a_0, then CNOT(i -> 0) for each set a_i, i >= 1.
std::vector<GateOp> build_uf(int n, std::uint64_t a);

/// f(x) = a_0 xor (a_1 x_1 xor ... xor a_n x_n), x given over bits 1..n.
int dj_function(std::uint64_t a, std::uint64_t input_bits);

struct DjStages {
    QmtSignal initial;       ///< |0...0>|1>
    QmtSignal superposed;    ///< after Hadamards on every qubit
    QmtSignal after_oracle;  ///< after U_f and the output Hadamard
    QmtSignal final_state;   ///< after the input-register Hadamards
};

/// Noiseless signal pipeline. Output register is qubit 0; input register is qubits 1..n.
DjStages deutsch_jozsa_stages(int n, std::uint64_t a);

struct DjResult {
    int n;
    std::uint64_t a_true;
    std::uint64_t a_recovered;
    bool constant;  ///< a_recovered < 2
    std::optional<double> snr_db;
    std::uint64_t seed;
    QmtSignal measured_signal;  ///< final signal that was read out (noisy if snr_db is set)
};

/**
 * Runs the pipeline, optionally adds white noise at snr_db to the final
 * signal, then recovers a_n..a_1 by binary search over the input register and
 * a_0 from the sign of <a_n...a_1, 1|psi>.
 */
DjResult deutsch_jozsa(int n, std::uint64_t a, std::optional<double> snr_db = std::nullopt, std::uint64_t seed = 0);

}  // namespace qmt
