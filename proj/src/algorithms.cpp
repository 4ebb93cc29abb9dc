// Copyright 2026 The qmt Authors
// SPDX-License-Identifier: Apache-2.0

#include "qmt/algorithms.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qmt/measure.hpp"
#include "qmt/noise.hpp"
#include "qmt/oracle.hpp"
#include "qmt/projection.hpp"

namespace qmt {

namespace {

constexpr int kMaxDjInputs = 10;

void require_bits(int x, int y) {
    if ((x != 0 && x != 1) || (y != 0 && y != 1)) {
        throw std::invalid_argument("teleport: x and y must be bits");
    }
}

void require_input_state(cplx alpha, cplx beta) {
    if (std::norm(alpha) + std::norm(beta) == 0.0) {
        throw std::invalid_argument("teleport: input state is zero");
    }
}

void require_dj_args(int n, std::uint64_t a) {
    if (n < 1 || n > kMaxDjInputs) {
        throw std::invalid_argument("deutsch_jozsa: n must be in [1, " + std::to_string(kMaxDjInputs) + "]");
    }
    if (a >= (std::uint64_t{1} << (n + 1))) {
        throw std::invalid_argument("deutsch_jozsa: a must be below 2^(n+1)");
    }
}

}  // namespace

TeleportResult teleport(cplx alpha, cplx beta, int x, int y) {
    require_bits(x, y);
    require_input_state(alpha, beta);
    constexpr int A = TeleportLayout::alice;
    constexpr int S = TeleportLayout::shared;
    constexpr int B = TeleportLayout::bob;
    const FrequencyPlan plan = make_plan(3);
    const GateMatrix h = standard_gate("H");

    // Alice's qubit, and Bob's Bell pair prepared from |0>_S |0>_B.
    const std::array<cplx, 2> alice_amps{alpha, beta};
    const QmtSignal alice = synthesize(plan, QubitSet{A}, alice_amps);
    QmtSignal pair = tensor_product(basis_signal(plan, QubitSet{S}, 0), basis_signal(plan, QubitSet{B}, 0));
    pair = apply_1q(pair, S, h);
    pair = apply_cnot(pair, S, B);

    // Alice multiplies the received pair into her signal and rotates (A, S)
    // into the Bell basis: each (x, y) branch then holds X^x Z^y |phi> up to sign.
    QmtSignal joint = tensor_product(alice, pair);
    joint = apply_cnot(joint, S, A);
    joint = apply_1q(joint, S, h);

    const QmtSignal selected = projection(projection(joint, A, x), S, y);

    // Bob undoes X^x Z^y by applying X^x first, then Z^y.
    QmtSignal corrected = selected;
    if (x == 1) {
        corrected = apply_1q(corrected, B, standard_gate("X"));
    }
    if (y == 1) {
        corrected = apply_1q(corrected, B, standard_gate("Z"));
    }

    const Amplitudes out = analyze(dual_partials(corrected, A, S).at(x, y));
    const std::array<cplx, 2> bob{out[0], out[1]};

    const double out_norm = std::norm(bob[0]) + std::norm(bob[1]);
    const double in_norm = std::norm(alpha) + std::norm(beta);
    const cplx overlap = std::conj(bob[0]) * alpha + std::conj(bob[1]) * beta;
    const cplx scale = out_norm > 0.0 ? overlap / out_norm : cplx{};
    const double residual = std::max(std::abs(scale * bob[0] - alpha), std::abs(scale * bob[1] - beta));
    const double fidelity = out_norm > 0.0 ? std::norm(overlap) / (in_norm * out_norm) : 0.0;

    return TeleportResult{x, y, alice_amps, bob, residual, fidelity, joint, corrected};
}

std::array<cplx, 2> teleport_reference(cplx alpha, cplx beta, int x, int y) {
    using namespace oracle;
    require_bits(x, y);
    require_input_state(alpha, beta);
    constexpr int A = TeleportLayout::alice;
    constexpr int S = TeleportLayout::shared;
    constexpr int B = TeleportLayout::bob;
    const GateMatrix h = standard_gate("H");

    StateVector sv = sv_kron(StateVector(1, {alpha, beta}), StateVector(2));
    sv = sv_apply_1q(sv, S, h);
    sv = sv_apply_2q(sv, S, B, cnot_matrix());
    sv = sv_apply_2q(sv, S, A, cnot_matrix());
    sv = sv_apply_1q(sv, S, h);
    // Slice A first (qubit 2), then S (qubit 1); Bob's qubit stays as bit 0.
    StateVector bob = sv_slice(sv_slice(sv, A, x), S, y);
    if (x == 1) {
        bob = sv_apply_1q(bob, B, standard_gate("X"));
    }
    if (y == 1) {
        bob = sv_apply_1q(bob, B, standard_gate("Z"));
    }
    return {bob[0], bob[1]};
}

std::vector<GateOp> build_uf(int n, std::uint64_t a) {
    require_dj_args(n, a);
    std::vector<GateOp> ops;
    if ((a & 1U) != 0) {
        ops.push_back(GateOp::one(0, standard_gate("X")));
    }
    for (int i = 1; i <= n; ++i) {
        if (((a >> i) & 1U) != 0) {
            ops.push_back(GateOp::controlled_not(i, 0));
        }
    }
    return ops;
}

int dj_function(std::uint64_t a, std::uint64_t input_bits) {
    const std::uint64_t parity = std::popcount(a & input_bits & ~std::uint64_t{1}) & 1U;
    return static_cast<int>((a & 1U) ^ parity);
}

DjStages deutsch_jozsa_stages(int n, std::uint64_t a) {
    require_dj_args(n, a);
    const FrequencyPlan plan = make_plan(n + 1);
    const QubitSet all = QubitSet::range(n + 1);
    const GateMatrix h = standard_gate("H");

    const QmtSignal initial = basis_signal(plan, all, 1);  // e^{i w_n t} ... e^{i w_1 t} e^{-i w_0 t}

    QmtSignal psi = initial;
    for (int q = n; q >= 0; --q) {
        psi = apply_1q(psi, q, h);
    }
    const QmtSignal superposed = psi;

    for (const GateOp& op : build_uf(n, a)) {
        psi = apply_gate(psi, op);
    }
    psi = apply_1q(psi, 0, h);
    const QmtSignal after_oracle = psi;

    for (int q = n; q >= 1; --q) {
        psi = apply_1q(psi, q, h);
    }
    return DjStages{initial, superposed, after_oracle, psi};
}

DjResult deutsch_jozsa(int n, std::uint64_t a, std::optional<double> snr_db, std::uint64_t seed) {
    const DjStages stages = deutsch_jozsa_stages(n, a);
    QmtSignal measured = stages.final_state;
    if (snr_db) {
        measured = add_white_noise(measured, snr_to_sigma(measured, *snr_db, seed));
    }

    std::vector<int> order;
    for (int q = n; q >= 1; --q) {
        order.push_back(q);
    }
    const std::uint64_t found = binary_search_dominant(measured, order);
    std::uint64_t recovered = 0;
    for (std::size_t k = 0; k < order.size(); ++k) {
        recovered |= ((found >> k) & 1U) << order[k];
    }

    // The surviving component is |a_n ... a_1>|1> with sign (-1)^{a_0}.
    const QmtSignal probe = basis_signal(measured.plan(), measured.qubits(), recovered | 1U);
    if (inner_product(probe, measured).real() <= 0.0) {
        recovered |= 1U;
    }
    return DjResult{n, a, recovered, recovered < 2, snr_db, seed, measured};
}

}  // namespace qmt
