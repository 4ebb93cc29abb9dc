// Copyright 2026 The qmt Authors
// SPDX-License-Identifier: Apache-2.0

// Shared generators and reference computations for the test binaries.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>
#include <vector>

#include "qmt/gates.hpp"
#include "qmt/oracle.hpp"
#include "qmt/signal.hpp"

namespace qmt::testing {

using Rng = std::mt19937_64;

inline cplx gaussian_cplx(Rng& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    const double re = g(rng);
    const double im = g(rng);
    return {re, im};
}

/// Random amplitudes with unit norm.
inline Amplitudes random_amplitudes(Rng& rng, std::uint64_t dim) {
    Amplitudes a(dim);
    double total = 0.0;
    for (cplx& v : a) {
        v = gaussian_cplx(rng);
        total += std::norm(v);
    }
    for (cplx& v : a) {
        v /= std::sqrt(total);
    }
    return a;
}

inline int uniform_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline QmtSignal random_state(Rng& rng, const FrequencyPlan& plan, const QubitSet& qubits) {
    const Amplitudes a = random_amplitudes(rng, qubits.dimension());
    return synthesize(plan, qubits, a);
}

inline QmtSignal random_state(Rng& rng, int n) {
    return random_state(rng, make_plan(n), QubitSet::range(n));
}

/// Haar-like 2x2 unitary from Euler angles and a global phase.
inline GateMatrix random_unitary_2(Rng& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    const double theta = angle(rng) / 2.0;
    const double phi = angle(rng);
    const double lambda = angle(rng);
    const double gamma = angle(rng);
    const cplx g = std::polar(1.0, gamma);
    return GateMatrix(2, {g * std::cos(theta), -g * std::polar(1.0, lambda) * std::sin(theta),
                          g * std::polar(1.0, phi) * std::sin(theta), g * std::polar(1.0, phi + lambda) * std::cos(theta)});
}

/// Arbitrary (generally non-unitary) matrix with Gaussian entries.
inline GateMatrix random_matrix(Rng& rng, std::size_t dim) {
    std::vector<cplx> e(dim * dim);
    for (cplx& v : e) {
        v = gaussian_cplx(rng);
    }
    return GateMatrix(dim, std::move(e));
}

/// Up to max_gates gates from {H, X, Z, CNOT, random 2x2 unitary} on n qubits.
inline std::vector<GateOp> random_circuit(Rng& rng, int n, int max_gates) {
    std::vector<GateOp> ops;
    const int count = uniform_int(rng, 1, max_gates);
    for (int g = 0; g < count; ++g) {
        const int kind = uniform_int(rng, 0, n > 1 ? 4 : 3);
        const int q = uniform_int(rng, 0, n - 1);
        switch (kind) {
            case 0: ops.push_back(GateOp::one(q, standard_gate("H"))); break;
            case 1: ops.push_back(GateOp::one(q, standard_gate("X"))); break;
            case 2: ops.push_back(GateOp::one(q, standard_gate("Z"))); break;
            case 3: ops.push_back(GateOp::one(q, random_unitary_2(rng))); break;
            default: {
                int t = uniform_int(rng, 0, n - 2);
                if (t >= q) {
                    ++t;
                }
                ops.push_back(GateOp::controlled_not(q, t));
            }
        }
    }
    return ops;
}

/// alpha_x by direct correlation with exp(i m_x dw t_k), independent of any FFT.
inline Amplitudes direct_amplitudes(const QmtSignal& psi) {
    const FrequencyPlan& plan = psi.plan();
    Amplitudes out(psi.qubits().dimension());
    for (std::uint64_t x = 0; x < out.size(); ++x) {
        const double w = static_cast<double>(basis_bin(psi.qubits(), x)) * plan.delta_omega;
        cplx acc{};
        for (std::size_t k = 0; k < psi.size(); ++k) {
            acc += std::exp(cplx(0.0, -w * plan.sample_time(k))) * psi[k];
        }
        out[x] = acc / static_cast<double>(psi.size());
    }
    return out;
}

inline double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b) {
    double worst = 0.0;
    for (std::size_t k = 0; k < std::min(a.size(), b.size()); ++k) {
        worst = std::max(worst, std::abs(a[k] - b[k]));
    }
    return a.size() == b.size() ? worst : INFINITY;
}

inline double max_abs_diff(const QmtSignal& a, const QmtSignal& b) {
    return max_abs_diff(a.samples(), b.samples());
}

inline double max_abs_diff(const QmtSignal& psi, const oracle::StateVector& sv) {
    return max_abs_diff(analyze(psi), sv.amps());
}

}  // namespace qmt::testing
