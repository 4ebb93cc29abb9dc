// Copyright 2026 The qmt Authors
// SPDX-License-Identifier: Apache-2.0

#include "qmt/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qmt::oracle {

namespace {

constexpr int kMaxQubits = 20;

void require_qubit(const StateVector& sv, int qubit) {
    if (qubit < 0 || qubit >= sv.n()) {
        throw std::invalid_argument("oracle: qubit index " + std::to_string(qubit) + " out of range");
    }
}

}  // namespace

StateVector::StateVector(int n) : n_(n) {
    if (n < 0 || n > kMaxQubits) {
        throw std::invalid_argument("StateVector: unsupported qubit count");
    }
    amps_.assign(std::size_t{1} << n, cplx{});
    amps_[0] = 1.0;
}

StateVector::StateVector(int n, std::vector<cplx> amps) : n_(n), amps_(std::move(amps)) {
    if (n < 0 || n > kMaxQubits || amps_.size() != (std::size_t{1} << n)) {
        throw std::invalid_argument("StateVector: amplitude count must be 2^n");
    }
    for (const cplx& a : amps_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw std::invalid_argument("StateVector: amplitudes must be finite");
        }
    }
}

StateVector StateVector::basis(int n, std::uint64_t x) {
    std::vector<cplx> amps(std::size_t{1} << n);
    amps.at(x) = 1.0;
    return StateVector(n, std::move(amps));
}

double StateVector::norm_sq() const {
    double acc = 0.0;
    for (const cplx& a : amps_) {
        acc += std::norm(a);
    }
    return acc;
}

StateVector sv_apply_1q(const StateVector& sv, int qubit, const GateMatrix& gate) {
    require_qubit(sv, qubit);
    if (gate.dim() != 2) {
        throw std::invalid_argument("sv_apply_1q: gate must be 2x2");
    }
    const std::uint64_t mask = std::uint64_t{1} << qubit;
    std::vector<cplx> out(sv.size());
    for (std::uint64_t x = 0; x < sv.size(); ++x) {
        if ((x & mask) != 0) {
            continue;
        }
        const cplx a0 = sv[x];
        const cplx a1 = sv[x | mask];
        out[x] = gate(0, 0) * a0 + gate(0, 1) * a1;
        out[x | mask] = gate(1, 0) * a0 + gate(1, 1) * a1;
    }
    return StateVector(sv.n(), std::move(out));
}

StateVector sv_apply_2q(const StateVector& sv, int first, int second, const GateMatrix& gate) {
    require_qubit(sv, first);
    require_qubit(sv, second);
    if (first == second) {
        throw std::invalid_argument("sv_apply_2q: qubits must differ");
    }
    if (gate.dim() != 4) {
        throw std::invalid_argument("sv_apply_2q: gate must be 4x4");
    }
    const std::uint64_t hi = std::uint64_t{1} << first;
    const std::uint64_t lo = std::uint64_t{1} << second;
    std::vector<cplx> out(sv.size());
    for (std::uint64_t x = 0; x < sv.size(); ++x) {
        if ((x & (hi | lo)) != 0) {
            continue;
        }
        const std::uint64_t idx[4] = {x, x | lo, x | hi, x | hi | lo};
        for (std::size_t r = 0; r < 4; ++r) {
            cplx acc{};
            for (std::size_t c = 0; c < 4; ++c) {
                acc += gate(r, c) * sv[idx[c]];
            }
            out[idx[r]] = acc;
        }
    }
    return StateVector(sv.n(), std::move(out));
}

StateVector sv_apply(const StateVector& sv, const GateOp& op) {
    if (op.kind == GateOp::Kind::one_qubit) {
        return sv_apply_1q(sv, op.first, op.matrix);
    }
    return sv_apply_2q(sv, op.first, op.second, op.matrix);
}

std::pair<double, double> sv_measure_probs(const StateVector& sv, int qubit) {
    require_qubit(sv, qubit);
    double q0 = 0.0;
    double q1 = 0.0;
    for (std::uint64_t x = 0; x < sv.size(); ++x) {
        (((x >> qubit) & 1U) != 0 ? q1 : q0) += std::norm(sv[x]);
    }
    return {q0, q1};
}

StateVector sv_slice(const StateVector& sv, int qubit, int bit) {
    require_qubit(sv, qubit);
    const std::uint64_t low_mask = (std::uint64_t{1} << qubit) - 1;
    std::vector<cplx> out(sv.size() / 2);
    for (std::uint64_t y = 0; y < out.size(); ++y) {
        const std::uint64_t x = (y & low_mask) | (static_cast<std::uint64_t>(bit) << qubit) | ((y & ~low_mask) << 1);
        out[y] = sv[x];
    }
    return StateVector(sv.n() - 1, std::move(out));
}

StateVector sv_project(const StateVector& sv, int qubit, int bit) {
    require_qubit(sv, qubit);
    std::vector<cplx> out(sv.amps());
    for (std::uint64_t x = 0; x < out.size(); ++x) {
        if (static_cast<int>((x >> qubit) & 1U) != bit) {
            out[x] = 0.0;
        }
    }
    return StateVector(sv.n(), std::move(out));
}

StateVector sv_kron(const StateVector& high, const StateVector& low) {
    std::vector<cplx> out(high.size() * low.size());
    for (std::uint64_t h = 0; h < high.size(); ++h) {
        for (std::uint64_t l = 0; l < low.size(); ++l) {
            out[h * low.size() + l] = high[h] * low[l];
        }
    }
    return StateVector(high.n() + low.n(), std::move(out));
}

cplx sv_inner(const StateVector& a, const StateVector& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("sv_inner: size mismatch");
    }
    cplx acc{};
    for (std::uint64_t x = 0; x < a.size(); ++x) {
        acc += std::conj(a[x]) * b[x];
    }
    return acc;
}

}  // namespace qmt::oracle
