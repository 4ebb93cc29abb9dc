// Copyright 2026 The qmt Authors
// SPDX-License-Identifier: Apache-2.0

#include "qmt/gates.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qmt/projection.hpp"

namespace qmt {

GateMatrix::GateMatrix(std::size_t dim, std::vector<cplx> entries) : dim_(dim), entries_(std::move(entries)) {
    if (dim_ != 2 && dim_ != 4) {
        throw std::invalid_argument("GateMatrix: dimension must be 2 or 4");
    }
    if (entries_.size() != dim_ * dim_) {
        throw std::invalid_argument("GateMatrix: expected " + std::to_string(dim_ * dim_) + " entries");
    }
    for (const cplx& v : entries_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw std::invalid_argument("GateMatrix: entries must be finite");
        }
    }
}

GateMatrix GateMatrix::identity(std::size_t dim) {
    std::vector<cplx> e(dim * dim);
    for (std::size_t k = 0; k < dim; ++k) {
        e[k * dim + k] = 1.0;
    }
    return GateMatrix(dim, std::move(e));
}

GateMatrix GateMatrix::adjoint() const {
    std::vector<cplx> e(entries_.size());
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            e[c * dim_ + r] = std::conj(entries_[r * dim_ + c]);
        }
    }
    return GateMatrix(dim_, std::move(e));
}

GateMatrix operator*(const GateMatrix& a, const GateMatrix& b) {
    if (a.dim_ != b.dim_) {
        throw std::invalid_argument("GateMatrix: dimension mismatch in product");
    }
    const std::size_t d = a.dim_;
    std::vector<cplx> e(d * d);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            for (std::size_t k = 0; k < d; ++k) {
                e[r * d + c] += a(r, k) * b(k, c);
            }
        }
    }
    return GateMatrix(d, std::move(e));
}

GateMatrix standard_gate(std::string_view name) {
    std::string upper(name);
    std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
    if (upper == "X") {
        return GateMatrix(2, {0.0, 1.0, 1.0, 0.0});
    }
    if (upper == "Z") {
        return GateMatrix(2, {1.0, 0.0, 0.0, -1.0});
    }
    if (upper == "H") {
        const double h = 1.0 / std::numbers::sqrt2;
        return GateMatrix(2, {h, h, h, -h});
    }
    if (upper == "I") {
        return GateMatrix::identity(2);
    }
    throw std::invalid_argument("standard_gate: unknown gate '" + std::string(name) + "'");
}

GateMatrix cnot_matrix() {
    return GateMatrix(4, {1.0, 0.0, 0.0, 0.0,  //
                          0.0, 1.0, 0.0, 0.0,  //
                          0.0, 0.0, 0.0, 1.0,  //
                          0.0, 0.0, 1.0, 0.0});
}

QmtSignal apply_1q(const QmtSignal& psi, int qubit, const GateMatrix& gate) {
    if (gate.dim() != 2) {
        throw std::invalid_argument("apply_1q: gate must be 2x2");
    }
    if (!psi.qubits().contains(qubit)) {
        throw std::invalid_argument("apply_1q: qubit " + std::to_string(qubit) + " is not in the signal's qubit set");
    }
    const QubitSet addressed{qubit};
    const QmtSignal phi0 = basis_signal(psi.plan(), addressed, 0);
    const QmtSignal phi1 = basis_signal(psi.plan(), addressed, 1);

    const QmtSignal out0 = combine({{gate(0, 0), &phi0}, {gate(1, 0), &phi1}});
    const QmtSignal out1 = combine({{gate(0, 1), &phi0}, {gate(1, 1), &phi1}});

    const QmtSignal branch0 = tensor_product(out0, partial_projection(psi, qubit, 0));
    const QmtSignal branch1 = tensor_product(out1, partial_projection(psi, qubit, 1));
    return combine({{1.0, &branch0}, {1.0, &branch1}});
}

QmtSignal apply_2q(const QmtSignal& psi, int first, int second, const GateMatrix& gate) {
    if (gate.dim() != 4) {
        throw std::invalid_argument("apply_2q: gate must be 4x4");
    }
    const DualPartials parts = dual_partials(psi, first, second);
    const FrequencyPlan& plan = psi.plan();

    // phi_a'^(i) phi_b'^(j) indexed by 2a' + b'.
    std::vector<QmtSignal> pair_basis;
    pair_basis.reserve(4);
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            pair_basis.push_back(tensor_product(basis_signal(plan, QubitSet{first}, static_cast<std::uint64_t>(a)),
                                                basis_signal(plan, QubitSet{second}, static_cast<std::uint64_t>(b))));
        }
    }

    std::vector<QmtSignal> branches;
    branches.reserve(4);
    for (std::size_t in = 0; in < 4; ++in) {
        std::vector<Term> column;
        for (std::size_t out = 0; out < 4; ++out) {
            column.push_back({gate(out, in), &pair_basis[out]});
        }
        branches.push_back(tensor_product(combine(column), parts.partials[in]));
    }
    std::vector<Term> sum;
    for (const QmtSignal& b : branches) {
        sum.push_back({1.0, &b});
    }
    return combine(sum);
}

QmtSignal apply_cnot(const QmtSignal& psi, int control, int target) {
    if (control == target) {
        throw std::invalid_argument("apply_cnot: control equals target");
    }
    if (!psi.qubits().contains(control) || !psi.qubits().contains(target)) {
        throw std::invalid_argument("apply_cnot: qubit is not in the signal's qubit set");
    }
    const FrequencyPlan& plan = psi.plan();
    const QmtSignal keep = tensor_product(basis_signal(plan, QubitSet{control}, 0), partial_projection(psi, control, 0));
    const QmtSignal flipped = apply_1q(partial_projection(psi, control, 1), target, standard_gate("X"));
    const QmtSignal flip = tensor_product(basis_signal(plan, QubitSet{control}, 1), flipped);
    return combine({{1.0, &keep}, {1.0, &flip}});
}

QmtSignal apply_gate(const QmtSignal& psi, const GateOp& op) {
    switch (op.kind) {
        case GateOp::Kind::one_qubit:
            return apply_1q(psi, op.first, op.matrix);
        case GateOp::Kind::cnot:
            return apply_cnot(psi, op.first, op.second);
        case GateOp::Kind::two_qubit:
            return apply_2q(psi, op.first, op.second, op.matrix);
    }
    throw std::logic_error("apply_gate: unknown gate kind");
}

}  // namespace qmt
