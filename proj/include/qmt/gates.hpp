// Copyright 2026 The qmt Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file
 * Linear one- and two-qubit gates applied to signals by splitting the state
 * into partial projections, transforming the addressed basis tones, and
 * multiplying back.
 */

#pragma once

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "qmt/signal.hpp"

namespace qmt {

/**
 * 2x2 or 4x4 complex matrix, row-major. Row = output label, column = input
 * label. For two-qubit gates on (i, j) the label is 2a + b with a the bit of
 * qubit i. Unitarity is not required.
 */
class GateMatrix {
  public:
    /// @throws std::invalid_argument unless dim is 2 or 4 and entries has dim^2 finite values.
    GateMatrix(std::size_t dim, std::vector<cplx> entries);

    static GateMatrix identity(std::size_t dim);

    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] cplx operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
    [[nodiscard]] const std::vector<cplx>& entries() const { return entries_; }

    [[nodiscard]] GateMatrix adjoint() const;
    friend GateMatrix operator*(const GateMatrix& a, const GateMatrix& b);
    friend bool operator==(const GateMatrix&, const GateMatrix&) = default;

  private:
    std::size_t dim_;
    std::vector<cplx> entries_;
};

/// X, Z, H or I (case-insensitive). @throws std::invalid_argument otherwise.
GateMatrix standard_gate(std::string_view name);

/// [[I, 0], [0, X]] with the control as the high label bit.
GateMatrix cnot_matrix();

/// A_i psi = (A00 phi_0 + A10 phi_1) psi_0^(i) + (A01 phi_0 + A11 phi_1) psi_1^(i).
QmtSignal apply_1q(const QmtSignal& psi, int qubit, const GateMatrix& gate);

/// sum_ab [sum_a'b' B_{a'b',ab} phi_a'^(i) phi_b'^(j)] psi_ab^(ij).
QmtSignal apply_2q(const QmtSignal& psi, int first, int second, const GateMatrix& gate);

/// Projects on the control only and flips the target inside the control = 1 branch.
QmtSignal apply_cnot(const QmtSignal& psi, int control, int target);

/// One gate of a circuit, independent of the engine that runs it.
struct GateOp {
    enum class Kind { one_qubit, cnot, two_qubit };

    Kind kind;
    int first;
    int second;
    GateMatrix matrix;

    static GateOp one(int qubit, GateMatrix m) { return {Kind::one_qubit, qubit, -1, std::move(m)}; }
    static GateOp controlled_not(int control, int target) { return {Kind::cnot, control, target, cnot_matrix()}; }
    static GateOp two(int first, int second, GateMatrix m) { return {Kind::two_qubit, first, second, std::move(m)}; }

    friend bool operator==(const GateOp&, const GateOp&) = default;
};

QmtSignal apply_gate(const QmtSignal& psi, const GateOp& op);

}  // namespace qmt
