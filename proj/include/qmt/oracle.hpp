// Copyright 2026 The qmt Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file
 * Dense state-vector reference simulator. Little-endian: bit i of index x is
 * the value of qubit i. Only matrix arithmetic lives here; nothing in this
 * module touches the signal engine.
 */

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qmt/gates.hpp"

namespace qmt::oracle {

class StateVector {
  public:
    /// |0...0>. @throws std::invalid_argument if n < 0 or n > 20.
    explicit StateVector(int n);
    /// @throws std::invalid_argument if amps.size() != 2^n or amps contains non-finite values.
    StateVector(int n, std::vector<cplx> amps);

    static StateVector basis(int n, std::uint64_t x);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] const std::vector<cplx>& amps() const { return amps_; }
    [[nodiscard]] cplx operator[](std::uint64_t x) const { return amps_[x]; }
    [[nodiscard]] std::size_t size() const { return amps_.size(); }
    [[nodiscard]] double norm_sq() const;

  private:
    int n_;
    std::vector<cplx> amps_;
};

StateVector sv_apply_1q(const StateVector& sv, int qubit, const GateMatrix& gate);
/// Label 2a + b with a the bit of `first`. @throws std::invalid_argument if first == second.
StateVector sv_apply_2q(const StateVector& sv, int first, int second, const GateMatrix& gate);
/// Runs a GateOp; CNOT uses the 4x4 matrix.
StateVector sv_apply(const StateVector& sv, const GateOp& op);
/// (sum_{x_i = 0} |alpha_x|^2, sum_{x_i = 1} |alpha_x|^2).
std::pair<double, double> sv_measure_probs(const StateVector& sv, int qubit);
/// Amplitudes with x_i = a, bit i removed.
StateVector sv_slice(const StateVector& sv, int qubit, int bit);
/// Zeroes every amplitude with x_i != a; the register size is unchanged.
StateVector sv_project(const StateVector& sv, int qubit, int bit);
/// Kronecker product; `high` occupies the upper bits.
StateVector sv_kron(const StateVector& high, const StateVector& low);
/// sum_x conj(a_x) b_x.
cplx sv_inner(const StateVector& a, const StateVector& b);

}  // namespace qmt::oracle
