// Copyright 2026 The qmt Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file
 * Frequency plan and the sampled complex baseband signal that represents an
 * n-qubit state as a sum of quadrature modulated tonals.
 *
 * Qubit i is carried by the tone omega_i = 2^i * delta_omega. A basis state
 * |x> over a qubit subset S is the product of e^{+i omega_j t} (bit 0) and
 * e^{-i omega_j t} (bit 1) for j in S, so its signed frequency is
 * sum_j (-1)^{x_j} 2^j in units of delta_omega. One fundamental period
 * T = 2 pi / delta_omega is sampled at N_s points; every such frequency is an
 * integer DFT bin below Nyquist, which makes time averages exact.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace qmt {

using cplx = std::complex<double>;
using Amplitudes = std::vector<cplx>;
using Samples = std::vector<cplx>;

/// Octave-spaced frequency allocation for a fixed total qubit count.
struct FrequencyPlan {
    int n_qubits = 1;
    double delta_omega = 1.0;
    double base_offset = 0.0;
    double carrier = 2.0;
    std::size_t samples_per_period = 8;
    std::size_t passband_samples = 16;

    /// omega_i = 2^i * delta_omega.
    [[nodiscard]] double qubit_frequency(int qubit) const;
    /// Omega_x = (2^n - 1 - 2x) * delta_omega for a full-register index x.
    [[nodiscard]] double basis_frequency(std::uint64_t x) const;
    /// Carrier frequency in units of delta_omega (an integer by construction).
    [[nodiscard]] long carrier_bin() const;
    /// T = 2 pi / delta_omega.
    [[nodiscard]] double period() const;
    /// t_k = k T / N_s.
    [[nodiscard]] double sample_time(std::size_t k) const;
    /// t_k = k T / N_pb on the passband grid.
    [[nodiscard]] double passband_time(std::size_t k) const;

    friend bool operator==(const FrequencyPlan&, const FrequencyPlan&) = default;
};

/// Overrides for the default sampling grids; zero selects the default.
struct PlanOptions {
    std::size_t samples_per_period = 0;
    std::size_t passband_samples = 0;
};

/**
 * Builds a plan with omega_c = base_offset + 2^n delta_omega,
 * N_s = 2^(n+2) and N_pb = 2^(n+3) (or larger if the carrier offset needs it).
 *
 * base_offset must be a non-negative integer multiple of delta_omega so the
 * carrier completes a whole number of cycles per period.
 *
 * @throws std::invalid_argument on n_qubits < 1, delta_omega <= 0, a bad
 *         base offset, or a grid override that is not a large enough power of two.
 */
FrequencyPlan make_plan(int n_qubits, double delta_omega = 1.0, double base_offset = 0.0,
                        PlanOptions options = {});

/// Ordered (ascending) set of distinct qubit indices.
class QubitSet {
  public:
    QubitSet() = default;
    QubitSet(std::initializer_list<int> qubits);
    explicit QubitSet(std::vector<int> qubits);

    /// {0, ..., n-1}.
    static QubitSet range(int n);

    [[nodiscard]] std::size_t size() const { return qubits_.size(); }
    [[nodiscard]] bool empty() const { return qubits_.empty(); }
    [[nodiscard]] bool contains(int qubit) const;
    /// Position of the qubit inside the set, i.e. which bit of a subset index it owns.
    [[nodiscard]] std::size_t position(int qubit) const;
    [[nodiscard]] int operator[](std::size_t k) const { return qubits_[k]; }
    [[nodiscard]] QubitSet without(int qubit) const;
    [[nodiscard]] bool disjoint(const QubitSet& other) const;
    [[nodiscard]] QubitSet merged(const QubitSet& other) const;
    [[nodiscard]] std::uint64_t dimension() const { return std::uint64_t{1} << qubits_.size(); }

    [[nodiscard]] auto begin() const { return qubits_.begin(); }
    [[nodiscard]] auto end() const { return qubits_.end(); }
    [[nodiscard]] const std::vector<int>& values() const { return qubits_; }

    friend bool operator==(const QubitSet&, const QubitSet&) = default;

  private:
    std::vector<int> qubits_;
};

/**
 * Signed DFT bin sum_k (-1)^{x_k} 2^{S[k]} of basis state x over subset S,
 * where bit k of x belongs to qubit S[k].
 */
long basis_bin(const QubitSet& qubits, std::uint64_t x);

/// Complex baseband signal over a subset of the plan's qubits.
class QmtSignal {
  public:
    /// @throws std::invalid_argument if the sample count or qubit indices do not fit the plan.
    QmtSignal(FrequencyPlan plan, QubitSet qubits, Samples samples);

    static QmtSignal zero(const FrequencyPlan& plan, QubitSet qubits);

    [[nodiscard]] const FrequencyPlan& plan() const { return plan_; }
    [[nodiscard]] const QubitSet& qubits() const { return qubits_; }
    [[nodiscard]] std::span<const cplx> samples() const { return samples_; }
    [[nodiscard]] std::size_t size() const { return samples_.size(); }
    [[nodiscard]] cplx operator[](std::size_t k) const { return samples_[k]; }

    /// Same samples, different qubit labels (used after a partial projection).
    [[nodiscard]] QmtSignal relabeled(QubitSet qubits) const;

  private:
    FrequencyPlan plan_;
    QubitSet qubits_;
    Samples samples_;
};

/// Real carrier-modulated signal on the N_pb grid.
struct PassbandSignal {
    FrequencyPlan plan;
    std::vector<double> samples;
};

/// phi_x(t_k) = exp(i sum_{j in S} (-1)^{x_j} omega_j t_k).
QmtSignal basis_signal(const FrequencyPlan& plan, const QubitSet& qubits, std::uint64_t x);

/// sum_x amplitudes[x] phi_x. @throws std::invalid_argument on a length mismatch.
QmtSignal synthesize(const FrequencyPlan& plan, const QubitSet& qubits,
                     std::span<const cplx> amplitudes);

/// alpha_x = <phi_x|psi> for every x. Non-canonical content is ignored.
Amplitudes analyze(const QmtSignal& psi);

/// (1/N_s) sum_k conj(phi[k]) psi[k]. @throws std::invalid_argument on plan or subset mismatch.
cplx inner_product(const QmtSignal& phi, const QmtSignal& psi);

/// <psi|psi>.
double norm_sq(const QmtSignal& psi);

/// Pointwise product over disjoint subsets. @throws std::invalid_argument on overlap.
QmtSignal tensor_product(const QmtSignal& a, const QmtSignal& b);

struct Term {
    cplx coefficient;
    const QmtSignal* signal;
};

/// sum_j c_j psi_j. @throws std::invalid_argument on an empty list or mismatched operands.
QmtSignal combine(std::span<const Term> terms);
QmtSignal combine(std::initializer_list<Term> terms);

/// True if the spectrum has no energy outside the basis bins of psi's subset.
bool is_canonical(const QmtSignal& psi, double tolerance = 1e-9);

/**
 * s = psi_R cos(omega_c t) - psi_I sin(omega_c t) on the passband grid. The
 * baseband is evaluated on that grid from its DFT bins, not interpolated.
 */
PassbandSignal modulate(const QmtSignal& psi);

/**
 * Mixes with 2 cos(omega_c t) and -2 sin(omega_c t) and keeps the bins
 * |m| <= sum_{j in S} 2^j, returning a baseband signal over `qubits`.
 */
QmtSignal demodulate(const PassbandSignal& s, const QubitSet& qubits);
/// Demodulates onto the full register.
QmtSignal demodulate(const PassbandSignal& s);

}  // namespace qmt
