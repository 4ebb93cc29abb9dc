// Copyright 2026 The qmt Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file
 * Measurement weights, Born probabilities, collapse, and the readout
 * strategies: brute force, binary search, simulation with uniform draws, and
 * signal-plus-noise threshold detection.
 *
 * States are never renormalized. A collapsed state is the full-register
 * projection Pi_a^(i) psi, so qubit indices stay stable.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "qmt/signal.hpp"

namespace qmt {

/// (q_0, q_1) with q_a = ||Pi_a^(i) psi||^2.
struct Weights {
    double q0 = 0.0;
    double q1 = 0.0;

    [[nodiscard]] double total() const { return q0 + q1; }
    [[nodiscard]] double operator[](int bit) const { return bit == 0 ? q0 : q1; }
};

struct MeasurementOutcome {
    int qubit;
    int bit;
    Weights weights;
    double probability;  ///< Born probability of `bit`.
    QmtSignal collapsed;
};

struct ThresholdConfig {
    double scale = 1.0;        ///< s in a_x = s alpha_x + nu_x
    double noise_sigma = 0.1;  ///< per-component std of Re(nu_x) and Im(nu_x)
    double gamma_sq = 0.5;     ///< detection threshold gamma^2
    std::uint64_t seed = 0;
};

struct ThresholdResult {
    std::optional<int> bit;  ///< set iff exactly one weight exceeds gamma^2
    Weights weights;
    Amplitudes realized;     ///< a_x of the realization that was tested
    QmtSignal collapsed;     ///< projection of the realization onto `bit`; the realization itself on no detection
    int attempts = 1;
};

/// @throws std::invalid_argument if the qubit is not in psi's set.
Weights subspace_weights(const QmtSignal& psi, int qubit);

/// q_a / (q_0 + q_1). @throws std::domain_error on zero total weight.
double born_probability(const Weights& weights, int bit);

/// Outcome 1 iff u > p_0; collapses to projection(psi, qubit, bit).
MeasurementOutcome measure_simulated(const QmtSignal& psi, int qubit, double u);

/// Same Born rule, with p_0 summed from the full amplitude analysis.
MeasurementOutcome measure_brute(const QmtSignal& psi, int qubit, double u);

/// Deterministic: outcome is the heavier branch (ties choose 0).
MeasurementOutcome measure_dominant(const QmtSignal& psi, int qubit);

struct SequentialResult {
    std::uint64_t outcome;  ///< bit k belongs to the k-th qubit of the measured set
    std::vector<MeasurementOutcome> steps;
    QmtSignal collapsed;
};

/// Measures every qubit of psi in ascending order, collapsing after each draw.
SequentialResult measure_all_simulated(const QmtSignal& psi, std::mt19937_64& rng);
SequentialResult measure_all_simulated(const QmtSignal& psi, std::uint64_t seed);

/// Binary search over all qubits in descending order; returns the subset index.
std::uint64_t binary_search_dominant(const QmtSignal& psi);
/**
 * Binary search over `order` (visited as given); bit k of the result is the
 * outcome for order[k].
 */
std::uint64_t binary_search_dominant(const QmtSignal& psi, const std::vector<int>& order);

/// sum_x (s alpha_x + nu_x) phi_x. @throws std::invalid_argument if nu has the wrong length.
QmtSignal threshold_realization(const QmtSignal& psi, double scale, std::span<const cplx> nu);

/// Threshold mechanics on a fixed realization.
ThresholdResult detect_threshold(const QmtSignal& realization, int qubit, double gamma_sq);

/// Draws nu from `rng` and detects once.
ThresholdResult measure_threshold(const QmtSignal& psi, int qubit, const ThresholdConfig& cfg, std::mt19937_64& rng);
/// Draws nu from a generator seeded with cfg.seed.
ThresholdResult measure_threshold(const QmtSignal& psi, int qubit, const ThresholdConfig& cfg);

/// Redraws the noise until a single detection or max_attempts realizations.
ThresholdResult measure_threshold_retry(const QmtSignal& psi, int qubit, const ThresholdConfig& cfg,
                                        std::mt19937_64& rng, int max_attempts);

/// @throws std::invalid_argument on negative or non-finite parameters.
void validate(const ThresholdConfig& cfg);

}  // namespace qmt
