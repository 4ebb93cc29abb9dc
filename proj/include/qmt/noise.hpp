// Copyright 2026 The qmt Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file
 * Additive white Gaussian noise on the baseband signal and the resulting
 * depolarization predictions. Power is normalized so that sigma^2 * delta_f
 * is the expected |nu_x|^2 added to every basis amplitude.
 */

#pragma once

#include <cstdint>

#include "qmt/signal.hpp"

namespace qmt {

inline constexpr double kBoltzmann = 1.38e-23;  // J/K

struct NoiseModel {
    double sigma_sq = 0.0;  ///< power spectral density
    double delta_f = 1.0;   ///< spectral resolution 1/T
    std::uint64_t seed = 0;

    /// Expected power per spectral component, sigma^2 * delta_f.
    [[nodiscard]] double bin_power() const { return sigma_sq * delta_f; }
};

/// Johnson-Nyquist density 4 k_B T R. @throws std::invalid_argument unless both are positive.
double thermal_psd(double temperature_kelvin, double resistance_ohm);

/**
 * psi + w, with w[k] i.i.d. circular complex Gaussian of variance
 * N_s * sigma^2 * delta_f so each DFT bin carries sigma^2 * delta_f.
 * The seed fully determines w.
 */
QmtSignal add_white_noise(const QmtSignal& psi, const NoiseModel& model);

/**
 * Noise model whose total baseband power is the signal power times
 * 10^(-snr_db / 10). @throws std::domain_error on a zero signal.
 */
NoiseModel snr_to_sigma(const QmtSignal& psi, double snr_db, std::uint64_t seed = 0);

/// p = (1 + ||psi||^2 / (N sigma^2 delta_f))^-1. @throws std::domain_error on 0/0.
double mixing_ratio(double norm_sq, std::uint64_t dimension, double bin_power);

/// sqrt((||psi||^2 + sigma^2 delta_f) / (||psi||^2 + N sigma^2 delta_f)). @throws std::domain_error on zero norm.
double predicted_fidelity(double norm_sq, std::uint64_t dimension, double bin_power);

}  // namespace qmt
