// Copyright 2026 The qmt Authors
// SPDX-License-Identifier: Apache-2.0

#include "qmt/noise.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace qmt {

double thermal_psd(double temperature_kelvin, double resistance_ohm) {
    if (!(temperature_kelvin > 0.0) || !(resistance_ohm > 0.0)) {
        throw std::invalid_argument("thermal_psd: temperature and resistance must be positive");
    }
    return 4.0 * kBoltzmann * temperature_kelvin * resistance_ohm;
}

QmtSignal add_white_noise(const QmtSignal& psi, const NoiseModel& model) {
    if (!(model.sigma_sq >= 0.0) || !(model.delta_f > 0.0)) {
        throw std::invalid_argument("add_white_noise: need sigma_sq >= 0 and delta_f > 0");
    }
    if (model.sigma_sq == 0.0) {
        return psi;
    }
    const double per_sample = static_cast<double>(psi.size()) * model.bin_power();
    const double component_std = std::sqrt(per_sample / 2.0);
    std::mt19937_64 rng(model.seed);
    std::normal_distribution<double> gauss(0.0, component_std);
    Samples out(psi.samples().begin(), psi.samples().end());
    for (cplx& v : out) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        v += cplx(re, im);
    }
    return QmtSignal(psi.plan(), psi.qubits(), std::move(out));
}

NoiseModel snr_to_sigma(const QmtSignal& psi, double snr_db, std::uint64_t seed) {
    const double signal_power = norm_sq(psi);
    if (!(signal_power > 0.0)) {
        throw std::domain_error("snr_to_sigma: zero signal");
    }
    const double noise_power = signal_power * std::pow(10.0, -snr_db / 10.0);
    NoiseModel model;
    model.delta_f = psi.plan().delta_omega / (2.0 * std::numbers::pi);
    model.sigma_sq = noise_power / static_cast<double>(psi.size()) / model.delta_f;
    model.seed = seed;
    return model;
}

double mixing_ratio(double norm_sq, std::uint64_t dimension, double bin_power) {
    if (!(norm_sq >= 0.0) || !(bin_power >= 0.0) || dimension == 0) {
        throw std::invalid_argument("mixing_ratio: inputs must be non-negative and N >= 1");
    }
    const double noise = static_cast<double>(dimension) * bin_power;
    if (noise + norm_sq == 0.0) {
        throw std::domain_error("mixing_ratio: undefined for zero signal and zero noise");
    }
    return noise / (noise + norm_sq);
}

double predicted_fidelity(double norm_sq, std::uint64_t dimension, double bin_power) {
    if (!(norm_sq > 0.0)) {
        throw std::domain_error("predicted_fidelity: zero norm");
    }
    if (!(bin_power >= 0.0) || dimension == 0) {
        throw std::invalid_argument("predicted_fidelity: need bin_power >= 0 and N >= 1");
    }
    return std::sqrt((norm_sq + bin_power) / (norm_sq + static_cast<double>(dimension) * bin_power));
}

}  // namespace qmt
