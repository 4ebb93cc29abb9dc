// Copyright 2026 The qmt Authors
// SPDX-License-Identifier: Apache-2.0

#include "qmt/measure.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qmt/projection.hpp"

namespace qmt {

namespace {

void require_nonzero(const QmtSignal& psi, const char* op) {
    if (!(norm_sq(psi) > 0.0)) {
        throw std::domain_error(std::string(op) + ": zero state has no outcome");
    }
}

MeasurementOutcome collapse_to(const QmtSignal& psi, int qubit, int bit, const Weights& w) {
    return MeasurementOutcome{qubit, bit, w, born_probability(w, bit), projection(psi, qubit, bit)};
}

void check_draw(double u) {
    if (!(u >= 0.0 && u <= 1.0)) {
        throw std::invalid_argument("uniform draw must lie in [0, 1]");
    }
}

}  // namespace

Weights subspace_weights(const QmtSignal& psi, int qubit) {
    const QmtSignal p0 = projection(psi, qubit, 0);
    const QmtSignal p1 = projection(psi, qubit, 1);
    return Weights{inner_product(p0, p0).real(), inner_product(p1, p1).real()};
}

double born_probability(const Weights& weights, int bit) {
    if (bit != 0 && bit != 1) {
        throw std::invalid_argument("born_probability: bit must be 0 or 1");
    }
    const double total = weights.total();
    if (!(total > 0.0)) {
        throw std::domain_error("born_probability: zero total weight");
    }
    return weights[bit] / total;
}

MeasurementOutcome measure_simulated(const QmtSignal& psi, int qubit, double u) {
    check_draw(u);
    const Weights w = subspace_weights(psi, qubit);
    const int bit = u > born_probability(w, 0) ? 1 : 0;
    return collapse_to(psi, qubit, bit, w);
}

MeasurementOutcome measure_brute(const QmtSignal& psi, int qubit, double u) {
    check_draw(u);
    const std::size_t pos = psi.qubits().position(qubit);
    const Amplitudes alpha = analyze(psi);
    Weights w;
    for (std::uint64_t x = 0; x < alpha.size(); ++x) {
        (((x >> pos) & 1U) != 0 ? w.q1 : w.q0) += std::norm(alpha[x]);
    }
    const int bit = u > born_probability(w, 0) ? 1 : 0;
    return collapse_to(psi, qubit, bit, w);
}

MeasurementOutcome measure_dominant(const QmtSignal& psi, int qubit) {
    const Weights w = subspace_weights(psi, qubit);
    const int bit = w.q1 > w.q0 ? 1 : 0;
    return collapse_to(psi, qubit, bit, w);
}

SequentialResult measure_all_simulated(const QmtSignal& psi, std::mt19937_64& rng) {
    require_nonzero(psi, "measure_all_simulated");
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    SequentialResult result{0, {}, psi};
    for (std::size_t k = 0; k < psi.qubits().size(); ++k) {
        MeasurementOutcome step = measure_simulated(result.collapsed, psi.qubits()[k], uniform(rng));
        result.outcome |= static_cast<std::uint64_t>(step.bit) << k;
        result.collapsed = step.collapsed;
        result.steps.push_back(std::move(step));
    }
    return result;
}

SequentialResult measure_all_simulated(const QmtSignal& psi, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return measure_all_simulated(psi, rng);
}

std::uint64_t binary_search_dominant(const QmtSignal& psi) {
    std::vector<int> order(psi.qubits().values().rbegin(), psi.qubits().values().rend());
    const std::uint64_t by_order = binary_search_dominant(psi, order);
    // Re-index from visiting order to subset positions.
    std::uint64_t x = 0;
    for (std::size_t k = 0; k < order.size(); ++k) {
        x |= ((by_order >> k) & 1U) << psi.qubits().position(order[k]);
    }
    return x;
}

std::uint64_t binary_search_dominant(const QmtSignal& psi, const std::vector<int>& order) {
    require_nonzero(psi, "binary_search_dominant");
    QmtSignal current = psi;
    std::uint64_t out = 0;
    for (std::size_t k = 0; k < order.size(); ++k) {
        MeasurementOutcome step = measure_dominant(current, order[k]);
        out |= static_cast<std::uint64_t>(step.bit) << k;
        current = std::move(step.collapsed);
    }
    return out;
}

void validate(const ThresholdConfig& cfg) {
    if (!(cfg.scale >= 0.0) || !std::isfinite(cfg.scale)) {
        throw std::invalid_argument("ThresholdConfig: scale must be finite and >= 0");
    }
    if (!(cfg.noise_sigma >= 0.0) || !std::isfinite(cfg.noise_sigma)) {
        throw std::invalid_argument("ThresholdConfig: noise_sigma must be finite and >= 0");
    }
    if (!(cfg.gamma_sq > 0.0) || !std::isfinite(cfg.gamma_sq)) {
        throw std::invalid_argument("ThresholdConfig: gamma_sq must be finite and > 0");
    }
}

QmtSignal threshold_realization(const QmtSignal& psi, double scale, std::span<const cplx> nu) {
    Amplitudes a = analyze(psi);
    if (nu.size() != a.size()) {
        throw std::invalid_argument("threshold_realization: noise vector has the wrong length");
    }
    for (std::size_t x = 0; x < a.size(); ++x) {
        a[x] = scale * a[x] + nu[x];
    }
    return synthesize(psi.plan(), psi.qubits(), a);
}

ThresholdResult detect_threshold(const QmtSignal& realization, int qubit, double gamma_sq) {
    const Weights w = subspace_weights(realization, qubit);
    const bool hit0 = w.q0 > gamma_sq;
    const bool hit1 = w.q1 > gamma_sq;
    ThresholdResult result{std::nullopt, w, analyze(realization), realization, 1};
    if (hit0 != hit1) {
        result.bit = hit1 ? 1 : 0;
        result.collapsed = projection(realization, qubit, *result.bit);
    }
    return result;
}

ThresholdResult measure_threshold(const QmtSignal& psi, int qubit, const ThresholdConfig& cfg, std::mt19937_64& rng) {
    validate(cfg);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Amplitudes nu(psi.qubits().dimension());
    for (cplx& v : nu) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        v = cfg.noise_sigma * cplx(re, im);
    }
    return detect_threshold(threshold_realization(psi, cfg.scale, nu), qubit, cfg.gamma_sq);
}

ThresholdResult measure_threshold(const QmtSignal& psi, int qubit, const ThresholdConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    return measure_threshold(psi, qubit, cfg, rng);
}

ThresholdResult measure_threshold_retry(const QmtSignal& psi, int qubit, const ThresholdConfig& cfg,
                                        std::mt19937_64& rng, int max_attempts) {
    if (max_attempts < 1) {
        throw std::invalid_argument("measure_threshold_retry: max_attempts must be >= 1");
    }
    ThresholdResult result = measure_threshold(psi, qubit, cfg, rng);
    int attempts = 1;
    while (!result.bit && attempts < max_attempts) {
        result = measure_threshold(psi, qubit, cfg, rng);
        ++attempts;
    }
    result.attempts = attempts;
    return result;
}

}  // namespace qmt
