// Copyright 2026 The qmt Authors
// SPDX-License-Identifier: Apache-2.0

#include "qmt/signal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "spectrum.hpp"

namespace qmt {

namespace {

constexpr int kMaxQubits = 24;

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

void require_same_plan(const FrequencyPlan& a, const FrequencyPlan& b, const char* op) {
    if (!(a == b)) {
        throw std::invalid_argument(std::string(op) + ": signals use different frequency plans");
    }
}

}  // namespace

double FrequencyPlan::qubit_frequency(int qubit) const {
    if (qubit < 0 || qubit >= n_qubits) {
        throw std::invalid_argument("qubit_frequency: qubit " + std::to_string(qubit) + " outside plan");
    }
    return std::ldexp(delta_omega, qubit);
}

double FrequencyPlan::basis_frequency(std::uint64_t x) const {
    const std::uint64_t dim = std::uint64_t{1} << n_qubits;
    if (x >= dim) {
        throw std::invalid_argument("basis_frequency: index outside register");
    }
    return (static_cast<double>(dim) - 1.0 - 2.0 * static_cast<double>(x)) * delta_omega;
}

long FrequencyPlan::carrier_bin() const { return std::lround(carrier / delta_omega); }

double FrequencyPlan::period() const { return 2.0 * std::numbers::pi / delta_omega; }

double FrequencyPlan::sample_time(std::size_t k) const {
    return period() * static_cast<double>(k) / static_cast<double>(samples_per_period);
}

double FrequencyPlan::passband_time(std::size_t k) const {
    return period() * static_cast<double>(k) / static_cast<double>(passband_samples);
}

FrequencyPlan make_plan(int n_qubits, double delta_omega, double base_offset, PlanOptions options) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("make_plan: n_qubits must be in [1, " + std::to_string(kMaxQubits) + "]");
    }
    if (!(delta_omega > 0.0) || !std::isfinite(delta_omega)) {
        throw std::invalid_argument("make_plan: delta_omega must be positive");
    }
    if (!(base_offset >= 0.0) || !std::isfinite(base_offset)) {
        throw std::invalid_argument("make_plan: base_offset must be non-negative");
    }
    const double offset_bins = base_offset / delta_omega;
    const double rounded = std::round(offset_bins);
    if (std::abs(offset_bins - rounded) > 1e-9 * std::max(1.0, offset_bins)) {
        throw std::invalid_argument("make_plan: base_offset must be an integer multiple of delta_omega");
    }

    FrequencyPlan plan;
    plan.n_qubits = n_qubits;
    plan.delta_omega = delta_omega;
    plan.base_offset = base_offset;
    plan.carrier = base_offset + std::ldexp(delta_omega, n_qubits);

    const std::size_t min_baseband = std::size_t{1} << (n_qubits + 2);
    plan.samples_per_period = options.samples_per_period == 0 ? min_baseband : options.samples_per_period;
    if (!is_power_of_two(plan.samples_per_period) || plan.samples_per_period < min_baseband) {
        throw std::invalid_argument("make_plan: samples_per_period must be a power of two >= 2^(n+2)");
    }

    // Every baseband bin |m| <= N_s/2 must land below the passband Nyquist bin.
    const auto carrier_bins = static_cast<std::size_t>(rounded) + (std::size_t{1} << n_qubits);
    const std::size_t min_passband_for_carrier = 2 * (carrier_bins + plan.samples_per_period / 2);
    const std::size_t min_passband = std::max(std::size_t{1} << (n_qubits + 3), min_passband_for_carrier);
    if (options.passband_samples == 0) {
        std::size_t n = std::size_t{1} << (n_qubits + 3);
        while (n < min_passband) {
            n <<= 1;
        }
        plan.passband_samples = n;
    } else {
        plan.passband_samples = options.passband_samples;
        if (!is_power_of_two(plan.passband_samples) || plan.passband_samples < min_passband) {
            throw std::invalid_argument("make_plan: passband_samples too small or not a power of two");
        }
    }
    return plan;
}

// ---------------------------------------------------------------------------
// QubitSet

QubitSet::QubitSet(std::initializer_list<int> qubits) : QubitSet(std::vector<int>(qubits)) {}

QubitSet::QubitSet(std::vector<int> qubits) : qubits_(std::move(qubits)) {
    std::sort(qubits_.begin(), qubits_.end());
    if (std::adjacent_find(qubits_.begin(), qubits_.end()) != qubits_.end()) {
        throw std::invalid_argument("QubitSet: duplicate qubit index");
    }
    if (!qubits_.empty() && qubits_.front() < 0) {
        throw std::invalid_argument("QubitSet: negative qubit index");
    }
}

QubitSet QubitSet::range(int n) {
    std::vector<int> q(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        q[static_cast<std::size_t>(i)] = i;
    }
    return QubitSet(std::move(q));
}

bool QubitSet::contains(int qubit) const { return std::binary_search(qubits_.begin(), qubits_.end(), qubit); }

std::size_t QubitSet::position(int qubit) const {
    const auto it = std::lower_bound(qubits_.begin(), qubits_.end(), qubit);
    if (it == qubits_.end() || *it != qubit) {
        throw std::invalid_argument("qubit " + std::to_string(qubit) + " is not in the signal's qubit set");
    }
    return static_cast<std::size_t>(it - qubits_.begin());
}

QubitSet QubitSet::without(int qubit) const {
    std::vector<int> q;
    q.reserve(qubits_.size());
    std::copy_if(qubits_.begin(), qubits_.end(), std::back_inserter(q), [qubit](int v) { return v != qubit; });
    return QubitSet(std::move(q));
}

bool QubitSet::disjoint(const QubitSet& other) const {
    return std::none_of(qubits_.begin(), qubits_.end(), [&](int q) { return other.contains(q); });
}

QubitSet QubitSet::merged(const QubitSet& other) const {
    std::vector<int> q(qubits_);
    q.insert(q.end(), other.qubits_.begin(), other.qubits_.end());
    return QubitSet(std::move(q));
}

long basis_bin(const QubitSet& qubits, std::uint64_t x) {
    long bin = 0;
    for (std::size_t k = 0; k < qubits.size(); ++k) {
        const long tone = 1L << qubits[k];
        bin += ((x >> k) & 1U) != 0 ? -tone : tone;
    }
    return bin;
}

// ---------------------------------------------------------------------------
// QmtSignal

QmtSignal::QmtSignal(FrequencyPlan plan, QubitSet qubits, Samples samples)
    : plan_(plan), qubits_(std::move(qubits)), samples_(std::move(samples)) {
    if (samples_.size() != plan_.samples_per_period) {
        throw std::invalid_argument("QmtSignal: sample count does not match the plan");
    }
    if (!qubits_.empty() && qubits_.values().back() >= plan_.n_qubits) {
        throw std::invalid_argument("QmtSignal: qubit index outside plan");
    }
}

QmtSignal QmtSignal::zero(const FrequencyPlan& plan, QubitSet qubits) {
    return QmtSignal(plan, std::move(qubits), Samples(plan.samples_per_period));
}

QmtSignal QmtSignal::relabeled(QubitSet qubits) const { return QmtSignal(plan_, std::move(qubits), samples_); }

// ---------------------------------------------------------------------------
// Synthesis and analysis

QmtSignal basis_signal(const FrequencyPlan& plan, const QubitSet& qubits, std::uint64_t x) {
    if (x >= qubits.dimension()) {
        throw std::invalid_argument("basis_signal: basis index has bits outside the qubit set");
    }
    const long bin = basis_bin(qubits, x);
    const std::size_t n = plan.samples_per_period;
    Samples samples(n);
    for (std::size_t k = 0; k < n; ++k) {
        samples[k] = detail::unit_tone(bin, k, n);
    }
    return QmtSignal(plan, qubits, std::move(samples));
}

QmtSignal synthesize(const FrequencyPlan& plan, const QubitSet& qubits, std::span<const cplx> amplitudes) {
    if (amplitudes.size() != qubits.dimension()) {
        throw std::invalid_argument("synthesize: expected " + std::to_string(qubits.dimension()) +
                                    " amplitudes, got " + std::to_string(amplitudes.size()));
    }
    if (!qubits.empty() && qubits.values().back() >= plan.n_qubits) {
        throw std::invalid_argument("synthesize: qubit index outside plan");
    }
    const std::size_t n = plan.samples_per_period;
    Samples coefficients(n);
    for (std::uint64_t x = 0; x < amplitudes.size(); ++x) {
        coefficients[detail::bin_index(basis_bin(qubits, x), n)] = amplitudes[x];
    }
    return QmtSignal(plan, qubits, detail::from_spectrum(coefficients));
}

Amplitudes analyze(const QmtSignal& psi) {
    const std::size_t n = psi.size();
    const Samples coefficients = detail::spectrum(psi.samples());
    Amplitudes alpha(psi.qubits().dimension());
    for (std::uint64_t x = 0; x < alpha.size(); ++x) {
        alpha[x] = coefficients[detail::bin_index(basis_bin(psi.qubits(), x), n)];
    }
    return alpha;
}

cplx inner_product(const QmtSignal& phi, const QmtSignal& psi) {
    require_same_plan(phi.plan(), psi.plan(), "inner_product");
    if (!(phi.qubits() == psi.qubits())) {
        throw std::invalid_argument("inner_product: signals span different qubit sets");
    }
    cplx acc{};
    for (std::size_t k = 0; k < psi.size(); ++k) {
        acc += std::conj(phi[k]) * psi[k];
    }
    return acc / static_cast<double>(psi.size());
}

double norm_sq(const QmtSignal& psi) {
    double acc = 0.0;
    for (const cplx& v : psi.samples()) {
        acc += std::norm(v);
    }
    return acc / static_cast<double>(psi.size());
}

QmtSignal tensor_product(const QmtSignal& a, const QmtSignal& b) {
    require_same_plan(a.plan(), b.plan(), "tensor_product");
    if (!a.qubits().disjoint(b.qubits())) {
        throw std::invalid_argument("tensor_product: qubit sets overlap");
    }
    Samples out(a.size());
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] = a[k] * b[k];
    }
    return QmtSignal(a.plan(), a.qubits().merged(b.qubits()), std::move(out));
}

QmtSignal combine(std::span<const Term> terms) {
    if (terms.empty()) {
        throw std::invalid_argument("combine: empty term list");
    }
    const QmtSignal& first = *terms.front().signal;
    Samples out(first.size());
    for (const Term& term : terms) {
        require_same_plan(first.plan(), term.signal->plan(), "combine");
        if (!(term.signal->qubits() == first.qubits())) {
            throw std::invalid_argument("combine: terms span different qubit sets");
        }
        for (std::size_t k = 0; k < out.size(); ++k) {
            out[k] += term.coefficient * (*term.signal)[k];
        }
    }
    return QmtSignal(first.plan(), first.qubits(), std::move(out));
}

QmtSignal combine(std::initializer_list<Term> terms) { return combine(std::span<const Term>(terms.begin(), terms.size())); }

bool is_canonical(const QmtSignal& psi, double tolerance) {
    const std::size_t n = psi.size();
    Samples coefficients = detail::spectrum(psi.samples());
    double peak = 0.0;
    for (const cplx& c : coefficients) {
        peak = std::max(peak, std::abs(c));
    }
    for (std::uint64_t x = 0; x < psi.qubits().dimension(); ++x) {
        coefficients[detail::bin_index(basis_bin(psi.qubits(), x), n)] = 0.0;
    }
    const double limit = tolerance * std::max(1.0, peak);
    return std::all_of(coefficients.begin(), coefficients.end(), [limit](const cplx& c) { return std::abs(c) <= limit; });
}

// ---------------------------------------------------------------------------
// Carrier modulation

PassbandSignal modulate(const QmtSignal& psi) {
    const FrequencyPlan& plan = psi.plan();
    const std::size_t ns = plan.samples_per_period;
    const std::size_t npb = plan.passband_samples;
    const Samples baseband = detail::spectrum(psi.samples());

    // Re-evaluate the band-limited baseband on the passband grid; the Nyquist
    // bin is split evenly between +N_s/2 and -N_s/2.
    Samples wide(npb);
    for (std::size_t k = 0; k < ns; ++k) {
        const long m = detail::signed_bin(k, ns);
        if (m == -static_cast<long>(ns / 2)) {
            wide[detail::bin_index(m, npb)] += 0.5 * baseband[k];
            wide[detail::bin_index(-m, npb)] += 0.5 * baseband[k];
        } else {
            wide[detail::bin_index(m, npb)] += baseband[k];
        }
    }
    const Samples resampled = detail::from_spectrum(wide);

    const long carrier = plan.carrier_bin();
    PassbandSignal out{plan, std::vector<double>(npb)};
    for (std::size_t k = 0; k < npb; ++k) {
        const cplx lo = detail::unit_tone(carrier, k, npb);
        // psi_R cos(w_c t) - psi_I sin(w_c t)
        out.samples[k] = resampled[k].real() * lo.real() - resampled[k].imag() * lo.imag();
    }
    return out;
}

QmtSignal demodulate(const PassbandSignal& s, const QubitSet& qubits) {
    const FrequencyPlan& plan = s.plan;
    const std::size_t ns = plan.samples_per_period;
    const std::size_t npb = plan.passband_samples;
    if (s.samples.size() != npb) {
        throw std::invalid_argument("demodulate: passband sample count does not match the plan");
    }

    // Real part: 2 cos(w_c t) s(t); imaginary part: -2 sin(w_c t) s(t).
    const long carrier = plan.carrier_bin();
    Samples mixed(npb);
    for (std::size_t k = 0; k < npb; ++k) {
        mixed[k] = 2.0 * s.samples[k] * std::conj(detail::unit_tone(carrier, k, npb));
    }
    const Samples wide = detail::spectrum(mixed);

    long cutoff = 0;
    for (int q : qubits) {
        cutoff += 1L << q;
    }
    Samples coefficients(ns);
    for (long m = -cutoff; m <= cutoff; ++m) {
        coefficients[detail::bin_index(m, ns)] = wide[detail::bin_index(m, npb)];
    }
    return QmtSignal(plan, qubits, detail::from_spectrum(coefficients));
}

QmtSignal demodulate(const PassbandSignal& s) { return demodulate(s, QubitSet::range(s.plan.n_qubits)); }

}  // namespace qmt
