// Copyright 2026 The qmt Authors
// SPDX-License-Identifier: Apache-2.0

#include "spectrum.hpp"

#include <numbers>
#include <vector>

#include <unsupported/Eigen/FFT>

namespace qmt::detail {

namespace {

Eigen::FFT<double>& engine() {
    thread_local Eigen::FFT<double> fft;
    return fft;
}

}  // namespace

Samples spectrum(std::span<const cplx> samples) {
    const std::vector<cplx> in(samples.begin(), samples.end());
    std::vector<cplx> out;
    engine().fwd(out, in);
    const double scale = 1.0 / static_cast<double>(in.size());
    for (auto& c : out) {
        c *= scale;
    }
    return out;
}

Samples from_spectrum(std::span<const cplx> coefficients) {
    const std::vector<cplx> in(coefficients.begin(), coefficients.end());
    std::vector<cplx> out;
    auto& fft = engine();
    fft.SetFlag(Eigen::FFT<double>::Unscaled);
    fft.inv(out, in);
    fft.ClearFlag(Eigen::FFT<double>::Unscaled);
    return out;
}

cplx unit_tone(long m, std::size_t k, std::size_t n) {
    const long len = static_cast<long>(n);
    long phase = (m % len) * static_cast<long>(k % n) % len;
    if (phase < 0) {
        phase += len;
    }
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(phase) / static_cast<double>(len));
}

}  // namespace qmt::detail
