// Copyright 2026 The qmt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>

#include "qmt/signal.hpp"

namespace qmt::detail {

/// c_m = (1/N) sum_k x[k] e^{-2 pi i m k / N}, so a unit tone has a unit bin.
Samples spectrum(std::span<const cplx> samples);

/// x[k] = sum_m c_m e^{+2 pi i m k / N}; inverse of spectrum().
Samples from_spectrum(std::span<const cplx> coefficients);

/// Index of signed bin m in a length-n DFT.
inline std::size_t bin_index(long m, std::size_t n) {
    const long len = static_cast<long>(n);
    const long r = m % len;
    return static_cast<std::size_t>(r < 0 ? r + len : r);
}

/// Signed bin of DFT index k, in [-n/2, n/2).
inline long signed_bin(std::size_t k, std::size_t n) {
    const long kk = static_cast<long>(k);
    const long len = static_cast<long>(n);
    return kk >= len / 2 ? kk - len : kk;
}

/// e^{2 pi i m k / n} with the phase reduced modulo n before scaling.
cplx unit_tone(long m, std::size_t k, std::size_t n);

}  // namespace qmt::detail
