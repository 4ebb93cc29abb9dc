// Copyright 2026 The qmt Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>

#include "catch_amalgamated.hpp"
#include "qmt/signal.hpp"
#include "support.hpp"

using namespace qmt;
using qmt::testing::max_abs_diff;

TEST_CASE("make_plan picks octave tones and exact grids", "[signal]") {
    const FrequencyPlan p = make_plan(3);
    CHECK(p.samples_per_period == 32);
    CHECK(p.passband_samples == 64);
    CHECK(p.carrier == 8.0);
    CHECK(p.carrier_bin() == 8);
    CHECK(p.qubit_frequency(0) == 1.0);
    CHECK(p.qubit_frequency(2) == 4.0);
    CHECK(p.period() == Catch::Approx(2.0 * std::numbers::pi));
    CHECK(p.sample_time(16) == Catch::Approx(std::numbers::pi));

    const FrequencyPlan scaled = make_plan(2, 3.0, 6.0);
    CHECK(scaled.carrier == 6.0 + 12.0);
    CHECK(scaled.carrier_bin() == 6);
    CHECK(2 * (scaled.carrier_bin() + static_cast<long>(scaled.samples_per_period) / 2) <=
          static_cast<long>(scaled.passband_samples));
}

TEST_CASE("make_plan rejects bad arguments", "[signal]") {
    CHECK_THROWS_AS(make_plan(0), std::invalid_argument);
    CHECK_THROWS_AS(make_plan(2, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(make_plan(2, 1.0, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_plan(2, 1.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(make_plan(2, 1.0, 0.0, PlanOptions{12, 0}), std::invalid_argument);
}

TEST_CASE("full-register basis bins follow 2^n - 1 - 2x", "[signal]") {
    for (int n = 1; n <= 6; ++n) {
        const FrequencyPlan p = make_plan(n);
        const QubitSet all = QubitSet::range(n);
        for (std::uint64_t x = 0; x < all.dimension(); ++x) {
            const long expected = (1L << n) - 1 - 2 * static_cast<long>(x);
            REQUIRE(basis_bin(all, x) == expected);
            REQUIRE(p.basis_frequency(x) == static_cast<double>(expected));
        }
    }
}

TEST_CASE("basis bins over a subset use the subset's own tones", "[signal]") {
    const QubitSet s{1, 3};
    CHECK(basis_bin(s, 0) == 2 + 8);
    CHECK(basis_bin(s, 1) == -2 + 8);
    CHECK(basis_bin(s, 2) == 2 - 8);
    CHECK(basis_bin(s, 3) == -2 - 8);
    CHECK(basis_bin(QubitSet{}, 0) == 0);
}

TEST_CASE("QubitSet keeps sorted unique members", "[signal]") {
    const QubitSet s{3, 0, 2};
    CHECK(s.values() == std::vector<int>{0, 2, 3});
    CHECK(s.position(2) == 1);
    CHECK(s.contains(3));
    CHECK_FALSE(s.contains(1));
    CHECK(s.without(2) == QubitSet{0, 3});
    CHECK(s.disjoint(QubitSet{1, 4}));
    CHECK(s.merged(QubitSet{1}) == QubitSet::range(4));
    CHECK(s.dimension() == 8);
    CHECK_THROWS_AS(QubitSet({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(QubitSet({-1}), std::invalid_argument);
    CHECK_THROWS_AS(s.position(1), std::invalid_argument);
}

TEST_CASE("basis signals are orthonormal", "[signal]") {
    for (int n = 1; n <= 4; ++n) {
        const FrequencyPlan p = make_plan(n);
        const QubitSet all = QubitSet::range(n);
        for (std::uint64_t x = 0; x < all.dimension(); ++x) {
            const QmtSignal bx = basis_signal(p, all, x);
            for (std::uint64_t y = 0; y < all.dimension(); ++y) {
                const cplx ip = inner_product(basis_signal(p, all, y), bx);
                REQUIRE(std::abs(ip - cplx(x == y ? 1.0 : 0.0)) <= 1e-12);
            }
        }
    }
}

TEST_CASE("basis signal samples are the product of qubit tones", "[signal]") {
    const FrequencyPlan p = make_plan(3);
    const QmtSignal s = basis_signal(p, QubitSet::range(3), 5);  // bits 1,0,1
    for (std::size_t k = 0; k < s.size(); ++k) {
        const double t = p.sample_time(k);
        const cplx expected = std::exp(cplx(0, -1.0 * t)) * std::exp(cplx(0, 2.0 * t)) * std::exp(cplx(0, -4.0 * t));
        REQUIRE(std::abs(s[k] - expected) <= 1e-12);
    }
}

TEST_CASE("synthesize and analyze invert each other", "[signal][property]") {
    testing::Rng rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = testing::uniform_int(rng, 1, 6);
        const FrequencyPlan p = make_plan(n);
        const QubitSet all = QubitSet::range(n);
        const Amplitudes a = testing::random_amplitudes(rng, all.dimension());
        const QmtSignal psi = synthesize(p, all, a);
        REQUIRE(max_abs_diff(analyze(psi), a) <= 1e-12);
        REQUIRE(max_abs_diff(testing::direct_amplitudes(psi), a) <= 1e-12);
        REQUIRE(is_canonical(psi));
    }
}

TEST_CASE("Bell and separable closed forms", "[signal]") {
    const FrequencyPlan p = make_plan(2);
    const QubitSet all = QubitSet::range(2);
    const std::array<cplx, 4> bell{0, 1, 1, 0};
    const std::array<cplx, 4> sep{1, 1, 0, 0};
    const QmtSignal b = synthesize(p, all, bell);
    const QmtSignal s = synthesize(p, all, sep);
    for (std::size_t k = 0; k < b.size(); ++k) {
        const double t = p.sample_time(k);
        REQUIRE(std::abs(b[k] - cplx(2.0 * std::cos(t))) <= 1e-12);
        REQUIRE(std::abs(s[k] - 2.0 * std::exp(cplx(0, 2.0 * t)) * std::cos(t)) <= 1e-12);
    }
}

TEST_CASE("norm is the sum of squared amplitudes and the mean power", "[signal][property]") {
    testing::Rng rng(12);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = testing::uniform_int(rng, 1, 5);
        Amplitudes a = testing::random_amplitudes(rng, std::uint64_t{1} << n);
        const double scale = std::uniform_real_distribution<double>(0.1, 4.0)(rng);
        double expected = 0.0;
        for (cplx& v : a) {
            v *= scale;
            expected += std::norm(v);
        }
        const QmtSignal psi = synthesize(make_plan(n), QubitSet::range(n), a);
        double power = 0.0;
        for (const cplx& v : psi.samples()) {
            power += std::norm(v);
        }
        power /= static_cast<double>(psi.size());
        REQUIRE(norm_sq(psi) == Catch::Approx(expected).epsilon(1e-12));
        REQUIRE(power == Catch::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("tensor product matches the Kronecker product of amplitudes", "[signal][property]") {
    testing::Rng rng(13);
    const FrequencyPlan p = make_plan(4);
    const QubitSet high{2, 3};
    const QubitSet low{0, 1};
    for (int trial = 0; trial < 20; ++trial) {
        const Amplitudes ah = testing::random_amplitudes(rng, 4);
        const Amplitudes al = testing::random_amplitudes(rng, 4);
        const QmtSignal prod = tensor_product(synthesize(p, high, ah), synthesize(p, low, al));
        REQUIRE(prod.qubits() == QubitSet::range(4));
        const Amplitudes got = analyze(prod);
        for (std::uint64_t x = 0; x < 16; ++x) {
            REQUIRE(std::abs(got[x] - ah[x >> 2] * al[x & 3]) <= 1e-12);
        }
    }
    CHECK_THROWS_AS(tensor_product(basis_signal(p, high, 0), basis_signal(p, QubitSet{1, 2}, 0)),
                    std::invalid_argument);
}

TEST_CASE("interleaved tensor factors land on the right bits", "[signal]") {
    const FrequencyPlan p = make_plan(3);
    const QmtSignal a = basis_signal(p, QubitSet{1}, 1);
    const QmtSignal b = basis_signal(p, QubitSet{0, 2}, 2);  // qubit 2 = 1, qubit 0 = 0
    const Amplitudes got = analyze(tensor_product(a, b));
    for (std::uint64_t x = 0; x < 8; ++x) {
        CHECK(std::abs(got[x] - cplx(x == 6 ? 1.0 : 0.0)) <= 1e-12);
    }
}

TEST_CASE("combine is linear", "[signal]") {
    testing::Rng rng(14);
    const QmtSignal u = testing::random_state(rng, 3);
    const QmtSignal v = testing::random_state(rng, 3);
    const cplx c1(0.5, -1.0);
    const cplx c2(2.0, 0.25);
    const QmtSignal w = combine({{c1, &u}, {c2, &v}});
    const Amplitudes au = analyze(u);
    const Amplitudes av = analyze(v);
    const Amplitudes aw = analyze(w);
    for (std::size_t x = 0; x < aw.size(); ++x) {
        CHECK(std::abs(aw[x] - (c1 * au[x] + c2 * av[x])) <= 1e-12);
    }
    CHECK_THROWS_AS(combine(std::span<const Term>{}), std::invalid_argument);
}

TEST_CASE("off-bin energy is not canonical", "[signal]") {
    const FrequencyPlan p = make_plan(2);
    Samples s(p.samples_per_period);
    for (std::size_t k = 0; k < s.size(); ++k) {
        s[k] = std::exp(cplx(0, 2.0 * p.sample_time(k)));  // bin 2 is not a basis bin for n = 2
    }
    CHECK_FALSE(is_canonical(QmtSignal(p, QubitSet::range(2), s)));
}

TEST_CASE("signals validate their construction", "[signal]") {
    const FrequencyPlan p = make_plan(2);
    CHECK_THROWS_AS(QmtSignal(p, QubitSet::range(2), Samples(3)), std::invalid_argument);
    CHECK_THROWS_AS(QmtSignal(p, QubitSet{0, 5}, Samples(p.samples_per_period)), std::invalid_argument);
    CHECK_THROWS_AS(inner_product(basis_signal(p, QubitSet{0}, 0), basis_signal(p, QubitSet{1}, 0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(inner_product(basis_signal(p, QubitSet{0}, 0), basis_signal(make_plan(3), QubitSet{0}, 0)),
                    std::invalid_argument);
}

TEST_CASE("modulate and demodulate round trip", "[signal][property]") {
    testing::Rng rng(15);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = testing::uniform_int(rng, 1, 4);
        const double dw = std::uniform_real_distribution<double>(0.5, 3.0)(rng);
        const double offset = dw * testing::uniform_int(rng, 0, 20);
        const FrequencyPlan p = make_plan(n, dw, offset);
        const QmtSignal psi = testing::random_state(rng, p, QubitSet::range(n));
        const PassbandSignal s = modulate(psi);
        REQUIRE(s.samples.size() == p.passband_samples);
        REQUIRE(max_abs_diff(demodulate(s), psi) <= 1e-9);
    }
}

TEST_CASE("passband samples are the quadrature mix of the baseband", "[signal]") {
    testing::Rng rng(16);
    const FrequencyPlan p = make_plan(2, 1.0, 4.0);
    const QmtSignal psi = testing::random_state(rng, p, QubitSet::range(2));
    const Amplitudes a = analyze(psi);
    const PassbandSignal s = modulate(psi);
    for (std::size_t k = 0; k < s.samples.size(); ++k) {
        const double t = p.passband_time(k);
        cplx base{};
        for (std::uint64_t x = 0; x < a.size(); ++x) {
            base += a[x] * std::exp(cplx(0, p.basis_frequency(x) * t));
        }
        const double expected = base.real() * std::cos(p.carrier * t) - base.imag() * std::sin(p.carrier * t);
        REQUIRE(std::abs(s.samples[k] - expected) <= 1e-12);
    }
}
