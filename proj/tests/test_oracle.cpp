// Copyright 2026 The qmt Authors
// SPDX-License-Identifier: Apache-2.0

#include <numbers>

#include "catch_amalgamated.hpp"
#include "qmt/oracle.hpp"
#include "support.hpp"

using namespace qmt;
using namespace qmt::oracle;

TEST_CASE("state vector construction", "[oracle]") {
    const StateVector z(3);
    CHECK(z.size() == 8);
    CHECK(z[0] == cplx(1.0));
    CHECK(z.norm_sq() == 1.0);
    CHECK(StateVector::basis(2, 3)[3] == cplx(1.0));
    CHECK_THROWS_AS(StateVector(21), std::invalid_argument);
    CHECK_THROWS_AS(StateVector(2, {1, 0}), std::invalid_argument);
}

TEST_CASE("CNOT truth table on basis states", "[oracle]") {
    for (int n = 2; n <= 4; ++n) {
        for (int c = 0; c < n; ++c) {
            for (int t = 0; t < n; ++t) {
                if (c == t) {
                    continue;
                }
                for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
                    const std::uint64_t y = x ^ (((x >> c) & 1U) << t);
                    const StateVector out = sv_apply_2q(StateVector::basis(n, x), c, t, cnot_matrix());
                    REQUIRE(out[y] == cplx(1.0));
                    REQUIRE(out.norm_sq() == 1.0);
                }
            }
        }
    }
}

TEST_CASE("X flips one bit and H splits evenly", "[oracle]") {
    const StateVector x = sv_apply_1q(StateVector::basis(3, 0b010), 0, standard_gate("X"));
    CHECK(x[0b011] == cplx(1.0));
    const StateVector h = sv_apply_1q(StateVector::basis(3, 0b100), 2, standard_gate("H"));
    CHECK(std::abs(h[0b000] - cplx(1.0 / std::numbers::sqrt2)) <= 1e-15);
    CHECK(std::abs(h[0b100] + cplx(1.0 / std::numbers::sqrt2)) <= 1e-15);
}

TEST_CASE("two-qubit label order puts the first qubit high", "[oracle]") {
    // Swap-like matrix that maps label 1 (first = 0, second = 1) to label 2.
    std::vector<cplx> e(16);
    e[0 * 4 + 0] = 1;
    e[2 * 4 + 1] = 1;
    e[1 * 4 + 2] = 1;
    e[3 * 4 + 3] = 1;
    const GateMatrix swap(4, e);
    const StateVector out = sv_apply_2q(StateVector::basis(3, 0b100), 0, 2, swap);
    CHECK(out[0b001] == cplx(1.0));
}

TEST_CASE("unitary circuits preserve the norm", "[oracle][property]") {
    testing::Rng rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = testing::uniform_int(rng, 1, 6);
        StateVector sv(n, testing::random_amplitudes(rng, std::uint64_t{1} << n));
        for (const GateOp& op : testing::random_circuit(rng, n, 20)) {
            sv = sv_apply(sv, op);
        }
        REQUIRE(sv.norm_sq() == Catch::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("slice, project, kron and inner product", "[oracle]") {
    testing::Rng rng(42);
    const StateVector hi(1, testing::random_amplitudes(rng, 2));
    const StateVector lo(2, testing::random_amplitudes(rng, 4));
    const StateVector k = sv_kron(hi, lo);
    CHECK(k.n() == 3);
    CHECK(std::abs(k[0b110] - hi[1] * lo[2]) <= 1e-15);

    const StateVector s = sv_slice(k, 2, 1);
    CHECK(s.n() == 2);
    for (std::uint64_t x = 0; x < 4; ++x) {
        CHECK(std::abs(s[x] - hi[1] * lo[x]) <= 1e-15);
    }

    const StateVector p = sv_project(k, 0, 1);
    const auto [w0, w1] = sv_measure_probs(k, 0);
    CHECK(p.norm_sq() == Catch::Approx(w1));
    CHECK(w0 + w1 == Catch::Approx(1.0));
    CHECK(std::abs(sv_inner(k, k) - cplx(1.0)) <= 1e-12);
    CHECK(std::abs(sv_inner(p, sv_project(k, 0, 0))) <= 1e-15);
}
