// Copyright 2026 The qmt Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>

#include "catch_amalgamated.hpp"
#include "qmt/gates.hpp"
#include "qmt/oracle.hpp"
#include "support.hpp"

using namespace qmt;
using qmt::testing::max_abs_diff;

namespace {

oracle::StateVector as_sv(const QmtSignal& psi) {
    return oracle::StateVector(static_cast<int>(psi.qubits().size()), analyze(psi));
}

}  // namespace

TEST_CASE("gate matrices validate their shape", "[gates]") {
    CHECK_THROWS_AS(GateMatrix(3, std::vector<cplx>(9)), std::invalid_argument);
    CHECK_THROWS_AS(GateMatrix(2, std::vector<cplx>(3)), std::invalid_argument);
    CHECK_THROWS_AS(GateMatrix(2, {1, 0, 0, cplx(NAN, 0)}), std::invalid_argument);
    CHECK_THROWS_AS(standard_gate("Y"), std::invalid_argument);
    CHECK(standard_gate("h") == standard_gate("H"));
}

TEST_CASE("standard gates are unitary", "[gates]") {
    for (const char* name : {"X", "Z", "H", "I"}) {
        const GateMatrix g = standard_gate(name);
        const GateMatrix prod = g.adjoint() * g;
        for (std::size_t r = 0; r < 2; ++r) {
            for (std::size_t c = 0; c < 2; ++c) {
                CHECK(std::abs(prod(r, c) - cplx(r == c ? 1.0 : 0.0)) <= 1e-15);
            }
        }
    }
    CHECK(cnot_matrix()(3, 2) == cplx(1.0));
    CHECK(cnot_matrix()(2, 2) == cplx(0.0));
}

TEST_CASE("single-qubit gates on basis states", "[gates]") {
    const FrequencyPlan p = make_plan(1);
    const QubitSet q{0};
    const QmtSignal zero = basis_signal(p, q, 0);
    const QmtSignal one = basis_signal(p, q, 1);
    const double r = 1.0 / std::numbers::sqrt2;

    CHECK(max_abs_diff(analyze(apply_1q(zero, 0, standard_gate("H"))), Amplitudes{r, r}) <= 1e-12);
    CHECK(max_abs_diff(analyze(apply_1q(one, 0, standard_gate("H"))), Amplitudes{r, -r}) <= 1e-12);
    CHECK(max_abs_diff(analyze(apply_1q(zero, 0, standard_gate("X"))), Amplitudes{0, 1}) <= 1e-12);
    CHECK(max_abs_diff(analyze(apply_1q(one, 0, standard_gate("Z"))), Amplitudes{0, -1}) <= 1e-12);
}

TEST_CASE("Bell preparation", "[gates]") {
    const FrequencyPlan p = make_plan(2);
    QmtSignal psi = basis_signal(p, QubitSet::range(2), 0);
    psi = apply_1q(psi, 1, standard_gate("H"));
    psi = apply_cnot(psi, 1, 0);
    const double r = 1.0 / std::numbers::sqrt2;
    CHECK(max_abs_diff(analyze(psi), Amplitudes{r, 0, 0, r}) <= 1e-12);
}

TEST_CASE("one-qubit gates agree with the dense oracle", "[gates][property]") {
    testing::Rng rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = testing::uniform_int(rng, 1, 5);
        const QmtSignal psi = testing::random_state(rng, n);
        const int q = testing::uniform_int(rng, 0, n - 1);
        const GateMatrix g = trial % 2 == 0 ? testing::random_unitary_2(rng) : testing::random_matrix(rng, 2);
        const QmtSignal out = apply_1q(psi, q, g);
        REQUIRE(is_canonical(out));
        REQUIRE(max_abs_diff(out, oracle::sv_apply_1q(as_sv(psi), q, g)) <= 1e-10);
    }
}

TEST_CASE("two-qubit gates agree with the dense oracle", "[gates][property]") {
    testing::Rng rng(32);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = testing::uniform_int(rng, 2, 5);
        const QmtSignal psi = testing::random_state(rng, n);
        const int i = testing::uniform_int(rng, 0, n - 1);
        const int j = (i + testing::uniform_int(rng, 1, n - 1)) % n;
        const GateMatrix g = testing::random_matrix(rng, 4);
        REQUIRE(max_abs_diff(apply_2q(psi, i, j, g), oracle::sv_apply_2q(as_sv(psi), i, j, g)) <= 1e-10);
    }
}

TEST_CASE("projective CNOT equals the 4x4 form", "[gates][property]") {
    testing::Rng rng(33);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = testing::uniform_int(rng, 2, 5);
        const QmtSignal psi = testing::random_state(rng, n);
        const int c = testing::uniform_int(rng, 0, n - 1);
        const int t = (c + testing::uniform_int(rng, 1, n - 1)) % n;
        REQUIRE(max_abs_diff(apply_cnot(psi, c, t), apply_2q(psi, c, t, cnot_matrix())) <= 1e-12);
    }
}

TEST_CASE("gates are linear", "[gates][property]") {
    testing::Rng rng(34);
    const QmtSignal u = testing::random_state(rng, 3);
    const QmtSignal v = testing::random_state(rng, 3);
    const GateMatrix g = testing::random_matrix(rng, 4);
    const cplx a(0.3, 0.9);
    const QmtSignal lhs = apply_2q(combine({{a, &u}, {1.0, &v}}), 2, 0, g);
    const QmtSignal gu = apply_2q(u, 2, 0, g);
    const QmtSignal gv = apply_2q(v, 2, 0, g);
    CHECK(max_abs_diff(lhs, combine({{a, &gu}, {1.0, &gv}})) <= 1e-12);
}

TEST_CASE("gate ops dispatch to the right engine call", "[gates]") {
    testing::Rng rng(35);
    const QmtSignal psi = testing::random_state(rng, 3);
    const GateMatrix g = testing::random_unitary_2(rng);
    CHECK(max_abs_diff(apply_gate(psi, GateOp::one(1, g)), apply_1q(psi, 1, g)) <= 1e-15);
    CHECK(max_abs_diff(apply_gate(psi, GateOp::controlled_not(2, 0)), apply_cnot(psi, 2, 0)) <= 1e-15);
    CHECK_THROWS_AS(apply_cnot(psi, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(apply_1q(psi, 1, cnot_matrix()), std::invalid_argument);
    CHECK_THROWS_AS(apply_2q(psi, 0, 1, standard_gate("H")), std::invalid_argument);
    CHECK_THROWS_AS(apply_1q(psi, 5, g), std::invalid_argument);
}
