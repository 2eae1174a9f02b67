// Copyright 2026 The qrt-kit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qrtkit/circuit.hpp"
#include "qrtkit/gadgets.hpp"
#include "qrtkit/qft.hpp"
#include "qrtkit/statevector.hpp"
#include "qrtkit/unitary.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace qrtkit {
namespace {

constexpr double kTol = 1e-12;

TEST(ApplyGate, HadamardOnZero) {
    const StateVector s = apply_gate(StateVector(1), gates::h(0));
    EXPECT_NEAR(std::abs(s[0] - 1.0 / std::sqrt(2.0)), 0.0, kTol);
    EXPECT_NEAR(std::abs(s[1] - 1.0 / std::sqrt(2.0)), 0.0, kTol);
}

TEST(ApplyGate, CnotFlipsTarget) {
    // |10> means q1 = 1, q0 = 0, index 2.
    const StateVector s = apply_gate(StateVector(2, 2), gates::cnot(1, 0));
    EXPECT_NEAR(std::abs(s[3] - 1.0), 0.0, kTol);
}

TEST(ApplyGate, GlobalPhaseScalesEveryAmplitude) {
    std::mt19937_64 rng(7);
    const StateVector psi = StateVector::random(3, rng);
    const StateVector out = apply_gate(psi, gates::global_phase(kPi / 4));
    const cplx f = std::polar(1.0, kPi / 4);
    for (std::size_t i = 0; i < psi.dim(); ++i) EXPECT_NEAR(std::abs(out[i] - f * psi[i]), 0.0, kTol);
}

TEST(ApplyGate, RejectsOutOfRangeOperand) {
    EXPECT_THROW(apply_gate(StateVector(2), gates::x(2)), std::out_of_range);
}

TEST(ApplyGate, PreservesNorm) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ang(-kPi, kPi);
    const std::vector<Gate> pool = {
        gates::h(0),           gates::s(1),          gates::sdg(2),         gates::x(3),
        gates::y(0),           gates::z(1),          gates::phase(2, 0.3),  gates::rz(3, -1.1),
        gates::cphase(0, 3, 0.7), gates::cnot(2, 1), gates::ch(3, 0),       gates::cs(1, 2),
        gates::csdg(2, 0),     gates::toffoli(0, 1, 3), gates::swap(1, 3),  gates::mcx({0, 1, 2}, 3),
    };
    for (int trial = 0; trial < 200; ++trial) {
        StateVector s = StateVector::random(4, rng);
        Gate g = pool[static_cast<std::size_t>(trial) % pool.size()];
        if (g.kind == GateKind::Phase || g.kind == GateKind::Rz || g.kind == GateKind::CPhase) g.angle = ang(rng);
        s = apply_gate(std::move(s), g);
        EXPECT_NEAR(s.norm(), 1.0, 1e-12) << gate_name(g.kind);
    }
}

TEST(RunCircuit, EmptyIsIdentity) {
    const Circuit c(3);
    for (std::uint64_t x = 0; x < 8; ++x) EXPECT_EQ(run_basis(c, x), x);
}

TEST(RunCircuit, HadamardTwiceIsIdentity) {
    Circuit c(1);
    c.h(0).h(0);
    const StateVector s = run_circuit(StateVector(1), c);
    EXPECT_NEAR(std::abs(s[0] - 1.0), 0.0, kTol);
}

TEST(RunCircuit, QubitZeroIsLeastSignificant) {
    Circuit c(2);
    c.x(0).x(1);
    EXPECT_EQ(run_basis(c, 0), 3U);
    Circuit d(2);
    d.x(0);
    EXPECT_EQ(run_basis(d, 0), 1U);
}

TEST(RunCircuit, RelabelingIsAppliedLast) {
    Circuit c(2);
    c.x(0);
    c.set_relabeling({1, 0});
    EXPECT_EQ(run_basis(c, 0), 2U);
    EXPECT_EQ(run_classical(c, 0), 2U);
}

TEST(CircuitUnitary, Hadamard) {
    Circuit c(1);
    c.h(0);
    const DenseMatrix u = circuit_unitary(c);
    const double r = 1.0 / std::sqrt(2.0);
    EXPECT_NEAR(std::abs(u(0, 0) - r), 0.0, kTol);
    EXPECT_NEAR(std::abs(u(0, 1) - r), 0.0, kTol);
    EXPECT_NEAR(std::abs(u(1, 0) - r), 0.0, kTol);
    EXPECT_NEAR(std::abs(u(1, 1) + r), 0.0, kTol);
}

TEST(CircuitUnitary, Swap) {
    Circuit c(2);
    c.swap(0, 1);
    const DenseMatrix u = circuit_unitary(c);
    DenseMatrix p(4, 4);
    p(0, 0) = p(3, 3) = 1.0;
    p(1, 2) = p(2, 1) = 1.0;
    EXPECT_EQ(max_abs_diff(u, p), 0.0);
}

TEST(CircuitUnitary, QftTwoQubitsMatchesFormula) {
    const DenseMatrix u = circuit_unitary(build_qft(2));
    for (std::size_t a = 0; a < 4; ++a) {
        for (std::size_t y = 0; y < 4; ++y) {
            const cplx want = std::polar(0.5, 2.0 * kPi * static_cast<double>(a * y) / 4.0);
            EXPECT_NEAR(std::abs(u(a, y) - want), 0.0, kTol);
        }
    }
}

TEST(CircuitUnitary, MatchesStatevectorColumns) {
    std::mt19937_64 rng(3);
    const Circuit c = build_qft(3);
    const DenseMatrix u = circuit_unitary(c);
    const StateVector psi = StateVector::random(3, rng);
    const StateVector out = run_circuit(psi, c);
    const std::vector<cplx> want = u.apply(psi.amplitudes());
    for (std::size_t i = 0; i < want.size(); ++i) EXPECT_NEAR(std::abs(out[i] - want[i]), 0.0, kTol);
}

TEST(CircuitUnitary, ParallelMatchesSerial) {
    const Circuit c = build_qft(5);
    const DenseMatrix a = circuit_unitary(c, {.max_qubits = 12, .threads = 1});
    const DenseMatrix b = circuit_unitary(c, {.max_qubits = 12, .threads = 4});
    EXPECT_EQ(max_abs_diff(a, b), 0.0);
}

TEST(CircuitUnitary, RespectsWidthCap) {
    EXPECT_THROW(circuit_unitary(Circuit(13)), std::invalid_argument);
}

TEST(Adjoint, SBecomesSdg) {
    Circuit c(1);
    c.s(0);
    Circuit want(1);
    want.sdg(0);
    EXPECT_EQ(adjoint(c), want);
}

TEST(Adjoint, HadamardIsSelfInverse) {
    Circuit c(1);
    c.h(0);
    EXPECT_EQ(adjoint(c), c);
}

TEST(Adjoint, IsAnInvolution) {
    Circuit c(3);
    c.h(0).cphase(0, 2, 0.4).toffoli(0, 1, 2).rz(1, -0.3).global_phase(0.2);
    c.set_relabeling({2, 0, 1});
    EXPECT_EQ(adjoint(adjoint(c)), c);
}

TEST(Adjoint, InvertsUnitary) {
    Circuit c(3);
    c.h(0).cs(0, 1).cphase(1, 2, 0.9).swap(0, 2).ch(2, 1);
    c.set_relabeling({1, 2, 0});
    const DenseMatrix u = circuit_unitary(c);
    const DenseMatrix v = circuit_unitary(adjoint(c));
    EXPECT_LT(max_abs_diff(v, u.adjoint()), kTol);
}

TEST(Circuit, RejectsBadRelabeling) {
    Circuit c(3);
    EXPECT_THROW(c.set_relabeling({0, 0, 1}), std::invalid_argument);
    c.set_ancillas({2});
    EXPECT_THROW(c.set_relabeling({2, 1, 0}), std::invalid_argument);
}

TEST(Circuit, IdentityRelabelingIsDropped) {
    Circuit c(2);
    c.set_relabeling({0, 1});
    EXPECT_FALSE(c.relabeling().has_value());
}

TEST(Circuit, RejectsMalformedGates) {
    Circuit c(3);
    EXPECT_THROW(c.append(Gate{GateKind::CNOT, {0}, {0}, 0.0}), std::invalid_argument);
    EXPECT_THROW(c.append(Gate{GateKind::H, {}, {0}, 0.5}), std::invalid_argument);
    EXPECT_THROW(c.append(gates::x(3)), std::out_of_range);
}

TEST(CountGates, EmptyCircuit) {
    const GateCountReport r = count_gates(Circuit(2));
    EXPECT_EQ(r.total, 0U);
    EXPECT_TRUE(r.per_kind.empty());
}

TEST(CountGates, OrGateIsThree) {
    const GateCountReport r = count_gates(build_or_gate());
    EXPECT_EQ(r.total, 3U);
    EXPECT_EQ(r.per_kind.at("cnot"), 2U);
    EXPECT_EQ(r.per_kind.at("toffoli"), 1U);
}

TEST(CountGates, TwosComplementFiveQubits) { EXPECT_EQ(count_gates(build_cond_twos_complement(5)).total, 16U); }

TEST(CountGates, MultiControlledWeighting) {
    Circuit c(6);
    c.mcx({0, 1}, 5);
    c.mcx({0, 1, 2, 3}, 5);
    c.x(4);
    const GateCountReport r = count_gates(c);
    EXPECT_EQ(r.instances, 3U);
    EXPECT_EQ(r.total, 1U + 5U + 1U);
    std::size_t sum = 0;
    for (const auto& [k, v] : r.per_kind) sum += v;
    EXPECT_EQ(sum, r.total);
}

TEST(CountGates, SwapsReportedSeparately) {
    const GateCountReport r = count_gates(build_qft(4));
    EXPECT_EQ(r.swaps, 2U);
    EXPECT_EQ(r.total_without_swaps(), r.total - 2U);
}

TEST(RestrictedAction, SeparatesAncillas) {
    Circuit c(2);
    c.h(0);
    c.cnot(0, 1);
    c.set_ancillas({1});
    const RestrictedAction ra = restricted_action(c);
    EXPECT_NEAR(ra.ancilla_residual, 1.0 / std::sqrt(2.0), kTol);
}

} // namespace
} // namespace qrtkit
