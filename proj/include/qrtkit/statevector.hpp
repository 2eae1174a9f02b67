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

/**
 * @file
 * Dense statevector simulation.
 */
#pragma once

#include "qrtkit/circuit.hpp"
#include "qrtkit/gate.hpp"

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qrtkit {

inline constexpr std::size_t kMaxStateQubits = 20;

class StateVector {
  public:
    /// |0...0> on `num_qubits` wires.
    explicit StateVector(std::size_t num_qubits) : StateVector(num_qubits, 0) {}

    /// Computational basis state |index>.
    StateVector(std::size_t num_qubits, std::uint64_t index) : num_qubits_(num_qubits) {
        check_width(num_qubits);
        amps_.assign(std::size_t{1} << num_qubits, cplx{});
        if (index >= amps_.size()) throw std::out_of_range("basis index outside register");
        amps_[index] = 1.0;
    }

    /// Throws if the length is not a power of two or the norm is off by
    /// more than 1e-12.
    static StateVector from_amplitudes(std::vector<cplx> amps) {
        std::size_t m = 0;
        while ((std::size_t{1} << m) < amps.size()) ++m;
        if (amps.empty() || (std::size_t{1} << m) != amps.size()) {
            throw std::invalid_argument("amplitude vector length must be a power of two");
        }
        StateVector s(m, 0);
        s.amps_ = std::move(amps);
        if (std::abs(s.norm() - 1.0) > 1e-12) throw std::invalid_argument("state is not normalized");
        return s;
    }

    /// Haar-ish random state (normalized complex Gaussian).
    template <class Rng>
    static StateVector random(std::size_t num_qubits, Rng& rng) {
        std::normal_distribution<double> g;
        std::vector<cplx> v(std::size_t{1} << num_qubits);
        double nrm = 0.0;
        for (auto& a : v) {
            a = {g(rng), g(rng)};
            nrm += std::norm(a);
        }
        nrm = std::sqrt(nrm);
        for (auto& a : v) a /= nrm;
        return from_amplitudes(std::move(v));
    }

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return amps_.size(); }
    const std::vector<cplx>& amplitudes() const { return amps_; }
    cplx operator[](std::size_t i) const { return amps_[i]; }

    double norm() const {
        double s = 0.0;
        for (const auto& a : amps_) s += std::norm(a);
        return std::sqrt(s);
    }

    /// In-place gate application; operands are checked against the width.
    void apply(const Gate& g) {
        validate_shape(g);
        for (Qubit q : g.controls) check_operand(q);
        for (Qubit q : g.targets) check_operand(q);
        switch (g.kind) {
        case GateKind::GlobalPhase: {
            const cplx ph = std::polar(1.0, g.angle);
            for (auto& a : amps_) a *= ph;
            return;
        }
        case GateKind::SWAP: {
            const std::size_t bi = std::size_t{1} << g.targets[0];
            const std::size_t bj = std::size_t{1} << g.targets[1];
            for (std::size_t idx = 0; idx < amps_.size(); ++idx) {
                if ((idx & bi) && !(idx & bj)) std::swap(amps_[idx], amps_[idx ^ bi ^ bj]);
            }
            return;
        }
        default:
            break;
        }
        std::size_t cmask = 0;
        for (Qubit q : g.controls) cmask |= std::size_t{1} << q;
        const std::size_t tbit = std::size_t{1} << g.targets[0];
        const auto m = target_matrix(g);
        const bool diagonal = m[1] == cplx{} && m[2] == cplx{};
        const bool flip = m[0] == cplx{} && m[3] == cplx{} && m[1] == cplx{1.0} && m[2] == cplx{1.0};
        for (std::size_t idx = 0; idx < amps_.size(); ++idx) {
            if ((idx & tbit) || (idx & cmask) != cmask) continue;
            const std::size_t j = idx | tbit;
            if (flip) {
                std::swap(amps_[idx], amps_[j]);
            } else if (diagonal) {
                amps_[idx] *= m[0];
                amps_[j] *= m[3];
            } else {
                const cplx a0 = amps_[idx];
                const cplx a1 = amps_[j];
                amps_[idx] = m[0] * a0 + m[1] * a1;
                amps_[j] = m[2] * a0 + m[3] * a1;
            }
        }
    }

    /// Moves the content of wire q to wire perm[q].
    void permute_wires(const std::vector<Qubit>& perm) {
        if (perm.size() != num_qubits_) throw std::invalid_argument("permutation size mismatch");
        std::vector<cplx> out(amps_.size());
        for (std::size_t idx = 0; idx < amps_.size(); ++idx) {
            std::size_t ni = 0;
            for (std::size_t q = 0; q < num_qubits_; ++q) {
                if ((idx >> q) & 1U) ni |= std::size_t{1} << perm[q];
            }
            out[ni] = amps_[idx];
        }
        amps_ = std::move(out);
    }

  private:
    static void check_width(std::size_t m) {
        if (m > kMaxStateQubits) {
            throw std::invalid_argument("statevector width " + std::to_string(m) + " exceeds cap of " +
                                        std::to_string(kMaxStateQubits));
        }
    }

    void check_operand(Qubit q) const {
        if (q >= num_qubits_) {
            throw std::out_of_range("operand q[" + std::to_string(q) + "] outside state of " +
                                    std::to_string(num_qubits_) + " qubits");
        }
    }

    std::size_t num_qubits_;
    std::vector<cplx> amps_;
};

inline StateVector apply_gate(StateVector state, const Gate& gate) {
    state.apply(gate);
    return state;
}

/// Gates in order, then the circuit's relabeling.
inline StateVector run_circuit(StateVector state, const Circuit& circuit) {
    if (state.num_qubits() != circuit.width()) {
        throw std::invalid_argument("run_circuit: state has " + std::to_string(state.num_qubits()) +
                                    " qubits, circuit has width " + std::to_string(circuit.width()));
    }
    for (const Gate& g : circuit.gates()) state.apply(g);
    if (circuit.relabeling()) state.permute_wires(*circuit.relabeling());
    return state;
}

/// Classical evaluation of a basis input, for circuits whose action on basis
/// states is a permutation (up to phase). Returns the index of the single
/// output component of modulus > 1 - tol, or throws if there is none.
inline std::uint64_t run_basis(const Circuit& circuit, std::uint64_t input, double tol = 1e-12) {
    const StateVector out = run_circuit(StateVector(circuit.width(), input), circuit);
    for (std::size_t i = 0; i < out.dim(); ++i) {
        if (std::abs(out[i]) > 1.0 - tol) return i;
    }
    throw std::runtime_error("run_basis: output is not a basis state");
}

/// Bit-level evaluation for circuits made only of X, CNOT, Toffoli, MCX and
/// SWAP. Throws std::invalid_argument on any other gate kind.
inline std::uint64_t run_classical(const Circuit& circuit, std::uint64_t input) {
    std::uint64_t v = input;
    for (const Gate& g : circuit.gates()) {
        switch (g.kind) {
        case GateKind::X:
        case GateKind::CNOT:
        case GateKind::Toffoli:
        case GateKind::MCX: {
            bool on = true;
            for (Qubit c : g.controls) on = on && ((v >> c) & 1U);
            if (on) v ^= std::uint64_t{1} << g.targets[0];
            break;
        }
        case GateKind::SWAP: {
            const auto i = g.targets[0];
            const auto j = g.targets[1];
            if (((v >> i) & 1U) != ((v >> j) & 1U)) v ^= (std::uint64_t{1} << i) | (std::uint64_t{1} << j);
            break;
        }
        default:
            throw std::invalid_argument("run_classical: non-classical gate " + std::string(gate_name(g.kind)));
        }
    }
    if (circuit.relabeling()) {
        std::uint64_t out = 0;
        for (std::size_t q = 0; q < circuit.width(); ++q) {
            if ((v >> q) & 1U) out |= std::uint64_t{1} << (*circuit.relabeling())[q];
        }
        v = out;
    }
    return v;
}

} // namespace qrtkit
