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
 * Reversible arithmetic and logic subcircuits.
 *
 * Every gadget comes in two forms: an `emit_*` function that appends gates
 * on caller-chosen wires of an existing circuit, and a `build_*` function
 * returning a standalone circuit on the layout described by GadgetLayout.
 */
#pragma once

#include "qrtkit/circuit.hpp"

#include <array>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qrtkit {

using WireList = std::span<const Qubit>;

// Emitters

/// (x + c) mod 2^n on `data` (LSB first) using n - 2 carry wires in |0>.
inline void emit_cond_increment(Circuit& c, Qubit ctrl, WireList data, WireList carry) {
    const std::size_t n = data.size();
    if (n == 0) throw std::invalid_argument("increment: empty register");
    if (carry.size() < (n >= 2 ? n - 2 : 0)) throw std::invalid_argument("increment: not enough carry wires");
    if (n == 1) {
        c.cnot(ctrl, data[0]);
        return;
    }
    if (n >= 3) {
        c.toffoli(data[0], data[1], carry[0]);
        for (std::size_t i = 0; i + 3 < n; ++i) c.toffoli(carry[i], data[i + 2], carry[i + 1]);
        for (std::size_t i = n - 3; i >= 1; --i) {
            c.toffoli(ctrl, carry[i], data[i + 2]);
            c.toffoli(carry[i - 1], data[i + 1], carry[i]);
        }
        c.toffoli(ctrl, carry[0], data[2]);
        c.toffoli(data[0], data[1], carry[0]);
    }
    c.toffoli(ctrl, data[0], data[1]);
    c.cnot(ctrl, data[0]);
}

inline void emit_cond_decrement(Circuit& c, Qubit ctrl, WireList data, WireList carry) {
    Circuit inc(c.width());
    emit_cond_increment(inc, ctrl, data, carry);
    c.append(adjoint(inc));
}

inline void emit_cond_ones_complement(Circuit& c, Qubit ctrl, WireList data) {
    for (Qubit d : data) c.cnot(ctrl, d);
}

/// (2^n - x) mod 2^n. A single wire is its own two's complement, so nothing
/// is emitted for n = 1.
inline void emit_cond_twos_complement(Circuit& c, Qubit ctrl, WireList data, WireList carry) {
    if (data.size() <= 1) return;
    emit_cond_ones_complement(c, ctrl, data);
    emit_cond_increment(c, ctrl, data, carry);
}

inline void emit_or_gate(Circuit& c, Qubit a, Qubit b, Qubit r) {
    c.cnot(a, r);
    c.cnot(b, r);
    c.toffoli(a, b, r);
}

/// Record of one or-tree evaluation, needed to uncompute it.
struct OrTreeTrace {
    Qubit root = 0;
    std::vector<std::array<Qubit, 3>> steps;  ///< (a, b, result) in emission order
};

/// Left-to-right pairing per layer; scratch wires are consumed in order and an
/// odd leftover is carried to the next layer unchanged.
inline OrTreeTrace emit_or_tree_compute(Circuit& c, WireList data, WireList scratch) {
    if (data.empty()) throw std::invalid_argument("or-tree: empty register");
    if (scratch.size() < data.size() - 1) throw std::invalid_argument("or-tree: not enough ancillas");
    OrTreeTrace t;
    std::vector<Qubit> layer(data.begin(), data.end());
    std::size_t next = 0;
    while (layer.size() > 1) {
        std::vector<Qubit> up;
        for (std::size_t i = 0; i < layer.size(); i += 2) {
            if (i + 1 < layer.size()) {
                const Qubit r = scratch[next++];
                emit_or_gate(c, layer[i], layer[i + 1], r);
                t.steps.push_back({layer[i], layer[i + 1], r});
                up.push_back(r);
            } else {
                up.push_back(layer[i]);
            }
        }
        layer = std::move(up);
    }
    t.root = layer[0];
    return t;
}

inline void emit_or_tree_uncompute(Circuit& c, const OrTreeTrace& t) {
    for (auto it = t.steps.rbegin(); it != t.steps.rend(); ++it) {
        const auto [a, b, r] = *it;
        c.toffoli(a, b, r);
        c.cnot(b, r);
        c.cnot(a, r);
    }
}

using RootBody = std::function<void(Circuit&, Qubit root)>;

/// Computes OR(data) into a root, runs `body` with that root, then
/// uncomputes. With one data wire the wire itself is the root.
inline void emit_nonzero_conditioned(Circuit& c, WireList data, WireList scratch, const RootBody& body) {
    const OrTreeTrace t = emit_or_tree_compute(c, data, scratch);
    body(c, t.root);
    emit_or_tree_uncompute(c, t);
}

// Standalone builders

/// Wire assignment of a standalone gadget circuit.
struct GadgetLayout {
    std::vector<Qubit> data_qubits;
    std::optional<Qubit> control_qubit;
    std::vector<Qubit> carry_ancillas;
    std::vector<Qubit> tree_ancillas;
    std::optional<Qubit> root_index;

    std::size_t width() const {
        return data_qubits.size() + (control_qubit ? 1 : 0) + carry_ancillas.size() + tree_ancillas.size();
    }
};

/// data 0..n-1, control n, carries n+1 .. 2n-2.
inline GadgetLayout arithmetic_layout(std::size_t n, bool with_carries = true) {
    GadgetLayout l;
    l.data_qubits.resize(n);
    std::iota(l.data_qubits.begin(), l.data_qubits.end(), Qubit{0});
    l.control_qubit = n;
    if (with_carries) {
        l.carry_ancillas.resize(n >= 2 ? n - 2 : 0);
        std::iota(l.carry_ancillas.begin(), l.carry_ancillas.end(), Qubit{n + 1});
    }
    return l;
}

/// data 0..n-1, tree ancillas n .. 2n-2; the root is the last ancilla.
inline GadgetLayout or_tree_layout(std::size_t n) {
    GadgetLayout l;
    l.data_qubits.resize(n);
    std::iota(l.data_qubits.begin(), l.data_qubits.end(), Qubit{0});
    l.tree_ancillas.resize(n - 1);
    std::iota(l.tree_ancillas.begin(), l.tree_ancillas.end(), Qubit{n});
    l.root_index = n >= 2 ? 2 * n - 2 : 0;
    return l;
}

namespace detail {

inline void require_n(std::size_t n, std::size_t min, const char* what) {
    if (n < min) {
        throw std::invalid_argument(std::string(what) + ": n must be at least " + std::to_string(min) +
                                    ", got " + std::to_string(n));
    }
}

} // namespace detail

inline Circuit build_cond_increment(std::size_t n) {
    detail::require_n(n, 1, "cond_increment");
    const GadgetLayout l = arithmetic_layout(n);
    Circuit c(l.width(), "inc");
    emit_cond_increment(c, *l.control_qubit, l.data_qubits, l.carry_ancillas);
    c.set_ancillas(l.carry_ancillas);
    return c;
}

inline Circuit build_cond_decrement(std::size_t n) {
    detail::require_n(n, 1, "cond_decrement");
    Circuit c = adjoint(build_cond_increment(n));
    c.set_label("dec");
    return c;
}

inline Circuit build_cond_ones_complement(std::size_t n) {
    detail::require_n(n, 1, "cond_ones_complement");
    const GadgetLayout l = arithmetic_layout(n, false);
    Circuit c(l.width(), "ones-comp");
    emit_cond_ones_complement(c, *l.control_qubit, l.data_qubits);
    return c;
}

inline Circuit build_cond_twos_complement(std::size_t n) {
    detail::require_n(n, 2, "cond_twos_complement");
    const GadgetLayout l = arithmetic_layout(n);
    Circuit c(l.width(), "twos-comp");
    emit_cond_twos_complement(c, *l.control_qubit, l.data_qubits, l.carry_ancillas);
    c.set_ancillas(l.carry_ancillas);
    return c;
}

/// Inputs q0, q1 on wires 0 and 1, result on wire 2.
inline Circuit build_or_gate() {
    Circuit c(3, "or");
    emit_or_gate(c, 0, 1, 2);
    return c;
}

enum class OrTreeMode {
    Bare,               ///< compute only; root holds the OR, internal nodes stay dirty
    UncomputeInternal,  ///< compute, hook, full uncompute
    ResetRoot,          ///< two compute / hook / uncompute rounds
};

/// Standalone or-tree. `hook` is spliced wherever the root is valid (after
/// each compute half); it may touch wires beyond the tree only if the caller
/// widens the circuit via `extra_wires`.
inline Circuit build_or_tree(std::size_t n, OrTreeMode mode, const RootBody& hook = {},
                             std::size_t extra_wires = 0) {
    detail::require_n(n, 2, "or_tree");
    const GadgetLayout l = or_tree_layout(n);
    Circuit c(l.width() + extra_wires, "or-tree");
    auto round = [&] {
        const OrTreeTrace t = emit_or_tree_compute(c, l.data_qubits, l.tree_ancillas);
        if (hook) hook(c, t.root);
        if (mode != OrTreeMode::Bare) emit_or_tree_uncompute(c, t);
    };
    round();
    if (mode == OrTreeMode::ResetRoot) round();
    if (mode != OrTreeMode::Bare) c.set_ancillas(l.tree_ancillas);
    return c;
}

inline Circuit build_or_tree(std::size_t n, bool uncompute_internal, bool reset_root) {
    const OrTreeMode mode = reset_root           ? OrTreeMode::ResetRoot
                            : uncompute_internal ? OrTreeMode::UncomputeInternal
                                                 : OrTreeMode::Bare;
    return build_or_tree(n, mode);
}

} // namespace qrtkit
