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
 * Ordered gate list over a fixed-width register.
 *
 * A circuit may carry a relabeling: a gate-free renaming of wires applied
 * after the last gate. `relabeling[q] = p` means the content of physical
 * wire q is read as logical wire p. Ancillas are wires documented to enter
 * and leave in |0>; a relabeling must map the ancilla set onto itself.
 */
#pragma once

#include "qrtkit/gate.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qrtkit {

class Circuit {
  public:
    explicit Circuit(std::size_t width, std::string label = {})
        : width_(width), label_(std::move(label)) {}

    std::size_t width() const { return width_; }
    const std::vector<Gate>& gates() const { return gates_; }
    const std::vector<Qubit>& ancillas() const { return ancillas_; }
    const std::optional<std::vector<Qubit>>& relabeling() const { return relabeling_; }
    const std::string& label() const { return label_; }
    std::size_t data_width() const { return width_ - ancillas_.size(); }

    void set_label(std::string label) { label_ = std::move(label); }

    Circuit& append(Gate g) {
        validate_shape(g);
        for (Qubit q : g.controls) check_wire(q);
        for (Qubit q : g.targets) check_wire(q);
        gates_.push_back(std::move(g));
        return *this;
    }

    /// Appends every gate of `other` (same width). `other` must not carry a
    /// relabeling; relabelings only ever sit at the end of a circuit.
    Circuit& append(const Circuit& other) {
        if (other.width_ != width_) throw std::invalid_argument("append: width mismatch");
        if (other.relabeling_) throw std::invalid_argument("append: sub-circuit has a relabeling");
        gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
        return *this;
    }

    /// Appends `other` with its wire q placed on `wire_map[q]`.
    Circuit& append_mapped(const Circuit& other, std::span<const Qubit> wire_map) {
        if (wire_map.size() != other.width_) throw std::invalid_argument("append_mapped: map size mismatch");
        if (other.relabeling_) throw std::invalid_argument("append_mapped: sub-circuit has a relabeling");
        for (const Gate& g : other.gates_) {
            Gate m = g;
            for (Qubit& q : m.controls) q = wire_map[q];
            for (Qubit& q : m.targets) q = wire_map[q];
            append(std::move(m));
        }
        return *this;
    }

    void set_ancillas(std::vector<Qubit> wires) {
        std::sort(wires.begin(), wires.end());
        if (std::adjacent_find(wires.begin(), wires.end()) != wires.end()) {
            throw std::invalid_argument("set_ancillas: duplicate wire");
        }
        for (Qubit q : wires) check_wire(q);
        ancillas_ = std::move(wires);
        if (relabeling_) check_relabel_keeps_ancillas(*relabeling_);
    }

    void set_relabeling(std::vector<Qubit> perm) {
        if (perm.size() != width_) throw std::invalid_argument("relabeling: size must equal width");
        std::vector<bool> seen(width_, false);
        for (Qubit p : perm) {
            if (p >= width_ || seen[p]) throw std::invalid_argument("relabeling: not a permutation");
            seen[p] = true;
        }
        check_relabel_keeps_ancillas(perm);
        bool identity = true;
        for (std::size_t q = 0; q < width_; ++q) identity = identity && perm[q] == q;
        if (identity) {
            relabeling_.reset();
        } else {
            relabeling_ = std::move(perm);
        }
    }

    void clear_relabeling() { relabeling_.reset(); }

    bool is_ancilla(Qubit q) const { return std::binary_search(ancillas_.begin(), ancillas_.end(), q); }

    /// Non-ancilla wires in increasing order; bit i of a data value lives on
    /// data_wires()[i].
    std::vector<Qubit> data_wires() const {
        std::vector<Qubit> out;
        for (Qubit q = 0; q < width_; ++q) {
            if (!is_ancilla(q)) out.push_back(q);
        }
        return out;
    }

    // Fluent helpers.
    Circuit& x(Qubit q) { return append(gates::x(q)); }
    Circuit& y(Qubit q) { return append(gates::y(q)); }
    Circuit& z(Qubit q) { return append(gates::z(q)); }
    Circuit& h(Qubit q) { return append(gates::h(q)); }
    Circuit& s(Qubit q) { return append(gates::s(q)); }
    Circuit& sdg(Qubit q) { return append(gates::sdg(q)); }
    Circuit& phase(Qubit q, double t) { return append(gates::phase(q, t)); }
    Circuit& rz(Qubit q, double t) { return append(gates::rz(q, t)); }
    Circuit& cphase(Qubit c, Qubit q, double t) { return append(gates::cphase(c, q, t)); }
    Circuit& cnot(Qubit c, Qubit q) { return append(gates::cnot(c, q)); }
    Circuit& ch(Qubit c, Qubit q) { return append(gates::ch(c, q)); }
    Circuit& cs(Qubit c, Qubit q) { return append(gates::cs(c, q)); }
    Circuit& csdg(Qubit c, Qubit q) { return append(gates::csdg(c, q)); }
    Circuit& toffoli(Qubit a, Qubit b, Qubit q) { return append(gates::toffoli(a, b, q)); }
    Circuit& swap(Qubit a, Qubit b) { return append(gates::swap(a, b)); }
    Circuit& global_phase(double t) { return append(gates::global_phase(t)); }
    Circuit& mcx(std::vector<Qubit> cs, Qubit q) { return append(gates::mcx(std::move(cs), q)); }

    friend bool operator==(const Circuit& a, const Circuit& b) {
        return a.width_ == b.width_ && a.gates_ == b.gates_ && a.ancillas_ == b.ancillas_ &&
               a.relabeling_ == b.relabeling_;
    }

  private:
    void check_wire(Qubit q) const {
        if (q >= width_) {
            throw std::out_of_range("operand q[" + std::to_string(q) + "] outside register of width " +
                                    std::to_string(width_));
        }
    }

    void check_relabel_keeps_ancillas(const std::vector<Qubit>& perm) const {
        for (Qubit a : ancillas_) {
            if (!is_ancilla(perm[a])) throw std::invalid_argument("relabeling moves an ancilla onto a data wire");
        }
    }

    std::size_t width_;
    std::vector<Gate> gates_;
    std::vector<Qubit> ancillas_;
    std::optional<std::vector<Qubit>> relabeling_;
    std::string label_;
};

/// Reversed gate order, each gate inverted, relabeling inverted. The gates of
/// the adjoint act on wires renamed by the original relabeling so that
/// U(adjoint(c)) = U(c)^dagger exactly.
inline Circuit adjoint(const Circuit& c) {
    Circuit r(c.width(), c.label().empty() ? std::string{} : c.label() + "^dg");
    const auto& perm = c.relabeling();
    for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) {
        Gate g = inverse(*it);
        if (perm) {
            for (Qubit& q : g.controls) q = (*perm)[q];
            for (Qubit& q : g.targets) q = (*perm)[q];
        }
        r.append(std::move(g));
    }
    r.set_ancillas(c.ancillas());
    if (perm) {
        std::vector<Qubit> inv(c.width());
        for (std::size_t q = 0; q < c.width(); ++q) inv[(*perm)[q]] = q;
        r.set_relabeling(std::move(inv));
    }
    return r;
}

struct GateCountReport {
    std::map<std::string, std::size_t> per_kind;  ///< elementary gates by lowercase kind name
    std::size_t total = 0;                        ///< sum of per_kind
    std::size_t instances = 0;                    ///< Gate objects, MCX counted once
    std::size_t width = 0;
    std::size_t ancillas = 0;
    std::size_t swaps = 0;

    std::size_t total_without_swaps() const { return total - swaps; }
};

inline GateCountReport count_gates(const Circuit& c) {
    GateCountReport r;
    r.width = c.width();
    r.ancillas = c.ancillas().size();
    for (const Gate& g : c.gates()) {
        r.per_kind[std::string(gate_name(g.kind))] += elementary_cost(g);
        r.total += elementary_cost(g);
        ++r.instances;
        if (g.kind == GateKind::SWAP) ++r.swaps;
    }
    return r;
}

} // namespace qrtkit
