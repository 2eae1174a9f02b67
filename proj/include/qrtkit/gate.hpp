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
 * Elementary gate set shared by every circuit builder.
 *
 * Qubit 0 is the least-significant bit of a register value. A gate is a
 * kind, a list of control wires, a list of target wires and, for the
 * parameterized kinds, an angle in radians.
 */
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qrtkit {

using Qubit = std::size_t;
using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

enum class GateKind : std::uint8_t {
    X,
    Y,
    Z,
    H,
    S,
    Sdg,
    Phase,
    Rz,
    CPhase,
    CNOT,
    CH,
    CS,
    CSdg,
    Toffoli,
    SWAP,
    GlobalPhase,
    MCX,
};

inline constexpr std::array<GateKind, 17> kAllGateKinds = {
    GateKind::X,      GateKind::Y,    GateKind::Z,           GateKind::H,
    GateKind::S,      GateKind::Sdg,  GateKind::Phase,       GateKind::Rz,
    GateKind::CPhase, GateKind::CNOT, GateKind::CH,          GateKind::CS,
    GateKind::CSdg,   GateKind::Toffoli, GateKind::SWAP,     GateKind::GlobalPhase,
    GateKind::MCX,
};

/// Operand shape of a gate kind. `controls` is -1 for MCX (any k >= 1).
struct GateArity {
    int controls;
    int targets;
    bool has_angle;
};

constexpr GateArity arity(GateKind kind) {
    switch (kind) {
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
    case GateKind::H:
    case GateKind::S:
    case GateKind::Sdg:
        return {0, 1, false};
    case GateKind::Phase:
    case GateKind::Rz:
        return {0, 1, true};
    case GateKind::CPhase:
        return {1, 1, true};
    case GateKind::CNOT:
    case GateKind::CH:
    case GateKind::CS:
    case GateKind::CSdg:
        return {1, 1, false};
    case GateKind::Toffoli:
        return {2, 1, false};
    case GateKind::SWAP:
        return {0, 2, false};
    case GateKind::GlobalPhase:
        return {0, 0, true};
    case GateKind::MCX:
        return {-1, 1, false};
    }
    return {0, 0, false};
}

constexpr std::string_view gate_name(GateKind kind) {
    switch (kind) {
    case GateKind::X: return "x";
    case GateKind::Y: return "y";
    case GateKind::Z: return "z";
    case GateKind::H: return "h";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::Phase: return "phase";
    case GateKind::Rz: return "rz";
    case GateKind::CPhase: return "cphase";
    case GateKind::CNOT: return "cnot";
    case GateKind::CH: return "ch";
    case GateKind::CS: return "cs";
    case GateKind::CSdg: return "csdg";
    case GateKind::Toffoli: return "toffoli";
    case GateKind::SWAP: return "swap";
    case GateKind::GlobalPhase: return "globalphase";
    case GateKind::MCX: return "mcx";
    }
    return "?";
}

inline std::optional<GateKind> gate_kind_from_name(std::string_view name) {
    for (GateKind k : kAllGateKinds) {
        if (gate_name(k) == name) return k;
    }
    return std::nullopt;
}

struct Gate {
    GateKind kind = GateKind::X;
    std::vector<Qubit> controls;
    std::vector<Qubit> targets;
    double angle = 0.0;

    friend bool operator==(const Gate&, const Gate&) = default;
};

/// Throws std::invalid_argument if the gate's operand shape, operand
/// disjointness or angle is invalid. Register bounds are checked by Circuit.
inline void validate_shape(const Gate& g) {
    const GateArity a = arity(g.kind);
    if (a.controls >= 0 && g.controls.size() != static_cast<std::size_t>(a.controls)) {
        throw std::invalid_argument(std::string(gate_name(g.kind)) + ": wrong number of controls");
    }
    if (a.controls < 0 && g.controls.empty()) {
        throw std::invalid_argument("mcx: needs at least one control");
    }
    if (g.targets.size() != static_cast<std::size_t>(a.targets)) {
        throw std::invalid_argument(std::string(gate_name(g.kind)) + ": wrong number of targets");
    }
    if (!std::isfinite(g.angle)) {
        throw std::invalid_argument(std::string(gate_name(g.kind)) + ": non-finite angle");
    }
    if (!a.has_angle && g.angle != 0.0) {
        throw std::invalid_argument(std::string(gate_name(g.kind)) + ": takes no angle");
    }
    std::vector<Qubit> all = g.controls;
    all.insert(all.end(), g.targets.begin(), g.targets.end());
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            if (all[i] == all[j]) {
                throw std::invalid_argument(std::string(gate_name(g.kind)) +
                                            ": repeated operand q[" + std::to_string(all[i]) + "]");
            }
        }
    }
}

/// Elementary-gate weight used by count_gates: one per instance, except that a
/// k-controlled NOT with k >= 3 is charged 2k - 3.
inline std::size_t elementary_cost(const Gate& g) {
    if (g.kind == GateKind::MCX && g.controls.size() >= 3) return 2 * g.controls.size() - 3;
    return 1;
}

inline Gate inverse(const Gate& g) {
    Gate r = g;
    switch (g.kind) {
    case GateKind::S: r.kind = GateKind::Sdg; break;
    case GateKind::Sdg: r.kind = GateKind::S; break;
    case GateKind::CS: r.kind = GateKind::CSdg; break;
    case GateKind::CSdg: r.kind = GateKind::CS; break;
    case GateKind::Phase:
    case GateKind::Rz:
    case GateKind::CPhase:
    case GateKind::GlobalPhase:
        r.angle = -g.angle;
        break;
    default:
        break;
    }
    return r;
}

/// 2x2 matrix applied to the (single) target when all controls are set.
/// Not defined for SWAP and GlobalPhase.
inline std::array<cplx, 4> target_matrix(const Gate& g) {
    const double r = 1.0 / std::sqrt(2.0);
    const cplx i1(0.0, 1.0);
    switch (g.kind) {
    case GateKind::X:
    case GateKind::CNOT:
    case GateKind::Toffoli:
    case GateKind::MCX:
        return {0.0, 1.0, 1.0, 0.0};
    case GateKind::Y: return {0.0, -i1, i1, 0.0};
    case GateKind::Z: return {1.0, 0.0, 0.0, -1.0};
    case GateKind::H:
    case GateKind::CH:
        return {r, r, r, -r};
    case GateKind::S:
    case GateKind::CS:
        return {1.0, 0.0, 0.0, i1};
    case GateKind::Sdg:
    case GateKind::CSdg:
        return {1.0, 0.0, 0.0, -i1};
    case GateKind::Phase:
    case GateKind::CPhase:
        return {1.0, 0.0, 0.0, std::polar(1.0, g.angle)};
    case GateKind::Rz:
        return {std::polar(1.0, -g.angle / 2), 0.0, 0.0, std::polar(1.0, g.angle / 2)};
    case GateKind::SWAP:
    case GateKind::GlobalPhase:
        break;
    }
    throw std::logic_error("target_matrix: gate has no single-target matrix");
}

namespace gates {

inline Gate x(Qubit q) { return {GateKind::X, {}, {q}, 0.0}; }
inline Gate y(Qubit q) { return {GateKind::Y, {}, {q}, 0.0}; }
inline Gate z(Qubit q) { return {GateKind::Z, {}, {q}, 0.0}; }
inline Gate h(Qubit q) { return {GateKind::H, {}, {q}, 0.0}; }
inline Gate s(Qubit q) { return {GateKind::S, {}, {q}, 0.0}; }
inline Gate sdg(Qubit q) { return {GateKind::Sdg, {}, {q}, 0.0}; }
inline Gate phase(Qubit q, double theta) { return {GateKind::Phase, {}, {q}, theta}; }
inline Gate rz(Qubit q, double theta) { return {GateKind::Rz, {}, {q}, theta}; }
inline Gate cphase(Qubit c, Qubit t, double theta) { return {GateKind::CPhase, {c}, {t}, theta}; }
inline Gate cnot(Qubit c, Qubit t) { return {GateKind::CNOT, {c}, {t}, 0.0}; }
inline Gate ch(Qubit c, Qubit t) { return {GateKind::CH, {c}, {t}, 0.0}; }
inline Gate cs(Qubit c, Qubit t) { return {GateKind::CS, {c}, {t}, 0.0}; }
inline Gate csdg(Qubit c, Qubit t) { return {GateKind::CSdg, {c}, {t}, 0.0}; }
inline Gate toffoli(Qubit c0, Qubit c1, Qubit t) { return {GateKind::Toffoli, {c0, c1}, {t}, 0.0}; }
inline Gate swap(Qubit a, Qubit b) { return {GateKind::SWAP, {}, {a, b}, 0.0}; }
inline Gate global_phase(double theta) { return {GateKind::GlobalPhase, {}, {}, theta}; }
inline Gate mcx(std::vector<Qubit> controls, Qubit t) {
    return {GateKind::MCX, std::move(controls), {t}, 0.0};
}

} // namespace gates
} // namespace qrtkit
