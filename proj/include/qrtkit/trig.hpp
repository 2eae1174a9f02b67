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
 * Quantum cosine and sine transforms of Types I-IV.
 *
 * All builders act on a control wire c sitting directly above an n-qubit
 * data register, so a basis label of the (n+1)-qubit register is
 * c * N + x. Helper ancillas, where needed, sit above the control.
 */
#pragma once

#include "qrtkit/circuit.hpp"
#include "qrtkit/gadgets.hpp"
#include "qrtkit/oracle.hpp"
#include "qrtkit/qft.hpp"
#include "qrtkit/unitary.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qrtkit {

/// data 0..n-1, control n, shared or-tree / carry pool n+1..2n-1.
struct TrigLayout {
    std::vector<Qubit> data;
    Qubit ctrl;
    std::vector<Qubit> pool;
    std::size_t width;

    TrigLayout(std::size_t n, std::size_t pool_size) : data(n), ctrl(n), pool(pool_size), width(n + 1 + pool_size) {
        std::iota(data.begin(), data.end(), Qubit{0});
        std::iota(pool.begin(), pool.end(), Qubit{n + 1});
    }

    std::vector<Qubit> data_and_ctrl() const {
        std::vector<Qubit> w = data;
        w.push_back(ctrl);
        return w;
    }
};

namespace detail {

inline double omega4n_angle(std::size_t n) { return 2.0 * kPi / std::ldexp(4.0, static_cast<int>(n)); }

} // namespace detail

// Diagonal families

/// L_j = diag(1, w^{2^{j-1}}) with w = exp(2 pi i / 4N), j = 1..n.
inline std::array<cplx, 2> l_gate(std::size_t n, std::size_t j) {
    return {1.0, std::polar(1.0, detail::omega4n_angle(n) * std::ldexp(1.0, static_cast<int>(j - 1)))};
}

/// K_j = diag(w^{-2^{j-1}}, 1).
inline std::array<cplx, 2> k_gate(std::size_t n, std::size_t j) {
    return {std::polar(1.0, -detail::omega4n_angle(n) * std::ldexp(1.0, static_cast<int>(j - 1))), 1.0};
}

/// C = diag(1, w^{-1}).
inline std::array<cplx, 2> c_gate(std::size_t n) { return {1.0, std::polar(1.0, -detail::omega4n_angle(n))}; }

/// Diagonal of F_n (x) ... (x) F_1 where `factor(j)` gives F_j; entry x
/// multiplies the factors selected by the bits of x.
template <class Factor>
std::vector<cplx> tensor_diagonal(std::size_t n, Factor factor) {
    std::vector<cplx> d(std::size_t{1} << n, 1.0);
    for (std::size_t x = 0; x < d.size(); ++x) {
        for (std::size_t j = 1; j <= n; ++j) d[x] *= factor(j)[(x >> (j - 1)) & 1U];
    }
    return d;
}

// T_N and Type I

/// D: S then H on the control, conditioned on a nonzero data register.
inline void emit_d_rotation(Circuit& c, const TrigLayout& l) {
    emit_nonzero_conditioned(c, l.data, l.pool, [&](Circuit& cc, Qubit root) {
        cc.cs(root, l.ctrl);
        cc.ch(root, l.ctrl);
    });
}

inline void emit_d_rotation_adjoint(Circuit& c, const TrigLayout& l) {
    emit_nonzero_conditioned(c, l.data, l.pool, [&](Circuit& cc, Qubit root) {
        cc.ch(root, l.ctrl);
        cc.csdg(root, l.ctrl);
    });
}

/// T_N = P_2C * D.
inline void emit_t_gate(Circuit& c, const TrigLayout& l) {
    emit_d_rotation(c, l);
    emit_cond_twos_complement(c, l.ctrl, l.data, l.pool);
}

inline Circuit build_t_gate(std::size_t n) {
    detail::require_n(n, 2, "t_gate");
    const TrigLayout l(n, n - 1);
    Circuit c(l.width, "t");
    emit_t_gate(c, l);
    c.set_ancillas(l.pool);
    return c;
}

struct Type1Options {
    /// S^dg on the control at the end, clearing the i on the sine block. It
    /// also rotates the cosine row whose label has the control set (m = N).
    bool final_sdg = true;
};

/// T_N, QFT_2N, then T_N^dg in the form P_2C followed by D^dg.
inline Circuit build_qcst_type1(std::size_t n, const Type1Options& opts = {}) {
    detail::require_n(n, 2, "qcst_type1");
    const TrigLayout l(n, n - 1);
    Circuit c(l.width, "qcst1");
    emit_t_gate(c, l);
    emit_qft(c, l.data_and_ctrl());
    emit_cond_twos_complement(c, l.ctrl, l.data, l.pool);
    emit_d_rotation_adjoint(c, l);
    if (opts.final_sdg) c.sdg(l.ctrl);
    c.set_ancillas(l.pool);
    return c;
}

/// A single helper wire (n) plus n-2 carries; no or-tree, no multi-controlled
/// gates. Acts as the sine transform on inputs supported on 1..N-1.
inline Circuit build_qst1_optimized(std::size_t n) {
    detail::require_n(n, 2, "qst1_optimized");
    const TrigLayout l(n, n - 2);
    Circuit c(l.width, "qst1-opt");
    c.x(l.ctrl);
    c.h(l.ctrl);
    emit_cond_twos_complement(c, l.ctrl, l.data, l.pool);
    emit_qft(c, l.data_and_ctrl());
    emit_cond_twos_complement(c, l.ctrl, l.data, l.pool);
    c.h(l.ctrl);
    c.sdg(l.ctrl);
    c.x(l.ctrl);
    std::vector<Qubit> anc{l.ctrl};
    anc.insert(anc.end(), l.pool.begin(), l.pool.end());
    c.set_ancillas(anc);
    return c;
}

// Type II

/// (C (x) 1)(Delta_1 (+) Delta_2): L_j on each data wire while the control
/// is 0, K_j = X L_j^* X while it is 1, then C on the control.
inline void emit_d1(Circuit& c, Qubit ctrl, WireList data) {
    const double a = detail::omega4n_angle(data.size());
    c.x(ctrl);
    for (std::size_t j = 0; j < data.size(); ++j) c.cphase(ctrl, data[j], std::ldexp(a, static_cast<int>(j)));
    c.x(ctrl);
    for (std::size_t j = 0; j < data.size(); ++j) {
        c.x(data[j]);
        c.cphase(ctrl, data[j], -std::ldexp(a, static_cast<int>(j)));
        c.x(data[j]);
    }
    c.phase(ctrl, -a);
}

/// (C (x) 1)(Delta_1 (+) Delta_1^*), or the Delta_2 form when `corrected` is
/// false.
inline void emit_d2(Circuit& c, Qubit ctrl, WireList data, bool corrected) {
    if (!corrected) {
        emit_d1(c, ctrl, data);
        return;
    }
    const double a = detail::omega4n_angle(data.size());
    c.x(ctrl);
    for (std::size_t j = 0; j < data.size(); ++j) c.cphase(ctrl, data[j], std::ldexp(a, static_cast<int>(j)));
    c.x(ctrl);
    for (std::size_t j = 0; j < data.size(); ++j) c.cphase(ctrl, data[j], -std::ldexp(a, static_cast<int>(j)));
    c.phase(ctrl, -a);
}

inline Circuit build_d1(std::size_t n) {
    detail::require_n(n, 1, "d1");
    const TrigLayout l(n, 0);
    Circuit c(l.width, "d1");
    emit_d1(c, l.ctrl, l.data);
    return c;
}

inline Circuit build_d2(std::size_t n, bool corrected = true) {
    detail::require_n(n, 1, "d2");
    const TrigLayout l(n, 0);
    Circuit c(l.width, corrected ? "d2" : "d2-incorrect");
    emit_d2(c, l.ctrl, l.data, corrected);
    return c;
}

/// H, S on the control, then S^dg H S^dg on it when the data register is
/// zero. One or-tree evaluation serves both compute and recovery.
inline void emit_g_gate(Circuit& c, const TrigLayout& l) {
    c.h(l.ctrl);
    c.s(l.ctrl);
    emit_nonzero_conditioned(c, l.data, l.pool, [&](Circuit& cc, Qubit root) {
        cc.x(root);
        cc.csdg(root, l.ctrl);
        cc.ch(root, l.ctrl);
        cc.csdg(root, l.ctrl);
        cc.x(root);
    });
}

inline Circuit build_g_gate(std::size_t n) {
    detail::require_n(n, 2, "g_gate");
    const TrigLayout l(n, n - 1);
    Circuit c(l.width, "g");
    emit_g_gate(c, l);
    c.set_ancillas(l.pool);
    return c;
}

struct Type2Options {
    bool final_z = true;  ///< Z on the control; without it the sine block carries -1
};

inline Circuit build_qcst_type2(std::size_t n, const Type2Options& opts = {}) {
    detail::require_n(n, 2, "qcst_type2");
    const TrigLayout l(n, n - 1);
    Circuit c(l.width, "qcst2");
    c.h(l.ctrl);
    emit_cond_ones_complement(c, l.ctrl, l.data);
    emit_qft(c, l.data_and_ctrl());
    emit_d1(c, l.ctrl, l.data);
    emit_cond_twos_complement(c, l.ctrl, l.data, l.pool);
    emit_g_gate(c, l);
    emit_cond_decrement(c, l.ctrl, l.data, l.pool);
    if (opts.final_z) c.z(l.ctrl);
    c.set_ancillas(l.pool);
    return c;
}

/// Both Type-II blocks are real, so the adjoint carries the transposes.
inline Circuit build_qcst_type3(std::size_t n) {
    Circuit c = adjoint(build_qcst_type2(n));
    c.set_label("qcst3");
    return c;
}

// Type IV

struct Type4Options {
    bool corrected = true;
    bool final_s = true;  ///< S on the control; without it the sine block carries -i
};

inline Circuit build_qcst_type4(std::size_t n, const Type4Options& opts = {}) {
    detail::require_n(n, 1, "qcst_type4");
    const TrigLayout l(n, 0);
    const std::size_t N = std::size_t{1} << n;
    Circuit c(l.width, opts.corrected ? "qcst4" : "qcst4-incorrect");
    c.sdg(l.ctrl);
    c.h(l.ctrl);
    emit_d2(c, l.ctrl, l.data, opts.corrected);
    emit_cond_ones_complement(c, l.ctrl, l.data);
    emit_qft(c, l.data_and_ctrl());
    emit_cond_ones_complement(c, l.ctrl, l.data);
    emit_d2(c, l.ctrl, l.data, opts.corrected);
    c.h(l.ctrl);
    c.sdg(l.ctrl);
    c.global_phase(kPi / static_cast<double>(4 * N));
    if (opts.final_s) c.s(l.ctrl);
    return c;
}

// Block identities

struct BlockIdentityReport {
    double max_error_cos_block = INFINITY;
    double max_error_sin_block = INFINITY;
    /// Register label c * N + x of each cosine / sine matrix index.
    std::vector<std::size_t> cos_embedding;
    std::vector<std::size_t> sin_embedding;
    cplx phase{1.0, 0.0};
    double ancilla_residual = 0.0;
    bool ambiguous = false;
    /// Matching tolerance at which the embedding was found. Equals the
    /// requested tolerance when the identity holds.
    double match_tolerance = 0.0;

    double max_error() const { return std::max(max_error_cos_block, max_error_sin_block); }
    bool passed(double tol) const { return !ambiguous && max_error() < tol && ancilla_residual < tol; }
};

inline std::string phase_name(cplx p) {
    auto near = [&](cplx q) { return std::abs(p - q) < 1e-9; };
    if (near({1, 0})) return "1";
    if (near({0, 1})) return "i";
    if (near({-1, 0})) return "-1";
    if (near({0, -1})) return "-i";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", p.real(), p.imag());
    return buf;
}

inline std::optional<cplx> phase_from_name(std::string_view s) {
    if (s == "1") return cplx{1, 0};
    if (s == "i") return cplx{0, 1};
    if (s == "-1") return cplx{-1, 0};
    if (s == "-i") return cplx{0, -1};
    return std::nullopt;
}

namespace detail {

/// Backtracking search for injective maps pos -> label with
/// |B(L(i), L(j)) - M(i, j)| <= tol for all i, j, in lexicographic order.
/// Two solutions over the same label set differ by a symmetry of M and
/// describe the same block, so only a solution over a different label set
/// counts as a second one. Stops there or when the node budget runs out.
class EmbeddingSearch {
  public:
    EmbeddingSearch(const DenseMatrix& b, const DenseMatrix& m, std::vector<bool> used, double tol,
                    std::size_t budget)
        : b_(b), m_(m), used_(std::move(used)), tol_(tol), budget_(budget) {}

    void run() {
        cur_.clear();
        extend();
    }

    std::size_t solutions() const { return count_; }
    const std::vector<std::size_t>& first() const { return first_; }
    bool exhausted() const { return nodes_ >= budget_; }

  private:
    bool fits(std::size_t label) const {
        const std::size_t i = cur_.size();
        if (std::abs(b_(label, label) - m_(i, i)) > tol_) return false;
        for (std::size_t k = 0; k < i; ++k) {
            if (std::abs(b_(label, cur_[k]) - m_(i, k)) > tol_) return false;
            if (std::abs(b_(cur_[k], label) - m_(k, i)) > tol_) return false;
        }
        return true;
    }

    void extend() {
        if (count_ >= 2 || nodes_ >= budget_) return;
        if (cur_.size() == m_.rows()) {
            std::vector<std::size_t> set = cur_;
            std::sort(set.begin(), set.end());
            if (count_ == 0) {
                first_ = cur_;
                first_set_ = std::move(set);
                count_ = 1;
            } else if (set != first_set_) {
                count_ = 2;
            }
            return;
        }
        for (std::size_t label = 0; label < b_.rows(); ++label) {
            if (used_[label]) continue;
            ++nodes_;
            if (!fits(label)) continue;
            used_[label] = true;
            cur_.push_back(label);
            extend();
            cur_.pop_back();
            used_[label] = false;
            if (count_ >= 2 || nodes_ >= budget_) return;
        }
    }

    const DenseMatrix& b_;
    const DenseMatrix& m_;
    std::vector<bool> used_;
    double tol_;
    std::size_t budget_;
    std::size_t nodes_ = 0;
    std::size_t count_ = 0;
    std::vector<std::size_t> cur_;
    std::vector<std::size_t> first_;
    std::vector<std::size_t> first_set_;
};

inline double embedded_error(const DenseMatrix& b, const DenseMatrix& m, const std::vector<std::size_t>& e) {
    return max_abs_diff(b.select(e, e), m);
}

} // namespace detail

namespace detail {

struct BlockMatch {
    std::vector<std::size_t> embedding;
    bool ambiguous = false;
    double match_tolerance = INFINITY;
};

/// Tries `tol` first, then a ladder of looser tolerances, so that a failing
/// circuit still gets a best-effort embedding and an honest error.
inline BlockMatch find_block(const DenseMatrix& b, const DenseMatrix& m, const std::vector<bool>& used, double tol) {
    constexpr std::size_t kBudget = 2'000'000;
    const double ladder[] = {1e-8, 1e-6, 1e-4, 1e-2, 0.1, 0.25, 0.5, 1.0, 2.0 + 1e-9};
    std::vector<double> tols{tol};
    for (double t : ladder) {
        if (t > tol) tols.push_back(t);
    }
    for (double t : tols) {
        EmbeddingSearch s(b, m, used, t, kBudget);
        s.run();
        if (s.solutions() == 0) continue;
        return {s.first(), t == tol && s.solutions() > 1, t};
    }
    BlockMatch fallback;
    for (std::size_t label = 0; label < b.rows() && fallback.embedding.size() < m.rows(); ++label) {
        if (!used[label]) fallback.embedding.push_back(label);
    }
    return fallback;
}

} // namespace detail

/// Finds where the cosine and (phase-scaled) sine matrices sit inside the
/// circuit's action on (control, data). Each block is matched on its own;
/// a block that matches at `tol` reserves its labels for the other search.
inline BlockIdentityReport verify_block_identity(const Circuit& circuit, const TransformSpec& cos_spec,
                                                 const TransformSpec& sin_spec, cplx phase, double tol = 1e-10,
                                                 const UnitaryOptions& uopts = {}) {
    const RestrictedAction ra = restricted_action(circuit, uopts);
    const DenseMatrix& b = ra.data;
    const DenseMatrix cm = build_reference_matrix(cos_spec);
    const DenseMatrix sm = phase * build_reference_matrix(sin_spec);
    if (cm.rows() + sm.rows() > b.rows()) throw std::invalid_argument("verify_block_identity: blocks exceed register");

    auto reserve = [&](const detail::BlockMatch& bm) {
        std::vector<bool> used(b.rows(), false);
        if (bm.match_tolerance == tol) {
            for (auto lbl : bm.embedding) used[lbl] = true;
        }
        return used;
    };
    const std::vector<bool> none(b.rows(), false);
    detail::BlockMatch cos_m = detail::find_block(b, cm, none, tol);
    detail::BlockMatch sin_m = detail::find_block(b, sm, reserve(cos_m), tol);
    if (cos_m.match_tolerance != tol && sin_m.match_tolerance == tol) {
        cos_m = detail::find_block(b, cm, reserve(sin_m), tol);
    }

    BlockIdentityReport rep;
    rep.phase = phase;
    rep.ancilla_residual = ra.ancilla_residual;
    rep.cos_embedding = cos_m.embedding;
    rep.sin_embedding = sin_m.embedding;
    rep.ambiguous = cos_m.ambiguous || sin_m.ambiguous;
    rep.match_tolerance = std::max(cos_m.match_tolerance, sin_m.match_tolerance);
    rep.max_error_cos_block = detail::embedded_error(b, cm, rep.cos_embedding);
    rep.max_error_sin_block = detail::embedded_error(b, sm, rep.sin_embedding);
    return rep;
}

/// Checks a circuit against a fixed embedding, e.g. one loaded from a
/// golden file.
inline BlockIdentityReport check_block_identity(const Circuit& circuit, const TransformSpec& cos_spec,
                                                const TransformSpec& sin_spec, cplx phase,
                                                const std::vector<std::size_t>& cos_embedding,
                                                const std::vector<std::size_t>& sin_embedding,
                                                const UnitaryOptions& uopts = {}) {
    const RestrictedAction ra = restricted_action(circuit, uopts);
    BlockIdentityReport rep;
    rep.phase = phase;
    rep.ancilla_residual = ra.ancilla_residual;
    rep.cos_embedding = cos_embedding;
    rep.sin_embedding = sin_embedding;
    rep.max_error_cos_block = detail::embedded_error(ra.data, build_reference_matrix(cos_spec), cos_embedding);
    rep.max_error_sin_block =
        detail::embedded_error(ra.data, phase * build_reference_matrix(sin_spec), sin_embedding);
    return rep;
}

} // namespace qrtkit
