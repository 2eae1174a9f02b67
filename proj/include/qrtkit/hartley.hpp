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
 * Quantum Hartley transform: a recursive construction and one based on a
 * linear combination of unitaries.
 *
 * The LCU form writes the transform as QFT * V with
 * V = (e^{-i pi/4} I + e^{i pi/4} T) / sqrt2, T the two's complement
 * permutation x -> (N - x) mod N.
 */
#pragma once

#include "qrtkit/circuit.hpp"
#include "qrtkit/gadgets.hpp"
#include "qrtkit/qft.hpp"
#include "qrtkit/statevector.hpp"
#include "qrtkit/unitary.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace qrtkit {

struct LcuParams {
    double theta = kPi / 4;        ///< sin(theta) = 1/a, a = sqrt2
    double theta_prime = kPi / 6;  ///< success angle of W' on |00>
    std::size_t k = 1;             ///< amplification rounds
    double a0 = 1.0 / std::sqrt(2.0);
    double a1 = 1.0 / std::sqrt(2.0);
};

/// R(y, b) = [[cos t, sin t], [-sin t, cos t]] with t = 2 pi b y / N, row-major.
inline std::array<double, 4> rotation_r(std::uint64_t y, unsigned b, std::uint64_t N) {
    const double t = 2.0 * kPi * static_cast<double>(b) * static_cast<double>(y % N) / static_cast<double>(N);
    return {std::cos(t), std::sin(t), -std::sin(t), std::cos(t)};
}

// U_R

/// Applies R(y, b) to wire `cw`. In the Y eigenbasis, reached by S^dg H, the
/// rotation is diag(e^{-it}, e^{it}); the b-dependence is carried by a CNOT
/// sandwich around the y-controlled phase cascade.
inline void emit_unitary_ur(Circuit& c, Qubit cw, WireList y, Qubit b, std::uint64_t N) {
    const double base = 2.0 * kPi / static_cast<double>(N);
    c.sdg(cw);
    c.h(cw);
    for (std::size_t j = 0; j < y.size(); ++j) c.cphase(y[j], cw, -base * std::ldexp(1.0, static_cast<int>(j)));
    c.cnot(b, cw);
    for (std::size_t j = 0; j < y.size(); ++j) c.cphase(y[j], cw, base * std::ldexp(1.0, static_cast<int>(j)));
    c.cnot(b, cw);
    c.h(cw);
    c.s(cw);
}

/// y on wires 0..n-1, c on wire n, b on wire n+1; N = 2^{n+1}.
inline Circuit build_unitary_ur(std::size_t n) {
    detail::require_n(n, 1, "unitary_ur");
    Circuit c(n + 2, "ur");
    std::vector<Qubit> y(n);
    std::iota(y.begin(), y.end(), Qubit{0});
    emit_unitary_ur(c, n, y, n + 1, std::uint64_t{1} << (n + 1));
    return c;
}

// C_X

/// Flips `tgt` iff `ctrl` = 1 and y = 0. The non-naive form detects y != 0
/// with an or-tree on `pool` (|y| - 1 clean wires) and never uses more than
/// two controls.
inline void emit_cx_zero(Circuit& c, Qubit ctrl, WireList y, Qubit tgt, WireList pool, bool naive) {
    if (y.empty()) throw std::invalid_argument("cx_zero: empty register");
    if (naive) {
        for (Qubit q : y) c.x(q);
        std::vector<Qubit> cs{ctrl};
        cs.insert(cs.end(), y.begin(), y.end());
        c.mcx(std::move(cs), tgt);
        for (Qubit q : y) c.x(q);
        return;
    }
    emit_nonzero_conditioned(c, y, pool, [&](Circuit& cc, Qubit root) {
        cc.x(root);
        cc.toffoli(ctrl, root, tgt);
        cc.x(root);
    });
}

/// y on wires 0..n-1, c on wire n, b on wire n+1, or-tree pool above.
inline Circuit build_cx_zero_detect(std::size_t n, bool naive) {
    detail::require_n(n, 1, "cx_zero_detect");
    const std::size_t pool_size = n - 1;
    Circuit c(n + 2 + pool_size, naive ? "cx-zero-naive" : "cx-zero");
    std::vector<Qubit> y(n);
    std::iota(y.begin(), y.end(), Qubit{0});
    std::vector<Qubit> pool(pool_size);
    std::iota(pool.begin(), pool.end(), Qubit{n + 2});
    emit_cx_zero(c, n, y, n + 1, pool, naive);
    c.set_ancillas(pool);
    return c;
}

// Recursive QHT

namespace detail {

inline std::vector<Qubit> emit_qht_rec(Circuit& c, std::vector<Qubit> d, std::span<const Qubit> free, bool naive) {
    const std::size_t k = d.size();
    if (k == 1) {
        c.h(d[0]);
        return d;
    }
    const Qubit cw = free[0];
    const auto rest = free.subspan(1);
    const Qubit b = d[0];
    std::vector<Qubit> y(d.begin() + 1, d.end());
    const std::uint64_t N = std::uint64_t{1} << k;

    std::vector<Qubit> yout = emit_qht_rec(c, std::move(y), rest, naive);

    c.h(cw);
    emit_cond_twos_complement(c, cw, yout, rest);
    emit_unitary_ur(c, cw, yout, b, N);
    emit_cond_twos_complement(c, cw, yout, rest);
    c.h(cw);
    emit_cx_zero(c, b, yout, cw, rest, naive);
    c.h(cw);
    c.h(cw);
    c.cnot(b, cw);
    c.h(b);

    yout.push_back(b);
    return yout;
}

} // namespace detail

/// Data on wires 0..n-1, one ancilla per recursion level on n..2n-2. The
/// output register ends up permuted across the data wires; a final
/// relabeling restores logical order.
inline Circuit build_qht_recursive(std::size_t n, bool naive_cx = false) {
    detail::require_n(n, 1, "qht_recursive");
    const std::size_t w = 2 * n - 1;
    Circuit c(w, "qht-rec");
    std::vector<Qubit> data(n);
    std::iota(data.begin(), data.end(), Qubit{0});
    std::vector<Qubit> anc(n - 1);
    std::iota(anc.begin(), anc.end(), Qubit{n});
    const std::vector<Qubit> out = detail::emit_qht_rec(c, data, anc, naive_cx);
    c.set_ancillas(anc);
    std::vector<Qubit> perm(w);
    std::iota(perm.begin(), perm.end(), Qubit{0});
    for (std::size_t i = 0; i < out.size(); ++i) perm[out[i]] = i;
    c.set_relabeling(std::move(perm));
    return c;
}

// LCU QHT

/// Wires: data 0..n-1, select s = n, amplification qubit p = n+1, carries
/// n+2..2n-1.
struct LcuLayout {
    std::vector<Qubit> data;
    Qubit s;
    Qubit p;
    std::vector<Qubit> carry;
    std::size_t width;

    explicit LcuLayout(std::size_t n) : data(n), s(n), p(n + 1), carry(n - 2), width(2 * n) {
        std::iota(data.begin(), data.end(), Qubit{0});
        std::iota(carry.begin(), carry.end(), Qubit{n + 2});
    }
};

/// H, controlled two's complement, Rz(pi/2), H on the select wire. The Rz
/// supplies exactly the e^{-+i pi/4} coefficients, so the select-0 block is
/// V / sqrt2 with no residual phase.
inline void emit_unitary_w(Circuit& c, Qubit s, WireList data, WireList carry) {
    c.h(s);
    emit_cond_twos_complement(c, s, data, carry);
    c.rz(s, kPi / 2);
    c.h(s);
}

/// Data 0..n-1, select n, carries n+1..2n-2.
inline Circuit build_unitary_w(std::size_t n) {
    detail::require_n(n, 2, "unitary_w");
    Circuit c(2 * n - 1, "w");
    std::vector<Qubit> data(n);
    std::iota(data.begin(), data.end(), Qubit{0});
    std::vector<Qubit> carry(n - 2);
    std::iota(carry.begin(), carry.end(), Qubit{n + 1});
    emit_unitary_w(c, n, data, carry);
    c.set_ancillas(carry);
    return c;
}

inline void emit_unitary_w_prime(Circuit& c, const LcuLayout& l) {
    c.h(l.p);
    emit_unitary_w(c, l.s, l.data, l.carry);
}

/// 2|00><00| - I on (s, p).
inline void emit_reflection(Circuit& c, const LcuLayout& l) {
    c.z(l.s);
    c.z(l.p);
    c.cphase(l.s, l.p, kPi);
}

/// One amplification round S' = -W' R' W'^dg R'.
inline void emit_amplification_round(Circuit& c, const LcuLayout& l) {
    Circuit wp(l.width);
    emit_unitary_w_prime(wp, l);
    emit_reflection(c, l);
    c.append(adjoint(wp));
    emit_reflection(c, l);
    c.global_phase(kPi);
    c.append(wp);
}

/// W', one amplification round, then the QFT on the data register.
inline Circuit build_qht_lcu(std::size_t n) {
    detail::require_n(n, 2, "qht_lcu");
    const LcuLayout l(n);
    Circuit c(l.width, "qht-lcu");
    emit_unitary_w_prime(c, l);
    emit_amplification_round(c, l);
    emit_qft(c, l.data);
    std::vector<Qubit> anc{l.s, l.p};
    anc.insert(anc.end(), l.carry.begin(), l.carry.end());
    c.set_ancillas(anc);
    return c;
}

/// Dense V on n qubits.
inline DenseMatrix lcu_v_matrix(std::size_t n) {
    const std::size_t N = std::size_t{1} << n;
    DenseMatrix v(N, N);
    const cplx a = std::polar(1.0 / std::sqrt(2.0), -kPi / 4);
    const cplx b = std::polar(1.0 / std::sqrt(2.0), kPi / 4);
    for (std::size_t x = 0; x < N; ++x) {
        v(x, x) += a;
        v((N - x) % N, x) += b;
    }
    return v;
}

struct AmplificationReport {
    std::size_t n = 0;
    std::size_t k = 0;
    cplx overlap;          ///< <00, V psi | S'^k W' |00, psi>
    double expected = 0;   ///< sin((2k + 1) theta')
    double error = 0;      ///< |overlap - expected|
};

inline AmplificationReport check_oblivious_amplification(std::size_t n, std::size_t k, std::uint64_t seed = 1) {
    detail::require_n(n, 2, "oblivious_amplification");
    const LcuLayout l(n);
    Circuit c(l.width);
    emit_unitary_w_prime(c, l);
    for (std::size_t r = 0; r < k; ++r) emit_amplification_round(c, l);

    std::mt19937_64 rng(seed);
    const StateVector psi = StateVector::random(n, rng);
    std::vector<cplx> full(std::size_t{1} << l.width);
    for (std::size_t x = 0; x < psi.dim(); ++x) full[x] = psi[x];
    const StateVector out = run_circuit(StateVector::from_amplitudes(std::move(full)), c);

    const std::vector<cplx> vpsi = lcu_v_matrix(n).apply(psi.amplitudes());
    cplx ov{};
    for (std::size_t x = 0; x < vpsi.size(); ++x) ov += std::conj(vpsi[x]) * out[x];

    AmplificationReport r;
    r.n = n;
    r.k = k;
    r.overlap = ov;
    r.expected = std::sin(static_cast<double>(2 * k + 1) * LcuParams{}.theta_prime);
    r.error = std::abs(ov - r.expected);
    return r;
}

} // namespace qrtkit
