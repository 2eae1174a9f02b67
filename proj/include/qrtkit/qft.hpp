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
 * Quantum Fourier transform, |a> -> N^{-1/2} sum_y w^{ay} |y> with
 * w = exp(2 pi i / N).
 */
#pragma once

#include "qrtkit/circuit.hpp"
#include "qrtkit/gadgets.hpp"

#include <cmath>
#include <numeric>
#include <vector>

namespace qrtkit {

struct QftOptions {
    bool include_final_swaps = true;
};

/// Most-significant wire first: H, then the controlled-phase ladder from the
/// next wire down, then the swap layer reversing wire order.
inline void emit_qft(Circuit& c, WireList wires, const QftOptions& opts = {}) {
    const std::size_t n = wires.size();
    for (std::size_t j = n; j-- > 0;) {
        c.h(wires[j]);
        for (std::size_t k = j; k-- > 0;) {
            c.cphase(wires[k], wires[j], kPi / std::ldexp(1.0, static_cast<int>(j - k)));
        }
    }
    if (opts.include_final_swaps) {
        for (std::size_t i = 0; i < n / 2; ++i) c.swap(wires[i], wires[n - 1 - i]);
    }
}

inline Circuit build_qft(std::size_t n, const QftOptions& opts = {}) {
    detail::require_n(n, 1, "qft");
    Circuit c(n, "qft");
    std::vector<Qubit> w(n);
    std::iota(w.begin(), w.end(), Qubit{0});
    emit_qft(c, w, opts);
    return c;
}

inline Circuit build_qft_inverse(std::size_t n, const QftOptions& opts = {}) {
    Circuit c = adjoint(build_qft(n, opts));
    c.set_label("qft^dg");
    return c;
}

} // namespace qrtkit
