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
 * Dense complex matrices and unitary extraction from circuits.
 */
#pragma once

#include "qrtkit/circuit.hpp"
#include "qrtkit/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace qrtkit {

/// Row-major dense complex matrix.
class DenseMatrix {
  public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static DenseMatrix identity(std::size_t dim) {
        DenseMatrix m(dim, dim);
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    cplx operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<cplx> column(std::size_t c) const {
        std::vector<cplx> v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
        return v;
    }

    DenseMatrix adjoint() const {
        DenseMatrix m(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
        }
        return m;
    }

    DenseMatrix transpose() const {
        DenseMatrix m(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
        }
        return m;
    }

    DenseMatrix conj() const {
        DenseMatrix m = *this;
        for (auto& x : m.data_) x = std::conj(x);
        return m;
    }

    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
        DenseMatrix m(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const cplx aik = a(i, k);
                if (aik == cplx{}) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
            }
        }
        return m;
    }

    friend DenseMatrix operator*(cplx s, DenseMatrix m) {
        for (auto& x : m.data_) x *= s;
        return m;
    }

    friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: dimension mismatch");
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
        return a;
    }

    std::vector<cplx> apply(const std::vector<cplx>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("matrix-vector: dimension mismatch");
        std::vector<cplx> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            cplx s{};
            for (std::size_t c = 0; c < cols_; ++c) s += (*this)(r, c) * v[c];
            out[r] = s;
        }
        return out;
    }

    /// Submatrix of the given rows and columns.
    DenseMatrix select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
        DenseMatrix m(rows.size(), cols.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = (*this)(rows[i], cols[j]);
        }
        return m;
    }

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

using DenseUnitary = DenseMatrix;

/// max |a_ij - b_ij|, no phase forgiveness.
inline double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("compare: dimension mismatch (" + std::to_string(a.rows()) + "x" +
                                    std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                                    std::to_string(b.cols()) + ")");
    }
    double e = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) e = std::max(e, std::abs(a(r, c) - b(r, c)));
    }
    return e;
}

/// max-entry norm of U^dagger U - I.
inline double unitarity_error(const DenseMatrix& u) {
    if (!u.square()) return INFINITY;
    return max_abs_diff(u.adjoint() * u, DenseMatrix::identity(u.rows()));
}

struct UnitaryOptions {
    std::size_t max_qubits = 12;
    unsigned threads = 0;  ///< 0 picks hardware concurrency
};

namespace detail {

inline void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body) {
    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    if (threads <= 1 || count < 16) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < count; i += threads) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace detail

/// Column j is run_circuit applied to |j>. Columns are independent and may be
/// evaluated on several threads.
inline DenseMatrix circuit_unitary(const Circuit& circuit, const UnitaryOptions& opts = {}) {
    if (circuit.width() > opts.max_qubits) {
        throw std::invalid_argument("circuit_unitary: width " + std::to_string(circuit.width()) +
                                    " exceeds cap of " + std::to_string(opts.max_qubits));
    }
    const std::size_t dim = std::size_t{1} << circuit.width();
    DenseMatrix u(dim, dim);
    detail::parallel_for(dim, opts.threads, [&](std::size_t j) {
        const StateVector out = run_circuit(StateVector(circuit.width(), j), circuit);
        for (std::size_t r = 0; r < dim; ++r) u(r, j) = out[r];
    });
    return u;
}

/// Action of a circuit on its data wires with every ancilla prepared in |0>.
struct RestrictedAction {
    DenseMatrix data;                ///< 2^d x 2^d, bit i of an index on data_wires()[i]
    double ancilla_residual = 0.0;   ///< max amplitude on outputs with a nonzero ancilla
};

/// Runs one statevector per data basis input; never materializes the full
/// unitary, so widths up to the statevector cap are fine.
inline RestrictedAction restricted_action(const Circuit& circuit, const UnitaryOptions& opts = {}) {
    const std::vector<Qubit> dw = circuit.data_wires();
    const std::size_t d = dw.size();
    const std::size_t ddim = std::size_t{1} << d;
    auto embed = [&](std::size_t v) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < d; ++i) {
            if ((v >> i) & 1U) idx |= std::size_t{1} << dw[i];
        }
        return idx;
    };
    std::size_t anc_mask = 0;
    for (Qubit a : circuit.ancillas()) anc_mask |= std::size_t{1} << a;

    RestrictedAction ra{DenseMatrix(ddim, ddim), 0.0};
    std::vector<double> residual(ddim, 0.0);
    detail::parallel_for(ddim, opts.threads, [&](std::size_t j) {
        const StateVector out = run_circuit(StateVector(circuit.width(), embed(j)), circuit);
        for (std::size_t i = 0; i < ddim; ++i) ra.data(i, j) = out[embed(i)];
        double r = 0.0;
        for (std::size_t idx = 0; idx < out.dim(); ++idx) {
            if (idx & anc_mask) r = std::max(r, std::abs(out[idx]));
        }
        residual[j] = r;
    });
    ra.ancilla_residual = *std::max_element(residual.begin(), residual.end());
    return ra;
}

} // namespace qrtkit
