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
 * Classical reference matrices, evaluated entry by entry from the transform
 * definitions. Nothing here looks at a circuit.
 *
 * Index ranges (row m, column n), with s = sqrt(2/N):
 *
 *   DCT1  m,n in 0..N      s k_m k_n cos(m n pi / N),  k_0 = k_N = 1/sqrt2
 *   DST1  m,n in 1..N-1    s sin(m n pi / N)
 *   DCT2  m,n in 0..N-1    s k_m cos(m (n + 1/2) pi / N),  k_0 = 1/sqrt2
 *   DST2  m in 1..N,
 *         n in 0..N-1      s k_m sin(m (n + 1/2) pi / N),  k_N = 1/sqrt2
 *   DCT3, DST3             transposes of DCT2, DST2
 *   DCT4  m,n in 0..N-1    s cos((m + 1/2)(n + 1/2) pi / N)
 *   DST4  m,n in 0..N-1    s sin((m + 1/2)(n + 1/2) pi / N)
 */
#pragma once

#include "qrtkit/unitary.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qrtkit {

enum class TransformKind { DFT, DHT, DCT1, DCT2, DCT3, DCT4, DST1, DST2, DST3, DST4 };

inline constexpr std::array<TransformKind, 10> kAllTransformKinds = {
    TransformKind::DFT,  TransformKind::DHT,  TransformKind::DCT1, TransformKind::DCT2, TransformKind::DCT3,
    TransformKind::DCT4, TransformKind::DST1, TransformKind::DST2, TransformKind::DST3, TransformKind::DST4,
};

constexpr std::string_view transform_name(TransformKind k) {
    switch (k) {
    case TransformKind::DFT: return "DFT";
    case TransformKind::DHT: return "DHT";
    case TransformKind::DCT1: return "DCT1";
    case TransformKind::DCT2: return "DCT2";
    case TransformKind::DCT3: return "DCT3";
    case TransformKind::DCT4: return "DCT4";
    case TransformKind::DST1: return "DST1";
    case TransformKind::DST2: return "DST2";
    case TransformKind::DST3: return "DST3";
    case TransformKind::DST4: return "DST4";
    }
    return "?";
}

inline std::optional<TransformKind> transform_kind_from_name(std::string_view s) {
    for (auto k : kAllTransformKinds) {
        if (transform_name(k) == s) return k;
    }
    return std::nullopt;
}

struct TransformSpec {
    TransformKind kind;
    std::size_t N;

    TransformSpec(TransformKind k, std::size_t n_points) : kind(k), N(n_points) {
        if (N < 2 || (N & (N - 1)) != 0) {
            throw std::invalid_argument("TransformSpec: N must be a power of two >= 2, got " + std::to_string(N));
        }
    }

    std::size_t dim() const {
        if (kind == TransformKind::DCT1) return N + 1;
        if (kind == TransformKind::DST1) return N - 1;
        return N;
    }

    friend bool operator==(const TransformSpec&, const TransformSpec&) = default;
};

inline double cas(double x) { return std::cos(x) + std::sin(x); }

inline DenseMatrix build_reference_matrix(const TransformSpec& spec) {
    const std::size_t N = spec.N;
    const double Nd = static_cast<double>(N);
    const double s = std::sqrt(2.0 / Nd);
    const double r2 = 1.0 / std::sqrt(2.0);
    const std::size_t d = spec.dim();
    DenseMatrix m(d, d);
    auto fill = [&](auto f) {
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t c = 0; c < d; ++c) m(r, c) = f(static_cast<double>(r), static_cast<double>(c), r, c);
        }
    };
    switch (spec.kind) {
    case TransformKind::DFT:
        fill([&](double a, double y, std::size_t, std::size_t) -> cplx {
            // Reduce the exponent first so large N keeps full precision.
            const auto e = static_cast<double>((static_cast<std::size_t>(a) * static_cast<std::size_t>(y)) % N);
            return std::polar(1.0 / std::sqrt(Nd), 2.0 * kPi * e / Nd);
        });
        break;
    case TransformKind::DHT:
        fill([&](double a, double y, std::size_t, std::size_t) -> cplx {
            const auto e = static_cast<double>((static_cast<std::size_t>(a) * static_cast<std::size_t>(y)) % N);
            return cas(2.0 * kPi * e / Nd) / std::sqrt(Nd);
        });
        break;
    case TransformKind::DCT1:
        fill([&](double a, double b, std::size_t i, std::size_t j) -> cplx {
            const double ki = (i == 0 || i == N) ? r2 : 1.0;
            const double kj = (j == 0 || j == N) ? r2 : 1.0;
            return s * ki * kj * std::cos(a * b * kPi / Nd);
        });
        break;
    case TransformKind::DST1:
        fill([&](double a, double b, std::size_t, std::size_t) -> cplx {
            return s * std::sin((a + 1.0) * (b + 1.0) * kPi / Nd);
        });
        break;
    case TransformKind::DCT2:
    case TransformKind::DCT3:
        fill([&](double a, double b, std::size_t i, std::size_t j) -> cplx {
            const bool t = spec.kind == TransformKind::DCT3;
            const double mm = t ? b : a;
            const double nn = t ? a : b;
            const double k = (t ? j : i) == 0 ? r2 : 1.0;
            return s * k * std::cos(mm * (nn + 0.5) * kPi / Nd);
        });
        break;
    case TransformKind::DST2:
    case TransformKind::DST3:
        fill([&](double a, double b, std::size_t i, std::size_t j) -> cplx {
            const bool t = spec.kind == TransformKind::DST3;
            const double mm = (t ? b : a) + 1.0;
            const double nn = t ? a : b;
            const double k = (t ? j : i) == N - 1 ? r2 : 1.0;
            return s * k * std::sin(mm * (nn + 0.5) * kPi / Nd);
        });
        break;
    case TransformKind::DCT4:
        fill([&](double a, double b, std::size_t, std::size_t) -> cplx {
            return s * std::cos((a + 0.5) * (b + 0.5) * kPi / Nd);
        });
        break;
    case TransformKind::DST4:
        fill([&](double a, double b, std::size_t, std::size_t) -> cplx {
            return s * std::sin((a + 0.5) * (b + 0.5) * kPi / Nd);
        });
        break;
    }
    return m;
}

/// (1 - i)/2 F + (1 + i)/2 conj(F).
inline DenseMatrix build_dht_from_dft(std::size_t N) {
    const DenseMatrix f = build_reference_matrix({TransformKind::DFT, N});
    return cplx(0.5, -0.5) * f + cplx(0.5, 0.5) * f.conj();
}

/// Max-entry absolute difference; throws on dimension mismatch.
inline double compare_unitaries(const DenseMatrix& a, const DenseMatrix& b) { return max_abs_diff(a, b); }

/// One row per line, entries as "re,im" pairs separated by commas.
inline void write_csv(std::ostream& os, const DenseMatrix& m) {
    char buf[64];
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g", m(r, c).real(), m(r, c).imag());
            os << (c ? "," : "") << buf;
        }
        os << '\n';
    }
}

} // namespace qrtkit
