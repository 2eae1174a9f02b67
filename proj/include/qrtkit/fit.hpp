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

#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <vector>

namespace qrtkit {

/// y ~ a x^2 + b x + c.
struct QuadraticFit {
    double a = 0;
    double b = 0;
    double c = 0;
};

/// Least-squares fit; needs at least three distinct abscissae.
inline QuadraticFit fit_quadratic(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("fit_quadratic: size mismatch");
    if (x.size() < 3) throw std::invalid_argument("fit_quadratic: need at least 3 points");
    const auto m = static_cast<Eigen::Index>(x.size());
    Eigen::MatrixXd A(m, 3);
    Eigen::VectorXd v(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        const double xi = x[static_cast<std::size_t>(i)];
        A(i, 0) = xi * xi;
        A(i, 1) = xi;
        A(i, 2) = 1.0;
        v(i) = y[static_cast<std::size_t>(i)];
    }
    const Eigen::Vector3d s = A.colPivHouseholderQr().solve(v);
    return {s(0), s(1), s(2)};
}

} // namespace qrtkit
