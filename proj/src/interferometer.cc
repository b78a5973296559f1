// Copyright 2026 The bosonval Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bosonval/interferometer.h"

#include <Eigen/Dense>

#include "bosonval/errors.h"
#include "bosonval/random.h"

namespace bosonval {

std::string Provenance::to_string() const {
    switch (kind) {
        case Kind::haar:
            return "haar(" + reference + ")";
        case Kind::circuit:
            return "circuit(" + reference + ")";
        case Kind::file:
            return "file(" + reference + ")";
    }
    return reference;
}

Interferometer::Interferometer(ComplexMatrix matrix, Provenance provenance, double tolerance)
    : matrix_(std::move(matrix)), provenance_(std::move(provenance)) {
    if (!matrix_.is_square()) {
        throw ValidationError("interferometer matrix must be square");
    }
    const double residual = unitarity_residual(matrix_);
    if (!(residual <= tolerance)) {
        throw ValidationError(
            "interferometer matrix is not unitary: max|U^dagger U - I| = " + std::to_string(residual) +
            " exceeds " + std::to_string(tolerance));
    }
}

Interferometer haar_unitary(std::size_t m, std::uint64_t seed) {
    if (m == 0) {
        throw DimensionError("haar_unitary: m must be at least 1");
    }
    Rng rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd z(m, m);
    for (Eigen::Index r = 0; r < z.rows(); ++r) {
        for (Eigen::Index c = 0; c < z.cols(); ++c) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            z(r, c) = Complex(re, im);
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index c = 0; c < q.cols(); ++c) {
        const Complex d = r(c, c);
        const double mag = std::abs(d);
        q.col(c) *= mag > 0.0 ? d / mag : Complex{1.0, 0.0};
    }

    std::vector<Complex> entries(m * m);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < m; ++c) {
            entries[r * m + c] = q(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        }
    }
    return Interferometer(ComplexMatrix(m, m, std::move(entries)), Provenance::haar(seed), 1e-12);
}

ComplexMatrix submatrix(const Interferometer &u, const ModeConfig &s, const ModeConfig &t) {
    if (s.size() != t.size()) {
        throw DimensionError("submatrix: input and output configurations differ in photon number");
    }
    if (s.ambient_modes() != u.modes() || t.ambient_modes() != u.modes()) {
        throw IndexError(
            "submatrix: configuration mode count does not match interferometer with m = " +
            std::to_string(u.modes()));
    }
    const std::size_t n = s.size();
    ComplexMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a(i, j) = u(s[i], t[j]);
        }
    }
    return a;
}

}  // namespace bosonval
