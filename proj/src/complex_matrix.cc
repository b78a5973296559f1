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

#include "bosonval/complex_matrix.h"

#include <cmath>
#include <string>

#include "bosonval/errors.h"

namespace bosonval {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : ComplexMatrix(rows, cols, std::vector<Complex>(rows * cols)) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows_ == 0 || cols_ == 0) {
        throw DimensionError("matrix must have at least one row and one column");
    }
    if (data_.size() != rows_ * cols_) {
        throw DimensionError(
            "matrix entry count " + std::to_string(data_.size()) + " != " + std::to_string(rows_) + "x" +
            std::to_string(cols_));
    }
    for (const auto &z : data_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw ValidationError("matrix contains a non-finite entry");
        }
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        m(k, k) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(c, r) = (*this)(r, c);
        }
    }
    return out;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("matrix product shape mismatch");
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex x = a(r, k);
            for (std::size_t c = 0; c < b.cols(); ++c) {
                out(r, c) += x * b(k, c);
            }
        }
    }
    return out;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("max_abs_diff shape mismatch");
    }
    double worst = 0.0;
    auto ea = a.entries();
    auto eb = b.entries();
    for (std::size_t k = 0; k < ea.size(); ++k) {
        worst = std::max(worst, std::abs(ea[k] - eb[k]));
    }
    return worst;
}

double unitarity_residual(const ComplexMatrix &u) {
    if (!u.is_square()) {
        throw DimensionError("unitarity check needs a square matrix");
    }
    return max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(u.rows()));
}

}  // namespace bosonval
