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

#ifndef BOSONVAL_COMPLEX_MATRIX_H
#define BOSONVAL_COMPLEX_MATRIX_H

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace bosonval {

using Complex = std::complex<double>;

/// Dense row-major complex matrix in double precision.
///
/// Construction rejects empty shapes, mismatched entry counts and non-finite
/// entries, so every live instance satisfies those invariants.
class ComplexMatrix {
   public:
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Complex operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    Complex &operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }

    std::span<const Complex> row(std::size_t r) const noexcept {
        return {data_.data() + r * cols_, cols_};
    }
    std::span<const Complex> entries() const noexcept { return data_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;

    bool operator==(const ComplexMatrix &) const = default;

   private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex> data_;
};

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);

/// max_{r,c} |a(r,c) - b(r,c)|. Shapes must agree.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// max-norm of (U^dagger U - I); zero for an exactly unitary matrix.
double unitarity_residual(const ComplexMatrix &u);

}  // namespace bosonval

#endif
