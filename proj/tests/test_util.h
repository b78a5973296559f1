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

#ifndef BOSONVAL_TESTS_TEST_UTIL_H
#define BOSONVAL_TESTS_TEST_UTIL_H

#include <cstdint>
#include <random>
#include <vector>

#include "bosonval/complex_matrix.h"
#include "bosonval/interferometer.h"

namespace bosonval::testing {

/// Entries with real and imaginary parts uniform in [-1, 1).
inline ComplexMatrix random_complex_matrix(std::size_t n, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    std::vector<Complex> e(n * n);
    for (auto &z : e) {
        const double re = d(rng);
        z = Complex(re, d(rng));
    }
    return ComplexMatrix(n, n, std::move(e));
}

inline ComplexMatrix permutation_matrix(const std::vector<std::size_t> &perm) {
    ComplexMatrix p(perm.size(), perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        p(i, perm[i]) = 1.0;
    }
    return p;
}

/// Interferometer whose matrix sends input mode i to output mode perm[i].
inline Interferometer permutation_interferometer(const std::vector<std::size_t> &perm) {
    return Interferometer(permutation_matrix(perm), Provenance::circuit("permutation"));
}

/// 50/50 coupler on two modes, [[1, i], [i, 1]] / sqrt 2.
inline Interferometer balanced_coupler() {
    const double h = 1.0 / std::sqrt(2.0);
    return Interferometer(ComplexMatrix(2, 2, {Complex(h, 0), Complex(0, h), Complex(0, h), Complex(h, 0)}),
                          Provenance::circuit("50/50 coupler"));
}

}  // namespace bosonval::testing

#endif
