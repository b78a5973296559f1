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

#include "bosonval/permanent.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "bosonval/errors.h"

namespace bosonval {

namespace {

constexpr std::size_t kMaxRyserSize = 40;
constexpr std::size_t kMaxNaiveSize = 8;

void require_square(const ComplexMatrix &a, const char *who) {
    if (!a.is_square()) {
        throw DimensionError(
            std::string(who) + ": matrix is " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
            ", expected square");
    }
}

}  // namespace

Complex permanent(const ComplexMatrix &a) {
    require_square(a, "permanent");
    const std::size_t n = a.rows();
    if (n > kMaxRyserSize) {
        throw DimensionError("permanent: n = " + std::to_string(n) + " exceeds supported size");
    }
    if (n == 1) {
        return a(0, 0);
    }

    // row_sums[i] = sum of a(i, j) over the columns j currently in the subset.
    std::vector<Complex> row_sums(n, Complex{0.0, 0.0});
    Complex total{0.0, 0.0};
    const std::uint64_t subset_count = std::uint64_t{1} << n;
    std::uint64_t gray = 0;

    for (std::uint64_t k = 1; k < subset_count; ++k) {
        const auto col = static_cast<std::size_t>(std::countr_zero(k));
        const std::uint64_t bit = std::uint64_t{1} << col;
        gray ^= bit;
        if (gray & bit) {
            for (std::size_t i = 0; i < n; ++i) {
                row_sums[i] += a(i, col);
            }
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                row_sums[i] -= a(i, col);
            }
        }
        Complex prod = row_sums[0];
        for (std::size_t i = 1; i < n; ++i) {
            prod *= row_sums[i];
        }
        if (std::popcount(gray) & 1) {
            total -= prod;
        } else {
            total += prod;
        }
    }
    return (n & 1) ? -total : total;
}

Complex permanent_naive(const ComplexMatrix &a) {
    require_square(a, "permanent_naive");
    const std::size_t n = a.rows();
    if (n > kMaxNaiveSize) {
        throw DimensionError("permanent_naive: n = " + std::to_string(n) + " exceeds oracle limit of 8");
    }
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), std::size_t{0});
    Complex total{0.0, 0.0};
    do {
        Complex prod{1.0, 0.0};
        for (std::size_t i = 0; i < n; ++i) {
            prod *= a(i, sigma[i]);
        }
        total += prod;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return total;
}

}  // namespace bosonval
