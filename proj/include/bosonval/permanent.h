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

#ifndef BOSONVAL_PERMANENT_H
#define BOSONVAL_PERMANENT_H

#include "bosonval/complex_matrix.h"

namespace bosonval {

/// Permanent by Ryser inclusion-exclusion over column subsets, visited in
/// binary-reflected Gray-code order so that each step adds or removes a single
/// column from the running row sums. Cost is O(2^n * n).
///
/// The subset order is fixed, so results are bit-reproducible. Usable up to
/// roughly n = 30; larger sizes are rejected since the subset counter is 64 bit
/// and the runtime would be absurd anyway.
Complex permanent(const ComplexMatrix &a);

/// Reference permanent: sum over all n! permutations of the diagonal products.
/// Only accepts n <= 8.
Complex permanent_naive(const ComplexMatrix &a);

}  // namespace bosonval

#endif
