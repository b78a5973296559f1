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

#ifndef BOSONVAL_RANDOM_H
#define BOSONVAL_RANDOM_H

#include <cstdint>
#include <initializer_list>
#include <random>

namespace bosonval {

using Rng = std::mt19937_64;

/// Mixes a master seed with an index path (unitary, set size, trial, ...) into
/// an independent 64-bit stream seed. Pure function of its arguments.
std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path);

/// Uniform double in [0, 1) built from the top 53 bits of one engine draw.
inline double uniform01(Rng &rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace bosonval

#endif
