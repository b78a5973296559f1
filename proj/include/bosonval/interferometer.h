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

#ifndef BOSONVAL_INTERFEROMETER_H
#define BOSONVAL_INTERFEROMETER_H

#include <cstdint>
#include <string>

#include "bosonval/complex_matrix.h"
#include "bosonval/mode_config.h"

namespace bosonval {

/// Unitarity tolerance applied when accepting a matrix from outside (files, callers).
inline constexpr double kUnitarityLoadTolerance = 1e-8;

struct Provenance {
    enum class Kind { haar, circuit, file };
    Kind kind;
    std::string reference;

    static Provenance haar(std::uint64_t seed) { return {Kind::haar, std::to_string(seed)}; }
    static Provenance circuit(std::string ref) { return {Kind::circuit, std::move(ref)}; }
    static Provenance file(std::string path) { return {Kind::file, std::move(path)}; }

    /// "haar(7)", "circuit(random-phases ...)", "file(u.json)".
    std::string to_string() const;
};

/// An m-mode linear interferometer. The matrix is indexed [input][output]:
/// entry (i, j) is the amplitude for a photon entering mode i to leave in mode j.
class Interferometer {
   public:
    /// Throws ValidationError if the matrix is not square or not unitary within tolerance.
    Interferometer(ComplexMatrix matrix, Provenance provenance, double tolerance = kUnitarityLoadTolerance);

    std::size_t modes() const noexcept { return matrix_.rows(); }
    const ComplexMatrix &matrix() const noexcept { return matrix_; }
    const Provenance &provenance() const noexcept { return provenance_; }
    Complex operator()(std::size_t in, std::size_t out) const noexcept { return matrix_(in, out); }

   private:
    ComplexMatrix matrix_;
    Provenance provenance_;
};

/// Haar-distributed m x m unitary from a complex Ginibre matrix, QR factorized,
/// with the phases of R's diagonal folded back into Q. Same (m, seed) gives
/// bit-identical output on a given build.
Interferometer haar_unitary(std::size_t m, std::uint64_t seed);

/// A(i, j) = U(s_i, t_j): rows follow the input modes, columns the output modes.
ComplexMatrix submatrix(const Interferometer &u, const ModeConfig &s, const ModeConfig &t);

}  // namespace bosonval

#endif
