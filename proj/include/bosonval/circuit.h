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

#ifndef BOSONVAL_CIRCUIT_H
#define BOSONVAL_CIRCUIT_H

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "bosonval/interferometer.h"

namespace bosonval {

/// Directional coupler between modes (mode, mode + 1) with power
/// transmissivity tau. Its 2x2 block is
///
///     [ sqrt(tau)        i sqrt(1 - tau) ]
///     [ i sqrt(1 - tau)  sqrt(tau)       ]
///
/// so tau = 1 is the identity and tau = 1/2 the balanced 50/50 coupler.
struct Coupler {
    std::size_t mode;
    double tau;
    bool operator==(const Coupler &) const = default;
};

/// Phase shifter multiplying the amplitude in `mode` by exp(i phi), phi in [0, 2pi).
struct PhaseShift {
    std::size_t mode;
    double phi;
    bool operator==(const PhaseShift &) const = default;
};

using CircuitElement = std::variant<Coupler, PhaseShift>;

/// Ordered list of optical elements on a fixed number of modes. Element 0 is
/// the first one a photon passes through.
class Circuit {
   public:
    explicit Circuit(std::size_t modes, std::vector<CircuitElement> elements = {});

    std::size_t modes() const noexcept { return modes_; }
    const std::vector<CircuitElement> &elements() const noexcept { return elements_; }
    std::size_t coupler_count() const noexcept;

    bool operator==(const Circuit &) const = default;

   private:
    std::size_t modes_;
    std::vector<CircuitElement> elements_;
};

/// Product of the element matrices in circuit order, using the
/// [input][output] indexing of Interferometer. Every element block is
/// symmetric, so the product is taken left to right: U = E_0 E_1 ... E_k.
Interferometer compose(const Circuit &c);

/// Brickwork of 50/50 couplers. Each layer first applies a phase to every mode,
/// taken in order from `phases`, then couplers on pairs (0,1),(2,3),... for
/// even layers and (1,2),(3,4),... for odd layers. Zero phases are omitted.
/// `phases` must hold modes * layers angles.
Circuit coupler_mesh(std::size_t modes, std::size_t layers, std::span<const double> phases);

/// coupler_mesh with phases drawn uniformly from [0, 2pi) by a seeded engine.
Circuit random_phase_network(std::size_t modes, std::size_t layers, std::uint64_t seed);

/// Triangular decomposition into adjacent couplers and phase shifters.
///
/// Entries below the diagonal are nulled row by row from the bottom, each by a
/// coupler (plus one phase) acting on neighbouring output columns. What remains
/// is a diagonal of phases. Uses at most m(m-1)/2 couplers. Throws
/// ConvergenceError when the recomposed circuit differs from `u` by more than
/// `tolerance` in max-norm.
Circuit reck_decompose(const Interferometer &u, double tolerance = 1e-10);

}  // namespace bosonval

#endif
