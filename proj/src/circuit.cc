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

#include "bosonval/circuit.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "bosonval/errors.h"
#include "bosonval/random.h"

namespace bosonval {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_phase(double phi) {
    double w = std::fmod(phi, kTwoPi);
    if (w < 0.0) {
        w += kTwoPi;
    }
    // fmod of a value just below a multiple of 2pi can round up to 2pi.
    return w >= kTwoPi ? 0.0 : w;
}

// Right-multiplies columns (a, a+1) of `m` by the coupler block.
void apply_coupler(ComplexMatrix &m, std::size_t a, double tau) {
    const double c = std::sqrt(tau);
    const Complex is{0.0, std::sqrt(1.0 - tau)};
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const Complex x = m(r, a);
        const Complex y = m(r, a + 1);
        m(r, a) = x * c + y * is;
        m(r, a + 1) = x * is + y * c;
    }
}

void apply_phase(ComplexMatrix &m, std::size_t k, double phi) {
    const Complex e = std::polar(1.0, phi);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        m(r, k) *= e;
    }
}

ComplexMatrix product(const Circuit &c) {
    ComplexMatrix u = ComplexMatrix::identity(c.modes());
    for (const auto &el : c.elements()) {
        if (const auto *cp = std::get_if<Coupler>(&el)) {
            apply_coupler(u, cp->mode, cp->tau);
        } else {
            const auto &ps = std::get<PhaseShift>(el);
            apply_phase(u, ps.mode, ps.phi);
        }
    }
    return u;
}

}  // namespace

Circuit::Circuit(std::size_t modes, std::vector<CircuitElement> elements)
    : modes_(modes), elements_(std::move(elements)) {
    if (modes_ == 0) {
        throw ValidationError("circuit needs at least one mode");
    }
    for (std::size_t k = 0; k < elements_.size(); ++k) {
        const std::string where = "circuit element " + std::to_string(k) + ": ";
        if (const auto *cp = std::get_if<Coupler>(&elements_[k])) {
            if (cp->mode + 1 >= modes_) {
                throw IndexError(where + "coupler on modes (" + std::to_string(cp->mode) + "," +
                                 std::to_string(cp->mode + 1) + ") out of range");
            }
            if (!(cp->tau >= 0.0 && cp->tau <= 1.0)) {
                throw ValidationError(where + "coupler tau must lie in [0, 1]");
            }
        } else {
            const auto &ps = std::get<PhaseShift>(elements_[k]);
            if (ps.mode >= modes_) {
                throw IndexError(where + "phase on mode " + std::to_string(ps.mode) + " out of range");
            }
            if (!(ps.phi >= 0.0 && ps.phi < kTwoPi)) {
                throw ValidationError(where + "phase must lie in [0, 2pi)");
            }
        }
    }
}

std::size_t Circuit::coupler_count() const noexcept {
    return static_cast<std::size_t>(std::count_if(elements_.begin(), elements_.end(), [](const auto &el) {
        return std::holds_alternative<Coupler>(el);
    }));
}

Interferometer compose(const Circuit &c) {
    return Interferometer(product(c), Provenance::circuit(std::to_string(c.elements().size()) + " elements"), 1e-10);
}

Circuit coupler_mesh(std::size_t modes, std::size_t layers, std::span<const double> phases) {
    if (modes < 2 || layers < 1) {
        throw ValidationError("coupler mesh needs modes >= 2 and layers >= 1");
    }
    if (phases.size() != modes * layers) {
        throw ValidationError("coupler mesh needs modes * layers phases");
    }
    std::vector<CircuitElement> elements;
    for (std::size_t layer = 0; layer < layers; ++layer) {
        for (std::size_t k = 0; k < modes; ++k) {
            const double phi = wrap_phase(phases[layer * modes + k]);
            if (phi != 0.0) {
                elements.emplace_back(PhaseShift{k, phi});
            }
        }
        for (std::size_t k = layer % 2; k + 1 < modes; k += 2) {
            elements.emplace_back(Coupler{k, 0.5});
        }
    }
    return Circuit(modes, std::move(elements));
}

Circuit random_phase_network(std::size_t modes, std::size_t layers, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> phases(modes * layers);
    for (auto &phi : phases) {
        phi = kTwoPi * uniform01(rng);
    }
    return coupler_mesh(modes, layers, phases);
}

Circuit reck_decompose(const Interferometer &u, double tolerance) {
    const std::size_t m = u.modes();
    ComplexMatrix work = u.matrix();

    // Each nulling step right-multiplies `work` by (C(tau) P_b(phi))^-1, so
    // u = D * B_last * ... * B_first with B = [coupler, phase]. Blocks are
    // collected in nulling order and emitted reversed after the diagonal.
    std::vector<std::vector<CircuitElement>> blocks;
    for (std::size_t row = m; row-- > 1;) {
        for (std::size_t a = 0; a < row; ++a) {
            const Complex x = work(row, a);
            const Complex y = work(row, a + 1);
            const double ax = std::abs(x);
            if (ax == 0.0) {
                continue;
            }
            const double ay = std::abs(y);
            const double norm = std::hypot(ax, ay);
            const double tau = std::clamp((ay / norm) * (ay / norm), 0.0, 1.0);
            double phi = 0.0;
            if (ay != 0.0) {
                phi = wrap_phase(std::arg(Complex{0.0, 1.0} * std::conj(x) * y));
            }
            // Inverse block on columns (a, a+1): phase(-phi) on a+1, then C(tau)^dagger.
            apply_phase(work, a + 1, phi == 0.0 ? 0.0 : kTwoPi - phi);
            const double c = std::sqrt(tau);
            const Complex mis{0.0, -std::sqrt(1.0 - tau)};
            for (std::size_t r = 0; r < m; ++r) {
                const Complex p = work(r, a);
                const Complex q = work(r, a + 1);
                work(r, a) = p * c + q * mis;
                work(r, a + 1) = p * mis + q * c;
            }
            work(row, a) = 0.0;

            std::vector<CircuitElement> block{Coupler{a, tau}};
            if (phi != 0.0) {
                block.emplace_back(PhaseShift{a + 1, phi});
            }
            blocks.push_back(std::move(block));
        }
    }

    std::vector<CircuitElement> elements;
    for (std::size_t k = 0; k < m; ++k) {
        const double phi = wrap_phase(std::arg(work(k, k)));
        if (phi != 0.0) {
            elements.emplace_back(PhaseShift{k, phi});
        }
    }
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
        elements.insert(elements.end(), it->begin(), it->end());
    }

    Circuit circuit(m, std::move(elements));
    const double residual = max_abs_diff(product(circuit), u.matrix());
    if (!(residual <= tolerance)) {
        throw ConvergenceError(
            "reck_decompose: recomposed circuit differs from input by " + std::to_string(residual) +
            " (input not unitary enough?)");
    }
    return circuit;
}

}  // namespace bosonval
