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

#include <gtest/gtest.h>

#include <numbers>

#include "bosonval/circuit.h"
#include "bosonval/errors.h"
#include "test_util.h"

using namespace bosonval;

TEST(Interferometer, rejects_non_unitary) {
    ComplexMatrix m(2, 2, {1.0, 0.1, 0.0, 1.0});
    EXPECT_THROW(Interferometer(m, Provenance::file("x")), ValidationError);
    EXPECT_THROW(Interferometer(ComplexMatrix(2, 3), Provenance::file("x")), ValidationError);
    EXPECT_NO_THROW(Interferometer(ComplexMatrix::identity(3), Provenance::file("x")));
}

TEST(Interferometer, submatrix_indexing) {
    const Interferometer id(ComplexMatrix::identity(3), Provenance::circuit("id"));
    EXPECT_EQ(submatrix(id, ModeConfig(3, {0, 1}), ModeConfig(3, {0, 1})), ComplexMatrix::identity(2));
    const auto a = submatrix(id, ModeConfig(3, {0, 1}), ModeConfig(3, {1, 2}));
    EXPECT_EQ(a, ComplexMatrix(2, 2, {0.0, 0.0, 1.0, 0.0}));

    const auto u = haar_unitary(7, 99);
    const ModeConfig s(7, {2, 3, 4});
    const ModeConfig t(7, {0, 1, 2});
    const auto b = submatrix(u, s, t);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            EXPECT_EQ(b(i, j), u.matrix()(s[i], t[j]));
        }
    }
    EXPECT_THROW(submatrix(u, ModeConfig(5, {0, 1, 2}), t), IndexError);
}

TEST(Haar, single_mode_is_a_phase) {
    const auto u = haar_unitary(1, 5);
    EXPECT_NEAR(std::abs(u(0, 0)), 1.0, 1e-15);
}

TEST(Haar, unitary_and_reproducible) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto u = haar_unitary(6, seed);
        EXPECT_LE(unitarity_residual(u.matrix()), 1e-12);
    }
    EXPECT_LE(unitarity_residual(haar_unitary(25, 1).matrix()), 1e-12);
    EXPECT_EQ(haar_unitary(5, 17).matrix(), haar_unitary(5, 17).matrix());
    EXPECT_NE(haar_unitary(5, 17).matrix(), haar_unitary(5, 18).matrix());
    EXPECT_THROW(haar_unitary(0, 1), DimensionError);
}

TEST(Haar, first_moment_of_an_entry) {
    // E|U_00|^2 = 1/m for the Haar measure.
    double sum = 0.0;
    const int draws = 20000;
    for (int k = 0; k < draws; ++k) {
        sum += std::norm(haar_unitary(4, 1000 + k)(0, 0));
    }
    EXPECT_NEAR(sum / draws, 0.25, 0.01);
}

TEST(Circuit, validates_elements) {
    EXPECT_THROW(Circuit(3, {Coupler{2, 0.5}}), IndexError);
    EXPECT_THROW(Circuit(3, {Coupler{0, 1.5}}), ValidationError);
    EXPECT_THROW(Circuit(3, {PhaseShift{3, 0.0}}), IndexError);
    EXPECT_THROW(Circuit(3, {PhaseShift{0, 7.0}}), ValidationError);
}

TEST(Compose, conventions) {
    EXPECT_EQ(compose(Circuit(3)).matrix(), ComplexMatrix::identity(3));

    const auto u = compose(Circuit(2, {Coupler{0, 0.5}}));
    const double h = 1.0 / std::sqrt(2.0);
    EXPECT_LE(max_abs_diff(u.matrix(), bosonval::testing::balanced_coupler().matrix()), 1e-15);
    EXPECT_NEAR(u(0, 1).imag(), h, 1e-15);

    const auto p = compose(Circuit(2, {PhaseShift{1, std::numbers::pi / 2}}));
    EXPECT_NEAR(std::abs(p(1, 1) - Complex(0, 1)), 0.0, 1e-15);
}

TEST(Compose, elements_apply_in_order) {
    // Phase on mode 0 first, then the coupler: the amplitude from input 0 picks
    // up the phase on both outputs, input 1 is untouched.
    const double phi = 0.3;
    const auto u = compose(Circuit(2, {PhaseShift{0, phi}, Coupler{0, 0.5}}));
    const auto bs = bosonval::testing::balanced_coupler();
    EXPECT_LE(std::abs(u(0, 0) - std::polar(1.0, phi) * bs(0, 0)), 1e-15);
    EXPECT_LE(std::abs(u(0, 1) - std::polar(1.0, phi) * bs(0, 1)), 1e-15);
    EXPECT_LE(std::abs(u(1, 0) - bs(1, 0)), 1e-15);
}

TEST(RandomPhaseNetwork, zero_phases_single_layer) {
    const std::vector<double> zeros(2, 0.0);
    const auto c = coupler_mesh(2, 1, zeros);
    ASSERT_EQ(c.elements().size(), 1u);
    EXPECT_EQ(std::get<Coupler>(c.elements()[0]), (Coupler{0, 0.5}));
}

TEST(RandomPhaseNetwork, unitary_and_deterministic) {
    for (std::size_t m = 2; m <= 9; ++m) {
        for (std::size_t layers = 1; layers <= 8; layers += 3) {
            const auto c = random_phase_network(m, layers, 100 * m + layers);
            EXPECT_LE(unitarity_residual(compose(c).matrix()), 1e-10);
        }
    }
    EXPECT_EQ(random_phase_network(7, 8, 3), random_phase_network(7, 8, 3));
    EXPECT_NE(random_phase_network(7, 8, 3), random_phase_network(7, 8, 4));
    const auto c = random_phase_network(7, 2, 1);
    // Layer 0 couples (0,1),(2,3),(4,5); layer 1 couples (1,2),(3,4),(5,6).
    EXPECT_EQ(c.coupler_count(), 6u);
}

TEST(Reck, identity_needs_no_elements) {
    const Interferometer id(ComplexMatrix::identity(4), Provenance::circuit("id"));
    const auto c = reck_decompose(id);
    EXPECT_LE(max_abs_diff(compose(c).matrix(), id.matrix()), 1e-12);
    EXPECT_EQ(c.coupler_count(), 0u);
}

TEST(Reck, diagonal_phases_only) {
    ComplexMatrix d(3, 3);
    d(0, 0) = std::polar(1.0, 0.4);
    d(1, 1) = std::polar(1.0, -2.0);
    d(2, 2) = -1.0;
    const Interferometer u(d, Provenance::circuit("diag"));
    const auto c = reck_decompose(u);
    EXPECT_EQ(c.coupler_count(), 0u);
    EXPECT_EQ(c.elements().size(), 3u);
    EXPECT_LE(max_abs_diff(compose(c).matrix(), d), 1e-15);
}

TEST(Reck, roundtrip_on_haar_unitaries) {
    for (std::size_t m = 3; m <= 8; ++m) {
        for (std::uint64_t seed = 0; seed < 17; ++seed) {
            const auto u = haar_unitary(m, 31 * m + seed);
            const auto c = reck_decompose(u);
            EXPECT_LE(c.coupler_count(), m * (m - 1) / 2);
            EXPECT_LE(max_abs_diff(compose(c).matrix(), u.matrix()), 1e-10) << "m = " << m;
        }
    }
    const auto u5 = haar_unitary(5, 2);
    EXPECT_LE(max_abs_diff(compose(reck_decompose(u5)).matrix(), u5.matrix()), 1e-10);
}

TEST(Reck, roundtrip_on_coupler_networks_and_permutations) {
    const auto net = compose(random_phase_network(7, 8, 5));
    EXPECT_LE(max_abs_diff(compose(reck_decompose(net)).matrix(), net.matrix()), 1e-10);
    const auto perm = bosonval::testing::permutation_interferometer({2, 0, 3, 1});
    EXPECT_LE(max_abs_diff(compose(reck_decompose(perm)).matrix(), perm.matrix()), 1e-12);
}

TEST(Reck, rejects_input_far_from_unitary) {
    ComplexMatrix m = haar_unitary(4, 1).matrix();
    m(0, 0) += 1e-9;
    const Interferometer slightly_off(m, Provenance::file("x"));
    EXPECT_THROW(reck_decompose(slightly_off), ConvergenceError);
    EXPECT_NO_THROW(reck_decompose(slightly_off, 1e-8));
}
