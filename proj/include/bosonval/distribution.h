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

#ifndef BOSONVAL_DISTRIBUTION_H
#define BOSONVAL_DISTRIBUTION_H

#include <string>
#include <string_view>
#include <vector>

#include "bosonval/interferometer.h"
#include "bosonval/mode_config.h"

namespace bosonval {

enum class Source { indistinguishable, distinguishable, uniform };

std::string to_string(Source s);
Source parse_source(std::string_view text);

/// |Perm(A)|^2 with A = submatrix(u, s, t): the unnormalized probability that
/// indistinguishable photons entering S leave in T.
double bs_probability_raw(const Interferometer &u, const ModeConfig &s, const ModeConfig &t);

/// Perm(M) with M(i, j) = |U(s_i, t_j)|^2: the same event for fully
/// distinguishable photons, each routed independently.
double dist_probability_raw(const Interferometer &u, const ModeConfig &s, const ModeConfig &t);

/// Probabilities over all C(m, n) collision-free outputs, in lexicographic
/// order, normalized over that set.
class NoCollisionDistribution {
   public:
    /// Normalizes `weights`. Throws DegenerateError if they are all zero.
    NoCollisionDistribution(ModeConfig input, Source source, std::vector<double> weights);

    const ModeConfig &input() const noexcept { return input_; }
    Source source() const noexcept { return source_; }
    std::size_t modes() const noexcept { return input_.ambient_modes(); }
    std::size_t photons() const noexcept { return input_.size(); }
    std::size_t support_size() const noexcept { return probs_.size(); }

    const std::vector<double> &probabilities() const noexcept { return probs_; }
    double probability(std::size_t rank) const { return probs_.at(rank); }
    double probability(const ModeConfig &t) const;
    ModeConfig outcome(std::size_t rank) const { return lex_unrank(modes(), photons(), rank); }

   private:
    ModeConfig input_;
    Source source_;
    std::vector<double> probs_;
};

/// Evaluates every collision-free output (in parallel) and normalizes.
NoCollisionDistribution build_distribution(const Interferometer &u, const ModeConfig &s, Source source);

/// Photon counts per output mode, summing to n. Only used to check
/// normalization over the full output space including collisions.
struct OccupationPattern {
    std::vector<std::size_t> counts;

    explicit OccupationPattern(std::vector<std::size_t> c);
    std::size_t photons() const noexcept;
    bool operator==(const OccupationPattern &) const = default;
};

/// Every way to put n photons into m modes.
std::vector<OccupationPattern> enumerate_occupations(std::size_t m, std::size_t n);

/// Exact probability of `mu` over the whole output space, collisions included:
/// |Perm(U_{S,mu})|^2 / prod mu_j! for indistinguishable photons and
/// Perm(|U|^2_{S,mu}) / prod mu_j! for distinguishable ones, where U_{S,mu}
/// repeats output column j mu_j times. Restricted to n <= 4, m <= 8.
double full_space_probability(const Interferometer &u, const ModeConfig &s, const OccupationPattern &mu,
                              Source source);

/// (1/2) sum_k |p_k - q_k|. Throws SupportError unless (m, n) agree.
double variation_distance(const NoCollisionDistribution &p, const NoCollisionDistribution &q);

}  // namespace bosonval

#endif
