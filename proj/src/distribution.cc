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

#include "bosonval/distribution.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bosonval/errors.h"
#include "bosonval/parallel.h"
#include "bosonval/permanent.h"

namespace bosonval {

namespace {

ComplexMatrix squared_moduli(const ComplexMatrix &a) {
    ComplexMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            out(r, c) = std::norm(a(r, c));
        }
    }
    return out;
}

}  // namespace

std::string to_string(Source s) {
    switch (s) {
        case Source::indistinguishable:
            return "indistinguishable";
        case Source::distinguishable:
            return "distinguishable";
        case Source::uniform:
            return "uniform";
    }
    return "unknown";
}

Source parse_source(std::string_view text) {
    if (text == "indistinguishable") {
        return Source::indistinguishable;
    }
    if (text == "distinguishable") {
        return Source::distinguishable;
    }
    if (text == "uniform") {
        return Source::uniform;
    }
    throw FormatError("unknown source '" + std::string(text) +
                      "' (expected indistinguishable, distinguishable or uniform)");
}

double bs_probability_raw(const Interferometer &u, const ModeConfig &s, const ModeConfig &t) {
    return std::norm(permanent(submatrix(u, s, t)));
}

double dist_probability_raw(const Interferometer &u, const ModeConfig &s, const ModeConfig &t) {
    // All entries are nonnegative reals, so the permanent is too; clamp the sign of a -0.0.
    return std::max(0.0, permanent(squared_moduli(submatrix(u, s, t))).real());
}

NoCollisionDistribution::NoCollisionDistribution(ModeConfig input, Source source, std::vector<double> weights)
    : input_(std::move(input)), source_(source), probs_(std::move(weights)) {
    const auto expected = binomial(input_.ambient_modes(), input_.size());
    if (probs_.size() != expected) {
        throw SupportError("distribution has " + std::to_string(probs_.size()) + " weights, expected C(m,n) = " +
                           std::to_string(expected));
    }
    double total = 0.0;
    for (double w : probs_) {
        if (!(w >= 0.0) || !std::isfinite(w)) {
            throw ValidationError("distribution weights must be finite and nonnegative");
        }
        total += w;
    }
    if (total == 0.0) {
        throw DegenerateError("every collision-free output has zero weight for input " + input_.to_string() +
                              " under the " + to_string(source_) + " model");
    }
    for (double &w : probs_) {
        w /= total;
    }
}

double NoCollisionDistribution::probability(const ModeConfig &t) const {
    if (t.ambient_modes() != modes() || t.size() != photons()) {
        throw SupportError("outcome " + t.to_string() + " is not in the (m, n) support of this distribution");
    }
    return probs_[lex_rank(t)];
}

NoCollisionDistribution build_distribution(const Interferometer &u, const ModeConfig &s, Source source) {
    if (s.ambient_modes() != u.modes()) {
        throw IndexError("input configuration has m = " + std::to_string(s.ambient_modes()) +
                         " but the interferometer has " + std::to_string(u.modes()) + " modes");
    }
    const auto support = enumerate_no_collision(u.modes(), s.size());
    std::vector<double> weights(support.size(), 1.0);
    if (source != Source::uniform) {
        parallel_for(support.size(), [&](std::size_t k) {
            weights[k] = source == Source::indistinguishable ? bs_probability_raw(u, s, support[k])
                                                             : dist_probability_raw(u, s, support[k]);
        });
    }
    return NoCollisionDistribution(s, source, std::move(weights));
}

OccupationPattern::OccupationPattern(std::vector<std::size_t> c) : counts(std::move(c)) {
    if (counts.empty()) {
        throw ValidationError("occupation pattern needs at least one mode");
    }
}

std::size_t OccupationPattern::photons() const noexcept {
    return std::accumulate(counts.begin(), counts.end(), std::size_t{0});
}

std::vector<OccupationPattern> enumerate_occupations(std::size_t m, std::size_t n) {
    std::vector<OccupationPattern> out;
    std::vector<std::size_t> counts(m, 0);
    // Recursive fill of mode k with the photons left over.
    auto fill = [&](auto &&self, std::size_t k, std::size_t left) -> void {
        if (k + 1 == m) {
            counts[k] = left;
            out.emplace_back(counts);
            return;
        }
        for (std::size_t c = left + 1; c-- > 0;) {
            counts[k] = c;
            self(self, k + 1, left - c);
        }
    };
    if (m == 0) {
        throw ValidationError("enumerate_occupations needs m >= 1");
    }
    fill(fill, 0, n);
    return out;
}

double full_space_probability(const Interferometer &u, const ModeConfig &s, const OccupationPattern &mu,
                              Source source) {
    const std::size_t n = s.size();
    const std::size_t m = u.modes();
    if (n > 4 || m > 8) {
        throw DimensionError("full_space_probability is an oracle limited to n <= 4 and m <= 8");
    }
    if (source == Source::uniform) {
        throw ValidationError("full_space_probability is defined for the photon models only");
    }
    if (mu.counts.size() != m || mu.photons() != n || s.ambient_modes() != m) {
        throw DimensionError("occupation pattern does not match (m, n)");
    }
    ComplexMatrix a(n, n);
    double multiplicity = 1.0;
    std::size_t col = 0;
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t rep = 0; rep < mu.counts[j]; ++rep) {
            for (std::size_t i = 0; i < n; ++i) {
                a(i, col) = u(s[i], j);
            }
            ++col;
            multiplicity *= static_cast<double>(rep + 1);
        }
    }
    if (source == Source::indistinguishable) {
        return std::norm(permanent(a)) / multiplicity;
    }
    return std::max(0.0, permanent(squared_moduli(a)).real()) / multiplicity;
}

double variation_distance(const NoCollisionDistribution &p, const NoCollisionDistribution &q) {
    if (p.modes() != q.modes() || p.photons() != q.photons()) {
        throw SupportError("variation_distance: distributions are over different (m, n) supports");
    }
    double total = 0.0;
    for (std::size_t k = 0; k < p.support_size(); ++k) {
        total += std::abs(p.probabilities()[k] - q.probabilities()[k]);
    }
    return 0.5 * total;
}

}  // namespace bosonval
