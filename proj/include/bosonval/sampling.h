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

#ifndef BOSONVAL_SAMPLING_H
#define BOSONVAL_SAMPLING_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bosonval/distribution.h"
#include "bosonval/random.h"

namespace bosonval {

/// Observed collision-free outputs plus where they came from.
struct EventLog {
    ModeConfig input;
    std::string unitary_reference;
    std::string source_label;  // "unknown" for external data
    std::optional<std::uint64_t> seed;
    std::vector<ModeConfig> events;

    std::size_t modes() const noexcept { return input.ambient_modes(); }
    std::size_t photons() const noexcept { return input.size(); }

    /// Throws SupportError if any event is not an n-subset of the m modes.
    void validate() const;
};

/// Inverse-CDF sampler over the lexicographic support of a distribution.
class OutcomeSampler {
   public:
    explicit OutcomeSampler(const NoCollisionDistribution &d);

    /// Lexicographic rank of one draw. Never returns a zero-probability rank.
    std::size_t draw(Rng &rng) const;

    std::size_t support_size() const noexcept { return cumulative_.size(); }

   private:
    std::vector<double> cumulative_;
    std::size_t last_positive_ = 0;
};

/// `count` independent draws from `d`, seeded by `seed`.
EventLog sample_events(const NoCollisionDistribution &d, std::size_t count, std::uint64_t seed,
                       std::string unitary_reference = "");

}  // namespace bosonval

#endif
