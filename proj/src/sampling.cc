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

#include "bosonval/sampling.h"

#include <algorithm>

#include "bosonval/errors.h"

namespace bosonval {

void EventLog::validate() const {
    for (std::size_t k = 0; k < events.size(); ++k) {
        const auto &e = events[k];
        if (e.ambient_modes() != modes() || e.size() != photons()) {
            throw SupportError("event " + std::to_string(k) + " (" + e.to_string() + ") is not a " +
                               std::to_string(photons()) + "-photon output of " + std::to_string(modes()) +
                               " modes");
        }
    }
}

OutcomeSampler::OutcomeSampler(const NoCollisionDistribution &d) : cumulative_(d.support_size()) {
    double running = 0.0;
    const auto &p = d.probabilities();
    for (std::size_t k = 0; k < p.size(); ++k) {
        running += p[k];
        cumulative_[k] = running;
        if (p[k] > 0.0) {
            last_positive_ = k;
        }
    }
}

std::size_t OutcomeSampler::draw(Rng &rng) const {
    // Scale by the actual total so rounding in the running sum cannot push
    // u past the final bucket.
    const double u = uniform01(rng) * cumulative_.back();
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    const auto rank = static_cast<std::size_t>(it - cumulative_.begin());
    return std::min(rank, last_positive_);
}

EventLog sample_events(const NoCollisionDistribution &d, std::size_t count, std::uint64_t seed,
                       std::string unitary_reference) {
    OutcomeSampler sampler(d);
    Rng rng(seed);
    EventLog log{d.input(), std::move(unitary_reference), to_string(d.source()), seed, {}};
    log.events.reserve(count);
    const auto support = enumerate_no_collision(d.modes(), d.photons());
    for (std::size_t k = 0; k < count; ++k) {
        log.events.push_back(support[sampler.draw(rng)]);
    }
    return log;
}

}  // namespace bosonval
