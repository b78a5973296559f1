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

#ifndef BOSONVAL_VALIDATORS_H
#define BOSONVAL_VALIDATORS_H

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bosonval/distribution.h"
#include "bosonval/sampling.h"

namespace bosonval {

enum class Verdict { boson_sampler, uniform, indistinguishable, distinguishable, inconclusive };

std::string to_string(Verdict v);

// ---------------------------------------------------------------------------
// Row-norm test against the uniform distribution.
// ---------------------------------------------------------------------------

/// (n/m)^n, formed by repeated multiplication so that a statistic built from
/// n row sums that each equal n/m compares equal to it.
double aa_threshold(std::size_t n, std::size_t m);

/// P = prod_i sum_j |A(i, j)|^2 over A = submatrix(u, s, t). O(n^2), no permanents.
double aa_statistic(const Interferometer &u, const ModeConfig &s, const ModeConfig &t);

struct AaEventDecision {
    double statistic;
    double threshold;
    Verdict verdict;  // boson_sampler iff statistic > threshold
};

AaEventDecision aa_decide_event(const Interferometer &u, const ModeConfig &s, const ModeConfig &t);

/// Verdict for every collision-free output, indexed by lexicographic rank.
std::vector<Verdict> aa_decision_table(const Interferometer &u, const ModeConfig &s);

/// boson_sampler iff strictly more boson_sampler than uniform decisions.
Verdict majority_of(std::span<const Verdict> decisions);

struct CountingWalk {
    std::vector<long long> trace;  // C after each event
    Verdict verdict;               // boson_sampler iff trace.back() > 0
};

CountingWalk counting_walk_of(std::span<const Verdict> decisions);

/// Majority vote of per-event decisions over a log. Throws on an empty log.
Verdict aa_majority(const Interferometer &u, const ModeConfig &s, const EventLog &log);

/// Running +1 / -1 tally of per-event decisions. Throws on an empty log.
CountingWalk aa_counting_walk(const Interferometer &u, const ModeConfig &s, const EventLog &log);

// ---------------------------------------------------------------------------
// Thresholded likelihood-ratio test, indistinguishable vs distinguishable.
// ---------------------------------------------------------------------------

struct LrThresholds {
    double k1 = 0.9;
    double k2 = 1.5;

    /// Throws ValidationError unless 0 < k1 < 1 < k2.
    void validate() const;
};

/// Per-event increment to D.
enum class LrOutcome : int {
    strong_distinguishable = -2,
    distinguishable = -1,
    inconclusive = 0,
    indistinguishable = 1,
    strong_indistinguishable = 2,
};

/// Classifies R = p_ind / q_dis:
///
///     R >= k2              +2
///     1/k1 <= R < k2       +1
///     k1 < R < 1/k1         0
///     1/k2 < R <= k1       -1
///     R <= 1/k2            -2
///
/// The ratio is always formed as larger / smaller, so exchanging p_ind and
/// q_dis negates the outcome exactly, boundaries included. Throws
/// ProbabilityError if either probability is not strictly positive.
LrOutcome lr_classify(double p_ind, double q_dis, const LrThresholds &thresholds = {});

struct LrState {
    long long d = 0;
    std::array<std::size_t, 5> tallies{};  // indexed by outcome + 2

    std::size_t count(LrOutcome o) const noexcept { return tallies[static_cast<int>(o) + 2]; }
    std::size_t events() const noexcept;
};

LrState lr_update(LrState state, double p_ind, double q_dis, const LrThresholds &thresholds = {});

/// indistinguishable if d > 0, distinguishable if d < 0, inconclusive at 0.
Verdict lr_verdict_of(long long d);

// ---------------------------------------------------------------------------
// Per-event reports.
// ---------------------------------------------------------------------------

enum class TestKind { aa, lr };

std::string to_string(TestKind t);

struct VerdictRow {
    std::size_t index;
    ModeConfig modes;
    double statistic;      // P for aa, R for lr
    std::string decision;  // per-event label
    long long cumulative;  // C for aa, D for lr
};

struct VerdictReport {
    TestKind test;
    std::vector<VerdictRow> rows;
    Verdict verdict;
    long long final_cumulative = 0;
    std::optional<LrState> lr_state;
};

VerdictReport aa_report(const Interferometer &u, const ModeConfig &s, const EventLog &log);

/// Folds lr_update over the log, scoring each event under model_p
/// (indistinguishable) and model_q (distinguishable).
VerdictReport lr_verdict(const Interferometer &u, const ModeConfig &s, const EventLog &log,
                         const NoCollisionDistribution &model_p, const NoCollisionDistribution &model_q,
                         const LrThresholds &thresholds = {});

/// D increment for each lexicographic rank; std::nullopt where either model
/// assigns zero probability.
std::vector<std::optional<int>> lr_increment_table(const NoCollisionDistribution &model_p,
                                                   const NoCollisionDistribution &model_q,
                                                   const LrThresholds &thresholds = {});

}  // namespace bosonval

#endif
