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

#ifndef BOSONVAL_EXPERIMENT_H
#define BOSONVAL_EXPERIMENT_H

#include <cstdint>
#include <optional>
#include <vector>

#include "bosonval/distribution.h"
#include "bosonval/validators.h"

namespace bosonval {

/// N_set grid used when a config does not name its own.
std::vector<std::size_t> default_set_sizes();

struct ExperimentConfig {
    std::size_t n = 3;
    std::size_t m = 9;
    std::vector<std::size_t> set_sizes = default_set_sizes();
    std::size_t trials_per_point = 1000;
    std::size_t unitary_count = 1;
    std::uint64_t master_seed = 0;
    std::size_t exclusion_cap = 5000;
    double success_threshold = 0.95;
    std::optional<ModeConfig> input;  // centered contiguous block when absent
    LrThresholds lr{};

    /// Throws ValidationError naming the offending field.
    void validate() const;

    ModeConfig input_modes() const;

    /// Largest tolerated rate of uniform data labeled boson-sampler: 1 - success_threshold.
    double uniform_ceiling() const { return 1.0 - success_threshold; }
};

struct SuccessPoint {
    std::size_t set_size = 0;
    std::size_t successes = 0;
    std::size_t trials = 0;

    double estimate() const;
    /// Binomial standard error sqrt(p(1-p)/trials).
    double standard_error() const;
};

struct SuccessCurve {
    std::size_t unitary_index = 0;
    Source source = Source::indistinguishable;
    std::vector<SuccessPoint> points;
    /// For boson-sampler data: success at the exclusion cap reached the threshold.
    std::optional<bool> converging;

    const SuccessPoint *at(std::size_t set_size) const;
};

/// Per-unitary seed of the Haar draw with the given index.
std::uint64_t unitary_seed(std::uint64_t master_seed, std::size_t unitary_index);

/// Fraction of trials in which the row-norm test's majority vote says
/// boson-sampler, for logs drawn from `source` at every configured set size.
/// Indistinguishable-source curves also record convergence at the exclusion cap.
SuccessCurve success_curve(const Interferometer &u, const ModeConfig &s, Source source,
                           const ExperimentConfig &cfg, std::size_t unitary_index = 0);

struct EnsemblePoint {
    std::size_t set_size = 0;
    double mean = 0.0;
    double sd = 0.0;
    double band_low = 0.0;   // mean - 1.5 sd, clipped to [0, 1]
    double band_high = 0.0;  // mean + 1.5 sd, clipped to [0, 1]
    std::size_t unitaries = 0;
};

struct EnsembleResult {
    std::vector<SuccessCurve> bs_curves;
    std::vector<SuccessCurve> uniform_curves;
    std::vector<EnsemblePoint> bs_ensemble;       // converging unitaries only
    std::vector<EnsemblePoint> uniform_ensemble;  // all unitaries
    std::size_t converging_count = 0;

    double converging_fraction() const;
};

/// Draws cfg.unitary_count Haar unitaries and averages their curves. Only
/// converging unitaries enter the boson-sampler average; the uniform-data
/// average uses all of them. Throws DegenerateError if none converge.
EnsembleResult haar_ensemble_curve(const ExperimentConfig &cfg);

struct NminResult {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t unitary_index = 0;
    std::optional<std::size_t> n_min;
    double bs_success = 0.0;        // at n_min when reached
    double uniform_labeled = 0.0;   // at n_min when reached
    bool converging = false;
};

/// First set size (ascending) at which boson-sampler data is recognized in at
/// least success_threshold of trials and uniform data is mislabeled in at most
/// uniform_ceiling() of trials.
NminResult nmin_search(const Interferometer &u, const ModeConfig &s, const ExperimentConfig &cfg,
                       std::size_t unitary_index = 0);

struct NminSummary {
    std::vector<NminResult> per_unitary;
    std::size_t converging = 0;
    std::size_t reached = 0;  // converging unitaries with an N_min
    std::optional<double> mean_n_min;
};

/// nmin_search over cfg.unitary_count Haar unitaries; the mean is taken over
/// converging unitaries that reached an N_min.
NminSummary nmin_haar(const ExperimentConfig &cfg);

struct LrCurvePair {
    SuccessCurve indistinguishable_data;  // fraction with D > 0
    SuccessCurve distinguishable_data;    // fraction with D > 0 (false positives)
};

LrCurvePair lr_success_curve(const Interferometer &u, const ModeConfig &s, const ExperimentConfig &cfg,
                             std::size_t unitary_index = 0);

struct LrEnsembleResult {
    std::vector<LrCurvePair> per_unitary;
    std::vector<SuccessPoint> pooled_indistinguishable;
    std::vector<SuccessPoint> pooled_distinguishable;
};

/// lr_success_curve over cfg.unitary_count Haar unitaries with trial counts pooled.
LrEnsembleResult lr_haar_curve(const ExperimentConfig &cfg);

}  // namespace bosonval

#endif
