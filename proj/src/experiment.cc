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

#include "bosonval/experiment.h"

#include <algorithm>
#include <climits>
#include <cmath>

#include "bosonval/errors.h"
#include "bosonval/parallel.h"
#include "bosonval/random.h"
#include "bosonval/sampling.h"

namespace bosonval {

namespace {

// Stream tags keep the random streams of different roles disjoint.
enum StreamTag : std::uint64_t {
    kHaarStream = 0x4861,
    kBosonDataStream = 0x4253,
    kUniformDataStream = 0x5553,
    kDistinguishableDataStream = 0x4453,
    kLrIndistinguishableStream = 0x4c49,
    kLrDistinguishableStream = 0x4c44,
};

constexpr int kInvalidVote = INT_MIN;

using VoteTable = std::vector<int>;

VoteTable aa_votes(const Interferometer &u, const ModeConfig &s) {
    const auto decisions = aa_decision_table(u, s);
    VoteTable votes(decisions.size());
    std::transform(decisions.begin(), decisions.end(), votes.begin(),
                   [](Verdict v) { return v == Verdict::boson_sampler ? 1 : -1; });
    return votes;
}

VoteTable lr_votes(const NoCollisionDistribution &p, const NoCollisionDistribution &q, const LrThresholds &thr) {
    const auto table = lr_increment_table(p, q, thr);
    VoteTable votes(table.size());
    std::transform(table.begin(), table.end(), votes.begin(),
                   [](const std::optional<int> &v) { return v.value_or(kInvalidVote); });
    return votes;
}

/// Number of trials whose summed votes over `set_size` draws are positive.
std::size_t positive_trials(const OutcomeSampler &sampler, const VoteTable &votes, std::size_t set_size,
                            std::size_t trials, std::uint64_t master, std::uint64_t tag,
                            std::size_t unitary_index) {
    std::vector<unsigned char> positive(trials, 0);
    parallel_for(trials, [&](std::size_t trial) {
        Rng rng(derive_seed(master, {tag, unitary_index, set_size, trial}));
        long long sum = 0;
        for (std::size_t k = 0; k < set_size; ++k) {
            const int v = votes[sampler.draw(rng)];
            if (v == kInvalidVote) {
                throw ProbabilityError("sampled an outcome with zero probability under one of the compared models");
            }
            sum += v;
        }
        positive[trial] = sum > 0 ? 1 : 0;
    });
    return static_cast<std::size_t>(std::count(positive.begin(), positive.end(), 1));
}

std::uint64_t data_stream(Source source) {
    switch (source) {
        case Source::indistinguishable:
            return kBosonDataStream;
        case Source::uniform:
            return kUniformDataStream;
        case Source::distinguishable:
            return kDistinguishableDataStream;
    }
    return 0;
}

struct AaSetup {
    VoteTable votes;
    NoCollisionDistribution data;
    OutcomeSampler sampler;

    AaSetup(const Interferometer &u, const ModeConfig &s, Source source)
        : votes(aa_votes(u, s)), data(build_distribution(u, s, source)), sampler(data) {}
};

SuccessPoint aa_point(const AaSetup &setup, Source source, std::size_t set_size, const ExperimentConfig &cfg,
                      std::size_t unitary_index) {
    return {set_size,
            positive_trials(setup.sampler, setup.votes, set_size, cfg.trials_per_point, cfg.master_seed,
                            data_stream(source), unitary_index),
            cfg.trials_per_point};
}

bool meets(const SuccessPoint &p, double threshold) { return p.estimate() >= threshold; }

std::vector<EnsemblePoint> aggregate(const std::vector<const SuccessCurve *> &curves,
                                     const std::vector<std::size_t> &set_sizes) {
    std::vector<EnsemblePoint> out;
    for (std::size_t j = 0; j < set_sizes.size(); ++j) {
        EnsemblePoint e;
        e.set_size = set_sizes[j];
        e.unitaries = curves.size();
        double sum = 0.0;
        for (const auto *c : curves) {
            sum += c->points[j].estimate();
        }
        e.mean = curves.empty() ? 0.0 : sum / static_cast<double>(curves.size());
        if (curves.size() > 1) {
            double ss = 0.0;
            for (const auto *c : curves) {
                const double d = c->points[j].estimate() - e.mean;
                ss += d * d;
            }
            e.sd = std::sqrt(ss / static_cast<double>(curves.size() - 1));
        }
        e.band_low = std::clamp(e.mean - 1.5 * e.sd, 0.0, 1.0);
        e.band_high = std::clamp(e.mean + 1.5 * e.sd, 0.0, 1.0);
        out.push_back(e);
    }
    return out;
}

}  // namespace

std::vector<std::size_t> default_set_sizes() { return {1, 2, 5, 10, 20, 50, 100, 200, 500, 1000, 2000, 5000}; }

void ExperimentConfig::validate() const {
    auto fail = [](const std::string &field, const std::string &why) {
        throw ValidationError("config field '" + field + "': " + why);
    };
    if (n < 1) {
        fail("n", "must be at least 1");
    }
    if (m < n) {
        fail("m", "must be at least n = " + std::to_string(n));
    }
    if (set_sizes.empty()) {
        fail("set_sizes", "must not be empty");
    }
    for (std::size_t k = 0; k < set_sizes.size(); ++k) {
        if (set_sizes[k] < 1) {
            fail("set_sizes", "entries must be positive");
        }
        if (k > 0 && set_sizes[k] <= set_sizes[k - 1]) {
            fail("set_sizes", "must be strictly ascending");
        }
    }
    if (trials_per_point < 1) {
        fail("trials", "must be at least 1");
    }
    if (unitary_count < 1) {
        fail("unitaries", "must be at least 1");
    }
    if (exclusion_cap < 1) {
        fail("exclusion_cap", "must be at least 1");
    }
    if (!(success_threshold > 0.0 && success_threshold < 1.0)) {
        fail("success_threshold", "must lie strictly between 0 and 1");
    }
    if (input && (input->ambient_modes() != m || input->size() != n)) {
        fail("input", "must place n = " + std::to_string(n) + " photons in m = " + std::to_string(m) + " modes");
    }
    try {
        lr.validate();
    } catch (const ValidationError &e) {
        fail("k1/k2", e.what());
    }
}

ModeConfig ExperimentConfig::input_modes() const { return input ? *input : ModeConfig::centered_block(m, n); }

double SuccessPoint::estimate() const {
    return trials == 0 ? 0.0 : static_cast<double>(successes) / static_cast<double>(trials);
}

double SuccessPoint::standard_error() const {
    if (trials == 0) {
        return 0.0;
    }
    const double p = estimate();
    return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

const SuccessPoint *SuccessCurve::at(std::size_t set_size) const {
    for (const auto &p : points) {
        if (p.set_size == set_size) {
            return &p;
        }
    }
    return nullptr;
}

double EnsembleResult::converging_fraction() const {
    return bs_curves.empty() ? 0.0 : static_cast<double>(converging_count) / static_cast<double>(bs_curves.size());
}

std::uint64_t unitary_seed(std::uint64_t master_seed, std::size_t unitary_index) {
    return derive_seed(master_seed, {kHaarStream, unitary_index});
}

SuccessCurve success_curve(const Interferometer &u, const ModeConfig &s, Source source,
                           const ExperimentConfig &cfg, std::size_t unitary_index) {
    cfg.validate();
    const AaSetup setup(u, s, source);
    SuccessCurve curve{unitary_index, source, {}, std::nullopt};
    for (std::size_t set_size : cfg.set_sizes) {
        curve.points.push_back(aa_point(setup, source, set_size, cfg, unitary_index));
    }
    if (source == Source::indistinguishable) {
        // Streams are keyed by set size, so a cap inside the grid reuses that point.
        const SuccessPoint *cap = curve.at(cfg.exclusion_cap);
        const SuccessPoint at_cap = cap ? *cap : aa_point(setup, source, cfg.exclusion_cap, cfg, unitary_index);
        curve.converging = meets(at_cap, cfg.success_threshold);
    }
    return curve;
}

EnsembleResult haar_ensemble_curve(const ExperimentConfig &cfg) {
    cfg.validate();
    EnsembleResult result;
    result.bs_curves.resize(cfg.unitary_count);
    result.uniform_curves.resize(cfg.unitary_count);
    const ModeConfig s = cfg.input_modes();
    parallel_for(cfg.unitary_count, [&](std::size_t k) {
        const auto u = haar_unitary(cfg.m, unitary_seed(cfg.master_seed, k));
        result.bs_curves[k] = success_curve(u, s, Source::indistinguishable, cfg, k);
        result.uniform_curves[k] = success_curve(u, s, Source::uniform, cfg, k);
        result.uniform_curves[k].converging = result.bs_curves[k].converging;
    });

    std::vector<const SuccessCurve *> converging;
    std::vector<const SuccessCurve *> all_uniform;
    for (std::size_t k = 0; k < cfg.unitary_count; ++k) {
        if (result.bs_curves[k].converging.value_or(false)) {
            converging.push_back(&result.bs_curves[k]);
        }
        all_uniform.push_back(&result.uniform_curves[k]);
    }
    result.converging_count = converging.size();
    if (converging.empty()) {
        throw DegenerateError("no unitary reached the success threshold at the exclusion cap; nothing to average");
    }
    result.bs_ensemble = aggregate(converging, cfg.set_sizes);
    result.uniform_ensemble = aggregate(all_uniform, cfg.set_sizes);
    return result;
}

NminResult nmin_search(const Interferometer &u, const ModeConfig &s, const ExperimentConfig &cfg,
                       std::size_t unitary_index) {
    cfg.validate();
    const AaSetup boson(u, s, Source::indistinguishable);
    const AaSetup uniform(u, s, Source::uniform);
    NminResult result;
    result.n = cfg.n;
    result.m = cfg.m;
    result.unitary_index = unitary_index;
    result.converging =
        meets(aa_point(boson, Source::indistinguishable, cfg.exclusion_cap, cfg, unitary_index), cfg.success_threshold);

    for (std::size_t set_size : cfg.set_sizes) {
        const auto bs = aa_point(boson, Source::indistinguishable, set_size, cfg, unitary_index);
        if (!meets(bs, cfg.success_threshold)) {
            continue;
        }
        const auto un = aa_point(uniform, Source::uniform, set_size, cfg, unitary_index);
        if (un.estimate() <= cfg.uniform_ceiling()) {
            result.n_min = set_size;
            result.bs_success = bs.estimate();
            result.uniform_labeled = un.estimate();
            break;
        }
    }
    return result;
}

NminSummary nmin_haar(const ExperimentConfig &cfg) {
    cfg.validate();
    NminSummary summary;
    summary.per_unitary.resize(cfg.unitary_count);
    const ModeConfig s = cfg.input_modes();
    parallel_for(cfg.unitary_count, [&](std::size_t k) {
        const auto u = haar_unitary(cfg.m, unitary_seed(cfg.master_seed, k));
        summary.per_unitary[k] = nmin_search(u, s, cfg, k);
    });
    double total = 0.0;
    for (const auto &r : summary.per_unitary) {
        if (!r.converging) {
            continue;
        }
        ++summary.converging;
        if (r.n_min) {
            ++summary.reached;
            total += static_cast<double>(*r.n_min);
        }
    }
    if (summary.reached > 0) {
        summary.mean_n_min = total / static_cast<double>(summary.reached);
    }
    return summary;
}

LrCurvePair lr_success_curve(const Interferometer &u, const ModeConfig &s, const ExperimentConfig &cfg,
                             std::size_t unitary_index) {
    cfg.validate();
    const auto p = build_distribution(u, s, Source::indistinguishable);
    const auto q = build_distribution(u, s, Source::distinguishable);
    const auto votes = lr_votes(p, q, cfg.lr);
    const OutcomeSampler p_sampler(p);
    const OutcomeSampler q_sampler(q);

    LrCurvePair pair{{unitary_index, Source::indistinguishable, {}, std::nullopt},
                     {unitary_index, Source::distinguishable, {}, std::nullopt}};
    for (std::size_t set_size : cfg.set_sizes) {
        pair.indistinguishable_data.points.push_back(
            {set_size,
             positive_trials(p_sampler, votes, set_size, cfg.trials_per_point, cfg.master_seed,
                             kLrIndistinguishableStream, unitary_index),
             cfg.trials_per_point});
        pair.distinguishable_data.points.push_back(
            {set_size,
             positive_trials(q_sampler, votes, set_size, cfg.trials_per_point, cfg.master_seed,
                             kLrDistinguishableStream, unitary_index),
             cfg.trials_per_point});
    }
    return pair;
}

LrEnsembleResult lr_haar_curve(const ExperimentConfig &cfg) {
    cfg.validate();
    LrEnsembleResult result;
    result.per_unitary.resize(cfg.unitary_count);
    const ModeConfig s = cfg.input_modes();
    parallel_for(cfg.unitary_count, [&](std::size_t k) {
        const auto u = haar_unitary(cfg.m, unitary_seed(cfg.master_seed, k));
        result.per_unitary[k] = lr_success_curve(u, s, cfg, k);
    });
    for (std::size_t j = 0; j < cfg.set_sizes.size(); ++j) {
        SuccessPoint ind{cfg.set_sizes[j], 0, 0};
        SuccessPoint dis{cfg.set_sizes[j], 0, 0};
        for (const auto &pair : result.per_unitary) {
            ind.successes += pair.indistinguishable_data.points[j].successes;
            ind.trials += pair.indistinguishable_data.points[j].trials;
            dis.successes += pair.distinguishable_data.points[j].successes;
            dis.trials += pair.distinguishable_data.points[j].trials;
        }
        result.pooled_indistinguishable.push_back(ind);
        result.pooled_distinguishable.push_back(dis);
    }
    return result;
}

}  // namespace bosonval
