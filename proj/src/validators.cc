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

#include "bosonval/validators.h"

#include <cmath>

#include "bosonval/errors.h"

namespace bosonval {

namespace {

void require_nonempty(const EventLog &log) {
    if (log.events.empty()) {
        throw ValidationError("event log is empty");
    }
}

void require_matching(const Interferometer &u, const ModeConfig &s, const EventLog &log) {
    if (s.ambient_modes() != u.modes()) {
        throw IndexError("input configuration does not match the interferometer's mode count");
    }
    if (log.modes() != u.modes() || log.photons() != s.size()) {
        throw SupportError("event log is for (m, n) = (" + std::to_string(log.modes()) + ", " +
                           std::to_string(log.photons()) + "), expected (" + std::to_string(u.modes()) + ", " +
                           std::to_string(s.size()) + ")");
    }
    log.validate();
}

std::vector<Verdict> decisions_for(const Interferometer &u, const ModeConfig &s, const EventLog &log) {
    require_nonempty(log);
    require_matching(u, s, log);
    std::vector<Verdict> out;
    out.reserve(log.events.size());
    for (const auto &t : log.events) {
        out.push_back(aa_decide_event(u, s, t).verdict);
    }
    return out;
}

std::string outcome_label(LrOutcome o) {
    switch (o) {
        case LrOutcome::strong_distinguishable:
            return "distinguishable-2";
        case LrOutcome::distinguishable:
            return "distinguishable-1";
        case LrOutcome::inconclusive:
            return "inconclusive";
        case LrOutcome::indistinguishable:
            return "indistinguishable+1";
        case LrOutcome::strong_indistinguishable:
            return "indistinguishable+2";
    }
    return "?";
}

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::boson_sampler:
            return "boson-sampler";
        case Verdict::uniform:
            return "uniform";
        case Verdict::indistinguishable:
            return "indistinguishable";
        case Verdict::distinguishable:
            return "distinguishable";
        case Verdict::inconclusive:
            return "inconclusive";
    }
    return "?";
}

std::string to_string(TestKind t) { return t == TestKind::aa ? "aa" : "lr"; }

double aa_threshold(std::size_t n, std::size_t m) {
    const double ratio = static_cast<double>(n) / static_cast<double>(m);
    double out = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        out *= ratio;
    }
    return out;
}

double aa_statistic(const Interferometer &u, const ModeConfig &s, const ModeConfig &t) {
    if (s.size() != t.size() || s.ambient_modes() != u.modes() || t.ambient_modes() != u.modes()) {
        throw DimensionError("aa_statistic: configurations do not match the interferometer");
    }
    double p = 1.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < t.size(); ++j) {
            row += std::norm(u(s[i], t[j]));
        }
        p *= row;
    }
    return p;
}

AaEventDecision aa_decide_event(const Interferometer &u, const ModeConfig &s, const ModeConfig &t) {
    const double p = aa_statistic(u, s, t);
    const double threshold = aa_threshold(s.size(), u.modes());
    return {p, threshold, p > threshold ? Verdict::boson_sampler : Verdict::uniform};
}

std::vector<Verdict> aa_decision_table(const Interferometer &u, const ModeConfig &s) {
    const auto support = enumerate_no_collision(u.modes(), s.size());
    std::vector<Verdict> table;
    table.reserve(support.size());
    for (const auto &t : support) {
        table.push_back(aa_decide_event(u, s, t).verdict);
    }
    return table;
}

Verdict majority_of(std::span<const Verdict> decisions) {
    if (decisions.empty()) {
        throw ValidationError("majority vote over an empty decision list");
    }
    long long balance = 0;
    for (auto d : decisions) {
        balance += d == Verdict::boson_sampler ? 1 : -1;
    }
    return balance > 0 ? Verdict::boson_sampler : Verdict::uniform;
}

CountingWalk counting_walk_of(std::span<const Verdict> decisions) {
    if (decisions.empty()) {
        throw ValidationError("counting walk over an empty decision list");
    }
    CountingWalk walk{{}, Verdict::uniform};
    walk.trace.reserve(decisions.size());
    long long c = 0;
    for (auto d : decisions) {
        c += d == Verdict::boson_sampler ? 1 : -1;
        walk.trace.push_back(c);
    }
    walk.verdict = c > 0 ? Verdict::boson_sampler : Verdict::uniform;
    return walk;
}

Verdict aa_majority(const Interferometer &u, const ModeConfig &s, const EventLog &log) {
    const auto decisions = decisions_for(u, s, log);
    return majority_of(decisions);
}

CountingWalk aa_counting_walk(const Interferometer &u, const ModeConfig &s, const EventLog &log) {
    const auto decisions = decisions_for(u, s, log);
    return counting_walk_of(decisions);
}

void LrThresholds::validate() const {
    if (!(k1 > 0.0 && k1 < 1.0 && k2 > 1.0 && std::isfinite(k2))) {
        throw ValidationError("likelihood-ratio thresholds need 0 < k1 < 1 < k2 (got k1 = " + std::to_string(k1) +
                              ", k2 = " + std::to_string(k2) + ")");
    }
}

LrOutcome lr_classify(double p_ind, double q_dis, const LrThresholds &thresholds) {
    if (!(p_ind > 0.0) || !(q_dis > 0.0)) {
        throw ProbabilityError("likelihood ratio needs positive probabilities under both models (p_ind = " +
                               std::to_string(p_ind) + ", q_dis = " + std::to_string(q_dis) + ")");
    }
    const double inner = 1.0 / thresholds.k1;
    if (p_ind >= q_dis) {
        const double r = p_ind / q_dis;
        if (r >= thresholds.k2) {
            return LrOutcome::strong_indistinguishable;
        }
        return r >= inner ? LrOutcome::indistinguishable : LrOutcome::inconclusive;
    }
    // R < 1: R <= 1/k2 <=> 1/R >= k2 and R <= k1 <=> 1/R >= 1/k1.
    const double r = q_dis / p_ind;
    if (r >= thresholds.k2) {
        return LrOutcome::strong_distinguishable;
    }
    return r >= inner ? LrOutcome::distinguishable : LrOutcome::inconclusive;
}

std::size_t LrState::events() const noexcept {
    std::size_t total = 0;
    for (auto t : tallies) {
        total += t;
    }
    return total;
}

LrState lr_update(LrState state, double p_ind, double q_dis, const LrThresholds &thresholds) {
    const auto outcome = lr_classify(p_ind, q_dis, thresholds);
    state.d += static_cast<int>(outcome);
    ++state.tallies[static_cast<int>(outcome) + 2];
    return state;
}

Verdict lr_verdict_of(long long d) {
    if (d > 0) {
        return Verdict::indistinguishable;
    }
    return d < 0 ? Verdict::distinguishable : Verdict::inconclusive;
}

VerdictReport aa_report(const Interferometer &u, const ModeConfig &s, const EventLog &log) {
    require_nonempty(log);
    require_matching(u, s, log);
    VerdictReport report{TestKind::aa, {}, Verdict::uniform, 0, std::nullopt};
    report.rows.reserve(log.events.size());
    long long c = 0;
    for (std::size_t k = 0; k < log.events.size(); ++k) {
        const auto decision = aa_decide_event(u, s, log.events[k]);
        c += decision.verdict == Verdict::boson_sampler ? 1 : -1;
        report.rows.push_back({k, log.events[k], decision.statistic, to_string(decision.verdict), c});
    }
    report.final_cumulative = c;
    report.verdict = c > 0 ? Verdict::boson_sampler : Verdict::uniform;
    return report;
}

VerdictReport lr_verdict(const Interferometer &u, const ModeConfig &s, const EventLog &log,
                         const NoCollisionDistribution &model_p, const NoCollisionDistribution &model_q,
                         const LrThresholds &thresholds) {
    thresholds.validate();
    require_nonempty(log);
    require_matching(u, s, log);
    for (const auto *model : {&model_p, &model_q}) {
        if (model->modes() != log.modes() || model->photons() != log.photons()) {
            throw SupportError("model distribution support does not match the event log");
        }
    }
    VerdictReport report{TestKind::lr, {}, Verdict::inconclusive, 0, std::nullopt};
    report.rows.reserve(log.events.size());
    LrState state;
    for (std::size_t k = 0; k < log.events.size(); ++k) {
        const auto &t = log.events[k];
        const std::size_t rank = lex_rank(t);
        const double p = model_p.probability(rank);
        const double q = model_q.probability(rank);
        if (p == 0.0 && q == 0.0) {
            throw SupportError("event " + std::to_string(k) + " (" + t.to_string() +
                               ") has zero probability under both models");
        }
        const auto outcome = lr_classify(p, q, thresholds);
        state.d += static_cast<int>(outcome);
        ++state.tallies[static_cast<int>(outcome) + 2];
        report.rows.push_back({k, t, p / q, outcome_label(outcome), state.d});
    }
    report.final_cumulative = state.d;
    report.verdict = lr_verdict_of(state.d);
    report.lr_state = state;
    return report;
}

std::vector<std::optional<int>> lr_increment_table(const NoCollisionDistribution &model_p,
                                                   const NoCollisionDistribution &model_q,
                                                   const LrThresholds &thresholds) {
    thresholds.validate();
    if (model_p.modes() != model_q.modes() || model_p.photons() != model_q.photons()) {
        throw SupportError("model distributions have different supports");
    }
    std::vector<std::optional<int>> table(model_p.support_size());
    for (std::size_t k = 0; k < table.size(); ++k) {
        const double p = model_p.probability(k);
        const double q = model_q.probability(k);
        if (p > 0.0 && q > 0.0) {
            table[k] = static_cast<int>(lr_classify(p, q, thresholds));
        }
    }
    return table;
}

}  // namespace bosonval
