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

#include <algorithm>
#include <bit>
#include <numeric>

#include "bosonval/errors.h"
#include "bosonval/validators.h"
#include "test_util.h"

using namespace bosonval;
using bosonval::testing::permutation_interferometer;

namespace {

EventLog log_of(const ModeConfig &input, std::vector<ModeConfig> events) {
    return EventLog{input, "test", "unknown", std::nullopt, std::move(events)};
}

// 4x4 Hadamard / 2: every |U_ij|^2 is exactly 1/4.
Interferometer flat_four_mode() {
    std::vector<Complex> e(16);
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            e[r * 4 + c] = (std::popcount(r & c) % 2 ? -0.5 : 0.5);
        }
    }
    return Interferometer(ComplexMatrix(4, 4, e), Provenance::circuit("hadamard"));
}

}  // namespace

TEST(AaStatistic, permutation_gives_one) {
    const auto u = permutation_interferometer({3, 0, 4, 1, 2});
    EXPECT_EQ(aa_statistic(u, ModeConfig(5, {0, 2, 4}), ModeConfig(5, {2, 3, 4})), 1.0);
}

TEST(AaStatistic, matches_direct_row_norms) {
    const auto u = haar_unitary(7, 77);
    const ModeConfig s(7, {2, 3, 4});
    const ModeConfig t(7, {0, 1, 2});
    double expected = 1.0;
    for (std::size_t i : {2, 3, 4}) {
        expected *= std::norm(u(i, 0)) + std::norm(u(i, 1)) + std::norm(u(i, 2));
    }
    EXPECT_DOUBLE_EQ(aa_statistic(u, s, t), expected);
}

TEST(AaStatistic, in_unit_interval_for_unitaries) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto u = haar_unitary(7, seed);
        const auto s = ModeConfig::centered_block(7, 3);
        for (const auto &t : enumerate_no_collision(7, 3)) {
            const double p = aa_statistic(u, s, t);
            EXPECT_GT(p, 0.0);
            EXPECT_LE(p, 1.0 + 1e-15);
        }
    }
}

TEST(AaDecide, thresholds_and_ties) {
    EXPECT_DOUBLE_EQ(aa_threshold(3, 5), 0.216);
    EXPECT_NEAR(aa_threshold(3, 7), 27.0 / 343.0, 1e-16);

    const Interferometer id(ComplexMatrix::identity(2), Provenance::circuit("id"));
    const auto d = aa_decide_event(id, ModeConfig(2, {0}), ModeConfig(2, {0}));
    EXPECT_EQ(d.statistic, 1.0);
    EXPECT_EQ(d.threshold, 0.5);
    EXPECT_EQ(d.verdict, Verdict::boson_sampler);

    // Row sums are exactly n/m = 1/2, so P equals the threshold: a tie goes to uniform.
    const auto flat = flat_four_mode();
    const auto tie = aa_decide_event(flat, ModeConfig(4, {0, 1}), ModeConfig(4, {2, 3}));
    EXPECT_EQ(tie.statistic, tie.threshold);
    EXPECT_EQ(tie.verdict, Verdict::uniform);
}

TEST(AaDecide, flips_exactly_at_threshold) {
    const auto u = haar_unitary(7, 5);
    const auto s = ModeConfig::centered_block(7, 3);
    const double threshold = std::pow(3.0 / 7.0, 3);
    EXPECT_NEAR(threshold, 0.0787172, 1e-7);
    std::size_t above = 0;
    for (const auto &t : enumerate_no_collision(7, 3)) {
        const auto d = aa_decide_event(u, s, t);
        EXPECT_EQ(d.verdict == Verdict::boson_sampler, d.statistic > d.threshold);
        above += d.statistic > threshold;
    }
    // Both verdicts occur for a generic Haar unitary.
    EXPECT_GT(above, 0u);
    EXPECT_LT(above, 35u);
}

TEST(AaDecide, invariant_under_mode_relabeling) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        const auto u = haar_unitary(6, 500 + trial);
        std::vector<std::size_t> in(6), out(6);
        std::iota(in.begin(), in.end(), 0);
        std::iota(out.begin(), out.end(), 0);
        std::shuffle(in.begin(), in.end(), rng);
        std::shuffle(out.begin(), out.end(), rng);
        ComplexMatrix relabeled(6, 6);
        for (std::size_t i = 0; i < 6; ++i) {
            for (std::size_t j = 0; j < 6; ++j) {
                relabeled(in[i], out[j]) = u(i, j);
            }
        }
        const Interferometer v(relabeled, Provenance::circuit("relabeled"));
        auto map = [](const ModeConfig &c, const std::vector<std::size_t> &p) {
            std::vector<std::size_t> modes;
            for (auto k : c.modes()) {
                modes.push_back(p[k]);
            }
            std::sort(modes.begin(), modes.end());
            return ModeConfig(c.ambient_modes(), modes);
        };
        const ModeConfig s(6, {0, 2, 3});
        for (const auto &t : enumerate_no_collision(6, 3)) {
            const auto a = aa_decide_event(u, s, t);
            const auto b = aa_decide_event(v, map(s, in), map(t, out));
            EXPECT_NEAR(a.statistic, b.statistic, 1e-15);
            if (std::abs(a.statistic - a.threshold) > 1e-12) {
                EXPECT_EQ(a.verdict, b.verdict);
            }
        }
    }
}

TEST(AaMajority, examples) {
    using V = Verdict;
    const std::vector<V> bbu{V::boson_sampler, V::boson_sampler, V::uniform};
    const std::vector<V> bu{V::boson_sampler, V::uniform};
    const std::vector<V> uuuu(4, V::uniform);
    EXPECT_EQ(majority_of(bbu), V::boson_sampler);
    EXPECT_EQ(majority_of(bu), V::uniform);
    EXPECT_EQ(majority_of(uuuu), V::uniform);
    EXPECT_THROW(majority_of({}), ValidationError);
}

TEST(AaCountingWalk, examples) {
    using V = Verdict;
    const std::vector<V> bub{V::boson_sampler, V::uniform, V::boson_sampler};
    auto w = counting_walk_of(bub);
    EXPECT_EQ(w.trace, (std::vector<long long>{1, 0, 1}));
    EXPECT_EQ(w.verdict, V::boson_sampler);
    const std::vector<V> uu{V::uniform, V::uniform};
    w = counting_walk_of(uu);
    EXPECT_EQ(w.trace, (std::vector<long long>{-1, -2}));
    EXPECT_EQ(w.verdict, V::uniform);
}

TEST(AaCountingWalk, agrees_with_majority_on_random_logs) {
    std::mt19937_64 rng(4);
    for (int k = 0; k < 2000; ++k) {
        std::vector<Verdict> d(1 + rng() % 40);
        for (auto &v : d) {
            v = rng() & 1 ? Verdict::boson_sampler : Verdict::uniform;
        }
        const auto walk = counting_walk_of(d);
        ASSERT_EQ(walk.verdict, majority_of(d));
        long long prev = 0;
        for (auto c : walk.trace) {
            ASSERT_EQ(std::abs(c - prev), 1);
            prev = c;
        }
    }
}

TEST(AaCountingWalk, on_event_logs) {
    const auto u = permutation_interferometer({3, 0, 4, 1, 2});
    const ModeConfig s(5, {0, 2, 4});
    const ModeConfig hit(5, {2, 3, 4});
    const ModeConfig miss(5, {0, 1, 2});
    const auto log = log_of(s, {hit, miss, hit});
    const auto walk = aa_counting_walk(u, s, log);
    EXPECT_EQ(walk.trace, (std::vector<long long>{1, 0, 1}));
    EXPECT_EQ(aa_majority(u, s, log), Verdict::boson_sampler);
    EXPECT_THROW(aa_majority(u, s, log_of(s, {})), ValidationError);
    EXPECT_THROW(aa_counting_walk(u, s, log_of(s, {})), ValidationError);
    EXPECT_THROW(aa_majority(u, s, log_of(s, {ModeConfig(5, {0, 1})})), SupportError);
}

TEST(LrUpdate, interval_scheme) {
    const LrThresholds thr;
    auto step = [&](double r) { return static_cast<int>(lr_classify(r, 1.0, thr)); };
    EXPECT_EQ(step(1.0), 0);
    EXPECT_EQ(step(2.0), 2);
    EXPECT_EQ(step(1.5), 2);
    EXPECT_EQ(step(1.2), 1);
    EXPECT_EQ(step(1.0 / 0.9), 1);
    EXPECT_EQ(step(1.1), 0);
    EXPECT_EQ(step(0.95), 0);
    EXPECT_EQ(step(0.9), -1);
    EXPECT_EQ(step(0.8), -1);
    EXPECT_EQ(step(0.5), -2);
    // R = 2/3 = 1/k2 sits on the closed -2 side.
    EXPECT_EQ(static_cast<int>(lr_classify(2.0, 3.0, thr)), -2);

    LrState s;
    s = lr_update(s, 1.0, 1.0);
    EXPECT_EQ(s.d, 0);
    s = lr_update(s, 2.0, 1.0);
    s = lr_update(s, 1.2, 1.0);
    s = lr_update(s, 0.5, 1.0);
    EXPECT_EQ(s.d, 1);
    EXPECT_EQ(s.events(), 4u);
    EXPECT_EQ(s.count(LrOutcome::inconclusive), 1u);
}

TEST(LrUpdate, errors) {
    EXPECT_THROW(lr_classify(0.0, 0.5), ProbabilityError);
    EXPECT_THROW(lr_classify(0.5, 0.0), ProbabilityError);
    EXPECT_THROW(lr_classify(-1.0, 0.5), ProbabilityError);
    EXPECT_THROW((LrThresholds{1.0, 1.5}.validate()), ValidationError);
    EXPECT_THROW((LrThresholds{0.9, 1.0}.validate()), ValidationError);
    EXPECT_NO_THROW((LrThresholds{0.5, 3.0}.validate()));
}

TEST(LrUpdate, swap_negates_and_scaling_is_irrelevant) {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> logr(-1.5, 1.5);
    const LrThresholds thr;
    for (int k = 0; k < 20000; ++k) {
        const double q = std::exp(logr(rng));
        const double p = q * std::exp(logr(rng));
        const int fwd = static_cast<int>(lr_classify(p, q, thr));
        ASSERT_EQ(static_cast<int>(lr_classify(q, p, thr)), -fwd);
        ASSERT_EQ(static_cast<int>(lr_classify(p * 0x1p-20, q * 0x1p-20, thr)), fwd);
        const double scale = std::exp(logr(rng));
        const double r = p / q;
        const bool near_edge = std::abs(r - thr.k2) < 1e-9 || std::abs(r - 1.0 / thr.k1) < 1e-9 ||
                               std::abs(r - thr.k1) < 1e-9 || std::abs(r - 1.0 / thr.k2) < 1e-9;
        if (!near_edge) {
            ASSERT_EQ(static_cast<int>(lr_classify(p * scale, q * scale, thr)), fwd);
        }
    }
}

TEST(LrVerdict, same_model_is_inconclusive) {
    const auto u = haar_unitary(7, 8);
    const auto s = ModeConfig::centered_block(7, 3);
    const auto p = build_distribution(u, s, Source::indistinguishable);
    const auto log = sample_events(p, 300, 2);
    const auto report = lr_verdict(u, s, log, p, p);
    EXPECT_EQ(report.final_cumulative, 0);
    EXPECT_EQ(report.verdict, Verdict::inconclusive);
    ASSERT_TRUE(report.lr_state);
    EXPECT_EQ(report.lr_state->count(LrOutcome::inconclusive), 300u);
    EXPECT_EQ(report.lr_state->events(), log.events.size());
}

TEST(LrVerdict, permutation_unitary_is_degenerate) {
    const auto u = permutation_interferometer({3, 0, 4, 1, 2});
    const ModeConfig s(5, {0, 2, 4});
    const auto p = build_distribution(u, s, Source::indistinguishable);
    const auto q = build_distribution(u, s, Source::distinguishable);
    const auto report = lr_verdict(u, s, sample_events(p, 50, 1), p, q);
    EXPECT_EQ(report.final_cumulative, 0);
    EXPECT_EQ(report.verdict, Verdict::inconclusive);
    // Any other outcome has zero probability under both models.
    EXPECT_THROW(lr_verdict(u, s, log_of(s, {ModeConfig(5, {0, 1, 2})}), p, q), SupportError);
}

TEST(LrVerdict, report_is_consistent_with_tallies) {
    const auto u = haar_unitary(7, 31);
    const auto s = ModeConfig::centered_block(7, 3);
    const auto p = build_distribution(u, s, Source::indistinguishable);
    const auto q = build_distribution(u, s, Source::distinguishable);
    const auto report = lr_verdict(u, s, sample_events(q, 400, 9), p, q);
    const auto &st = *report.lr_state;
    const long long d = 2 * static_cast<long long>(st.count(LrOutcome::strong_indistinguishable)) +
                        static_cast<long long>(st.count(LrOutcome::indistinguishable)) -
                        static_cast<long long>(st.count(LrOutcome::distinguishable)) -
                        2 * static_cast<long long>(st.count(LrOutcome::strong_distinguishable));
    EXPECT_EQ(d, report.final_cumulative);
    EXPECT_EQ(st.events(), 400u);
    EXPECT_EQ(report.rows.back().cumulative, d);

    // Swapping the models mirrors the walk.
    const auto mirrored = lr_verdict(u, s, sample_events(q, 400, 9), q, p);
    EXPECT_EQ(mirrored.final_cumulative, -d);
}

TEST(LrVerdict, detects_indistinguishable_photons) {
    const auto u = haar_unitary(7, 2024);
    const auto s = ModeConfig::centered_block(7, 3);
    const auto p = build_distribution(u, s, Source::indistinguishable);
    const auto q = build_distribution(u, s, Source::distinguishable);
    int positive = 0;
    for (int trial = 0; trial < 200; ++trial) {
        positive += lr_verdict(u, s, sample_events(p, 500, 10'000 + trial), p, q).verdict == Verdict::indistinguishable;
    }
    EXPECT_GE(positive, 190);
}
