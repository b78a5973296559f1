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

#include <sstream>

#include "bosonval/errors.h"
#include "bosonval/io.h"
#include "test_util.h"

using namespace bosonval;

namespace {

std::string expect_format_error(const std::string &csv, const ModeConfig &input) {
    std::istringstream in(csv);
    try {
        io::read_event_log(in, input, "events.csv");
    } catch (const FormatError &e) {
        return e.what();
    }
    ADD_FAILURE() << "expected FormatError for:\n" << csv;
    return {};
}

}  // namespace

TEST(UnitaryJson, round_trip_is_exact) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto u = haar_unitary(2 + seed, seed);
        const auto text = io::unitary_to_json(u);
        const auto back = io::unitary_from_json(text, "mem");
        EXPECT_EQ(back.matrix(), u.matrix());
        EXPECT_EQ(back.provenance().to_string(), "file(mem)");
        EXPECT_NE(text.find(u.provenance().to_string()), std::string::npos);
    }
}

TEST(UnitaryJson, rejects_malformed_and_non_unitary) {
    EXPECT_THROW(io::unitary_from_json("{", "x"), FormatError);
    EXPECT_THROW(io::unitary_from_json(R"({"modes": 2, "rows": [[[1, 0]]]})", "x"), FormatError);
    EXPECT_THROW(io::unitary_from_json(R"({"modes": 1, "rows": [[[2, 0]]]})", "x"), ValidationError);
    EXPECT_NO_THROW(io::unitary_from_json(R"({"modes": 1, "rows": [[[0, 1]]]})", "x"));
}

TEST(CircuitJson, round_trip_preserves_elements) {
    const auto c = random_phase_network(6, 3, 11);
    const auto back = io::circuit_from_json(io::circuit_to_json(c), 6);
    EXPECT_EQ(max_abs_diff(compose(back).matrix(), compose(c).matrix()), 0.0);
    EXPECT_EQ(back.coupler_count(), c.coupler_count());
}

TEST(CircuitJson, rejects_bad_elements) {
    EXPECT_THROW(io::circuit_from_json(R"([{"kind": "coupler", "modes": [0, 2], "tau": 0.5}])", 4),
                 FormatError);
    EXPECT_THROW(io::circuit_from_json(R"([{"kind": "mirror", "mode": 0}])", 4), FormatError);
    EXPECT_THROW(io::circuit_from_json(R"([{"kind": "coupler", "modes": [0, 1], "tau": 1.5}])", 4),
                 ValidationError);
}

TEST(ParseInput, accepts_mode_lists_and_occupations) {
    EXPECT_EQ(io::parse_input("1 2 3", 5), ModeConfig(5, {1, 2, 3}));
    EXPECT_EQ(io::parse_input("0,1,1,1,0", 5), ModeConfig(5, {1, 2, 3}));
    EXPECT_EQ(io::parse_input("|0,1,1,1,0>", 5), ModeConfig(5, {1, 2, 3}));
    EXPECT_EQ(io::parse_input("|1,0,1⟩", 3), ModeConfig(3, {0, 2}));
    EXPECT_THROW(io::parse_input("0,2,1,0,0", 5), FormatError);
    EXPECT_THROW(io::parse_input("0,1,1", 5), FormatError);
    EXPECT_THROW(io::parse_input("1 x", 5), FormatError);
    EXPECT_THROW(io::parse_input("3 1", 5), ValidationError);
    EXPECT_THROW(io::parse_input("1 5", 5), IndexError);
}

TEST(EventLog, round_trip) {
    const auto u = haar_unitary(5, 1);
    const ModeConfig s(5, {0, 1, 2});
    const auto d = build_distribution(u, s, Source::indistinguishable);
    const auto log = sample_events(d, 50, 9, "haar(1)");
    std::ostringstream out;
    io::write_event_log(out, log);
    std::istringstream in(out.str());
    const auto back = io::read_event_log(in, s, "mem");
    EXPECT_EQ(back.events, log.events);
}

TEST(EventLog, errors_carry_line_numbers) {
    const ModeConfig s(5, {0, 1, 2});
    EXPECT_NE(expect_format_error("index,modes\n0,0 1 2\n1,0 1 9\n", s).find("events.csv:3:"), std::string::npos);
    EXPECT_NE(expect_format_error("index,modes\n0,0 1\n", s).find("events.csv:2:"), std::string::npos);
    EXPECT_NE(expect_format_error("index,modes\n0,2 1 0\n", s).find("events.csv:2:"), std::string::npos);
    EXPECT_NE(expect_format_error("index,modes\n0,0 0 1\n", s).find("events.csv:2:"), std::string::npos);
    expect_format_error("idx,mode\n", s);
    expect_format_error("index,modes\n0;0 1 2\n", s);
}

TEST(Reports, distribution_csv_layout) {
    const auto u = bosonval::testing::balanced_coupler();
    const auto d = build_distribution(u, ModeConfig(2, {0}), Source::indistinguishable);
    std::ostringstream out;
    io::write_distribution(out, d);
    EXPECT_EQ(out.str(), "modes,probability\n0,0.5\n1,0.5\n");
}

TEST(Reports, verdict_report_has_summary_line) {
    const auto u = haar_unitary(5, 3);
    const ModeConfig s(5, {0, 1, 2});
    const auto d = build_distribution(u, s, Source::indistinguishable);
    const auto log = sample_events(d, 20, 4);
    std::ostringstream out;
    io::write_verdict_report(out, lr_verdict(u, s, log, d, build_distribution(u, s, Source::distinguishable)));
    const auto text = out.str();
    EXPECT_EQ(text.rfind("test,index,modes,statistic,decision,cumulative\n", 0), 0u);
    EXPECT_NE(text.find("\n# verdict="), std::string::npos);
    EXPECT_NE(text.find("tallies(+2,+1,0,-1,-2)="), std::string::npos);
    std::ostringstream aa;
    io::write_verdict_report(aa, aa_report(u, s, log));
    EXPECT_EQ(aa.str().find("tallies"), std::string::npos);
}

TEST(Config, json_round_trip) {
    ExperimentConfig cfg;
    cfg.n = 2;
    cfg.m = 6;
    cfg.set_sizes = {5, 50};
    cfg.trials_per_point = 12;
    cfg.unitary_count = 3;
    cfg.master_seed = 99;
    cfg.exclusion_cap = 50;
    cfg.input = ModeConfig(6, {1, 4});
    cfg.lr = {0.8, 2.0};
    const auto back = io::config_from_json(io::config_to_json(cfg));
    EXPECT_EQ(back.n, cfg.n);
    EXPECT_EQ(back.m, cfg.m);
    EXPECT_EQ(back.set_sizes, cfg.set_sizes);
    EXPECT_EQ(back.trials_per_point, cfg.trials_per_point);
    EXPECT_EQ(back.unitary_count, cfg.unitary_count);
    EXPECT_EQ(back.master_seed, cfg.master_seed);
    EXPECT_EQ(back.exclusion_cap, cfg.exclusion_cap);
    EXPECT_EQ(back.input, cfg.input);
    EXPECT_EQ(back.lr.k1, 0.8);
    EXPECT_EQ(back.lr.k2, 2.0);
}

TEST(Config, rejects_unknown_keys_and_bad_values) {
    EXPECT_THROW(io::config_from_json(R"({"photons": 3})"), FormatError);
    EXPECT_THROW(io::config_from_json(R"({"n": "three"})"), FormatError);
    EXPECT_THROW(io::config_from_json("[1]"), FormatError);
    EXPECT_THROW(io::config_from_json(R"({"set_sizes": [10, 5]})"), ValidationError);
    EXPECT_THROW(io::config_from_json(R"({"m": 6, "input": "0 1 2 3"})"), ValidationError);
}
