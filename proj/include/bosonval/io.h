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

#ifndef BOSONVAL_IO_H
#define BOSONVAL_IO_H

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "bosonval/circuit.h"
#include "bosonval/experiment.h"
#include "bosonval/sampling.h"
#include "bosonval/validators.h"

namespace bosonval::io {

// Unitary file: {"modes": m, "rows": [[[re, im], ...], ...]}, row-major.
std::string unitary_to_json(const Interferometer &u);
Interferometer unitary_from_json(std::string_view text, const std::string &origin);

// Circuit file: [{"kind": "coupler", "modes": [j, j+1], "tau": t} | {"kind": "phase", "mode": j, "phi": p}, ...]
std::string circuit_to_json(const Circuit &c);
Circuit circuit_from_json(std::string_view text, std::size_t modes);

/// Accepts a 0-based, space-separated mode list ("2 3 4") or a comma-separated
/// occupation string of length m, optionally written as a ket ("0,0,1,1,1,0,0"
/// or "|0,0,1,1,1,0,0>").
ModeConfig parse_input(std::string_view text, std::size_t m);

/// CSV `index,modes`, one event per line, modes space-separated.
void write_event_log(std::ostream &out, const EventLog &log);
/// Reads the CSV written by write_event_log. FormatError messages carry the line number.
EventLog read_event_log(std::istream &in, const ModeConfig &input, const std::string &origin);

/// CSV `modes,probability`, 17 significant digits.
void write_distribution(std::ostream &out, const NoCollisionDistribution &d);

/// CSV `test,index,modes,statistic,decision,cumulative`, then a `# verdict=...` summary line.
void write_verdict_report(std::ostream &out, const VerdictReport &r);

/// CSV `m,n,unitary_index,set_size,successes,trials,estimate,stderr,converging`.
void write_curves(std::ostream &out, std::size_t m, std::size_t n, const std::vector<SuccessCurve> &curves);
/// CSV `m,n,set_size,mean,sd,band_low,band_high,unitaries`.
void write_ensemble(std::ostream &out, std::size_t m, std::size_t n, const std::vector<EnsemblePoint> &points);
/// CSV `m,n,set_size,successes,trials,estimate,stderr` for pooled counts.
void write_pooled(std::ostream &out, std::size_t m, std::size_t n, const std::vector<SuccessPoint> &points);
/// CSV `m,n,unitary_index,n_min,reached`.
void write_nmin(std::ostream &out, const std::vector<NminResult> &results);

/// JSON experiment config. Unknown keys are rejected; errors name the field.
ExperimentConfig config_from_json(std::string_view text);
std::string config_to_json(const ExperimentConfig &cfg);

std::string read_file(const std::filesystem::path &path);
void write_file(const std::filesystem::path &path, std::string_view contents);

/// Double formatted with 17 significant digits.
std::string format_real(double x);

}  // namespace bosonval::io

#endif
