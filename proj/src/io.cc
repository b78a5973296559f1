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

#include "bosonval/io.h"

#include <fmt/format.h>

#include <algorithm>
#include <fstream>
#include <istream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "bosonval/errors.h"

namespace bosonval::io {

using nlohmann::json;

namespace {

json parse_json(std::string_view text, const std::string &origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw FormatError(origin + ": invalid JSON: " + e.what());
    }
}

template <class T>
T field(const json &obj, const char *name, const std::string &where) {
    if (!obj.is_object() || !obj.contains(name)) {
        throw FormatError(where + ": missing field '" + name + "'");
    }
    try {
        return obj.at(name).get<T>();
    } catch (const json::exception &) {
        throw FormatError(where + ": field '" + name + "' has the wrong type");
    }
}

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

}  // namespace

std::string format_real(double x) { return fmt::format("{:.17g}", x); }

std::string unitary_to_json(const Interferometer &u) {
    json rows = json::array();
    for (std::size_t r = 0; r < u.modes(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < u.modes(); ++c) {
            row.push_back({u(r, c).real(), u(r, c).imag()});
        }
        rows.push_back(std::move(row));
    }
    json doc;
    doc["modes"] = u.modes();
    doc["provenance"] = u.provenance().to_string();
    doc["rows"] = std::move(rows);
    return doc.dump(1) + "\n";
}

Interferometer unitary_from_json(std::string_view text, const std::string &origin) {
    const json doc = parse_json(text, origin);
    const auto m = field<std::size_t>(doc, "modes", origin);
    if (m == 0) {
        throw FormatError(origin + ": 'modes' must be positive");
    }
    const json &rows = doc.contains("rows") ? doc.at("rows") : json();
    if (!rows.is_array() || rows.size() != m) {
        throw FormatError(origin + ": 'rows' must be an array of " + std::to_string(m) + " rows");
    }
    std::vector<Complex> entries;
    entries.reserve(m * m);
    for (std::size_t r = 0; r < m; ++r) {
        const json &row = rows[r];
        if (!row.is_array() || row.size() != m) {
            throw FormatError(origin + ": row " + std::to_string(r) + " must hold " + std::to_string(m) + " entries");
        }
        for (std::size_t c = 0; c < m; ++c) {
            const json &z = row[c];
            if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
                throw FormatError(origin + ": entry (" + std::to_string(r) + "," + std::to_string(c) +
                                  ") must be a [re, im] pair");
            }
            entries.emplace_back(z[0].get<double>(), z[1].get<double>());
        }
    }
    try {
        return Interferometer(ComplexMatrix(m, m, std::move(entries)), Provenance::file(origin));
    } catch (const ValidationError &e) {
        throw ValidationError(origin + ": " + e.what());
    }
}

std::string circuit_to_json(const Circuit &c) {
    json doc = json::array();
    for (const auto &el : c.elements()) {
        if (const auto *cp = std::get_if<Coupler>(&el)) {
            doc.push_back({{"kind", "coupler"}, {"modes", {cp->mode, cp->mode + 1}}, {"tau", cp->tau}});
        } else {
            const auto &ps = std::get<PhaseShift>(el);
            doc.push_back({{"kind", "phase"}, {"mode", ps.mode}, {"phi", ps.phi}});
        }
    }
    return doc.dump(1) + "\n";
}

Circuit circuit_from_json(std::string_view text, std::size_t modes) {
    const json doc = parse_json(text, "circuit");
    if (!doc.is_array()) {
        throw FormatError("circuit: expected an array of element records");
    }
    std::vector<CircuitElement> elements;
    for (std::size_t k = 0; k < doc.size(); ++k) {
        const std::string where = "circuit element " + std::to_string(k);
        const auto kind = field<std::string>(doc[k], "kind", where);
        if (kind == "coupler") {
            const auto pair = field<std::vector<std::size_t>>(doc[k], "modes", where);
            if (pair.size() != 2 || pair[1] != pair[0] + 1) {
                throw FormatError(where + ": coupler 'modes' must be an adjacent pair [j, j+1]");
            }
            elements.emplace_back(Coupler{pair[0], field<double>(doc[k], "tau", where)});
        } else if (kind == "phase") {
            elements.emplace_back(
                PhaseShift{field<std::size_t>(doc[k], "mode", where), field<double>(doc[k], "phi", where)});
        } else {
            throw FormatError(where + ": unknown kind '" + kind + "'");
        }
    }
    return Circuit(modes, std::move(elements));
}

ModeConfig parse_input(std::string_view text, std::size_t m) {
    std::string s = trim(text);
    if (!s.empty() && s.front() == '|') {
        s.erase(0, 1);
        if (!s.empty() && (s.back() == '>')) {
            s.pop_back();
        } else if (s.size() >= 3 && s.compare(s.size() - 3, 3, "⟩") == 0) {
            s.resize(s.size() - 3);
        }
    }
    if (s.find(',') == std::string::npos) {
        return ModeConfig::parse(s, m);
    }
    std::vector<int> occupation;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto t = trim(item);
        if (t != "0" && t != "1") {
            throw FormatError("occupation string entries must be 0 or 1, got '" + t + "'");
        }
        occupation.push_back(t == "1" ? 1 : 0);
    }
    if (occupation.size() != m) {
        throw FormatError("occupation string has " + std::to_string(occupation.size()) + " entries, expected m = " +
                          std::to_string(m));
    }
    return ModeConfig::from_occupation(occupation);
}

void write_event_log(std::ostream &out, const EventLog &log) {
    out << "index,modes\n";
    for (std::size_t k = 0; k < log.events.size(); ++k) {
        out << k << ',' << log.events[k].to_string() << '\n';
    }
}

EventLog read_event_log(std::istream &in, const ModeConfig &input, const std::string &origin) {
    EventLog log{input, "", "unknown", std::nullopt, {}};
    std::string line;
    std::size_t line_no = 0;
    auto fail = [&](const std::string &why) {
        throw FormatError(origin + ":" + std::to_string(line_no) + ": " + why);
    };
    if (!std::getline(in, line)) {
        line_no = 1;
        fail("empty file, expected header 'index,modes'");
    }
    ++line_no;
    if (trim(line) != "index,modes") {
        fail("expected header 'index,modes'");
    }
    while (std::getline(in, line)) {
        ++line_no;
        const auto content = trim(line);
        if (content.empty()) {
            continue;
        }
        const auto comma = content.find(',');
        if (comma == std::string::npos || content.find(',', comma + 1) != std::string::npos) {
            fail("expected two comma-separated fields");
        }
        if (content.substr(0, comma) != std::to_string(log.events.size())) {
            fail("index column out of sequence");
        }
        std::optional<ModeConfig> t;
        try {
            t = ModeConfig::parse(content.substr(comma + 1), input.ambient_modes());
        } catch (const std::exception &e) {
            fail(e.what());
        }
        if (t->size() != input.size()) {
            fail("event has " + std::to_string(t->size()) + " photons, expected " + std::to_string(input.size()));
        }
        log.events.push_back(std::move(*t));
    }
    return log;
}

void write_distribution(std::ostream &out, const NoCollisionDistribution &d) {
    out << "modes,probability\n";
    const auto support = enumerate_no_collision(d.modes(), d.photons());
    for (std::size_t k = 0; k < support.size(); ++k) {
        out << support[k].to_string() << ',' << format_real(d.probability(k)) << '\n';
    }
}

void write_verdict_report(std::ostream &out, const VerdictReport &r) {
    const std::string test = to_string(r.test);
    out << "test,index,modes,statistic,decision,cumulative\n";
    for (const auto &row : r.rows) {
        out << test << ',' << row.index << ',' << row.modes.to_string() << ',' << format_real(row.statistic) << ','
            << row.decision << ',' << row.cumulative << '\n';
    }
    out << "# verdict=" << to_string(r.verdict) << " cumulative=" << r.final_cumulative
        << " events=" << r.rows.size();
    if (r.lr_state) {
        const auto &s = *r.lr_state;
        out << " tallies(+2,+1,0,-1,-2)=" << s.count(LrOutcome::strong_indistinguishable) << ','
            << s.count(LrOutcome::indistinguishable) << ',' << s.count(LrOutcome::inconclusive) << ','
            << s.count(LrOutcome::distinguishable) << ',' << s.count(LrOutcome::strong_distinguishable);
    }
    out << '\n';
}

void write_curves(std::ostream &out, std::size_t m, std::size_t n, const std::vector<SuccessCurve> &curves) {
    out << "m,n,unitary_index,set_size,successes,trials,estimate,stderr,converging\n";
    for (const auto &c : curves) {
        const std::string conv = c.converging ? (*c.converging ? "1" : "0") : "";
        for (const auto &p : c.points) {
            out << fmt::format("{},{},{},{},{},{},{},{},{}\n", m, n, c.unitary_index, p.set_size, p.successes,
                               p.trials, format_real(p.estimate()), format_real(p.standard_error()), conv);
        }
    }
}

void write_ensemble(std::ostream &out, std::size_t m, std::size_t n, const std::vector<EnsemblePoint> &points) {
    out << "m,n,set_size,mean,sd,band_low,band_high,unitaries\n";
    for (const auto &e : points) {
        out << fmt::format("{},{},{},{},{},{},{},{}\n", m, n, e.set_size, format_real(e.mean), format_real(e.sd),
                           format_real(e.band_low), format_real(e.band_high), e.unitaries);
    }
}

void write_pooled(std::ostream &out, std::size_t m, std::size_t n, const std::vector<SuccessPoint> &points) {
    out << "m,n,set_size,successes,trials,estimate,stderr\n";
    for (const auto &p : points) {
        out << fmt::format("{},{},{},{},{},{},{}\n", m, n, p.set_size, p.successes, p.trials,
                           format_real(p.estimate()), format_real(p.standard_error()));
    }
}

void write_nmin(std::ostream &out, const std::vector<NminResult> &results) {
    out << "m,n,unitary_index,n_min,reached\n";
    for (const auto &r : results) {
        out << fmt::format("{},{},{},{},{}\n", r.m, r.n, r.unitary_index, r.n_min ? std::to_string(*r.n_min) : "",
                           r.n_min ? 1 : 0);
    }
}

ExperimentConfig config_from_json(std::string_view text) {
    const json doc = parse_json(text, "config");
    if (!doc.is_object()) {
        throw FormatError("config: expected a JSON object");
    }
    static const std::vector<std::string> known{"n",           "m",         "set_sizes",     "trials",
                                                "unitaries",   "seed",      "exclusion_cap", "success_threshold",
                                                "input",       "k1",        "k2"};
    for (const auto &[key, value] : doc.items()) {
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            throw FormatError("config: unknown field '" + key + "'");
        }
    }
    ExperimentConfig cfg;
    auto get = [&](const char *name, auto &target) {
        if (doc.contains(name)) {
            try {
                target = doc.at(name).get<std::remove_reference_t<decltype(target)>>();
            } catch (const json::exception &) {
                throw FormatError(std::string("config field '") + name + "': wrong type");
            }
        }
    };
    get("n", cfg.n);
    get("m", cfg.m);
    get("set_sizes", cfg.set_sizes);
    get("trials", cfg.trials_per_point);
    get("unitaries", cfg.unitary_count);
    get("seed", cfg.master_seed);
    get("exclusion_cap", cfg.exclusion_cap);
    get("success_threshold", cfg.success_threshold);
    get("k1", cfg.lr.k1);
    get("k2", cfg.lr.k2);
    if (doc.contains("input")) {
        const auto &in = doc.at("input");
        try {
            if (in.is_string()) {
                cfg.input = parse_input(in.get<std::string>(), cfg.m);
            } else {
                cfg.input = ModeConfig(cfg.m, in.get<std::vector<std::size_t>>());
            }
        } catch (const json::exception &) {
            throw FormatError("config field 'input': expected a string or an array of modes");
        } catch (const std::exception &e) {
            throw FormatError(std::string("config field 'input': ") + e.what());
        }
    }
    cfg.validate();
    return cfg;
}

std::string config_to_json(const ExperimentConfig &cfg) {
    json doc;
    doc["n"] = cfg.n;
    doc["m"] = cfg.m;
    doc["set_sizes"] = cfg.set_sizes;
    doc["trials"] = cfg.trials_per_point;
    doc["unitaries"] = cfg.unitary_count;
    doc["seed"] = cfg.master_seed;
    doc["exclusion_cap"] = cfg.exclusion_cap;
    doc["success_threshold"] = cfg.success_threshold;
    const auto input = cfg.input_modes();
    doc["input"] = std::vector<std::size_t>(input.modes().begin(), input.modes().end());
    doc["k1"] = cfg.lr.k1;
    doc["k2"] = cfg.lr.k2;
    return doc.dump(1) + "\n";
}

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FormatError("cannot open '" + path.string() + "' for reading");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path &path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw FormatError("cannot open '" + path.string() + "' for writing");
    }
    out << contents;
    if (!out) {
        throw FormatError("failed writing '" + path.string() + "'");
    }
}

}  // namespace bosonval::io
