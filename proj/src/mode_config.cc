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

#include "bosonval/mode_config.h"

#include <charconv>

#include "bosonval/errors.h"

namespace bosonval {

ModeConfig::ModeConfig(std::size_t m, std::vector<std::size_t> modes) : m_(m), modes_(std::move(modes)) {
    if (modes_.empty()) {
        throw ValidationError("mode configuration must contain at least one mode");
    }
    for (std::size_t i = 0; i < modes_.size(); ++i) {
        if (modes_[i] >= m_) {
            throw IndexError("mode " + std::to_string(modes_[i]) + " out of range for m = " + std::to_string(m_));
        }
        if (i > 0 && modes_[i] <= modes_[i - 1]) {
            throw ValidationError("mode configuration must be strictly increasing: " + to_string());
        }
    }
}

ModeConfig ModeConfig::from_occupation(std::span<const int> occupation) {
    std::vector<std::size_t> modes;
    for (std::size_t k = 0; k < occupation.size(); ++k) {
        if (occupation[k] == 1) {
            modes.push_back(k);
        } else if (occupation[k] != 0) {
            throw ValidationError(
                "occupation entries must be 0 or 1 (collision-free input), got " + std::to_string(occupation[k]) +
                " at mode " + std::to_string(k));
        }
    }
    return ModeConfig(occupation.size(), std::move(modes));
}

ModeConfig ModeConfig::centered_block(std::size_t m, std::size_t n) {
    if (n == 0 || n > m) {
        throw ValidationError("centered block needs 1 <= n <= m");
    }
    std::vector<std::size_t> modes(n);
    const std::size_t start = (m - n) / 2;
    for (std::size_t i = 0; i < n; ++i) {
        modes[i] = start + i;
    }
    return ModeConfig(m, std::move(modes));
}

ModeConfig ModeConfig::parse(std::string_view text, std::size_t m) {
    std::vector<std::size_t> modes;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] == ' ') {
            ++pos;
            continue;
        }
        std::size_t value = 0;
        auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc{} || (end != text.data() + text.size() && *end != ' ')) {
            throw FormatError("bad mode list '" + std::string(text) + "'");
        }
        modes.push_back(value);
        pos = static_cast<std::size_t>(end - text.data());
    }
    return ModeConfig(m, std::move(modes));
}

std::vector<int> ModeConfig::occupation() const {
    std::vector<int> occ(m_, 0);
    for (auto k : modes_) {
        occ[k] = 1;
    }
    return occ;
}

std::string ModeConfig::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < modes_.size(); ++i) {
        if (i > 0) {
            out += ' ';
        }
        out += std::to_string(modes_[i]);
    }
    return out;
}

std::uint64_t binomial(std::size_t m, std::size_t n) {
    if (n > m) {
        return 0;
    }
    n = std::min(n, m - n);
    std::uint64_t result = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        // Exact at every step: result * (m - n + i) is divisible by i.
        result = result * (m - n + i) / i;
    }
    return result;
}

std::vector<ModeConfig> enumerate_no_collision(std::size_t m, std::size_t n) {
    if (n == 0 || n > m) {
        throw ValidationError(
            "no-collision outputs need 1 <= n <= m, got n = " + std::to_string(n) + ", m = " + std::to_string(m));
    }
    std::vector<ModeConfig> out;
    out.reserve(binomial(m, n));
    std::vector<std::size_t> c(n);
    for (std::size_t i = 0; i < n; ++i) {
        c[i] = i;
    }
    while (true) {
        out.emplace_back(m, c);
        // Advance the rightmost index that still has room.
        std::size_t i = n;
        while (i > 0 && c[i - 1] == m - n + (i - 1)) {
            --i;
        }
        if (i == 0) {
            break;
        }
        ++c[i - 1];
        for (std::size_t j = i; j < n; ++j) {
            c[j] = c[j - 1] + 1;
        }
    }
    return out;
}

std::size_t lex_rank(const ModeConfig &c) {
    const std::size_t m = c.ambient_modes();
    const std::size_t n = c.size();
    std::size_t rank = 0;
    std::size_t lo = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t v = lo; v < c[i]; ++v) {
            rank += binomial(m - 1 - v, n - 1 - i);
        }
        lo = c[i] + 1;
    }
    return rank;
}

ModeConfig lex_unrank(std::size_t m, std::size_t n, std::size_t rank) {
    if (rank >= binomial(m, n)) {
        throw IndexError("rank " + std::to_string(rank) + " out of range for C(" + std::to_string(m) + "," +
                         std::to_string(n) + ")");
    }
    std::vector<std::size_t> modes(n);
    std::size_t v = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (true) {
            const std::uint64_t block = binomial(m - 1 - v, n - 1 - i);
            if (rank < block) {
                break;
            }
            rank -= block;
            ++v;
        }
        modes[i] = v++;
    }
    return ModeConfig(m, std::move(modes));
}

}  // namespace bosonval
