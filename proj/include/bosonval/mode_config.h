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

#ifndef BOSONVAL_MODE_CONFIG_H
#define BOSONVAL_MODE_CONFIG_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bosonval {

/// A set of n distinct, 0-based mode indices out of m, kept strictly
/// increasing. Describes both where photons enter (S) and where they leave (T).
class ModeConfig {
   public:
    ModeConfig(std::size_t m, std::vector<std::size_t> modes);

    /// Modes k with occupation[k] == 1; every entry must be 0 or 1.
    static ModeConfig from_occupation(std::span<const int> occupation);

    /// n consecutive modes starting at (m - n) / 2, e.g. |0,0,1,1,1,0,0> for (7, 3).
    static ModeConfig centered_block(std::size_t m, std::size_t n);

    /// Parses the space-separated form written by to_string(), e.g. "0 3 5".
    static ModeConfig parse(std::string_view text, std::size_t m);

    std::size_t ambient_modes() const noexcept { return m_; }
    std::size_t size() const noexcept { return modes_.size(); }
    std::size_t operator[](std::size_t i) const noexcept { return modes_[i]; }
    std::span<const std::size_t> modes() const noexcept { return modes_; }

    std::vector<int> occupation() const;
    std::string to_string() const;

    bool operator==(const ModeConfig &) const = default;
    auto operator<=>(const ModeConfig &) const = default;

   private:
    std::size_t m_;
    std::vector<std::size_t> modes_;
};

/// C(m, n); zero when n > m.
std::uint64_t binomial(std::size_t m, std::size_t n);

/// All n-subsets of {0..m-1} in lexicographic order.
std::vector<ModeConfig> enumerate_no_collision(std::size_t m, std::size_t n);

/// Position of c within enumerate_no_collision(c.ambient_modes(), c.size()).
std::size_t lex_rank(const ModeConfig &c);

/// Inverse of lex_rank.
ModeConfig lex_unrank(std::size_t m, std::size_t n, std::size_t rank);

}  // namespace bosonval

#endif
