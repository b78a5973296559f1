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

#include "bosonval/parallel.h"

#include <cstdlib>
#include <string>

namespace bosonval {

namespace detail {
thread_local bool in_parallel_region = false;
}

namespace {

std::atomic<std::size_t> override_count{0};

std::size_t default_count() {
    if (const char *env = std::getenv("BOSONVAL_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) {
                return static_cast<std::size_t>(v);
            }
        } catch (const std::exception &) {
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

}  // namespace

std::size_t thread_count() {
    const std::size_t forced = override_count.load();
    return forced != 0 ? forced : default_count();
}

void set_thread_count(std::size_t n) { override_count = n; }

}  // namespace bosonval
