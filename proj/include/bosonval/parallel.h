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

#ifndef BOSONVAL_PARALLEL_H
#define BOSONVAL_PARALLEL_H

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace bosonval {

/// Worker count for parallel_for. Taken from BOSONVAL_THREADS when set to a
/// positive integer, otherwise std::thread::hardware_concurrency().
std::size_t thread_count();

/// Overrides the worker count for this process; 0 restores the default.
void set_thread_count(std::size_t n);

namespace detail {
extern thread_local bool in_parallel_region;
}

/// Calls fn(i) for every i in [0, count). Work units are handed out
/// dynamically, so fn must only write to slots owned by its index. Nested
/// calls run sequentially on the calling worker. The first exception thrown by
/// any unit is rethrown after all workers finish.
template <class Fn>
void parallel_for(std::size_t count, Fn &&fn) {
    const std::size_t workers = std::min(thread_count(), count);
    if (workers <= 1 || detail::in_parallel_region) {
        for (std::size_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto body = [&] {
        detail::in_parallel_region = true;
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next = count;
            }
        }
        detail::in_parallel_region = false;
    };

    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) {
        pool.emplace_back(body);
    }
    body();
    pool.clear();
    if (failure) {
        std::rethrow_exception(failure);
    }
}

}  // namespace bosonval

#endif
