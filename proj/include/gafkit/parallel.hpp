// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GAFKIT_PARALLEL_HPP
#define GAFKIT_PARALLEL_HPP

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "common.hpp"

namespace gafkit {

/// Run fn(trial) for trial = 0..trials-1 on `workers` threads.  Trials are
/// handed out by an atomic ticket; the caller writes into per-trial slots, so
/// results cannot depend on the schedule.
template <typename F>
void parallel_trials(long trials, int workers, F&& fn) {
    require(trials >= 0, "parallel_trials: negative trial count");
    if (workers <= 1 || trials <= 1) {
        for (long t = 0; t < trials; ++t) fn(t);
        return;
    }
    std::atomic<long> ticket{0};
    std::exception_ptr first_error = nullptr;
    std::mutex err_mutex;
    auto body = [&]() {
        for (;;) {
            long t = ticket.fetch_add(1);
            if (t >= trials) return;
            try {
                fn(t);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    int n = std::min<long>(workers, trials);
    pool.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pool.emplace_back(body);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace gafkit

#endif
