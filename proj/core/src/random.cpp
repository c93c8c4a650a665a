/*
   Copyright 2026 The pppkit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "pppkit/random.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace pppkit::random {

RandomStream stream(std::uint64_t seed, std::uint64_t index)
{
    const std::uint64_t a = mix(seed);
    const std::uint64_t b = mix(a ^ mix(index + 0x632BE59BD9B4E019ULL));
    std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                      static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
    return RandomStream(seq);
}

unsigned worker_count()
{
    unsigned n = std::max(1U, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("PPPKIT_THREADS")) {
        try {
            const long cap = std::stol(env);
            if (cap >= 1) {
                n = std::min<unsigned>(n, static_cast<unsigned>(cap));
            }
        } catch (const std::exception&) {
            // ignore malformed values
        }
    }
    return n;
}

void parallel_blocks(std::size_t num_blocks, const std::function<void(std::size_t)>& body)
{
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(worker_count(), num_blocks));
    if (workers <= 1) {
        for (std::size_t b = 0; b < num_blocks; ++b) {
            body(b);
        }
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t b = next++; b < num_blocks; b = next++) {
                try {
                    body(b);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) {
                        failure = std::current_exception();
                    }
                    next = num_blocks;
                }
            }
        });
    }
    pool.clear();
    if (failure) {
        std::rethrow_exception(failure);
    }
}

} // namespace pppkit::random
