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

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>

namespace pppkit {

using RandomStream = std::mt19937_64;

namespace random {

/// SplitMix64 finaliser; used to decorrelate (seed, index) pairs.
constexpr std::uint64_t mix(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Independent stream for replicate/block `index` under master `seed`.
RandomStream stream(std::uint64_t seed, std::uint64_t index);

/// Worker count: PPPKIT_THREADS if set (>= 1), otherwise hardware concurrency.
unsigned worker_count();

/// Runs body(block) for block in [0, num_blocks) across worker threads.
/// Blocks are independent; callers write results into disjoint slots so the
/// outcome does not depend on scheduling.
void parallel_blocks(std::size_t num_blocks, const std::function<void(std::size_t)>& body);

} // namespace random
} // namespace pppkit
