// Copyright 2026 The corrspec Authors
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

#include "corrspec/parallel.hpp"

#include <charconv>
#include <cstdlib>

#include <omp.h>

namespace corrspec {

std::optional<int> parse_thread_count(std::string_view text) {
    int value = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc() || ptr != last || value < 1) {
        return std::nullopt;
    }
    return value;
}

int worker_count() {
    if (const char* env = std::getenv(kThreadsEnvVar.data())) {
        if (auto n = parse_thread_count(env)) return *n;
    }
    return omp_get_max_threads();
}

std::mt19937_64 substream_engine(std::uint64_t seed, std::uint64_t stream, std::uint64_t tag) {
    auto lo = [](std::uint64_t v) { return static_cast<std::uint32_t>(v & 0xffffffffu); };
    auto hi = [](std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); };
    std::seed_seq seq{lo(seed), hi(seed), lo(stream), hi(stream), lo(tag), hi(tag)};
    return std::mt19937_64(seq);
}

}  // namespace corrspec
