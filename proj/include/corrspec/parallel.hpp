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

#ifndef CORRSPEC_PARALLEL_HPP
#define CORRSPEC_PARALLEL_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

namespace corrspec {

/// Name of the environment variable that caps the OpenMP team size.
inline constexpr std::string_view kThreadsEnvVar = "CORRSPEC_THREADS";

/// Parses a CORRSPEC_THREADS value. Returns nullopt unless it is a positive
/// decimal integer.
std::optional<int> parse_thread_count(std::string_view text);

/// Team size for parallel kernels: CORRSPEC_THREADS if set and valid,
/// otherwise the OpenMP default.
int worker_count();

/// Engine for substream `stream` of `seed`. The pair (seed, stream) fully
/// determines the sequence, so work items can be drawn in any order or on
/// any thread. `tag` separates independent uses of the same stream index.
std::mt19937_64 substream_engine(std::uint64_t seed, std::uint64_t stream, std::uint64_t tag = 0);

/// Tags used by the library to keep substreams of different purposes apart.
namespace stream_tag {
inline constexpr std::uint64_t kCircuit = 1;
inline constexpr std::uint64_t kTimes = 2;
inline constexpr std::uint64_t kFixedCircuit = 3;
}  // namespace stream_tag

}  // namespace corrspec

#endif
