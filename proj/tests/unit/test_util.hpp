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

#ifndef CORRSPEC_TESTS_TEST_UTIL_HPP
#define CORRSPEC_TESTS_TEST_UTIL_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "corrspec/core.hpp"

namespace corrspec::testing {

inline std::vector<double> normal_times(std::mt19937_64& rng, int n, double scale) {
    std::normal_distribution<double> normal(0.0, scale);
    std::vector<double> t(static_cast<std::size_t>(n));
    for (auto& x : t) x = normal(rng);
    return t;
}

/// n distinct modes out of m, in random order.
inline std::vector<ModeIndex> random_modes(std::mt19937_64& rng, int n, int m) {
    std::vector<ModeIndex> all(static_cast<std::size_t>(m));
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(static_cast<std::size_t>(n));
    return all;
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace corrspec::testing

#endif
