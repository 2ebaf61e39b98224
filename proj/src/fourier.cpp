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

#include "corrspec/fourier.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace corrspec::fourier {

namespace {

long long positive_mod(long long a, long long m) { return ((a % m) + m) % m; }

}  // namespace

double fourier_c_ij(const InputSpec& spec, const OverlapMatrix& s, ModeIndex i, ModeIndex j) {
    const int m = spec.mode_count();
    const int n = spec.photon_count();
    if (i == j || i < 0 || j < 0 || i >= m || j >= m) {
        throw InvalidInput("fourier_c_ij: need distinct in-range output modes");
    }
    if (s.size() != n) {
        throw InvalidInput("fourier_c_ij: overlap matrix size does not match photon count");
    }
    const auto q = spec.input_modes();
    const double m2 = static_cast<double>(m) * m;
    double interference = 0.0;
    // (k, l) and (l, k) carry conjugate phases; pair them as 2 cos.
    for (int k = 0; k < n; ++k) {
        for (int l = k + 1; l < n; ++l) {
            const long long r = positive_mod(static_cast<long long>(q[l] - q[k]) * (j - i), m);
            interference += 2.0 * s(k, l) * std::cos(2.0 * std::numbers::pi * static_cast<double>(r) / m);
        }
    }
    return (interference - n) / m2;
}

double fourier_nm(std::span<const double> times,
                  double spectral_width,
                  int mode_count,
                  std::span<const ModeIndex> input_modes) {
    const int n = static_cast<int>(times.size());
    if (n < 1 || mode_count < 2 || n > mode_count) {
        throw InvalidInput("fourier_nm: need 1 <= n <= m and m >= 2");
    }
    if (static_cast<int>(input_modes.size()) != n) {
        throw InvalidInput("fourier_nm: one input mode per photon required");
    }
    for (int k = 0; k < n; ++k) {
        for (int l = k + 1; l < n; ++l) {
            if (positive_mod(input_modes[l] - input_modes[k], mode_count) == 0) {
                throw InvalidInput("fourier_nm: input modes must be distinct modulo m");
            }
        }
    }
    const OverlapMatrix s = overlap_matrix_from_times(times, spectral_width);
    double sum = 0.0;
    for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
            if (k != l) sum += s(k, l);
        }
    }
    return -1.0 - sum / (n * (mode_count - 1.0));
}

double fourier_nm(std::span<const double> times, double spectral_width, int mode_count) {
    std::vector<ModeIndex> modes(times.size());
    for (std::size_t k = 0; k < modes.size(); ++k) modes[k] = static_cast<ModeIndex>(k);
    return fourier_nm(times, spectral_width, mode_count, modes);
}

}  // namespace corrspec::fourier
