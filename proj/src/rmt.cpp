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

#include "corrspec/rmt.hpp"

#include <cmath>
#include <limits>

namespace corrspec::rmt {

namespace {

void check_nm(int n, int m) {
    if (n < 1 || m < 2) {
        throw InvalidInput("rmt: need n >= 1 and m >= 2");
    }
}

void check_s(double s) {
    if (!(s >= 0.0)) {
        throw InvalidInput("rmt: s must be non-negative");
    }
}

// 1 / sqrt(1 + 2s), with the s -> inf limit.
double inv_root(double s) { return std::isinf(s) ? 0.0 : 1.0 / std::sqrt(1.0 + 2.0 * s); }

double off_diagonal_sum(const OverlapMatrix& s) {
    double sum = 0.0;
    for (int k = 0; k < s.size(); ++k) {
        for (int l = 0; l < s.size(); ++l) {
            if (k != l) sum += s(k, l);
        }
    }
    return sum;
}

}  // namespace

double nm_from_overlaps(const OverlapMatrix& s, int mode_count) {
    const int n = s.size();
    check_nm(n, mode_count);
    const double m = mode_count;
    return -(m / (m + 1.0)) * (1.0 + off_diagonal_sum(s) / (n * (m - 1.0)));
}

double nm_fixed_times(std::span<const double> times, double spectral_width, int mode_count) {
    if (times.empty()) throw InvalidInput("nm_fixed_times: no photons");
    return nm_from_overlaps(overlap_matrix_from_times(times, spectral_width), mode_count);
}

double nm_random_times(int photon_count, int mode_count, double s) {
    check_nm(photon_count, mode_count);
    check_s(s);
    const double m = mode_count;
    return -(m / (m + 1.0)) * (1.0 + (photon_count - 1.0) * inv_root(s) / (m - 1.0));
}

double expected_correlator(double nm, int photon_count, int mode_count) {
    const double m = mode_count;
    return nm * photon_count / (m * m);
}

OverlapSums overlap_sums(const OverlapMatrix& s) {
    const int n = s.size();
    OverlapSums out;
    for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
            if (k == l) continue;
            out.c += s(k, l) * s(k, l);
            out.d += s(k, l);
        }
    }
    for (int k = 0; k < n; ++k) {
        for (int l1 = 0; l1 < n; ++l1) {
            if (l1 == k) continue;
            for (int l2 = 0; l2 < n; ++l2) {
                if (l2 == k || l2 == l1) continue;
                out.b += s(k, l1) * s(k, l2);
            }
        }
    }
    for (int k1 = 0; k1 < n; ++k1) {
        for (int l1 = 0; l1 < n; ++l1) {
            if (l1 == k1) continue;
            for (int k2 = 0; k2 < n; ++k2) {
                if (k2 == k1 || k2 == l1) continue;
                for (int l2 = 0; l2 < n; ++l2) {
                    if (l2 == k1 || l2 == l1 || l2 == k2) continue;
                    out.a += s(k1, l1) * s(k2, l2);
                }
            }
        }
    }
    return out;
}

OverlapSums overlap_term_counts(int photon_count) {
    const double n = photon_count;
    return {n * (n - 1) * (n - 2) * (n - 3), n * (n - 1) * (n - 2), n * (n - 1), n * (n - 1)};
}

OverlapSums primed_overlap_sums(int photon_count, double s) {
    check_s(s);
    const OverlapSums count = overlap_term_counts(photon_count);
    const double r = inv_root(s);
    const double r2 = r * r;
    return {count.a * r2, count.b * r2, count.c * r2, count.d * r};
}

double second_moment(int photon_count, int mode_count, const OverlapSums& x) {
    check_nm(photon_count, mode_count);
    const double n = photon_count;
    const double m = mode_count;
    const double denom = (m - 1.0) * m * m * (m + 1.0) * (m + 2.0) * (m + 3.0);
    const double overlap_part = 2.0 * x.a - 2.0 * x.b * (m - 5.0) + 2.0 * x.d * (2.0 + 6.0 * m - n + m * n) +
                                x.c * (10.0 + m + m * m);
    const double constant_part = (m - 2.0) * (1.0 + 3.0 * m) * n + 2.0 * n * n + m * n * n + m * m * n * n;
    return (overlap_part + constant_part) / denom;
}

double second_moment_fixed(std::span<const double> times, double spectral_width, int mode_count) {
    if (times.empty()) throw InvalidInput("second_moment_fixed: no photons");
    const auto s = overlap_matrix_from_times(times, spectral_width);
    return second_moment(static_cast<int>(times.size()), mode_count, overlap_sums(s));
}

double second_moment_random(int photon_count, int mode_count, double s) {
    return second_moment(photon_count, mode_count, primed_overlap_sums(photon_count, s));
}

double cv_fixed(std::span<const double> times, double spectral_width, int mode_count) {
    const int n = static_cast<int>(times.size());
    const double mean = expected_correlator(nm_fixed_times(times, spectral_width, mode_count), n, mode_count);
    return coefficient_of_variation(mean, second_moment_fixed(times, spectral_width, mode_count));
}

double cv_random(int photon_count, int mode_count, double s) {
    const double mean =
        expected_correlator(nm_random_times(photon_count, mode_count, s), photon_count, mode_count);
    return coefficient_of_variation(mean, second_moment_random(photon_count, mode_count, s));
}

Visibilities visibilities(int photon_count, int mode_count) {
    if (photon_count < 2 || mode_count < photon_count) {
        throw InvalidInput("visibilities: need n >= 2 and m >= n");
    }
    constexpr double kInf = std::numeric_limits<double>::infinity();
    const double nm_inf = nm_random_times(photon_count, mode_count, kInf);
    const double nm_0 = nm_random_times(photon_count, mode_count, 0.0);
    const double cv_inf = cv_random(photon_count, mode_count, kInf);
    const double cv_0 = cv_random(photon_count, mode_count, 0.0);
    return {std::abs((nm_inf - nm_0) / (nm_inf + nm_0)), std::abs((cv_inf - cv_0) / (cv_inf + cv_0))};
}

int scaled_mode_count(ScalingRule rule, int photon_count) {
    return rule == ScalingRule::kLinear ? 3 * photon_count : 3 * photon_count * photon_count;
}

std::vector<ScalingRow> scaling_curves(int n_min, int n_max, ScalingRule rule) {
    if (n_min < 2 || n_max < n_min) {
        throw InvalidInput("scaling_curves: need 2 <= n_min <= n_max");
    }
    std::vector<ScalingRow> rows;
    for (int n = n_min; n <= n_max; ++n) {
        const int m = scaled_mode_count(rule, n);
        rows.push_back({n, m, visibilities(n, m)});
    }
    return rows;
}

}  // namespace corrspec::rmt
