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

#ifndef CORRSPEC_RMT_HPP
#define CORRSPEC_RMT_HPP

#include <span>
#include <vector>

#include "corrspec/core.hpp"

// Haar-averaged predictions for the first two moments of the C-dataset.
//
// "Fixed" variants take explicit arrival times. "Random" variants take
// s = (dw * dt)^2 for i.i.d. Normal(0, dt^2) arrival times; s = +inf is the
// fully distinguishable limit.
namespace corrspec::rmt {

/// -(m/(m+1)) (1 + sum_{k!=l} S_kl / (n (m-1))).
double nm_fixed_times(std::span<const double> times, double spectral_width, int mode_count);

/// Same, for an arbitrary overlap matrix.
double nm_from_overlaps(const OverlapMatrix& s, int mode_count);

/// -(m/(m+1)) (1 + (n-1) / ((m-1) sqrt(1+2s))).
double nm_random_times(int photon_count, int mode_count, double s);

/// E_U(C_ij) = NM * n / m^2.
double expected_correlator(double nm, int photon_count, int mode_count);

/// Overlap sums entering the second moment. Index sets are ordered tuples of
/// pairwise distinct photon labels:
///   a = sum_{k1,k2,l1,l2 distinct} S_{k1 l1} S_{k2 l2}
///   b = sum_{k,l1,l2 distinct}     S_{k l1} S_{k l2}
///   c = sum_{k != l} S_kl^2
///   d = sum_{k != l} S_kl
struct OverlapSums {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;
};

OverlapSums overlap_sums(const OverlapMatrix& s);

/// Averaged sums for random arrival times as used by the random-time second
/// moment: a, b, c scale as 1/(1+2s) and d as 1/sqrt(1+2s). The b and c
/// entries treat the two overlap factors as independent; see
/// oracle::exact_overlap_term_average for the exact Gaussian integrals.
OverlapSums primed_overlap_sums(int photon_count, double s);

/// Number of terms in each of the sums above: n(n-1)(n-2)(n-3), n(n-1)(n-2),
/// n(n-1), n(n-1).
OverlapSums overlap_term_counts(int photon_count);

/// E_U(C_ij^2) for given overlap sums. Rational in m with denominator
/// (m-1) m^2 (m+1) (m+2) (m+3).
double second_moment(int photon_count, int mode_count, const OverlapSums& sums);

double second_moment_fixed(std::span<const double> times, double spectral_width, int mode_count);
double second_moment_random(int photon_count, int mode_count, double s);

/// sqrt(E(C^2) - E(C)^2) / E(C).
double cv_fixed(std::span<const double> times, double spectral_width, int mode_count);
double cv_random(int photon_count, int mode_count, double s);

struct Visibilities {
    double nm = 0.0;
    double cv = 0.0;
};

/// |(X_inf - X_0) / (X_inf + X_0)| for X in {NM, CV}, between the fully
/// distinguishable (dt -> inf) and indistinguishable (dt -> 0) limits.
Visibilities visibilities(int photon_count, int mode_count);

enum class ScalingRule {
    kLinear,     ///< m = 3n
    kQuadratic,  ///< m = 3n^2
};

int scaled_mode_count(ScalingRule rule, int photon_count);

struct ScalingRow {
    int photon_count = 0;
    int mode_count = 0;
    Visibilities v;
};

std::vector<ScalingRow> scaling_curves(int n_min, int n_max, ScalingRule rule);

}  // namespace corrspec::rmt

#endif
