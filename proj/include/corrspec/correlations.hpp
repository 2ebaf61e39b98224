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

#ifndef CORRSPEC_CORRELATIONS_HPP
#define CORRSPEC_CORRELATIONS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "corrspec/core.hpp"
#include "corrspec/unitaries.hpp"

namespace corrspec {

/// Largest tolerated imaginary part of the interference double sum.
inline constexpr double kImaginaryResidueTolerance = 1e-12;

/// Truncated correlator C_ij = <n_i n_j> - <n_i><n_j> of two output modes,
/// evaluated term by term from the explicit two-photon interference sum:
///
///   C_ij = sum_{k != l} S_kl U_{q_k i} U_{q_l j} U*_{q_l i} U*_{q_k j}
///        - sum_k |U_{q_k i}|^2 |U_{q_k j}|^2
///
/// This is the serial reference path. The double sum is accumulated as a
/// complex number and its imaginary residue is checked against
/// kImaginaryResidueTolerance.
double truncated_correlation(const UnitaryMatrix& u,
                             const InputSpec& spec,
                             const OverlapMatrix& s,
                             ModeIndex i,
                             ModeIndex j);

/// All m(m-1)/2 correlators, one truncated_correlation call per pair.
/// Serial; kept as the reference for c_dataset.
CDataset c_dataset_reference(const UnitaryMatrix& u, const InputSpec& spec, const OverlapMatrix& s);

/// All m(m-1)/2 correlators via the OpenMP kernel.
///
/// Per pair, with x_k = U_{q_k i} U*_{q_k j},
///   C_ij = 2 sum_{k<l} S_kl Re(x_k x*_l) - sum_k |x_k|^2,
/// which is O(n^2) per pair and real by construction. `workers` <= 0 means
/// worker_count(). The result does not depend on the team size.
CDataset c_dataset(const UnitaryMatrix& u,
                   std::span<const ModeIndex> input_modes,
                   const OverlapMatrix& s,
                   int workers = 0);

CDataset c_dataset(const UnitaryMatrix& u, const InputSpec& spec, const OverlapMatrix& s, int workers = 0);

/// Sweep result; for HOM scans the abscissa is delta_t, for spectroscopy
/// the probe delay.
struct SweepResult {
    std::vector<double> abscissa;
    std::vector<double> empirical_nm;
    std::vector<double> stderr_nm;
    std::vector<double> analytic_nm;
    std::vector<double> empirical_cv;
    std::vector<double> stderr_cv;
    std::vector<double> analytic_cv;

    std::size_t size() const { return abscissa.size(); }
    void resize(std::size_t n);
};
using PredictionCurve = SweepResult;

enum class CircuitMode {
    kFixedHaar,  ///< one Haar circuit for the whole scan
    kFreshHaar,  ///< a new Haar circuit per trial
    kFourier,
};

struct HomScanConfig {
    int photon_count = 6;
    int mode_count = 50;
    double spectral_width = 1.0;
    std::vector<double> dt_grid;  ///< non-negative; +inf means fully distinguishable
    int trials_per_point = 100;
    CircuitMode circuit = CircuitMode::kFixedHaar;
    std::uint64_t seed = 0;
    std::vector<ModeIndex> input_modes;  ///< empty: modes 0..n-1
    int workers = 0;
};

/// Statistical HOM dip. For each delta_t and trial, arrival times are drawn
/// i.i.d. from Normal(0, delta_t^2), the C-dataset is evaluated and NM/CV
/// are averaged over trials.
///
/// Trial t uses the same standard-normal draws and (for fresh-haar) the
/// same circuit at every grid point, scaled by delta_t, so neighbouring
/// grid points are positively correlated. Empirical CV is the pooled
/// estimator (see pooled_cv_estimate). Analytic columns are the
/// random-time RMT predictions.
SweepResult hom_scan(const HomScanConfig& config);

}  // namespace corrspec

#endif
