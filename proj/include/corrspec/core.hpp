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

#ifndef CORRSPEC_CORE_HPP
#define CORRSPEC_CORE_HPP

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "corrspec/error.hpp"

namespace corrspec {

/// Mode labels are 0-based throughout the library. The CLI converts from
/// the 1-based labels used on the command line.
using ModeIndex = int;

/// Absolute tolerance used for PSD and variance checks.
inline constexpr double kVarianceTolerance = 1e-10;

/// Temporal degree of freedom of one photon: a Gaussian wave packet centred
/// at `arrival_time` with spectral width `spectral_width` (> 0).
struct WavePacket {
    double arrival_time = 0.0;
    double spectral_width = 1.0;
};

struct Photon {
    ModeIndex input_mode = 0;
    WavePacket packet;
};

/// An n-photon input into an m-mode circuit.
///
/// Invariants (checked on construction): 1 <= n <= m, input modes are in
/// [0, m) and pairwise distinct, arrival times are finite, and all packets
/// share one positive spectral width.
class InputSpec {
   public:
    InputSpec(int mode_count, std::vector<Photon> photons);

    /// Photons in modes 0..n-1 with the given arrival times.
    static InputSpec from_times(int mode_count, std::span<const double> times, double spectral_width);
    static InputSpec from_times(int mode_count,
                                std::span<const double> times,
                                double spectral_width,
                                std::span<const ModeIndex> input_modes);

    int mode_count() const { return mode_count_; }
    int photon_count() const { return static_cast<int>(photons_.size()); }
    double spectral_width() const { return photons_.front().packet.spectral_width; }
    const std::vector<Photon>& photons() const { return photons_; }

    std::vector<ModeIndex> input_modes() const;
    std::vector<double> arrival_times() const;

   private:
    int mode_count_;
    std::vector<Photon> photons_;
};

/// Real symmetric n x n matrix of squared internal-state overlaps
/// S_kl = |<psi_k|psi_l>|^2 with unit diagonal and entries in [0, 1].
class OverlapMatrix {
   public:
    explicit OverlapMatrix(Eigen::MatrixXd s);

    static OverlapMatrix identity(int n);
    static OverlapMatrix ones(int n);

    int size() const { return static_cast<int>(s_.rows()); }
    double operator()(int k, int l) const { return s_(k, l); }
    const Eigen::MatrixXd& matrix() const { return s_; }

   private:
    Eigen::MatrixXd s_;
};

/// The C-dataset {C_ij : i < j} of one circuit and input. Values are stored
/// row-major over the strict upper triangle.
class CDataset {
   public:
    CDataset(int mode_count, std::vector<double> values);

    int mode_count() const { return mode_count_; }
    std::size_t size() const { return values_.size(); }
    const std::vector<double>& values() const { return values_; }

    /// C_ij for i != j (symmetric access).
    double at(ModeIndex i, ModeIndex j) const;

    static std::size_t pair_count(int mode_count) {
        return static_cast<std::size_t>(mode_count) * static_cast<std::size_t>(mode_count - 1) / 2;
    }
    static std::size_t pair_index(int mode_count, ModeIndex i, ModeIndex j);

   private:
    int mode_count_;
    std::vector<double> values_;
};

struct Moments {
    double m1 = 0.0;  ///< mean of C_ij over i < j
    double m2 = 0.0;  ///< mean of C_ij^2 over i < j
};

/// |<psi_a|psi_b>|^2 = exp(-dw^2 (t_a - t_b)^2 / 2) for equal-width Gaussians.
double gaussian_overlap(const WavePacket& a, const WavePacket& b);

/// Same overlap from a time difference; an infinite difference gives 0.
double gaussian_overlap(double time_difference, double spectral_width);

OverlapMatrix build_overlap_matrix(const InputSpec& spec);

/// Overlap matrix for arbitrary arrival times; infinite or non-finite
/// differences are treated as fully distinguishable.
OverlapMatrix overlap_matrix_from_times(std::span<const double> times, double spectral_width);

Moments dataset_moments(const CDataset& dataset);

/// NM = (m^2 / n) M1.
double normalised_mean(double m1, int photon_count, int mode_count);

/// CV = sqrt(M2 - M1^2) / M1, keeping the sign of M1.
double coefficient_of_variation(double m1, double m2);

}  // namespace corrspec

#endif
