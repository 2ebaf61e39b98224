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

#include "corrspec/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace corrspec {

InputSpec::InputSpec(int mode_count, std::vector<Photon> photons)
    : mode_count_(mode_count), photons_(std::move(photons)) {
    if (mode_count_ < 1) {
        throw InvalidInput("InputSpec: mode count must be positive");
    }
    if (photons_.empty() || static_cast<int>(photons_.size()) > mode_count_) {
        throw InvalidInput("InputSpec: need 1 <= n <= m photons, got n=" + std::to_string(photons_.size()) +
                           ", m=" + std::to_string(mode_count_));
    }
    const double width = photons_.front().packet.spectral_width;
    std::vector<bool> used(static_cast<std::size_t>(mode_count_), false);
    for (const auto& p : photons_) {
        if (p.input_mode < 0 || p.input_mode >= mode_count_) {
            throw InvalidInput("InputSpec: input mode " + std::to_string(p.input_mode) + " out of range");
        }
        if (used[static_cast<std::size_t>(p.input_mode)]) {
            throw InvalidInput("InputSpec: input mode " + std::to_string(p.input_mode) + " used twice");
        }
        used[static_cast<std::size_t>(p.input_mode)] = true;
        if (!(p.packet.spectral_width > 0.0) || !std::isfinite(p.packet.spectral_width)) {
            throw InvalidInput("InputSpec: spectral width must be positive and finite");
        }
        if (p.packet.spectral_width != width) {
            throw InvalidInput("InputSpec: all packets must share one spectral width");
        }
        if (!std::isfinite(p.packet.arrival_time)) {
            throw InvalidInput("InputSpec: arrival times must be finite");
        }
    }
}

InputSpec InputSpec::from_times(int mode_count, std::span<const double> times, double spectral_width) {
    std::vector<ModeIndex> modes(times.size());
    for (std::size_t k = 0; k < modes.size(); ++k) {
        modes[k] = static_cast<ModeIndex>(k);
    }
    return from_times(mode_count, times, spectral_width, modes);
}

InputSpec InputSpec::from_times(int mode_count,
                                std::span<const double> times,
                                double spectral_width,
                                std::span<const ModeIndex> input_modes) {
    if (times.size() != input_modes.size()) {
        throw InvalidInput("InputSpec: times and input modes differ in length");
    }
    std::vector<Photon> photons;
    photons.reserve(times.size());
    for (std::size_t k = 0; k < times.size(); ++k) {
        photons.push_back({input_modes[k], {times[k], spectral_width}});
    }
    return InputSpec(mode_count, std::move(photons));
}

std::vector<ModeIndex> InputSpec::input_modes() const {
    std::vector<ModeIndex> out;
    out.reserve(photons_.size());
    for (const auto& p : photons_) out.push_back(p.input_mode);
    return out;
}

std::vector<double> InputSpec::arrival_times() const {
    std::vector<double> out;
    out.reserve(photons_.size());
    for (const auto& p : photons_) out.push_back(p.packet.arrival_time);
    return out;
}

OverlapMatrix::OverlapMatrix(Eigen::MatrixXd s) : s_(std::move(s)) {
    if (s_.rows() != s_.cols() || s_.rows() == 0) {
        throw InvalidInput("OverlapMatrix: must be square and non-empty");
    }
    const auto n = s_.rows();
    for (Eigen::Index k = 0; k < n; ++k) {
        if (std::abs(s_(k, k) - 1.0) > 1e-12) {
            throw InvalidInput("OverlapMatrix: diagonal must be 1");
        }
        for (Eigen::Index l = 0; l < n; ++l) {
            const double v = s_(k, l);
            if (!(v >= -1e-12 && v <= 1.0 + 1e-12)) {
                throw InvalidInput("OverlapMatrix: entries must lie in [0, 1]");
            }
            if (std::abs(v - s_(l, k)) > 1e-12) {
                throw InvalidInput("OverlapMatrix: must be symmetric");
            }
        }
    }
}

OverlapMatrix OverlapMatrix::identity(int n) { return OverlapMatrix(Eigen::MatrixXd::Identity(n, n)); }

OverlapMatrix OverlapMatrix::ones(int n) { return OverlapMatrix(Eigen::MatrixXd::Ones(n, n)); }

CDataset::CDataset(int mode_count, std::vector<double> values)
    : mode_count_(mode_count), values_(std::move(values)) {
    if (mode_count_ < 2) {
        throw InvalidInput("CDataset: need at least two modes");
    }
    if (values_.size() != pair_count(mode_count_)) {
        throw InvalidInput("CDataset: expected m(m-1)/2 values");
    }
    for (double v : values_) {
        if (!std::isfinite(v)) throw NumericalInconsistency("CDataset: non-finite correlator");
    }
}

std::size_t CDataset::pair_index(int mode_count, ModeIndex i, ModeIndex j) {
    if (i > j) std::swap(i, j);
    if (i == j || i < 0 || j >= mode_count) {
        throw InvalidInput("CDataset: need distinct modes in range");
    }
    const auto m = static_cast<std::size_t>(mode_count);
    const auto a = static_cast<std::size_t>(i);
    const auto b = static_cast<std::size_t>(j);
    // Rows 0..a-1 contribute (m-1) + (m-2) + ... + (m-a) entries.
    return a * m - a * (a + 1) / 2 + (b - a - 1);
}

double CDataset::at(ModeIndex i, ModeIndex j) const { return values_[pair_index(mode_count_, i, j)]; }

double gaussian_overlap(double time_difference, double spectral_width) {
    const double x = spectral_width * time_difference;
    return std::exp(-0.5 * x * x);
}

double gaussian_overlap(const WavePacket& a, const WavePacket& b) {
    if (a.spectral_width != b.spectral_width) {
        throw InvalidInput("gaussian_overlap: packets have different spectral widths");
    }
    return gaussian_overlap(a.arrival_time - b.arrival_time, a.spectral_width);
}

OverlapMatrix build_overlap_matrix(const InputSpec& spec) {
    const auto& ph = spec.photons();
    const int n = spec.photon_count();
    Eigen::MatrixXd s = Eigen::MatrixXd::Identity(n, n);
    for (int k = 0; k < n; ++k) {
        for (int l = k + 1; l < n; ++l) {
            s(k, l) = s(l, k) = gaussian_overlap(ph[k].packet, ph[l].packet);
        }
    }
    return OverlapMatrix(std::move(s));
}

OverlapMatrix overlap_matrix_from_times(std::span<const double> times, double spectral_width) {
    const auto n = static_cast<Eigen::Index>(times.size());
    Eigen::MatrixXd s = Eigen::MatrixXd::Identity(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        for (Eigen::Index l = k + 1; l < n; ++l) {
            const double d = times[k] - times[l];
            s(k, l) = s(l, k) = std::isfinite(d) ? gaussian_overlap(d, spectral_width) : 0.0;
        }
    }
    return OverlapMatrix(std::move(s));
}

Moments dataset_moments(const CDataset& dataset) {
    const auto& v = dataset.values();
    double s1 = 0.0;
    double s2 = 0.0;
    for (double c : v) {
        s1 += c;
        s2 += c * c;
    }
    const double count = static_cast<double>(v.size());
    return {s1 / count, s2 / count};
}

double normalised_mean(double m1, int photon_count, int mode_count) {
    if (photon_count < 1 || mode_count < 2) {
        throw InvalidInput("normalised_mean: need n >= 1 and m >= 2");
    }
    const double m = mode_count;
    return m * m / photon_count * m1;
}

double coefficient_of_variation(double m1, double m2) {
    if (m1 == 0.0) {
        throw UndefinedStatistic("coefficient_of_variation: mean is zero");
    }
    double var = m2 - m1 * m1;
    if (var < -kVarianceTolerance) {
        throw NumericalInconsistency("coefficient_of_variation: negative variance " + std::to_string(var));
    }
    var = std::max(var, 0.0);
    return std::sqrt(var) / m1;
}

}  // namespace corrspec
