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

#ifndef CORRSPEC_SPECTROSCOPY_HPP
#define CORRSPEC_SPECTROSCOPY_HPP

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "corrspec/correlations.hpp"

namespace corrspec::spectroscopy {

struct HaarCircuits {
    std::uint64_t seed = 0;
    int count = 1;
};
struct FourierCircuit {};
using Circuit = std::variant<HaarCircuits, FourierCircuit>;

/// A probe photon scanned across n-1 photons with fixed injection times.
/// The probe is the last photon; `input_modes` lists all n modes (empty
/// means 0..n-1).
struct SpectroscopyConfig {
    std::vector<double> fixed_times;
    double spectral_width = 1.0;
    std::vector<double> probe_grid;  ///< strictly increasing
    Circuit circuit = HaarCircuits{};
    int mode_count = 30;
    std::vector<ModeIndex> input_modes;
    int workers = 0;
};

/// [min(fixed) - 3/dw, max(fixed) + 3/dw] at spacing 0.1/dw.
std::vector<double> default_probe_grid(std::span<const double> fixed_times, double spectral_width);

/// NM (and CV) versus probe delay. Empirical columns average the same set
/// of circuits at every delay; analytic NM is the fixed-time RMT prediction
/// for Haar circuits and the exact closed form for the Fourier circuit.
/// Analytic CV is the fixed-time RMT value for Haar and NaN for Fourier.
PredictionCurve spectroscopy_scan(const SpectroscopyConfig& config);

/// Depth of one isolated correlation resonance in the Haar NM curve,
/// 2m / ((m+1) n (m-1)).
double resonance_depth(int photon_count, int mode_count);

/// 25% of resonance_depth.
double default_dip_threshold(int photon_count, int mode_count);

enum class DipColumn { kAnalytic, kEmpirical };

struct DipOptions {
    DipColumn column = DipColumn::kAnalytic;
    double min_depth = 0.0;  ///< required depth below baseline
};

struct DipReport {
    std::vector<double> estimated_times;  ///< sorted
    std::vector<double> dip_depths;       ///< value minus baseline, < 0
    double resolution = 0.0;              ///< 1/dw
};

/// Locates dips in one NM column.
///
/// Local minima are refined by a parabola through the minimum and its two
/// neighbours. The baseline is the median of the curve over points farther
/// than 3/dw from every candidate minimum (the curve maximum if no such
/// point exists); it is computed once from all candidates and once more
/// from the accepted ones. Candidates shallower than `min_depth` are
/// dropped, and of two accepted dips closer than 1/dw only the deeper one
/// is kept.
///
/// Throws InvalidInput if the curve has fewer than three points, is not
/// strictly increasing, or is spaced more coarsely than 0.2/dw.
DipReport detect_dips(const PredictionCurve& curve, double spectral_width, const DipOptions& options);

}  // namespace corrspec::spectroscopy

#endif
