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

#include "corrspec/spectroscopy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "corrspec/estimators.hpp"
#include "corrspec/fourier.hpp"
#include "corrspec/parallel.hpp"
#include "corrspec/rmt.hpp"

namespace corrspec::spectroscopy {

namespace {

constexpr double kMaxSpacingPerWidth = 0.2;
constexpr double kDefaultSpacingPerWidth = 0.1;
constexpr double kGridMarginPerWidth = 3.0;
constexpr double kBaselineExclusionPerWidth = 3.0;

struct Candidate {
    double x;
    double y;
};

// Vertex of the parabola through three points; falls back to the middle
// point when the points are not convex.
Candidate parabolic_vertex(double x0, double y0, double x1, double y1, double x2, double y2) {
    const double d01 = (y1 - y0) / (x1 - x0);
    const double d12 = (y2 - y1) / (x2 - x1);
    const double curvature = (d12 - d01) / (x2 - x0);
    if (!(curvature > 0.0)) return {x1, y1};
    // y = y1 + b (x - x1) + curvature (x - x1)^2 with b the slope at x1.
    const double b = d01 + curvature * (x1 - x0);
    const double dx = -b / (2.0 * curvature);
    if (std::abs(dx) > std::max(x1 - x0, x2 - x1)) return {x1, y1};
    return {x1 + dx, y1 + b * dx + curvature * dx * dx};
}

double median(std::vector<double> v) {
    const auto mid = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
    double hi = v[mid];
    if (v.size() % 2 == 1) return hi;
    const double lo = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
    return 0.5 * (lo + hi);
}

double baseline(std::span<const double> x, std::span<const double> y, const std::vector<Candidate>& dips,
                double exclusion) {
    std::vector<double> far;
    for (std::size_t p = 0; p < x.size(); ++p) {
        const bool near = std::any_of(dips.begin(), dips.end(),
                                      [&](const Candidate& c) { return std::abs(x[p] - c.x) <= exclusion; });
        if (!near) far.push_back(y[p]);
    }
    if (far.empty()) return *std::max_element(y.begin(), y.end());
    return median(std::move(far));
}

std::vector<Candidate> accept(const std::vector<Candidate>& candidates, double base, double min_depth) {
    std::vector<Candidate> out;
    for (const auto& c : candidates) {
        if (base - c.y >= min_depth) out.push_back(c);
    }
    return out;
}

}  // namespace

std::vector<double> default_probe_grid(std::span<const double> fixed_times, double spectral_width) {
    if (fixed_times.empty() || !(spectral_width > 0.0)) {
        throw InvalidInput("default_probe_grid: need fixed times and a positive spectral width");
    }
    const auto [lo_it, hi_it] = std::minmax_element(fixed_times.begin(), fixed_times.end());
    const double lo = *lo_it - kGridMarginPerWidth / spectral_width;
    const double hi = *hi_it + kGridMarginPerWidth / spectral_width;
    const double h = kDefaultSpacingPerWidth / spectral_width;
    const auto steps = static_cast<std::size_t>(std::ceil((hi - lo) / h - 1e-9));
    std::vector<double> grid(steps + 1);
    for (std::size_t p = 0; p <= steps; ++p) grid[p] = lo + static_cast<double>(p) * h;
    return grid;
}

double resonance_depth(int photon_count, int mode_count) {
    const double m = mode_count;
    return 2.0 * m / ((m + 1.0) * photon_count * (m - 1.0));
}

double default_dip_threshold(int photon_count, int mode_count) {
    return 0.25 * resonance_depth(photon_count, mode_count);
}

PredictionCurve spectroscopy_scan(const SpectroscopyConfig& cfg) {
    const int n = static_cast<int>(cfg.fixed_times.size()) + 1;
    const int m = cfg.mode_count;
    if (cfg.fixed_times.empty()) {
        throw InvalidInput("spectroscopy_scan: need at least one fixed photon");
    }
    if (m < 2 || n > m) {
        throw InvalidInput("spectroscopy_scan: need n <= m and m >= 2");
    }
    if (cfg.probe_grid.empty()) {
        throw InvalidInput("spectroscopy_scan: empty probe grid");
    }
    for (std::size_t p = 0; p < cfg.probe_grid.size(); ++p) {
        if (!std::isfinite(cfg.probe_grid[p]) || (p > 0 && !(cfg.probe_grid[p] > cfg.probe_grid[p - 1]))) {
            throw InvalidInput("spectroscopy_scan: probe grid must be finite and strictly increasing");
        }
    }
    std::vector<ModeIndex> modes = cfg.input_modes;
    if (modes.empty()) {
        modes.resize(static_cast<std::size_t>(n));
        std::iota(modes.begin(), modes.end(), 0);
    }
    std::vector<double> times = cfg.fixed_times;
    times.push_back(cfg.probe_grid.front());
    (void)InputSpec::from_times(m, times, cfg.spectral_width, modes);

    const bool is_fourier = std::holds_alternative<FourierCircuit>(cfg.circuit);
    const int workers = cfg.workers > 0 ? cfg.workers : worker_count();

    std::vector<UnitaryMatrix> circuits;
    if (is_fourier) {
        circuits.push_back(fourier_matrix(m));
    } else {
        const auto& haar = std::get<HaarCircuits>(cfg.circuit);
        if (haar.count < 1) throw InvalidInput("spectroscopy_scan: circuit count must be >= 1");
        circuits.assign(static_cast<std::size_t>(haar.count), UnitaryMatrix(ComplexMatrix::Identity(m, m)));
#pragma omp parallel for num_threads(workers) schedule(static)
        for (int c = 0; c < haar.count; ++c) {
            circuits[static_cast<std::size_t>(c)] = sample_haar(m, haar.seed, static_cast<std::uint64_t>(c));
        }
    }

    const auto grid_size = cfg.probe_grid.size();
    const auto count = circuits.size();
    std::vector<double> m1(grid_size * count);
    std::vector<double> m2(grid_size * count);
    const auto total = static_cast<long long>(grid_size * count);

#pragma omp parallel for num_threads(workers) schedule(dynamic, 4)
    for (long long item = 0; item < total; ++item) {
        const auto g = static_cast<std::size_t>(item) / count;
        const auto c = static_cast<std::size_t>(item) % count;
        std::vector<double> t = cfg.fixed_times;
        t.push_back(cfg.probe_grid[g]);
        const OverlapMatrix s = overlap_matrix_from_times(t, cfg.spectral_width);
        const Moments mom = dataset_moments(c_dataset(circuits[c], modes, s, 1));
        m1[g * count + c] = mom.m1;
        m2[g * count + c] = mom.m2;
    }

    PredictionCurve out;
    out.resize(grid_size);
    const double nm_scale = static_cast<double>(m) * m / n;
    std::vector<double> nm(count);
    for (std::size_t g = 0; g < grid_size; ++g) {
        const std::span<const double> g1(m1.data() + g * count, count);
        const std::span<const double> g2(m2.data() + g * count, count);
        for (std::size_t c = 0; c < count; ++c) nm[c] = nm_scale * g1[c];
        const Estimate e_nm = mean_estimate(nm);
        const Estimate e_cv = pooled_cv_estimate(g1, g2);

        std::vector<double> t = cfg.fixed_times;
        t.push_back(cfg.probe_grid[g]);
        out.abscissa[g] = cfg.probe_grid[g];
        out.empirical_nm[g] = e_nm.value;
        out.stderr_nm[g] = e_nm.std_error;
        out.empirical_cv[g] = e_cv.value;
        out.stderr_cv[g] = e_cv.std_error;
        if (is_fourier) {
            out.analytic_nm[g] = fourier::fourier_nm(t, cfg.spectral_width, m, modes);
            out.analytic_cv[g] = std::numeric_limits<double>::quiet_NaN();
        } else {
            out.analytic_nm[g] = rmt::nm_fixed_times(t, cfg.spectral_width, m);
            out.analytic_cv[g] = rmt::cv_fixed(t, cfg.spectral_width, m);
        }
    }
    return out;
}

DipReport detect_dips(const PredictionCurve& curve, double spectral_width, const DipOptions& options) {
    if (!(spectral_width > 0.0) || !std::isfinite(spectral_width)) {
        throw InvalidInput("detect_dips: spectral width must be positive");
    }
    const std::span<const double> x = curve.abscissa;
    const std::span<const double> y =
        options.column == DipColumn::kAnalytic ? std::span<const double>(curve.analytic_nm)
                                               : std::span<const double>(curve.empirical_nm);
    if (x.size() < 3 || y.size() != x.size()) {
        throw InvalidInput("detect_dips: need at least three points");
    }
    const double max_spacing = kMaxSpacingPerWidth / spectral_width * (1.0 + 1e-9);
    for (std::size_t p = 1; p < x.size(); ++p) {
        const double h = x[p] - x[p - 1];
        if (!(h > 0.0)) throw InvalidInput("detect_dips: abscissa must be strictly increasing");
        if (h > max_spacing) throw InvalidInput("detect_dips: grid coarser than 0.2/dw");
    }

    std::vector<Candidate> candidates;
    for (std::size_t p = 1; p + 1 < x.size(); ++p) {
        if (y[p] < y[p - 1] && y[p] <= y[p + 1]) {
            candidates.push_back(parabolic_vertex(x[p - 1], y[p - 1], x[p], y[p], x[p + 1], y[p + 1]));
        }
    }

    const double exclusion = kBaselineExclusionPerWidth / spectral_width;
    double base = baseline(x, y, candidates, exclusion);
    std::vector<Candidate> accepted = accept(candidates, base, options.min_depth);
    base = baseline(x, y, accepted, exclusion);
    accepted = accept(candidates, base, options.min_depth);

    // Deepest first; suppress anything within one resolution of a kept dip.
    const double resolution = 1.0 / spectral_width;
    std::sort(accepted.begin(), accepted.end(), [](const Candidate& a, const Candidate& b) { return a.y < b.y; });
    std::vector<Candidate> kept;
    for (const auto& c : accepted) {
        const bool shadowed = std::any_of(kept.begin(), kept.end(),
                                          [&](const Candidate& k) { return std::abs(k.x - c.x) < resolution; });
        if (!shadowed) kept.push_back(c);
    }
    std::sort(kept.begin(), kept.end(), [](const Candidate& a, const Candidate& b) { return a.x < b.x; });

    DipReport report;
    report.resolution = resolution;
    for (const auto& c : kept) {
        report.estimated_times.push_back(c.x);
        report.dip_depths.push_back(c.y - base);
    }
    return report;
}

}  // namespace corrspec::spectroscopy
