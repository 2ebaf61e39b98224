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

#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "corrspec/rmt.hpp"
#include "corrspec/spectroscopy.hpp"

namespace corrspec {
namespace {

using spectroscopy::DipColumn;
using spectroscopy::DipOptions;

std::vector<double> grid(double lo, double hi, double step) {
    std::vector<double> g;
    const int count = static_cast<int>(std::lround((hi - lo) / step));
    for (int k = 0; k <= count; ++k) g.push_back(lo + k * step);
    return g;
}

spectroscopy::SpectroscopyConfig analytic_config(std::vector<double> fixed, int m) {
    spectroscopy::SpectroscopyConfig cfg;
    cfg.fixed_times = std::move(fixed);
    cfg.mode_count = m;
    cfg.probe_grid = spectroscopy::default_probe_grid(cfg.fixed_times, 1.0);
    cfg.circuit = spectroscopy::HaarCircuits{1, 1};
    return cfg;
}

DipOptions analytic_options(int n, int m) {
    return {DipColumn::kAnalytic, spectroscopy::default_dip_threshold(n, m)};
}

TEST(SpectroscopyScan, TwoPhotonLimits) {
    auto cfg = analytic_config({0.0}, 30);
    cfg.probe_grid = {0.0, 1e3};
    const auto c = spectroscopy::spectroscopy_scan(cfg);
    EXPECT_NEAR(c.analytic_nm[0], -1.001112, 1e-6);
    EXPECT_NEAR(c.analytic_nm[1], -0.967742, 1e-6);
}

TEST(SpectroscopyScan, FarProbeGivesBaseline) {
    const std::vector<double> fixed{0.0, 0.5, 2.0};
    auto cfg = analytic_config(fixed, 12);
    cfg.probe_grid = {-1e3};
    const auto c = spectroscopy::spectroscopy_scan(cfg);
    const double m = 12, n = 4;
    double sum = 0.0;
    for (double a : fixed) {
        for (double b : fixed) {
            if (a != b) sum += gaussian_overlap(a - b, 1.0);
        }
    }
    EXPECT_NEAR(c.analytic_nm[0], -(m / (m + 1)) * (1 + sum / (n * (m - 1))), 1e-14);
}

TEST(SpectroscopyScan, DefaultGrid) {
    const std::vector<double> fixed{1.0, -2.0};
    const auto g = spectroscopy::default_probe_grid(fixed, 2.0);
    EXPECT_NEAR(g.front(), -3.5, 1e-12);
    EXPECT_NEAR(g.back(), 2.5, 1e-12);
    EXPECT_NEAR(g[1] - g[0], 0.05, 1e-12);
}

TEST(SpectroscopyScan, ResonanceDepth) {
    auto cfg = analytic_config({0.0}, 30);
    cfg.probe_grid = {0.0, 1e3};
    const auto c = spectroscopy::spectroscopy_scan(cfg);
    EXPECT_NEAR(c.analytic_nm[0] - c.analytic_nm[1], -spectroscopy::resonance_depth(2, 30), 1e-14);
    EXPECT_DOUBLE_EQ(spectroscopy::default_dip_threshold(2, 30), 0.25 * spectroscopy::resonance_depth(2, 30));
}

TEST(DetectDips, SinglePhoton) {
    const auto cfg = analytic_config({0.0}, 30);
    const auto r = spectroscopy::detect_dips(spectroscopy::spectroscopy_scan(cfg), 1.0, analytic_options(2, 30));
    ASSERT_EQ(r.estimated_times.size(), 1u);
    EXPECT_NEAR(r.estimated_times[0], 0.0, 1e-10);
    EXPECT_LT(r.dip_depths[0], 0.0);
    EXPECT_EQ(r.resolution, 1.0);
}

TEST(DetectDips, WellSeparatedPair) {
    const auto cfg = analytic_config({-5.0, 5.0}, 30);
    const auto r = spectroscopy::detect_dips(spectroscopy::spectroscopy_scan(cfg), 1.0, analytic_options(3, 30));
    ASSERT_EQ(r.estimated_times.size(), 2u);
    EXPECT_NEAR(r.estimated_times[0], -5.0, 0.1);
    EXPECT_NEAR(r.estimated_times[1], 5.0, 0.1);
}

TEST(DetectDips, ClosePairMerges) {
    const auto cfg = analytic_config({0.0, 0.3}, 30);
    const auto r = spectroscopy::detect_dips(spectroscopy::spectroscopy_scan(cfg), 1.0, analytic_options(3, 30));
    ASSERT_EQ(r.estimated_times.size(), 1u);
    EXPECT_NEAR(r.estimated_times[0], 0.15, 0.1);
}

TEST(DetectDips, FlatCurveHasNoDips) {
    PredictionCurve c;
    c.abscissa = grid(0.0, 5.0, 0.1);
    c.analytic_nm.assign(c.abscissa.size(), -1.0);
    EXPECT_TRUE(spectroscopy::detect_dips(c, 1.0, {DipColumn::kAnalytic, 1e-3}).estimated_times.empty());
}

TEST(DetectDips, RejectsCoarseOrShortGrid) {
    auto cfg = analytic_config({0.0}, 30);
    cfg.probe_grid = grid(-3.0, 3.0, 0.25);
    const auto c = spectroscopy::spectroscopy_scan(cfg);
    EXPECT_THROW(spectroscopy::detect_dips(c, 1.0, analytic_options(2, 30)), InvalidInput);
    cfg.probe_grid = {0.0, 0.1};
    EXPECT_THROW(spectroscopy::detect_dips(spectroscopy::spectroscopy_scan(cfg), 1.0, analytic_options(2, 30)),
                 InvalidInput);
}

TEST(DetectDips, TranslationCovariance) {
    const std::vector<double> fixed{-3.0, 0.4, 4.2};
    const auto cfg = analytic_config(fixed, 20);
    const auto base = spectroscopy::detect_dips(spectroscopy::spectroscopy_scan(cfg), 1.0, analytic_options(4, 20));
    ASSERT_EQ(base.estimated_times.size(), 3u);
    for (double shift : {2.5, -7.25}) {
        auto moved = cfg;
        for (auto& t : moved.fixed_times) t += shift;
        for (auto& t : moved.probe_grid) t += shift;
        const auto r = spectroscopy::detect_dips(spectroscopy::spectroscopy_scan(moved), 1.0, analytic_options(4, 20));
        ASSERT_EQ(r.estimated_times.size(), base.estimated_times.size());
        for (std::size_t k = 0; k < r.estimated_times.size(); ++k) {
            EXPECT_NEAR(r.estimated_times[k], base.estimated_times[k] + shift, 1e-10);
        }
    }
}

TEST(SpectroscopyScan, EmpiricalAgreesAwayFromMinima) {
    spectroscopy::SpectroscopyConfig cfg;
    cfg.fixed_times = {-3.0, 3.0};
    cfg.mode_count = 30;
    cfg.probe_grid = grid(-6.0, 6.0, 0.2);
    cfg.circuit = spectroscopy::HaarCircuits{99, 50};
    const auto c = spectroscopy::spectroscopy_scan(cfg);
    for (std::size_t k = 0; k < c.size(); ++k) {
        const double tau = c.abscissa[k];
        if (std::abs(tau - 3.0) < 1.5 || std::abs(tau + 3.0) < 1.5) continue;
        EXPECT_LE(std::abs(c.empirical_nm[k] - c.analytic_nm[k]), 4 * c.stderr_nm[k]) << "tau=" << tau;
    }
    const auto emp = spectroscopy::detect_dips(c, 1.0, {DipColumn::kEmpirical, spectroscopy::default_dip_threshold(3, 30)});
    ASSERT_EQ(emp.estimated_times.size(), 2u);
    EXPECT_NEAR(emp.estimated_times[0], -3.0, 0.5);
    EXPECT_NEAR(emp.estimated_times[1], 3.0, 0.5);
}

TEST(SpectroscopyScan, FourierEmpiricalIsExact) {
    spectroscopy::SpectroscopyConfig cfg;
    cfg.fixed_times = {-1.0, 0.7};
    cfg.mode_count = 7;
    cfg.probe_grid = grid(-3.0, 3.0, 0.5);
    cfg.circuit = spectroscopy::FourierCircuit{};
    const auto c = spectroscopy::spectroscopy_scan(cfg);
    for (std::size_t k = 0; k < c.size(); ++k) {
        EXPECT_NEAR(c.empirical_nm[k], c.analytic_nm[k], 1e-12);
        EXPECT_EQ(c.stderr_nm[k], 0.0);
        EXPECT_TRUE(std::isnan(c.analytic_cv[k]));
    }
}

TEST(SpectroscopyScan, RejectsBadConfig) {
    auto cfg = analytic_config({0.0}, 30);
    cfg.probe_grid = {1.0, 0.0};
    EXPECT_THROW(spectroscopy::spectroscopy_scan(cfg), InvalidInput);
    EXPECT_THROW(analytic_config({}, 30), InvalidInput);
    cfg.fixed_times.clear();
    cfg.probe_grid = {0.0};
    EXPECT_THROW(spectroscopy::spectroscopy_scan(cfg), InvalidInput);
    cfg = analytic_config({0.0, 1.0, 2.0}, 3);
    EXPECT_THROW(spectroscopy::spectroscopy_scan(cfg), InvalidInput);
}

}  // namespace
}  // namespace corrspec
