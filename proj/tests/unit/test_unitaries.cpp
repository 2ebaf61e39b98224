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
#include <numbers>

#include <gtest/gtest.h>

#include "corrspec/error.hpp"
#include "corrspec/parallel.hpp"
#include "corrspec/unitaries.hpp"

namespace corrspec {
namespace {

TEST(Haar, SingleModeIsAPhase) {
    const auto u = sample_haar(1, 5);
    EXPECT_NEAR(std::abs(u(0, 0)), 1.0, 1e-14);
}

TEST(Haar, DeterministicPerSeedAndSubstream) {
    const auto a = sample_haar(6, 42, 3);
    const auto b = sample_haar(6, 42, 3);
    const auto c = sample_haar(6, 42, 4);
    const auto d = sample_haar(6, 43, 3);
    EXPECT_EQ(a.matrix(), b.matrix());
    EXPECT_NE(a.matrix(), c.matrix());
    EXPECT_NE(a.matrix(), d.matrix());
}

TEST(Haar, UnitarityDefect) {
    for (int m : {2, 7, 20, 50}) {
        for (std::uint64_t s = 0; s < 5; ++s) {
            EXPECT_LE(unitarity_defect(sample_haar(m, 11, s).matrix()), 1e-12) << "m=" << m;
        }
    }
}

TEST(Haar, LowOrderMoments) {
    const int m = 4;
    const int trials = 20000;
    double e2 = 0.0, e4 = 0.0;
    Complex cross = 0.0;
    for (int t = 0; t < trials; ++t) {
        const auto u = sample_haar(m, 7, static_cast<std::uint64_t>(t));
        const double a = std::norm(u(0, 0));
        e2 += a;
        e4 += a * a;
        cross += u(0, 0) * std::conj(u(0, 1));
    }
    e2 /= trials;
    e4 /= trials;
    cross /= static_cast<double>(trials);
    // |U11|^2 is Beta(1, m-1): variance (m-1)/(m^2 (m+1)).
    const double sd2 = std::sqrt((m - 1.0) / (m * m * (m + 1.0)) / trials);
    EXPECT_NEAR(e2, 1.0 / m, 4 * sd2);
    const double mean4 = 2.0 / (m * (m + 1.0));
    const double var4 = 24.0 / (m * (m + 1.0) * (m + 2.0) * (m + 3.0)) - mean4 * mean4;
    EXPECT_NEAR(e4, mean4, 4 * std::sqrt(var4 / trials));
    EXPECT_LE(std::abs(cross), 4 * std::sqrt(1.0 / (m * (m + 1.0)) / trials));
}

TEST(Haar, RejectsNonPositiveDimension) {
    EXPECT_THROW(sample_haar(0, 1), InvalidInput);
    EXPECT_THROW(fourier_matrix(0), InvalidInput);
}

TEST(PhaseFixedQr, DiagonalRealPositiveAndReconstructs) {
    auto rng = substream_engine(9, 0);
    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix z = ginibre(6, rng);
        const auto qr = phase_fixed_qr(z);
        for (int k = 0; k < 6; ++k) {
            EXPECT_GT(qr.r(k, k).real(), 0.0);
            EXPECT_NEAR(qr.r(k, k).imag(), 0.0, 1e-14);
        }
        EXPECT_LE((qr.q * qr.r - z).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_LE(unitarity_defect(qr.q), 1e-12);
    }
}

TEST(Fourier, SmallMatrices) {
    const auto f2 = fourier_matrix(2);
    const double h = std::numbers::sqrt2 / 2;
    EXPECT_NEAR(std::abs(f2(0, 0) - Complex(h, 0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(f2(1, 1) - Complex(-h, 0)), 0.0, 1e-15);

    const auto f4 = fourier_matrix(4);
    const Complex row[] = {{0.5, 0}, {0, 0.5}, {-0.5, 0}, {0, -0.5}};
    for (int k = 0; k < 4; ++k) {
        EXPECT_NEAR(std::abs(f4(1, k) - row[k]), 0.0, 1e-15);
    }
}

TEST(Fourier, UnitaryAndSymmetric) {
    for (int m : {1, 3, 8, 31, 64}) {
        const auto f = fourier_matrix(m);
        EXPECT_LE(unitarity_defect(f.matrix()), 1e-13);
        EXPECT_LE((f.matrix() - f.matrix().transpose()).cwiseAbs().maxCoeff(), 0.0);
    }
}

TEST(UnitaryMatrix, RejectsNonUnitary) {
    ComplexMatrix a = ComplexMatrix::Identity(3, 3);
    a(0, 0) = 1.1;
    EXPECT_THROW(UnitaryMatrix{a}, InvalidInput);
    EXPECT_THROW(UnitaryMatrix{ComplexMatrix::Identity(2, 3)}, InvalidInput);
    EXPECT_EQ(unitarity_defect(ComplexMatrix::Identity(5, 5)), 0.0);
}

}  // namespace
}  // namespace corrspec
