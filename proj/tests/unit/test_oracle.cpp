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
#include <random>

#include <gtest/gtest.h>

#include "corrspec/correlations.hpp"
#include "corrspec/oracle.hpp"
#include "corrspec/parallel.hpp"
#include "corrspec/rmt.hpp"
#include "test_util.hpp"

namespace corrspec {
namespace {

using oracle::GramMatrix;

// Gram matrix of n random unit vectors in C^r.
GramMatrix random_gram(std::mt19937_64& rng, int n, int r) {
    std::normal_distribution<double> normal;
    ComplexMatrix v(n, r);
    for (int k = 0; k < n; ++k) {
        for (int a = 0; a < r; ++a) v(k, a) = Complex(normal(rng), normal(rng));
        v.row(k).normalize();
    }
    ComplexMatrix g = v * v.adjoint();
    for (int k = 0; k < n; ++k) g(k, k) = 1.0;
    return GramMatrix(g);
}

TEST(FockOracle, HongOuMandel) {
    const auto bs = fourier_matrix(2);
    const std::vector<double> same{0.0, 0.0}, far{0.0, 100.0};
    const auto s1 = InputSpec::from_times(2, same, 1.0);
    const auto s2 = InputSpec::from_times(2, far, 1.0);
    EXPECT_NEAR(oracle::fock_correlation(bs, s1, GramMatrix::gaussian(s1), 0, 1), -1.0, 1e-12);
    EXPECT_NEAR(oracle::fock_correlation(bs, s2, GramMatrix::gaussian(s2), 0, 1), -0.5, 1e-12);
}

TEST(FockOracle, MatchesClosedFormOnGaussianInputs) {
    std::mt19937_64 rng(31);
    const std::pair<int, int> sizes[] = {{2, 2}, {2, 3}, {3, 3}, {3, 4}, {3, 5}, {4, 5}};
    for (auto [n, m] : sizes) {
        for (int trial = 0; trial < 5; ++trial) {
            const auto u = sample_haar(m, 600, static_cast<std::uint64_t>(trial * 10 + n * 100 + m));
            const auto spec = InputSpec::from_times(m, testing::normal_times(rng, n, 1.0), 1.0,
                                                    testing::random_modes(rng, n, m));
            const auto g = GramMatrix::gaussian(spec);
            const auto s = g.overlaps();
            const auto state = oracle::fock_output_state(u, spec.input_modes(), oracle::internal_states(g));
            EXPECT_NEAR(oracle::fock_norm(state), 1.0, 1e-12);
            for (int i = 0; i < m; ++i) {
                for (int j = i + 1; j < m; ++j) {
                    EXPECT_NEAR(oracle::fock_correlation(state, i, j), truncated_correlation(u, spec, s, i, j), 1e-10);
                }
            }
        }
    }
}

// C_ij depends on the internal states only through |G|^2, including for
// complex Gram matrices of reduced rank.
TEST(FockOracle, MatchesClosedFormOnComplexGram) {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 3, m = 4;
        const int r = testing::uniform_int(rng, 1, 3);
        const auto g = random_gram(rng, n, r);
        const auto u = sample_haar(m, 700, static_cast<std::uint64_t>(trial));
        const std::vector<ModeIndex> q{0, 2, 3};
        const std::vector<double> t(3, 0.0);
        const auto spec = InputSpec::from_times(m, t, 1.0, q);
        const auto w = oracle::internal_states(g);
        EXPECT_LE(w.cols(), r);
        EXPECT_LE((w.conjugate() * w.transpose() - g.matrix()).cwiseAbs().maxCoeff(), 1e-9);
        const auto state = oracle::fock_output_state(u, q, w);
        for (int i = 0; i < m; ++i) {
            for (int j = i + 1; j < m; ++j) {
                EXPECT_NEAR(oracle::fock_correlation(state, i, j), truncated_correlation(u, spec, g.overlaps(), i, j),
                            1e-10);
            }
        }
    }
}

TEST(FockOracle, InternalBasisIndependence) {
    std::mt19937_64 rng(33);
    const auto g = random_gram(rng, 3, 3);
    const auto w = oracle::internal_states(g);
    auto engine = substream_engine(33, 0);
    const ComplexMatrix v = sample_haar(static_cast<int>(w.cols()), engine).matrix();
    const auto u = sample_haar(4, 800);
    const std::vector<ModeIndex> q{1, 2, 3};
    const auto a = oracle::fock_output_state(u, q, w);
    const auto b = oracle::fock_output_state(u, q, ComplexMatrix(w * v));
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            EXPECT_NEAR(oracle::fock_correlation(a, i, j), oracle::fock_correlation(b, i, j), 1e-12);
        }
    }
}

TEST(FockOracle, TotalNumberVariance) {
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 20; ++trial) {
        const int m = testing::uniform_int(rng, 2, 5);
        const int n = testing::uniform_int(rng, 1, std::min(m, 3));
        const auto spec = InputSpec::from_times(m, testing::normal_times(rng, n, 1.0), 1.0,
                                                testing::random_modes(rng, n, m));
        const auto g = GramMatrix::gaussian(spec);
        const auto state = oracle::fock_output_state(sample_haar(m, 900, static_cast<std::uint64_t>(trial)),
                                                     spec.input_modes(), oracle::internal_states(g));
        EXPECT_LE(std::abs(oracle::fock_total_number_variance(state)), 1e-10);
    }
    EXPECT_EQ(oracle::fock_total_number_variance(oracle::vacuum(3, 1)), 0.0);

    // A superposition of different photon numbers has variance 1/4.
    oracle::FockState mixed;
    mixed.mode_count = 2;
    mixed.internal_dim = 1;
    mixed.basis = {{1, 0}, {1, 1}};
    mixed.amplitudes = {Complex(std::sqrt(0.5), 0), Complex(0, std::sqrt(0.5))};
    EXPECT_NEAR(oracle::fock_total_number_variance(mixed), 0.25, 1e-15);
}

TEST(FockOracle, OccupationBasis) {
    const auto b = oracle::occupation_basis(3, 2);
    ASSERT_EQ(b.size(), 6u);
    EXPECT_TRUE(std::is_sorted(b.begin(), b.end()));
    for (const auto& o : b) EXPECT_EQ(o[0] + o[1] + o[2], 2);
}

TEST(FockOracle, ResourceLimits) {
    const auto u7 = sample_haar(7, 1);
    const std::vector<ModeIndex> q2{0, 1};
    EXPECT_THROW(oracle::fock_output_state(u7, q2, ComplexMatrix::Identity(2, 1)), ResourceLimit);
    const auto u6 = sample_haar(6, 1);
    const std::vector<ModeIndex> q5{0, 1, 2, 3, 4};
    EXPECT_THROW(oracle::fock_output_state(u6, q5, ComplexMatrix::Identity(5, 5)), ResourceLimit);
}

TEST(FockOracle, RejectsInvalidGram) {
    ComplexMatrix g(3, 3);
    g << 1.0, 0.9, 0.9, 0.9, 1.0, -0.9, 0.9, -0.9, 1.0;
    EXPECT_THROW(oracle::internal_states(GramMatrix(g)), InvalidInput);
    ComplexMatrix h = ComplexMatrix::Identity(2, 2);
    h(0, 1) = Complex(0.0, 0.5);
    EXPECT_THROW(GramMatrix{h}, InvalidInput);  // not Hermitian
    h(1, 0) = Complex(0.0, -0.5);
    EXPECT_NO_THROW(oracle::internal_states(GramMatrix(h)));
}

TEST(HaarMonteCarlo, LowOrderMoments) {
    const int m = 3, trials = 20000;
    const auto e2 = oracle::mc_haar_moment({{{0, 0}}, {{0, 0}}}, m, trials, 5);
    EXPECT_NEAR(e2.value.real(), 1.0 / m, 4 * e2.std_error);
    EXPECT_NEAR(e2.value.imag(), 0.0, 1e-15);
    const auto e4 = oracle::mc_haar_moment({{{0, 0}, {0, 0}}, {{0, 0}, {0, 0}}}, m, trials, 5);
    EXPECT_NEAR(e4.value.real(), 2.0 / (m * (m + 1.0)), 4 * e4.std_error);
    // Weingarten: E|U_11 U_22|^2 = 1/(m^2 - 1).
    const auto e22 = oracle::mc_haar_moment({{{0, 0}, {1, 1}}, {{0, 0}, {1, 1}}}, m, trials, 5);
    EXPECT_NEAR(e22.value.real(), 1.0 / (m * m - 1.0), 4 * e22.std_error);
    const auto odd = oracle::mc_haar_moment({{{0, 0}}, {}}, m, trials, 5);
    EXPECT_LE(std::abs(odd.value), 4 * odd.std_error);
    EXPECT_THROW(oracle::mc_haar_moment({{{0, 3}}, {}}, m, 10, 5), InvalidInput);
}

TEST(TimeAverage, OverlapTermsMatchExactIntegrals) {
    using oracle::TimeStatistic;
    for (double s : {0.5, 1.0, 4.0}) {
        const double dt = std::sqrt(s);
        for (auto [stat, n] : {std::pair{TimeStatistic::kOverlapA, 4}, {TimeStatistic::kOverlapB, 3},
                               {TimeStatistic::kOverlapC, 2}, {TimeStatistic::kOverlapD, 2}}) {
            const auto e = oracle::mc_time_average(n, 10, 1.0, dt, 20000, 11, stat);
            EXPECT_NEAR(e.value, oracle::exact_overlap_term_average(stat, s), 4 * e.std_error)
                << "stat=" << static_cast<int>(stat) << " s=" << s;
        }
    }
}

TEST(TimeAverage, MeanCorrelatorMatchesClosedForm) {
    const auto e = oracle::mc_time_average(4, 12, 1.0, 1.0, 3000, 12, oracle::TimeStatistic::kMeanC);
    const double expected = rmt::expected_correlator(rmt::nm_random_times(4, 12, 1.0), 4, 12);
    EXPECT_NEAR(e.value, expected, 4 * e.std_error);
    EXPECT_THROW(oracle::mc_time_average(1, 12, 1.0, 1.0, 10, 1, oracle::TimeStatistic::kOverlapC), InvalidInput);
}

}  // namespace
}  // namespace corrspec
