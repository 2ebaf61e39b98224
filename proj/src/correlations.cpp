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

#include "corrspec/correlations.hpp"

#include <cmath>
#include <optional>
#include <string>

#include "corrspec/estimators.hpp"
#include "corrspec/parallel.hpp"
#include "corrspec/rmt.hpp"

namespace corrspec {

namespace {

void check_pair(int m, ModeIndex i, ModeIndex j) {
    if (i == j) {
        throw InvalidInput("truncated_correlation: i == j is not part of the C-dataset");
    }
    if (i < 0 || j < 0 || i >= m || j >= m) {
        throw InvalidInput("truncated_correlation: mode index out of range");
    }
}

void check_shapes(const UnitaryMatrix& u, std::span<const ModeIndex> modes, const OverlapMatrix& s) {
    const int m = u.dimension();
    if (m < 2) {
        throw InvalidInput("c_dataset: need at least two modes");
    }
    if (s.size() != static_cast<int>(modes.size())) {
        throw InvalidInput("c_dataset: overlap matrix size does not match photon count");
    }
    for (ModeIndex q : modes) {
        if (q < 0 || q >= m) throw InvalidInput("c_dataset: input mode out of range");
    }
}

}  // namespace

double truncated_correlation(const UnitaryMatrix& u,
                             const InputSpec& spec,
                             const OverlapMatrix& s,
                             ModeIndex i,
                             ModeIndex j) {
    if (spec.mode_count() != u.dimension()) {
        throw InvalidInput("truncated_correlation: circuit and input disagree on m");
    }
    const auto q = spec.input_modes();
    check_shapes(u, q, s);
    check_pair(u.dimension(), i, j);

    const int n = spec.photon_count();
    Complex interference = 0.0;
    for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
            if (k == l) continue;
            interference += s(k, l) * u(q[k], i) * u(q[l], j) * std::conj(u(q[l], i)) * std::conj(u(q[k], j));
        }
    }
    Complex single = 0.0;
    for (int k = 0; k < n; ++k) {
        single += u(q[k], i) * u(q[k], j) * std::conj(u(q[k], i)) * std::conj(u(q[k], j));
    }
    const Complex c = interference - single;
    if (std::abs(c.imag()) > kImaginaryResidueTolerance) {
        throw NumericalInconsistency("truncated_correlation: imaginary residue " + std::to_string(c.imag()));
    }
    return c.real();
}

CDataset c_dataset_reference(const UnitaryMatrix& u, const InputSpec& spec, const OverlapMatrix& s) {
    const int m = u.dimension();
    std::vector<double> values;
    values.reserve(CDataset::pair_count(m));
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            values.push_back(truncated_correlation(u, spec, s, i, j));
        }
    }
    return CDataset(m, std::move(values));
}

CDataset c_dataset(const UnitaryMatrix& u,
                   std::span<const ModeIndex> input_modes,
                   const OverlapMatrix& s,
                   int workers) {
    check_shapes(u, input_modes, s);
    const int m = u.dimension();
    const int n = static_cast<int>(input_modes.size());
    if (workers <= 0) workers = worker_count();

    // Sub-rows of the photon-carrying input modes, n x m.
    ComplexMatrix rows(n, m);
    for (int k = 0; k < n; ++k) rows.row(k) = u.matrix().row(input_modes[k]);
    const Eigen::MatrixXd& overlap = s.matrix();

    std::vector<double> values(CDataset::pair_count(m));
#pragma omp parallel num_threads(workers)
    {
        std::vector<Complex> x(static_cast<std::size_t>(n));
#pragma omp for schedule(dynamic, 1)
        for (int i = 0; i < m - 1; ++i) {
            std::size_t out = CDataset::pair_index(m, i, i + 1);
            for (int j = i + 1; j < m; ++j, ++out) {
                double diag = 0.0;
                for (int k = 0; k < n; ++k) {
                    x[k] = rows(k, i) * std::conj(rows(k, j));
                    diag += std::norm(x[k]);
                }
                double cross = 0.0;
                for (int k = 0; k < n; ++k) {
                    for (int l = k + 1; l < n; ++l) {
                        cross += overlap(k, l) * (x[k] * std::conj(x[l])).real();
                    }
                }
                values[out] = 2.0 * cross - diag;
            }
        }
    }
    return CDataset(m, std::move(values));
}

CDataset c_dataset(const UnitaryMatrix& u, const InputSpec& spec, const OverlapMatrix& s, int workers) {
    if (spec.mode_count() != u.dimension()) {
        throw InvalidInput("c_dataset: circuit and input disagree on m");
    }
    const auto q = spec.input_modes();
    return c_dataset(u, q, s, workers);
}

void SweepResult::resize(std::size_t n) {
    abscissa.resize(n);
    empirical_nm.resize(n);
    stderr_nm.resize(n);
    analytic_nm.resize(n);
    empirical_cv.resize(n);
    stderr_cv.resize(n);
    analytic_cv.resize(n);
}

SweepResult hom_scan(const HomScanConfig& cfg) {
    const int n = cfg.photon_count;
    const int m = cfg.mode_count;
    if (m < 2 || n < 1 || n > m) {
        throw InvalidInput("hom_scan: need 1 <= n <= m and m >= 2");
    }
    if (cfg.trials_per_point < 1) {
        throw InvalidInput("hom_scan: trials per point must be >= 1");
    }
    if (cfg.dt_grid.empty()) {
        throw InvalidInput("hom_scan: empty delta_t grid");
    }
    for (double dt : cfg.dt_grid) {
        if (!(dt >= 0.0)) throw InvalidInput("hom_scan: delta_t values must be non-negative");
    }
    if (!(cfg.spectral_width > 0.0) || !std::isfinite(cfg.spectral_width)) {
        throw InvalidInput("hom_scan: spectral width must be positive");
    }
    std::vector<ModeIndex> modes = cfg.input_modes;
    if (modes.empty()) {
        for (int k = 0; k < n; ++k) modes.push_back(k);
    }
    // Validates the modes.
    (void)InputSpec::from_times(m, std::vector<double>(static_cast<std::size_t>(n), 0.0), cfg.spectral_width, modes);

    const auto grid_size = cfg.dt_grid.size();
    const auto trials = static_cast<std::size_t>(cfg.trials_per_point);
    const int workers = cfg.workers > 0 ? cfg.workers : worker_count();

    std::optional<UnitaryMatrix> shared;
    if (cfg.circuit == CircuitMode::kFourier) {
        shared = fourier_matrix(m);
    } else if (cfg.circuit == CircuitMode::kFixedHaar) {
        auto engine = substream_engine(cfg.seed, 0, stream_tag::kFixedCircuit);
        shared = sample_haar(m, engine);
    }

    // Indexed by g * trials + t; reduced serially below.
    std::vector<double> m1(grid_size * trials);
    std::vector<double> m2(grid_size * trials);

#pragma omp parallel for num_threads(workers) schedule(dynamic, 1)
    for (std::size_t t = 0; t < trials; ++t) {
        const UnitaryMatrix u = shared ? *shared : sample_haar(m, cfg.seed, t);
        auto engine = substream_engine(cfg.seed, t, stream_tag::kTimes);
        std::normal_distribution<double> normal(0.0, 1.0);
        std::vector<double> z(static_cast<std::size_t>(n));
        for (auto& v : z) v = normal(engine);

        std::vector<double> times(static_cast<std::size_t>(n));
        for (std::size_t g = 0; g < grid_size; ++g) {
            const double dt = cfg.dt_grid[g];
            const OverlapMatrix s = std::isinf(dt) ? OverlapMatrix::identity(n) : [&] {
                for (int k = 0; k < n; ++k) times[k] = dt * z[k];
                return overlap_matrix_from_times(times, cfg.spectral_width);
            }();
            const Moments mom = dataset_moments(c_dataset(u, modes, s, 1));
            m1[g * trials + t] = mom.m1;
            m2[g * trials + t] = mom.m2;
        }
    }

    SweepResult out;
    out.resize(grid_size);
    const double nm_scale = static_cast<double>(m) * m / n;
    std::vector<double> nm(trials);
    for (std::size_t g = 0; g < grid_size; ++g) {
        const std::span<const double> g1(m1.data() + g * trials, trials);
        const std::span<const double> g2(m2.data() + g * trials, trials);
        for (std::size_t t = 0; t < trials; ++t) nm[t] = nm_scale * g1[t];
        const Estimate e_nm = mean_estimate(nm);
        const Estimate e_cv = pooled_cv_estimate(g1, g2);
        const double dt = cfg.dt_grid[g];
        const double s = std::isinf(dt) ? dt : (cfg.spectral_width * dt) * (cfg.spectral_width * dt);

        out.abscissa[g] = dt;
        out.empirical_nm[g] = e_nm.value;
        out.stderr_nm[g] = e_nm.std_error;
        out.empirical_cv[g] = e_cv.value;
        out.stderr_cv[g] = e_cv.std_error;
        out.analytic_nm[g] = rmt::nm_random_times(n, m, s);
        out.analytic_cv[g] = rmt::cv_random(n, m, s);
    }
    return out;
}

}  // namespace corrspec
