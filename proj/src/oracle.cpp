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

#include "corrspec/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "corrspec/correlations.hpp"
#include "corrspec/parallel.hpp"
#include "corrspec/rmt.hpp"

namespace corrspec::oracle {

GramMatrix::GramMatrix(ComplexMatrix g) : g_(std::move(g)) {
    if (g_.rows() != g_.cols() || g_.rows() == 0) {
        throw InvalidInput("GramMatrix: must be square and non-empty");
    }
    for (Eigen::Index k = 0; k < g_.rows(); ++k) {
        if (std::abs(g_(k, k) - 1.0) > 1e-12) {
            throw InvalidInput("GramMatrix: diagonal must be 1");
        }
        for (Eigen::Index l = 0; l < g_.rows(); ++l) {
            if (std::abs(g_(k, l) - std::conj(g_(l, k))) > 1e-12) {
                throw InvalidInput("GramMatrix: must be Hermitian");
            }
        }
    }
}

GramMatrix GramMatrix::gaussian(const InputSpec& spec) {
    const int n = spec.photon_count();
    const double w = spec.spectral_width();
    const auto t = spec.arrival_times();
    ComplexMatrix g(n, n);
    for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
            const double d = w * (t[k] - t[l]);
            g(k, l) = std::exp(-0.25 * d * d);
        }
    }
    return GramMatrix(std::move(g));
}

OverlapMatrix GramMatrix::overlaps() const {
    Eigen::MatrixXd s = g_.cwiseAbs2();
    s.diagonal().setOnes();
    return OverlapMatrix(std::move(s));
}

ComplexMatrix internal_states(const GramMatrix& gram) {
    const ComplexMatrix& g = gram.matrix();
    const Eigen::Index n = g.rows();
    Eigen::LDLT<ComplexMatrix> ldlt(g);
    if (ldlt.info() != Eigen::Success) {
        throw InvalidInput("internal_states: factorisation failed");
    }
    const Eigen::VectorXd d = ldlt.vectorD().real();
    for (Eigen::Index a = 0; a < n; ++a) {
        if (d(a) < -kVarianceTolerance) {
            throw InvalidInput("internal_states: Gram matrix is not positive semidefinite");
        }
    }
    ComplexMatrix lower = ldlt.matrixL();
    ComplexMatrix factor(n, n);
    Eigen::Index rank = 0;
    for (Eigen::Index a = 0; a < n; ++a) {
        if (d(a) > kGramRankThreshold) {
            factor.col(rank++) = lower.col(a) * std::sqrt(d(a));
        }
    }
    factor.conservativeResize(n, rank);
    // G = P^T L D L^* P
    factor = ldlt.transpositionsP().transpose() * factor;
    if ((factor * factor.adjoint() - g).cwiseAbs().maxCoeff() > 1e-9) {
        throw InvalidInput("internal_states: Gram matrix is not positive semidefinite");
    }
    // Row k of conj(F) gives sum_a conj(W_ka) W_la = (F F^dag)_kl.
    return factor.conjugate();
}

std::vector<Occupation> occupation_basis(int slots, int weight) {
    std::vector<Occupation> out;
    Occupation current(static_cast<std::size_t>(slots), 0);
    // Depth-first over slots, occupancy of each slot ascending.
    auto recurse = [&](auto&& self, int slot, int remaining) -> void {
        if (slot == slots - 1) {
            current[slot] = static_cast<std::uint8_t>(remaining);
            out.push_back(current);
            return;
        }
        for (int occ = 0; occ <= remaining; ++occ) {
            current[slot] = static_cast<std::uint8_t>(occ);
            self(self, slot + 1, remaining - occ);
        }
        current[slot] = 0;
    };
    if (slots == 0) {
        if (weight == 0) out.emplace_back();
        return out;
    }
    recurse(recurse, 0, weight);
    return out;
}

namespace {

double binomial(int a, int b) {
    double r = 1.0;
    for (int k = 1; k <= b; ++k) r = r * (a - b + k) / k;
    return r;
}

std::size_t locate(const std::vector<Occupation>& basis, const Occupation& occ) {
    const auto it = std::lower_bound(basis.begin(), basis.end(), occ);
    return static_cast<std::size_t>(it - basis.begin());
}

int mode_occupation(const Occupation& occ, ModeIndex mode, int internal_dim) {
    int total = 0;
    for (int a = 0; a < internal_dim; ++a) total += occ[static_cast<std::size_t>(mode * internal_dim + a)];
    return total;
}

}  // namespace

FockState vacuum(int mode_count, int internal_dim) {
    FockState state;
    state.mode_count = mode_count;
    state.internal_dim = internal_dim;
    state.basis = occupation_basis(mode_count * internal_dim, 0);
    state.amplitudes = {Complex(1.0, 0.0)};
    return state;
}

FockState fock_output_state(const UnitaryMatrix& u, std::span<const ModeIndex> input_modes,
                            const ComplexMatrix& states) {
    const int m = u.dimension();
    const int n = static_cast<int>(input_modes.size());
    const int r = static_cast<int>(states.cols());
    if (n > kMaxOraclePhotons || m > kMaxOracleModes) {
        throw ResourceLimit("fock_output_state: oracle limited to n <= 4, m <= 6");
    }
    if (states.rows() != n || r < 1) {
        throw InvalidInput("fock_output_state: need one internal state row per photon");
    }
    const int slots = m * r;
    if (binomial(slots + n - 1, n) > static_cast<double>(kMaxOracleBasis)) {
        throw ResourceLimit("fock_output_state: occupation basis too large");
    }
    for (ModeIndex q : input_modes) {
        if (q < 0 || q >= m) throw InvalidInput("fock_output_state: input mode out of range");
    }

    FockState state = vacuum(m, r);
    std::vector<Complex> coeff(static_cast<std::size_t>(slots));
    for (int k = 0; k < n; ++k) {
        // a^dag_{q_k}(psi_k) -> sum_{out, a} U(q_k, out) psi_k[a] a^dag_{out, a}
        for (int out = 0; out < m; ++out) {
            for (int a = 0; a < r; ++a) {
                coeff[static_cast<std::size_t>(out * r + a)] = u(input_modes[k], out) * states(k, a);
            }
        }
        std::vector<Occupation> next = occupation_basis(slots, k + 1);
        std::vector<Complex> amps(next.size(), Complex(0.0, 0.0));
        for (std::size_t idx = 0; idx < state.basis.size(); ++idx) {
            const Complex amp = state.amplitudes[idx];
            if (amp == Complex(0.0, 0.0)) continue;
            Occupation occ = state.basis[idx];
            for (int p = 0; p < slots; ++p) {
                const Complex c = coeff[static_cast<std::size_t>(p)];
                if (c == Complex(0.0, 0.0)) continue;
                const auto before = occ[static_cast<std::size_t>(p)];
                occ[static_cast<std::size_t>(p)] = static_cast<std::uint8_t>(before + 1);
                amps[locate(next, occ)] += amp * c * std::sqrt(static_cast<double>(before) + 1.0);
                occ[static_cast<std::size_t>(p)] = before;
            }
        }
        state.basis = std::move(next);
        state.amplitudes = std::move(amps);
    }
    return state;
}

double fock_norm(const FockState& state) {
    double sum = 0.0;
    for (const auto& a : state.amplitudes) sum += std::norm(a);
    return std::sqrt(sum);
}

double fock_correlation(const FockState& state, ModeIndex i, ModeIndex j) {
    if (i == j || i < 0 || j < 0 || i >= state.mode_count || j >= state.mode_count) {
        throw InvalidInput("fock_correlation: need distinct in-range output modes");
    }
    const double norm = fock_norm(state);
    if (std::abs(norm - 1.0) > 1e-10) {
        throw NumericalInconsistency("fock_correlation: state norm " + std::to_string(norm));
    }
    double ni = 0.0, nj = 0.0, nij = 0.0;
    for (std::size_t idx = 0; idx < state.basis.size(); ++idx) {
        const double p = std::norm(state.amplitudes[idx]);
        const int a = mode_occupation(state.basis[idx], i, state.internal_dim);
        const int b = mode_occupation(state.basis[idx], j, state.internal_dim);
        ni += p * a;
        nj += p * b;
        nij += p * a * b;
    }
    return nij - ni * nj;
}

double fock_correlation(const UnitaryMatrix& u, const InputSpec& spec, const GramMatrix& g, ModeIndex i,
                        ModeIndex j) {
    if (g.size() != spec.photon_count() || spec.mode_count() != u.dimension()) {
        throw InvalidInput("fock_correlation: inconsistent sizes");
    }
    const auto modes = spec.input_modes();
    return fock_correlation(fock_output_state(u, modes, internal_states(g)), i, j);
}

double fock_total_number_variance(const FockState& state) {
    double norm2 = 0.0, mean = 0.0, second = 0.0;
    for (std::size_t idx = 0; idx < state.basis.size(); ++idx) {
        const double p = std::norm(state.amplitudes[idx]);
        double total = 0.0;
        for (auto o : state.basis[idx]) total += o;
        norm2 += p;
        mean += p * total;
        second += p * total * total;
    }
    if (norm2 == 0.0) {
        throw InvalidInput("fock_total_number_variance: zero state");
    }
    mean /= norm2;
    second /= norm2;
    return second - mean * mean;
}

ComplexEstimate mc_haar_moment(const HaarMonomial& monomial, int mode_count, int trials, std::uint64_t seed,
                               int workers) {
    if (trials < 2) throw InvalidInput("mc_haar_moment: need at least two trials");
    if (mode_count < 1) throw InvalidInput("mc_haar_moment: dimension must be positive");
    auto check = [&](const std::pair<int, int>& e) {
        if (e.first < 0 || e.second < 0 || e.first >= mode_count || e.second >= mode_count) {
            throw InvalidInput("mc_haar_moment: index out of range");
        }
    };
    std::for_each(monomial.u.begin(), monomial.u.end(), check);
    std::for_each(monomial.u_conj.begin(), monomial.u_conj.end(), check);
    if (workers <= 0) workers = worker_count();

    std::vector<double> re(static_cast<std::size_t>(trials));
    std::vector<double> im(static_cast<std::size_t>(trials));
#pragma omp parallel for num_threads(workers) schedule(static)
    for (int t = 0; t < trials; ++t) {
        const UnitaryMatrix u = sample_haar(mode_count, seed, static_cast<std::uint64_t>(t));
        Complex prod(1.0, 0.0);
        for (const auto& [a, b] : monomial.u) prod *= u(a, b);
        for (const auto& [a, b] : monomial.u_conj) prod *= std::conj(u(a, b));
        re[static_cast<std::size_t>(t)] = prod.real();
        im[static_cast<std::size_t>(t)] = prod.imag();
    }
    const Estimate er = mean_estimate(re);
    const Estimate ei = mean_estimate(im);
    return {Complex(er.value, ei.value), std::hypot(er.std_error, ei.std_error)};
}

Estimate mc_time_average(int photon_count, int mode_count, double spectral_width, double dt, int trials,
                         std::uint64_t seed, TimeStatistic statistic, int workers) {
    const int n = photon_count;
    if (trials < 2) throw InvalidInput("mc_time_average: need at least two trials");
    if (!(dt >= 0.0) || !std::isfinite(dt)) throw InvalidInput("mc_time_average: dt must be finite and >= 0");
    if (!(spectral_width > 0.0)) throw InvalidInput("mc_time_average: spectral width must be positive");
    const bool needs_circuit = statistic == TimeStatistic::kMeanC || statistic == TimeStatistic::kMeanCSquared;
    if (needs_circuit && (mode_count < 2 || n < 1 || n > mode_count)) {
        throw InvalidInput("mc_time_average: need 1 <= n <= m and m >= 2");
    }
    const rmt::OverlapSums counts = rmt::overlap_term_counts(n);
    const double count = statistic == TimeStatistic::kOverlapA   ? counts.a
                         : statistic == TimeStatistic::kOverlapB ? counts.b
                         : statistic == TimeStatistic::kOverlapC ? counts.c
                                                                 : counts.d;
    if (!needs_circuit && !(count > 0.0)) {
        throw InvalidInput("mc_time_average: too few photons for the requested overlap sum");
    }
    if (workers <= 0) workers = worker_count();

    std::vector<ModeIndex> modes(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) modes[static_cast<std::size_t>(k)] = k;

    std::vector<double> samples(static_cast<std::size_t>(trials));
#pragma omp parallel for num_threads(workers) schedule(dynamic, 4)
    for (int t = 0; t < trials; ++t) {
        auto engine = substream_engine(seed, static_cast<std::uint64_t>(t), stream_tag::kTimes);
        std::normal_distribution<double> normal(0.0, 1.0);
        std::vector<double> times(static_cast<std::size_t>(n));
        for (auto& x : times) x = dt * normal(engine);
        const OverlapMatrix s = overlap_matrix_from_times(times, spectral_width);

        double value = 0.0;
        if (needs_circuit) {
            const UnitaryMatrix u = sample_haar(mode_count, seed, static_cast<std::uint64_t>(t));
            const Moments mom = dataset_moments(c_dataset(u, modes, s, 1));
            value = statistic == TimeStatistic::kMeanC ? mom.m1 : mom.m2;
        } else {
            const rmt::OverlapSums sums = rmt::overlap_sums(s);
            const double total = statistic == TimeStatistic::kOverlapA   ? sums.a
                                 : statistic == TimeStatistic::kOverlapB ? sums.b
                                 : statistic == TimeStatistic::kOverlapC ? sums.c
                                                                         : sums.d;
            value = total / count;
        }
        samples[static_cast<std::size_t>(t)] = value;
    }
    return mean_estimate(samples);
}

double exact_overlap_term_average(TimeStatistic statistic, double s) {
    if (!(s >= 0.0)) throw InvalidInput("exact_overlap_term_average: s must be >= 0");
    switch (statistic) {
        case TimeStatistic::kOverlapA:
            return 1.0 / (1.0 + 2.0 * s);
        case TimeStatistic::kOverlapB:
            // Two overlaps sharing photon k: differences with covariance
            // dt^2 [[2, 1], [1, 2]] give det(I + s [[2,1],[1,2]])^{-1/2}.
            return 1.0 / std::sqrt((1.0 + s) * (1.0 + 3.0 * s));
        case TimeStatistic::kOverlapC:
            return 1.0 / std::sqrt(1.0 + 4.0 * s);
        case TimeStatistic::kOverlapD:
            return 1.0 / std::sqrt(1.0 + 2.0 * s);
        default:
            throw InvalidInput("exact_overlap_term_average: not an overlap statistic");
    }
}

}  // namespace corrspec::oracle
