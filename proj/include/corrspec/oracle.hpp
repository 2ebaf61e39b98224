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

#ifndef CORRSPEC_ORACLE_HPP
#define CORRSPEC_ORACLE_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "corrspec/core.hpp"
#include "corrspec/estimators.hpp"
#include "corrspec/unitaries.hpp"

// Verification engines that do not share code paths with the closed-form
// correlator: a dense Fock-space simulation and Monte-Carlo estimators of
// Haar and arrival-time averages.
namespace corrspec::oracle {

/// Hermitian n x n matrix of internal-state inner products <psi_k|psi_l>
/// with unit diagonal. Positive semidefiniteness is checked when the
/// matrix is factorised.
class GramMatrix {
   public:
    explicit GramMatrix(ComplexMatrix g);

    /// Real Gram matrix of equal-width Gaussian packets,
    /// G_kl = exp(-dw^2 (t_k - t_l)^2 / 4), so that |G_kl|^2 is the usual overlap.
    static GramMatrix gaussian(const InputSpec& spec);

    int size() const { return static_cast<int>(g_.rows()); }
    const ComplexMatrix& matrix() const { return g_; }

    /// S_kl = |G_kl|^2.
    OverlapMatrix overlaps() const;

   private:
    ComplexMatrix g_;
};

/// Rank threshold on the pivots of the Gram factorisation.
inline constexpr double kGramRankThreshold = 1e-12;

/// n x r matrix W whose row k holds photon k's internal amplitudes in an
/// r-dimensional orthonormal basis, so that sum_a conj(W_ka) W_la = G_kl.
/// r is the numerical rank of G (pivoted LDL^T). Throws InvalidInput if G
/// has a pivot below -kVarianceTolerance.
ComplexMatrix internal_states(const GramMatrix& g);

using Occupation = std::vector<std::uint8_t>;

/// Dense state over occupation vectors of m * r composite modes; composite
/// mode (i, a) has index i * r + a. Output state vectors list every
/// occupation of weight n in lexicographic order.
struct FockState {
    int mode_count = 0;
    int internal_dim = 0;
    std::vector<Occupation> basis;
    std::vector<Complex> amplitudes;
};

inline constexpr int kMaxOraclePhotons = 4;
inline constexpr int kMaxOracleModes = 6;
inline constexpr std::size_t kMaxOracleBasis = 100000;

/// All occupation vectors of the given weight over `slots` modes,
/// lexicographically ordered.
std::vector<Occupation> occupation_basis(int slots, int weight);

/// Output state of photons created in `input_modes` with internal
/// amplitudes `states` (one row per photon), after the mode map
/// a^dag_j -> sum_k U_jk a^dag_k. Throws ResourceLimit above the size caps.
FockState fock_output_state(const UnitaryMatrix& u, std::span<const ModeIndex> input_modes,
                            const ComplexMatrix& states);

FockState vacuum(int mode_count, int internal_dim);

double fock_norm(const FockState& state);

/// <n_i n_j> - <n_i><n_j> with n_i summed over the internal levels of mode i.
double fock_correlation(const FockState& state, ModeIndex i, ModeIndex j);

double fock_correlation(const UnitaryMatrix& u, const InputSpec& spec, const GramMatrix& g, ModeIndex i,
                        ModeIndex j);

/// Variance of the total photon number; zero for any state produced by a
/// passive circuit.
double fock_total_number_variance(const FockState& state);

/// Product of U entries and conjugated U entries, 0-based (row, col).
struct HaarMonomial {
    std::vector<std::pair<int, int>> u;
    std::vector<std::pair<int, int>> u_conj;
};

struct ComplexEstimate {
    Complex value;
    double std_error = 0.0;  ///< sqrt((var re + var im) / N)
};

ComplexEstimate mc_haar_moment(const HaarMonomial& monomial, int mode_count, int trials, std::uint64_t seed,
                               int workers = 0);

enum class TimeStatistic {
    kMeanC,         ///< M1 of the C-dataset, fresh Haar circuit per trial
    kMeanCSquared,  ///< M2 of the C-dataset, fresh Haar circuit per trial
    kOverlapA,      ///< per-term mean of the a-sum
    kOverlapB,
    kOverlapC,
    kOverlapD,
};

/// Monte-Carlo average over i.i.d. Normal(0, dt^2) arrival times.
Estimate mc_time_average(int photon_count, int mode_count, double spectral_width, double dt, int trials,
                         std::uint64_t seed, TimeStatistic statistic, int workers = 0);

/// Exact per-term expectation of an overlap product under i.i.d.
/// Normal(0, dt^2) times, s = (dw dt)^2:
///   a: 1/(1+2s), b: 1/sqrt((1+s)(1+3s)), c: 1/sqrt(1+4s), d: 1/sqrt(1+2s).
double exact_overlap_term_average(TimeStatistic statistic, double s);

}  // namespace corrspec::oracle

#endif
