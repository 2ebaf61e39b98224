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

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "cli.hpp"
#include "corrspec/correlations.hpp"
#include "corrspec/oracle.hpp"
#include "corrspec/parallel.hpp"
#include "corrspec/rmt.hpp"

namespace corrspec::cli {

namespace {

constexpr double kOracleTolerance = 1e-10;
constexpr double kSigmas = 3.0;

Check bounded(std::string name, double expected, double observed, double tolerance) {
    const bool ok = std::abs(observed - expected) <= tolerance;
    return {std::move(name), expected, observed, tolerance, ok ? "pass" : "fail"};
}

Check statistical(std::string name, double expected, const Estimate& e) {
    Check c = bounded(std::move(name), expected, e.value, kSigmas * e.std_error);
    c.extra["stderr"] = e.std_error;
    return c;
}

std::string pair_label(int n, int m) { return "n=" + std::to_string(n) + ",m=" + std::to_string(m); }

}  // namespace

std::vector<Check> fock_suite(std::uint64_t seed) {
    std::vector<Check> checks;

    const UnitaryMatrix bs = fourier_matrix(2);
    const std::vector<double> same{0.0, 0.0};
    const InputSpec hom = InputSpec::from_times(2, same, 1.0);
    const auto ones = oracle::GramMatrix(ComplexMatrix::Ones(2, 2));
    const auto eye = oracle::GramMatrix(ComplexMatrix::Identity(2, 2));
    checks.push_back(bounded("fock HOM indistinguishable C_12", -1.0, oracle::fock_correlation(bs, hom, ones, 0, 1),
                             1e-12));
    checks.push_back(bounded("fock HOM distinguishable C_12", -0.5, oracle::fock_correlation(bs, hom, eye, 0, 1),
                             1e-12));

    const std::vector<std::pair<int, int>> sizes{{2, 2}, {2, 3}, {3, 3}, {3, 4}, {3, 5}};
    constexpr int kInstances = 20;
    for (const auto& [n, m] : sizes) {
        double worst = 0.0;
        double worst_variance = 0.0;
        for (int inst = 0; inst < kInstances; ++inst) {
            const std::uint64_t stream = static_cast<std::uint64_t>((n * 100 + m) * 1000 + inst);
            const UnitaryMatrix u = sample_haar(m, seed, stream);
            auto engine = substream_engine(seed, stream, stream_tag::kTimes);
            std::normal_distribution<double> normal(0.0, 1.0);
            std::vector<double> times(static_cast<std::size_t>(n));
            for (auto& t : times) t = normal(engine);
            const InputSpec spec = InputSpec::from_times(m, times, 1.0);
            const auto gram = oracle::GramMatrix::gaussian(spec);
            const auto modes = spec.input_modes();
            const auto state = oracle::fock_output_state(u, modes, oracle::internal_states(gram));
            worst_variance = std::max(worst_variance, std::abs(oracle::fock_total_number_variance(state)));
            const OverlapMatrix s = build_overlap_matrix(spec);
            for (int i = 0; i < m; ++i) {
                for (int j = i + 1; j < m; ++j) {
                    const double diff =
                        oracle::fock_correlation(state, i, j) - truncated_correlation(u, spec, s, i, j);
                    worst = std::max(worst, std::abs(diff));
                }
            }
        }
        checks.push_back(bounded("fock vs explicit correlator, max |diff|, " + pair_label(n, m), 0.0, worst,
                                 kOracleTolerance));
        checks.push_back(bounded("total photon number variance, max, " + pair_label(n, m), 0.0, worst_variance,
                                 kOracleTolerance));
    }
    return checks;
}

std::vector<Check> haar_suite(std::uint64_t seed, int trials) {
    std::vector<Check> checks;
    std::uint64_t salt = 0;
    for (int m : {2, 10, 50}) {
        const double md = m;
        oracle::HaarMonomial second{{{0, 0}}, {{0, 0}}};
        oracle::HaarMonomial fourth{{{0, 0}, {0, 0}}, {{0, 0}, {0, 0}}};
        const auto e2 = oracle::mc_haar_moment(second, m, trials, seed + (++salt) * 0x9e3779b97f4a7c15ULL);
        const auto e4 = oracle::mc_haar_moment(fourth, m, trials, seed + (++salt) * 0x9e3779b97f4a7c15ULL);
        checks.push_back(statistical("E|U_11|^2, m=" + std::to_string(m), 1.0 / md,
                                     {e2.value.real(), e2.std_error}));
        checks.push_back(statistical("E|U_11|^4, m=" + std::to_string(m), 2.0 / (md * (md + 1.0)),
                                     {e4.value.real(), e4.std_error}));
    }
    oracle::HaarMonomial cross{{{0, 0}}, {{0, 1}}};
    const auto ec = oracle::mc_haar_moment(cross, 5, trials, seed + (++salt) * 0x9e3779b97f4a7c15ULL);
    Check c = bounded("|E[U_11 U*_12]|, m=5", 0.0, std::abs(ec.value), kSigmas * ec.std_error);
    c.extra["stderr"] = ec.std_error;
    checks.push_back(c);

    double worst = 0.0;
    for (std::uint64_t k = 0; k < 20; ++k) {
        worst = std::max(worst, unitarity_defect(sample_haar(50, seed, k).matrix()));
    }
    checks.push_back(bounded("unitarity defect, m=50, max over 20 draws", 0.0, worst, 1e-12));
    return checks;
}

std::vector<Check> time_suite(std::uint64_t seed, int trials) {
    using oracle::TimeStatistic;
    std::vector<Check> checks;

    // s = (dw dt)^2 with dw = 1.
    {
        const double s = 4.0;
        const auto e = oracle::mc_time_average(2, 2, 1.0, std::sqrt(s), trials, seed + 11, TimeStatistic::kOverlapD);
        checks.push_back(statistical("D' per-term mean, n=2, s=4", 1.0 / std::sqrt(1.0 + 2.0 * s), e));
    }
    {
        const double s = 1.0;
        const auto e = oracle::mc_time_average(4, 4, 1.0, std::sqrt(s), trials, seed + 12, TimeStatistic::kOverlapA);
        checks.push_back(statistical("A' per-term mean, n=4, s=1", 1.0 / (1.0 + 2.0 * s), e));
    }
    {
        const int n = 6, m = 50;
        const double s = 4.0;
        const auto e = oracle::mc_time_average(n, m, 1.0, std::sqrt(s), trials, seed + 13, TimeStatistic::kMeanC);
        const double expected = rmt::expected_correlator(rmt::nm_random_times(n, m, s), n, m);
        checks.push_back(statistical("E(C_ij) with random times, n=6, m=50, s=4", expected, e));
    }

    // Informational: the shared-index overlap products.
    std::uint64_t salt = 20;
    for (const double s : {0.5, 1.0, 4.0}) {
        for (const auto stat : {TimeStatistic::kOverlapB, TimeStatistic::kOverlapC}) {
            const bool is_b = stat == TimeStatistic::kOverlapB;
            const int n = is_b ? 3 : 2;
            const auto e = oracle::mc_time_average(n, n, 1.0, std::sqrt(s), trials, seed + (++salt), stat);
            const double primed = 1.0 / (1.0 + 2.0 * s);
            const double exact = oracle::exact_overlap_term_average(stat, s);
            Check c{std::string(is_b ? "B'" : "C'") + " per-term mean, n=" + std::to_string(n) +
                        ", s=" + format_double(s),
                    primed, e.value, kSigmas * e.std_error, "info"};
            const bool primed_ok = std::abs(e.value - primed) <= kSigmas * e.std_error;
            const bool exact_ok = std::abs(e.value - exact) <= kSigmas * e.std_error;
            c.extra["stderr"] = e.std_error;
            c.extra["primed_value"] = primed;
            c.extra["exact_integral"] = exact;
            c.extra["supports"] = primed_ok && exact_ok ? "both" : exact_ok ? "exact" : primed_ok ? "primed" : "neither";
            checks.push_back(c);
        }
    }
    return checks;
}

nlohmann::json checks_to_json(const std::string& suite, const std::vector<Check>& checks) {
    nlohmann::json out;
    out["suite"] = suite;
    out["checks"] = nlohmann::json::array();
    bool passed = true;
    for (const auto& c : checks) {
        nlohmann::json j = {{"name", c.name},
                            {"expected", c.expected},
                            {"observed", c.observed},
                            {"tolerance", c.tolerance},
                            {"status", c.status}};
        for (const auto& [k, v] : c.extra.items()) j[k] = v;
        out["checks"].push_back(std::move(j));
        passed = passed && c.status != "fail";
    }
    out["passed"] = passed;
    return out;
}

}  // namespace corrspec::cli
