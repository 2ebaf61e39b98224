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

#include "corrspec/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "corrspec/core.hpp"

namespace corrspec {

Estimate mean_estimate(std::span<const double> samples) {
    if (samples.empty()) {
        throw InvalidInput("mean_estimate: no samples");
    }
    if (std::all_of(samples.begin(), samples.end(), [&](double x) { return x == samples.front(); })) {
        return {samples.front(), 0.0};
    }
    const double n = static_cast<double>(samples.size());
    double sum = 0.0;
    for (double x : samples) sum += x;
    const double mean = sum / n;
    if (samples.size() < 2) return {mean, 0.0};
    double ss = 0.0;
    for (double x : samples) ss += (x - mean) * (x - mean);
    return {mean, std::sqrt(ss / (n - 1.0) / n)};
}

Estimate pooled_cv_estimate(std::span<const double> m1, std::span<const double> m2) {
    if (m1.size() != m2.size() || m1.empty()) {
        throw InvalidInput("pooled_cv_estimate: moment samples must be non-empty and paired");
    }
    const Estimate e1 = mean_estimate(m1);
    const bool constant = e1.std_error == 0.0 && mean_estimate(m2).std_error == 0.0;
    const Estimate e2 = mean_estimate(m2);
    const double cv = coefficient_of_variation(e1.value, e2.value);
    if (m1.size() < 2 || constant) return {cv, 0.0};

    const double n = static_cast<double>(m1.size());
    double c11 = 0.0, c12 = 0.0, c22 = 0.0;
    for (std::size_t t = 0; t < m1.size(); ++t) {
        const double d1 = m1[t] - e1.value;
        const double d2 = m2[t] - e2.value;
        c11 += d1 * d1;
        c12 += d1 * d2;
        c22 += d2 * d2;
    }
    c11 /= n - 1.0;
    c12 /= n - 1.0;
    c22 /= n - 1.0;
    if (c11 == 0.0 && c22 == 0.0) return {cv, 0.0};

    const double mu = e1.value;
    const double sd = std::sqrt(std::max(e2.value - mu * mu, 0.0));
    if (sd == 0.0) return {cv, std::numeric_limits<double>::infinity()};
    // f(mu, a) = sqrt(a - mu^2) / mu
    const double dmu = -1.0 / sd - sd / (mu * mu);
    const double da = 1.0 / (2.0 * sd * mu);
    const double var = dmu * dmu * c11 + 2.0 * dmu * da * c12 + da * da * c22;
    return {cv, std::sqrt(std::max(var, 0.0) / n)};
}

}  // namespace corrspec
