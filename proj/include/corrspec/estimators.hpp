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

#ifndef CORRSPEC_ESTIMATORS_HPP
#define CORRSPEC_ESTIMATORS_HPP

#include <span>

namespace corrspec {

struct Estimate {
    double value = 0.0;
    double std_error = 0.0;  ///< standard error of `value`; 0 for a single sample
};

/// Sample mean and sample-stddev / sqrt(N). Samples are summed in index order.
Estimate mean_estimate(std::span<const double> samples);

/// Coefficient of variation of the pooled C-dataset population,
/// sqrt(<M2> - <M1>^2) / <M1>, from per-trial moments. The standard error
/// is the delta-method propagation of the sample covariance of (M1, M2).
Estimate pooled_cv_estimate(std::span<const double> m1, std::span<const double> m2);

}  // namespace corrspec

#endif
