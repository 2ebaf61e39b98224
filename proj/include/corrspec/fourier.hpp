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

#ifndef CORRSPEC_FOURIER_HPP
#define CORRSPEC_FOURIER_HPP

#include <span>

#include "corrspec/core.hpp"

// Closed forms for the C-dataset of the Fourier (DFT) circuit.
namespace corrspec::fourier {

/// C_ij of the m-mode Fourier circuit:
///   -n/m^2 + (1/m^2) sum_{k != l} S_kl cos(2 pi (q_l - q_k)(j - i) / m).
double fourier_c_ij(const InputSpec& spec, const OverlapMatrix& s, ModeIndex i, ModeIndex j);

/// NM of the Fourier C-dataset, -1 - sum_{k != l} S_kl / (n (m - 1)).
/// Independent of the input modes as long as they are distinct mod m,
/// which is checked.
double fourier_nm(std::span<const double> times,
                  double spectral_width,
                  int mode_count,
                  std::span<const ModeIndex> input_modes);

/// Convenience overload with input modes 0..n-1.
double fourier_nm(std::span<const double> times, double spectral_width, int mode_count);

}  // namespace corrspec::fourier

#endif
