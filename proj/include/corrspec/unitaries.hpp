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

#ifndef CORRSPEC_UNITARIES_HPP
#define CORRSPEC_UNITARIES_HPP

#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace corrspec {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// Largest allowed ||U^dagger U - I||_max for a UnitaryMatrix.
inline constexpr double kUnitarityTolerance = 1e-10;

/// ||U^dagger U - I||_max. U must be square.
double unitarity_defect(const ComplexMatrix& u);

/// An m x m circuit matrix, U(j, k) is the amplitude from input mode j to
/// output mode k. Construction rejects matrices that are not unitary.
class UnitaryMatrix {
   public:
    explicit UnitaryMatrix(ComplexMatrix u);

    int dimension() const { return static_cast<int>(u_.rows()); }
    Complex operator()(int j, int k) const { return u_(j, k); }
    const ComplexMatrix& matrix() const { return u_; }

   private:
    ComplexMatrix u_;
};

/// Z = Q R with the column phases of Q chosen so that diag(R) is real and
/// positive. With Z Ginibre-distributed, Q is Haar-distributed.
struct PhaseFixedQr {
    ComplexMatrix q;
    ComplexMatrix r;
};
PhaseFixedQr phase_fixed_qr(const ComplexMatrix& z);

/// m x m matrix of i.i.d. standard complex Gaussians (E|z|^2 = 1).
ComplexMatrix ginibre(int m, std::mt19937_64& engine);

UnitaryMatrix sample_haar(int m, std::mt19937_64& engine);

/// Haar unitary drawn from substream `substream` of `seed`.
UnitaryMatrix sample_haar(int m, std::uint64_t seed, std::uint64_t substream = 0);

/// Unitary DFT, U(j, k) = exp(2 pi i j k / m) / sqrt(m) with 0-based j, k.
UnitaryMatrix fourier_matrix(int m);

}  // namespace corrspec

#endif
