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

#include "corrspec/unitaries.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "corrspec/error.hpp"
#include "corrspec/parallel.hpp"

namespace corrspec {

double unitarity_defect(const ComplexMatrix& u) {
    if (u.rows() != u.cols()) {
        throw InvalidInput("unitarity_defect: matrix is not square");
    }
    const ComplexMatrix d = u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols());
    return d.cwiseAbs().maxCoeff();
}

UnitaryMatrix::UnitaryMatrix(ComplexMatrix u) : u_(std::move(u)) {
    if (u_.rows() == 0) {
        throw InvalidInput("UnitaryMatrix: empty matrix");
    }
    const double defect = unitarity_defect(u_);
    if (!(defect <= kUnitarityTolerance)) {
        throw InvalidInput("UnitaryMatrix: unitarity defect " + std::to_string(defect));
    }
}

PhaseFixedQr phase_fixed_qr(const ComplexMatrix& z) {
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ();
    ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < z.cols(); ++j) {
        const Complex d = r(j, j);
        const double a = std::abs(d);
        const Complex phase = a > 0.0 ? d / a : Complex(1.0, 0.0);
        q.col(j) *= phase;
        r.row(j) *= std::conj(phase);
    }
    return {std::move(q), std::move(r)};
}

ComplexMatrix ginibre(int m, std::mt19937_64& engine) {
    std::normal_distribution<double> normal(0.0, std::numbers::sqrt2 / 2.0);
    ComplexMatrix z(m, m);
    // Column-major fill order is part of the reproducibility contract.
    for (int k = 0; k < m; ++k) {
        for (int j = 0; j < m; ++j) {
            const double re = normal(engine);
            const double im = normal(engine);
            z(j, k) = Complex(re, im);
        }
    }
    return z;
}

UnitaryMatrix sample_haar(int m, std::mt19937_64& engine) {
    if (m < 1) {
        throw InvalidInput("sample_haar: dimension must be positive");
    }
    return UnitaryMatrix(phase_fixed_qr(ginibre(m, engine)).q);
}

UnitaryMatrix sample_haar(int m, std::uint64_t seed, std::uint64_t substream) {
    auto engine = substream_engine(seed, substream, stream_tag::kCircuit);
    return sample_haar(m, engine);
}

UnitaryMatrix fourier_matrix(int m) {
    if (m < 1) {
        throw InvalidInput("fourier_matrix: dimension must be positive");
    }
    ComplexMatrix u(m, m);
    const double norm = 1.0 / std::sqrt(static_cast<double>(m));
    for (int j = 0; j < m; ++j) {
        for (int k = 0; k < m; ++k) {
            // Reduce j*k mod m first so the phase argument stays small.
            const auto r = static_cast<long long>(j) * k % m;
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / m;
            u(j, k) = norm * Complex(std::cos(angle), std::sin(angle));
        }
    }
    return UnitaryMatrix(std::move(u));
}

}  // namespace corrspec
