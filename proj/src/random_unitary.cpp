// Copyright 2026 The FQH Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fqh/random_unitary.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "fqh/errors.hpp"

namespace fqh {

namespace {

bool dim_supported(std::size_t dim) {
    return dim == 2 || dim == 4 || dim == 8 || dim == 16 || dim == 32;
}

void check_dim(std::size_t dim) {
    if (!dim_supported(dim)) {
        throw DimensionUnsupported("random unitary dim must be in {2,4,8,16,32}, got " +
                                   std::to_string(dim));
    }
}

// Entries filled row by row so the draw order is part of the pinned scheme.
Eigen::MatrixXcd ginibre(std::size_t dim, Rng& rng) {
    Eigen::MatrixXcd z(dim, dim);
    for (std::size_t row = 0; row < dim; ++row) {
        for (std::size_t col = 0; col < dim; ++col) {
            const auto [re, im] = rng.next_gaussian_pair();
            z(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
                std::complex<double>(re, im) / std::sqrt(2.0);
        }
    }
    return z;
}

Eigen::MatrixXcd haar_from_rng(std::size_t dim, Rng& rng) {
    const Eigen::MatrixXcd z = ginibre(dim, rng);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(
                                                 static_cast<Eigen::Index>(dim),
                                                 static_cast<Eigen::Index>(dim));
    const Eigen::MatrixXcd r = qr.matrixQR();
    // Multiplying column k by the phase of R_kk picks the factor with a
    // positive-real-diagonal R, which is the Haar-distributed one.
    for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(dim); ++k) {
        const std::complex<double> diag = r(k, k);
        const double magnitude = std::abs(diag);
        const std::complex<double> phase = magnitude > 0.0 ? diag / magnitude : 1.0;
        q.col(k) *= phase;
    }
    return q;
}

UnitaryMatrix to_unitary(const Eigen::MatrixXcd& m) {
    const auto dim = static_cast<std::size_t>(m.rows());
    UnitaryMatrix u(dim);
    for (std::size_t row = 0; row < dim; ++row) {
        for (std::size_t col = 0; col < dim; ++col) {
            u.at(row, col) = m(static_cast<Eigen::Index>(row),
                               static_cast<Eigen::Index>(col));
        }
    }
    return u;
}

}  // namespace

std::string_view to_string(EnsembleTag tag) {
    return tag == EnsembleTag::kCue ? "cue" : "coe";
}

EnsembleTag ensemble_from_string(std::string_view name) {
    if (name == "cue") return EnsembleTag::kCue;
    if (name == "coe") return EnsembleTag::kCoe;
    throw InputSyntax("unknown ensemble '" + std::string(name) + "' (expected cue or coe)");
}

UnitaryMatrix sample_cue(std::size_t dim, RngSeed seed) {
    check_dim(dim);
    Rng rng(seed);
    return to_unitary(haar_from_rng(dim, rng));
}

UnitaryMatrix sample_coe(std::size_t dim, RngSeed seed) {
    check_dim(dim);
    Rng rng(seed);
    const Eigen::MatrixXcd w = haar_from_rng(dim, rng);
    return to_unitary(w.transpose() * w);
}

UnitaryMatrix sample_ensemble(EnsembleTag tag, std::size_t dim, RngSeed seed) {
    return tag == EnsembleTag::kCue ? sample_cue(dim, seed) : sample_coe(dim, seed);
}

}  // namespace fqh
