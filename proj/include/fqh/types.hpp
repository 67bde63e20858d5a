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

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace fqh {

using Complex = std::complex<double>;

/**
 * @brief Dense square complex matrix, row-major, with power-of-two dimension.
 *
 * Used for coin operators, random circuit unitaries and gate arguments.
 * Unitarity is a contract of the producers; `unitarity_error()` lets
 * consumers and tests verify it.
 */
struct UnitaryMatrix {
    std::size_t dim = 0;
    std::vector<Complex> entries;  // row-major, dim*dim

    UnitaryMatrix() = default;
    explicit UnitaryMatrix(std::size_t d) : dim(d), entries(d * d) {}

    Complex& at(std::size_t row, std::size_t col) { return entries[row * dim + col]; }
    const Complex& at(std::size_t row, std::size_t col) const {
        return entries[row * dim + col];
    }

    /// max-entry magnitude of U*U^dagger - I
    double unitarity_error() const;

    /// max-entry magnitude of U - U^T
    double symmetry_error() const;

    static UnitaryMatrix identity(std::size_t d);
};

/// 2x2 Hadamard.
UnitaryMatrix make_hadamard();

/// 2x2 S^dagger phase gate, diag(1, -i).
UnitaryMatrix make_s_dagger();

/// Probabilities over the basis states of some register, indexed by basis integer.
using ProbabilityDistribution = std::vector<double>;

}  // namespace fqh
