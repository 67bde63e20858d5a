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

#include <string_view>

#include "fqh/rng.hpp"
#include "fqh/types.hpp"

namespace fqh {

/// Random-matrix ensemble the circuit unitaries are drawn from.
enum class EnsembleTag {
    kCue,  ///< circular unitary ensemble: Haar measure on U(d)
    kCoe,  ///< circular orthogonal ensemble: symmetric unitaries, W^T W
};

std::string_view to_string(EnsembleTag tag);
EnsembleTag ensemble_from_string(std::string_view name);  // "cue" / "coe"

/**
 * @brief Haar-random unitary of the given dimension.
 *
 * Ginibre matrix -> QR decomposition -> multiply column k of Q by the phase
 * of R_kk. The phase step selects the canonical QR factor; without it the
 * samples follow the QR routine's sign conventions instead of the Haar
 * measure. dim must be one of {2, 4, 8, 16, 32}.
 *
 * (tag, dim, seed) -> matrix is a pure function: identical inputs give
 * bit-identical entries.
 */
UnitaryMatrix sample_cue(std::size_t dim, RngSeed seed);

/**
 * @brief Random symmetric unitary, U = W^T W with W Haar-distributed.
 */
UnitaryMatrix sample_coe(std::size_t dim, RngSeed seed);

/// Dispatch on the ensemble tag.
UnitaryMatrix sample_ensemble(EnsembleTag tag, std::size_t dim, RngSeed seed);

}  // namespace fqh
