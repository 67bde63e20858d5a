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
#include <cstdint>
#include <string>
#include <vector>

#include "fqh/random_unitary.hpp"
#include "fqh/rng.hpp"
#include "fqh/statevector.hpp"
#include "fqh/types.hpp"
#include "fqh/walk.hpp"

namespace fqh {

/**
 * @brief The fixed random choices defining one concrete hash instance.
 *
 * Register layout: n_pos position qubits, one coin qubit, q_anc ancilla
 * qubits. Each ancilla j controls one random d x d unitary acting on
 * targets[j], a list of log2(d) distinct position qubits (element 0 is the
 * least significant bit of the unitary's index). Hash length is
 * q_anc * 2^q_anc bits: 160 for q_anc = 5, 384 for q_anc = 6.
 */
struct HashParams {
    std::size_t n_pos = 5;
    std::size_t q_anc = 5;
    EnsembleTag ensemble = EnsembleTag::kCue;
    std::size_t dim = 2;
    CoinAngles angles{};
    std::vector<UnitaryMatrix> unitaries;
    std::vector<std::vector<std::size_t>> targets;
    RngSeed master_seed = 0;
    std::string rng_algorithm;

    std::size_t total_qubits() const { return n_pos + 1 + q_anc; }
    std::size_t hash_length_bits() const { return q_anc << q_anc; }

    /// Ancilla qubit indices, lowest first.
    std::vector<std::size_t> ancilla_qubits() const;

    /// Checks every structural invariant, including unitarity of the stored
    /// matrices. Raises a specific fqh error on the first violation.
    void validate() const;
};

/**
 * @brief Hash output: raw bits plus the canonical uppercase-hex rendering.
 *
 * `hex` is the MSB-first reading of `bits`, zero-padded on the left when the
 * bit length is not a multiple of four.
 */
struct HashValue {
    std::string bits;  // '0'/'1' characters
    std::string hex;   // uppercase

    static HashValue from_bits(std::string bit_text);
    std::size_t length_bits() const { return bits.size(); }

    bool operator==(const HashValue& other) const { return bits == other.bits; }
};

/// Number of differing bits; lengths must match.
std::size_t hamming_distance(const HashValue& a, const HashValue& b);

/**
 * @brief Samples a full parameter set from a master seed.
 *
 * Four coin angles uniform in (0, pi/2), resampled until pairwise distinct
 * by more than 1e-6; q_anc unitaries from the requested ensemble; q_anc
 * target lists drawn without replacement from the position register. Every
 * component uses its own sub-seed (derive_seed of the master and a fixed
 * stream index), so the result is a pure function of the arguments.
 */
HashParams generate_params(std::size_t n_pos, std::size_t q_anc, EnsembleTag ensemble,
                           std::size_t dim, RngSeed master_seed);

/**
 * @brief The one-clean-qubit layer: for each ancilla j in index order,
 *        Hadamard, controlled-U_j onto the position register, Hadamard.
 *
 * Requires the ancilla register to still be |0...0|; raises DirtyAncilla
 * when its marginal deviates by more than 1e-9.
 */
void apply_dqc1_layer(Statevector& state, const HashParams& params);

/**
 * @brief Turns an ancilla distribution into the hash value.
 *
 * Basis indices are sorted by descending probability (ties broken by
 * ascending index) and their q_anc-bit MSB-first binary forms concatenated.
 * Every basis label appears exactly once, so the output is a permutation
 * encoding of {0, ..., 2^q_anc - 1}.
 */
HashValue extract_hash(const ProbabilityDistribution& dist, std::size_t q_anc);

/**
 * @brief Full pipeline: pad, walk, controlled-unitary layer, ancilla
 *        marginal, hash extraction.
 *
 * With shots = 0 the marginal is computed exactly and the result is a pure
 * function of (message, params). shots > 0 switches to finite-shot
 * frequencies drawn with shot_seed.
 */
HashValue hash_message(const Message& m, const HashParams& params,
                       std::uint64_t shots = 0, RngSeed shot_seed = 0);

/**
 * @brief Single-ancilla demonstration of the expectation-value readout.
 *
 * Runs the Hadamard/controlled-U/Hadamard circuit on psi (a state of exactly
 * log2(u.dim) qubits) and the S^dagger variant, returning the complex
 * expectation <psi|U|psi> reconstructed from the two ancilla probabilities.
 * The hashing path never calls this; it exists to exhibit the readout
 * identity P(0) = (1 + Re<psi|U|psi>)/2 and its imaginary-part twin.
 */
Complex dqc1_expectation(const UnitaryMatrix& u, const Statevector& psi);

}  // namespace fqh
