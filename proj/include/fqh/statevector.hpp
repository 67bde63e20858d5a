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

#include <cstdint>
#include <span>
#include <vector>

#include "fqh/rng.hpp"
#include "fqh/types.hpp"

namespace fqh {

/**
 * @brief Exact dense statevector over a small qubit register.
 *
 * Amplitudes are stored in computational-basis order with qubit 0 as the
 * least significant bit of the array index. The register layout used by the
 * hashing pipeline is
 *
 *     [position: n qubits][coin: 1 qubit][ancilla: q qubits]
 *
 * i.e. position occupies qubits 0..n-1, the coin is qubit n, and the ancilla
 * register is qubits n+1..n+q. All gate methods mutate in place and preserve
 * the L2 norm.
 *
 * A Statevector is single-owner mutable: no internal sharing, no concurrent
 * mutation. Distinct instances may be processed on different threads freely.
 */
class Statevector {
  public:
    /// Resource guard: a 24-qubit state already needs 256 MiB of amplitudes.
    static constexpr std::size_t kMaxQubits = 24;

    /**
     * @brief State |basis_index> on `total_qubits` qubits.
     *
     * Raises InvalidBasisState if the index is out of range and ResourceLimit
     * if the register would exceed kMaxQubits.
     */
    static Statevector basis_state(std::size_t total_qubits, std::uint64_t basis_index);

    /**
     * @brief Wraps an explicit amplitude vector (size must be a power of two,
     *        L2 norm within 1e-9 of 1).
     */
    static Statevector from_amplitudes(std::vector<Complex> amplitudes);

    std::size_t num_qubits() const { return num_qubits_; }
    std::uint64_t dim() const { return static_cast<std::uint64_t>(amps_.size()); }
    const std::vector<Complex>& amplitudes() const { return amps_; }
    Complex amplitude(std::uint64_t basis_index) const { return amps_[basis_index]; }

    /// L2 norm, recomputed by summation.
    double norm() const;

    /**
     * @brief Applies a 2x2 gate to one qubit.
     */
    void apply_single_qubit(const UnitaryMatrix& gate, std::size_t target);

    /**
     * @brief Applies a d x d gate to `targets` when `control` is |1>.
     *
     * `targets[k]` carries bit k (LSB) of the gate's d-dimensional index, so
     * the matrix acts on the target subspace exactly as written. Components
     * with the control in |0> are left untouched bit-for-bit.
     */
    void apply_controlled_unitary(const UnitaryMatrix& gate, std::size_t control,
                                  std::span<const std::size_t> targets);

    /**
     * @brief Conditional cyclic shift of the position register.
     *
     * With N = 2^position_qubits.size() and x the integer read from the
     * position bits (position_qubits[k] = bit k of x):
     *
     *     |x, coin=0>  ->  |x+1 mod N, coin=0>     (increment)
     *     |x, coin=1>  ->  |x-1 mod N, coin=1>     (decrement)
     *
     * Implemented as an index permutation; the amplitudes are moved, never
     * recombined, so repeated application is exactly reversible.
     */
    void apply_cyclic_shift(std::span<const std::size_t> position_qubits,
                            std::size_t coin);

    /**
     * @brief Marginal probability distribution of a subset of qubits.
     *
     * Entry a of the result is the probability of reading basis state a on
     * `qubits` (qubits[k] = bit k of a), summed over all other qubits.
     */
    ProbabilityDistribution marginal(std::span<const std::size_t> qubits) const;

  private:
    explicit Statevector(std::size_t total_qubits);

    void check_qubit(std::size_t qubit) const;

    std::size_t num_qubits_ = 0;
    std::vector<Complex> amps_;
};

/**
 * @brief Empirical frequencies from `shots` multinomial draws of `dist`.
 *
 * Deterministic given the seed. shots must be >= 1 (InvalidShots otherwise);
 * exact results come from Statevector::marginal directly.
 */
ProbabilityDistribution sample_distribution(const ProbabilityDistribution& dist,
                                            std::uint64_t shots, RngSeed rng_seed);

}  // namespace fqh
