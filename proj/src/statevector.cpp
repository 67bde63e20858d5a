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

#include "fqh/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "fqh/errors.hpp"

namespace fqh {

namespace {

void check_distinct(std::span<const std::size_t> qubits, const char* what) {
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        for (std::size_t j = i + 1; j < qubits.size(); ++j) {
            if (qubits[i] == qubits[j]) {
                throw IndexClash(std::string(what) + ": repeated qubit index " +
                                 std::to_string(qubits[i]));
            }
        }
    }
}

}  // namespace

Statevector::Statevector(std::size_t total_qubits)
    : num_qubits_(total_qubits), amps_(std::size_t{1} << total_qubits) {}

Statevector Statevector::basis_state(std::size_t total_qubits,
                                     std::uint64_t basis_index) {
    if (total_qubits > kMaxQubits) {
        throw ResourceLimit("register of " + std::to_string(total_qubits) +
                            " qubits exceeds the " + std::to_string(kMaxQubits) +
                            "-qubit guard");
    }
    Statevector state(total_qubits);
    if (basis_index >= state.dim()) {
        throw InvalidBasisState("basis index " + std::to_string(basis_index) +
                                " out of range for " + std::to_string(total_qubits) +
                                " qubits");
    }
    state.amps_[basis_index] = 1.0;
    return state;
}

Statevector Statevector::from_amplitudes(std::vector<Complex> amplitudes) {
    const std::size_t size = amplitudes.size();
    if (size == 0 || !std::has_single_bit(size)) {
        throw DimensionMismatch("amplitude count must be a power of two");
    }
    const auto qubits = static_cast<std::size_t>(std::countr_zero(size));
    if (qubits > kMaxQubits) {
        throw ResourceLimit("amplitude vector implies more than " +
                            std::to_string(kMaxQubits) + " qubits");
    }
    Statevector state(qubits);
    state.amps_ = std::move(amplitudes);
    if (std::abs(state.norm() - 1.0) > 1e-9) {
        throw DimensionMismatch("amplitude vector is not normalized");
    }
    return state;
}

double Statevector::norm() const {
    double total = 0.0;
    for (const Complex& a : amps_) total += std::norm(a);
    return std::sqrt(total);
}

void Statevector::check_qubit(std::size_t qubit) const {
    if (qubit >= num_qubits_) {
        throw IndexClash("qubit index " + std::to_string(qubit) +
                         " out of range for " + std::to_string(num_qubits_) +
                         " qubits");
    }
}

void Statevector::apply_single_qubit(const UnitaryMatrix& gate, std::size_t target) {
    if (gate.dim != 2) {
        throw DimensionMismatch("single-qubit gate must be 2x2, got dim " +
                                std::to_string(gate.dim));
    }
    check_qubit(target);
    const Complex g00 = gate.at(0, 0), g01 = gate.at(0, 1);
    const Complex g10 = gate.at(1, 0), g11 = gate.at(1, 1);
    const std::uint64_t stride = std::uint64_t{1} << target;
    const std::uint64_t size = dim();
    for (std::uint64_t base = 0; base < size; base += 2 * stride) {
        for (std::uint64_t offset = 0; offset < stride; ++offset) {
            const std::uint64_t i0 = base + offset;
            const std::uint64_t i1 = i0 + stride;
            const Complex a0 = amps_[i0];
            const Complex a1 = amps_[i1];
            amps_[i0] = g00 * a0 + g01 * a1;
            amps_[i1] = g10 * a0 + g11 * a1;
        }
    }
}

void Statevector::apply_controlled_unitary(const UnitaryMatrix& gate,
                                           std::size_t control,
                                           std::span<const std::size_t> targets) {
    check_qubit(control);
    for (std::size_t t : targets) check_qubit(t);
    check_distinct(targets, "controlled unitary targets");
    for (std::size_t t : targets) {
        if (t == control) {
            throw IndexClash("control qubit " + std::to_string(control) +
                             " repeated in target list");
        }
    }
    const std::size_t arity = targets.size();
    const std::size_t d = std::size_t{1} << arity;
    if (gate.dim != d) {
        throw DimensionMismatch("gate dim " + std::to_string(gate.dim) +
                                " does not match " + std::to_string(arity) +
                                " target qubits");
    }

    // pattern[j] scatters the gate-index bits of j onto the target qubits
    std::vector<std::uint64_t> pattern(d, 0);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = 0; k < arity; ++k) {
            if ((j >> k) & 1u) pattern[j] |= std::uint64_t{1} << targets[k];
        }
    }
    const std::uint64_t target_mask = pattern[d - 1];
    const std::uint64_t control_mask = std::uint64_t{1} << control;

    std::vector<Complex> gathered(d);
    const std::uint64_t size = dim();
    for (std::uint64_t base = 0; base < size; ++base) {
        if ((base & target_mask) != 0 || (base & control_mask) == 0) continue;
        for (std::size_t j = 0; j < d; ++j) gathered[j] = amps_[base | pattern[j]];
        for (std::size_t row = 0; row < d; ++row) {
            Complex acc = 0.0;
            const Complex* row_entries = gate.entries.data() + row * d;
            for (std::size_t j = 0; j < d; ++j) acc += row_entries[j] * gathered[j];
            amps_[base | pattern[row]] = acc;
        }
    }
}

void Statevector::apply_cyclic_shift(std::span<const std::size_t> position_qubits,
                                     std::size_t coin) {
    if (position_qubits.empty()) {
        throw DimensionMismatch("cyclic shift needs a non-empty position register");
    }
    for (std::size_t p : position_qubits) check_qubit(p);
    check_qubit(coin);
    check_distinct(position_qubits, "cyclic shift position register");
    for (std::size_t p : position_qubits) {
        if (p == coin) {
            throw IndexClash("coin qubit " + std::to_string(coin) +
                             " overlaps the position register");
        }
    }

    const std::size_t n = position_qubits.size();
    const std::uint64_t nodes = std::uint64_t{1} << n;
    const std::uint64_t size = dim();

    bool contiguous = coin == n;
    for (std::size_t k = 0; contiguous && k < n; ++k) {
        contiguous = position_qubits[k] == k;
    }
    if (contiguous) {
        // Position bits are the low bits, so each 2^n block holds one cycle:
        // a right rotation moves every |x,0> to |x+1,0>, a left rotation
        // every |x,1> to |x-1,1>.
        for (std::uint64_t block = 0; block < size; block += 2 * nodes) {
            Complex* increment = amps_.data() + block;
            std::rotate(increment, increment + (nodes - 1), increment + nodes);
            Complex* decrement = increment + nodes;
            std::rotate(decrement, decrement + 1, decrement + nodes);
        }
        return;
    }

    std::vector<Complex> shifted(size);
    const std::uint64_t coin_mask = std::uint64_t{1} << coin;
    for (std::uint64_t i = 0; i < size; ++i) {
        std::uint64_t x = 0;
        for (std::size_t k = 0; k < n; ++k) {
            x |= ((i >> position_qubits[k]) & 1u) << k;
        }
        const std::uint64_t moved = (i & coin_mask) ? (x + nodes - 1) & (nodes - 1)
                                                    : (x + 1) & (nodes - 1);
        std::uint64_t j = i;
        for (std::size_t k = 0; k < n; ++k) {
            const std::uint64_t bit_mask = std::uint64_t{1} << position_qubits[k];
            j = (j & ~bit_mask) | (((moved >> k) & 1u) << position_qubits[k]);
        }
        shifted[j] = amps_[i];
    }
    amps_ = std::move(shifted);
}

ProbabilityDistribution Statevector::marginal(
    std::span<const std::size_t> qubits) const {
    for (std::size_t q : qubits) check_qubit(q);
    check_distinct(qubits, "marginal qubit list");
    ProbabilityDistribution probs(std::size_t{1} << qubits.size(), 0.0);
    const std::uint64_t size = dim();
    for (std::uint64_t i = 0; i < size; ++i) {
        std::uint64_t outcome = 0;
        for (std::size_t k = 0; k < qubits.size(); ++k) {
            outcome |= ((i >> qubits[k]) & 1u) << k;
        }
        probs[outcome] += std::norm(amps_[i]);
    }
    return probs;
}

ProbabilityDistribution sample_distribution(const ProbabilityDistribution& dist,
                                            std::uint64_t shots, RngSeed rng_seed) {
    if (shots == 0) {
        throw InvalidShots("shots must be >= 1; use the exact marginal instead");
    }
    std::vector<double> cumulative(dist.size());
    double running = 0.0;
    for (std::size_t i = 0; i < dist.size(); ++i) {
        running += dist[i];
        cumulative[i] = running;
    }

    std::vector<std::uint64_t> counts(dist.size(), 0);
    Rng rng(rng_seed);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = rng.next_double() * running;
        const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        const std::size_t index =
            std::min<std::size_t>(static_cast<std::size_t>(it - cumulative.begin()),
                                  dist.size() - 1);
        ++counts[index];
    }

    ProbabilityDistribution freq(dist.size());
    for (std::size_t i = 0; i < dist.size(); ++i) {
        freq[i] = static_cast<double>(counts[i]) / static_cast<double>(shots);
    }
    return freq;
}

}  // namespace fqh
