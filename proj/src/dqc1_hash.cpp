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

#include "fqh/dqc1_hash.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "fqh/errors.hpp"

namespace fqh {

namespace {

// Sub-seed schedule under one master seed: stream 0 drives the coin angles,
// streams 1..q the unitaries, streams q+1..2q the target lists.
constexpr std::uint64_t kAnglesStream = 0;

std::uint64_t unitary_stream(std::size_t j) { return 1 + j; }
std::uint64_t targets_stream(std::size_t q_anc, std::size_t j) {
    return 1 + q_anc + j;
}

std::size_t log2_exact(std::size_t value) {
    return static_cast<std::size_t>(std::countr_zero(value));
}

char hex_char(unsigned nibble) { return "0123456789ABCDEF"[nibble & 0xFu]; }

std::string bits_to_hex(const std::string& bits) {
    const std::size_t padding = (4 - bits.size() % 4) % 4;
    std::string hex;
    hex.reserve((bits.size() + padding) / 4);
    unsigned nibble = 0;
    std::size_t filled = padding;
    for (char c : bits) {
        nibble = (nibble << 1) | static_cast<unsigned>(c - '0');
        if (++filled == 4) {
            hex.push_back(hex_char(nibble));
            nibble = 0;
            filled = 0;
        }
    }
    return hex;
}

}  // namespace

std::vector<std::size_t> HashParams::ancilla_qubits() const {
    std::vector<std::size_t> qubits(q_anc);
    for (std::size_t j = 0; j < q_anc; ++j) qubits[j] = n_pos + 1 + j;
    return qubits;
}

void HashParams::validate() const {
    if (n_pos == 0) throw Error("n_pos must be >= 1");
    if (q_anc == 0) throw Error("q_anc must be >= 1");
    if (total_qubits() > Statevector::kMaxQubits) {
        throw ResourceLimit("parameter set needs " + std::to_string(total_qubits()) +
                            " qubits, above the " +
                            std::to_string(Statevector::kMaxQubits) + "-qubit guard");
    }
    if (dim < 2 || !std::has_single_bit(dim)) {
        throw DimensionMismatch("unitary dim must be a power of two >= 2");
    }
    const std::size_t arity = log2_exact(dim);
    if (arity > n_pos) {
        throw DimensionExceedsRegister("dim " + std::to_string(dim) +
                                       " does not fit in " + std::to_string(n_pos) +
                                       " position qubits");
    }
    angles.validate();
    if (unitaries.size() != q_anc || targets.size() != q_anc) {
        throw DimensionMismatch("expected " + std::to_string(q_anc) +
                                " unitaries and target lists");
    }
    for (std::size_t j = 0; j < q_anc; ++j) {
        if (unitaries[j].dim != dim) {
            throw DimensionMismatch("unitary " + std::to_string(j) + " has dim " +
                                    std::to_string(unitaries[j].dim));
        }
        if (unitaries[j].unitarity_error() > 1e-10) {
            throw DimensionMismatch("matrix " + std::to_string(j) +
                                    " is not unitary within 1e-10");
        }
        const auto& list = targets[j];
        if (list.size() != arity) {
            throw DimensionMismatch("target list " + std::to_string(j) +
                                    " must name " + std::to_string(arity) + " qubits");
        }
        for (std::size_t a = 0; a < list.size(); ++a) {
            if (list[a] >= n_pos) {
                throw IndexClash("target qubit " + std::to_string(list[a]) +
                                 " outside the position register");
            }
            for (std::size_t b = a + 1; b < list.size(); ++b) {
                if (list[a] == list[b]) {
                    throw IndexClash("target list " + std::to_string(j) +
                                     " repeats qubit " + std::to_string(list[a]));
                }
            }
        }
    }
}

HashValue HashValue::from_bits(std::string bit_text) {
    for (char c : bit_text) {
        if (c != '0' && c != '1') {
            throw InputSyntax("hash bits must be 0/1 characters");
        }
    }
    HashValue value;
    value.hex = bits_to_hex(bit_text);
    value.bits = std::move(bit_text);
    return value;
}

std::size_t hamming_distance(const HashValue& a, const HashValue& b) {
    if (a.bits.size() != b.bits.size()) {
        throw DimensionMismatch("hash lengths differ: " +
                                std::to_string(a.bits.size()) + " vs " +
                                std::to_string(b.bits.size()));
    }
    std::size_t distance = 0;
    for (std::size_t i = 0; i < a.bits.size(); ++i) {
        distance += a.bits[i] != b.bits[i];
    }
    return distance;
}

HashParams generate_params(std::size_t n_pos, std::size_t q_anc, EnsembleTag ensemble,
                           std::size_t dim, RngSeed master_seed) {
    HashParams params;
    params.n_pos = n_pos;
    params.q_anc = q_anc;
    params.ensemble = ensemble;
    params.dim = dim;
    params.master_seed = master_seed;
    params.rng_algorithm = kRngAlgorithm;

    if (dim < 2 || !std::has_single_bit(dim) || log2_exact(dim) > n_pos) {
        throw DimensionExceedsRegister("dim " + std::to_string(dim) +
                                       " does not fit in " + std::to_string(n_pos) +
                                       " position qubits");
    }

    constexpr double half_pi = std::numbers::pi / 2.0;
    Rng angle_rng(derive_seed(master_seed, kAnglesStream));
    for (;;) {
        for (double& t : params.angles.theta) {
            t = angle_rng.next_open_double() * half_pi;
        }
        bool distinct = true;
        for (std::size_t i = 0; i < 4 && distinct; ++i) {
            for (std::size_t j = i + 1; j < 4 && distinct; ++j) {
                distinct = std::abs(params.angles.theta[i] - params.angles.theta[j]) > 1e-6;
            }
        }
        if (distinct) break;
    }

    const std::size_t arity = log2_exact(dim);
    params.unitaries.reserve(q_anc);
    params.targets.reserve(q_anc);
    for (std::size_t j = 0; j < q_anc; ++j) {
        params.unitaries.push_back(
            sample_ensemble(ensemble, dim, derive_seed(master_seed, unitary_stream(j))));

        // partial Fisher-Yates: first `arity` entries of a shuffle of 0..n_pos-1
        Rng target_rng(derive_seed(master_seed, targets_stream(q_anc, j)));
        std::vector<std::size_t> pool(n_pos);
        std::iota(pool.begin(), pool.end(), std::size_t{0});
        std::vector<std::size_t> chosen(arity);
        for (std::size_t k = 0; k < arity; ++k) {
            const std::size_t pick =
                k + static_cast<std::size_t>(target_rng.next_below(n_pos - k));
            std::swap(pool[k], pool[pick]);
            chosen[k] = pool[k];
        }
        params.targets.push_back(std::move(chosen));
    }

    params.validate();
    return params;
}

void apply_dqc1_layer(Statevector& state, const HashParams& params) {
    const auto ancilla = params.ancilla_qubits();
    const ProbabilityDistribution before = state.marginal(ancilla);
    if (std::abs(before[0] - 1.0) > 1e-9) {
        throw DirtyAncilla("ancilla register is not |0...0> before the layer");
    }

    const UnitaryMatrix hadamard = make_hadamard();
    for (std::size_t j = 0; j < params.q_anc; ++j) {
        const std::size_t anc = ancilla[j];
        state.apply_single_qubit(hadamard, anc);
        state.apply_controlled_unitary(params.unitaries[j], anc, params.targets[j]);
        state.apply_single_qubit(hadamard, anc);
    }
}

HashValue extract_hash(const ProbabilityDistribution& dist, std::size_t q_anc) {
    const std::size_t states = std::size_t{1} << q_anc;
    if (dist.size() != states) {
        throw DimensionMismatch("distribution has " + std::to_string(dist.size()) +
                                " entries, expected " + std::to_string(states));
    }
    double total = 0.0;
    for (double p : dist) {
        if (p < -1e-12) throw Error("negative probability in distribution");
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw Error("distribution sums to " + std::to_string(total));
    }

    std::vector<std::size_t> order(states);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&dist](std::size_t a, std::size_t b) {
        if (dist[a] != dist[b]) return dist[a] > dist[b];
        return a < b;  // exact ties fall back to ascending basis index
    });

    std::string bits;
    bits.reserve(states * q_anc);
    for (std::size_t index : order) {
        for (std::size_t b = q_anc; b-- > 0;) {
            bits.push_back(((index >> b) & 1u) ? '1' : '0');
        }
    }
    return HashValue::from_bits(std::move(bits));
}

HashValue hash_message(const Message& m, const HashParams& params,
                       std::uint64_t shots, RngSeed shot_seed) {
    const Message padded = pad_message(m);
    Statevector state = run_walk(padded, params.angles, params.n_pos, params.q_anc);
    apply_dqc1_layer(state, params);
    ProbabilityDistribution dist = state.marginal(params.ancilla_qubits());
    if (shots > 0) {
        dist = sample_distribution(dist, shots, shot_seed);
    }
    return extract_hash(dist, params.q_anc);
}

Complex dqc1_expectation(const UnitaryMatrix& u, const Statevector& psi) {
    if (psi.dim() != u.dim) {
        throw DimensionMismatch("state dimension " + std::to_string(psi.dim()) +
                                " does not match unitary dim " + std::to_string(u.dim));
    }
    const std::size_t register_qubits = psi.num_qubits();
    const std::size_t ancilla = register_qubits;
    std::vector<std::size_t> targets(register_qubits);
    std::iota(targets.begin(), targets.end(), std::size_t{0});
    const std::vector<std::size_t> ancilla_list{ancilla};

    const auto run_variant = [&](bool imaginary_part) {
        // |0>_anc (x) |psi>, ancilla as the top qubit
        std::vector<Complex> amps(std::size_t{2} << register_qubits, Complex{0.0});
        std::copy(psi.amplitudes().begin(), psi.amplitudes().end(), amps.begin());
        Statevector state = Statevector::from_amplitudes(std::move(amps));
        state.apply_single_qubit(make_hadamard(), ancilla);
        if (imaginary_part) state.apply_single_qubit(make_s_dagger(), ancilla);
        state.apply_controlled_unitary(u, ancilla, targets);
        state.apply_single_qubit(make_hadamard(), ancilla);
        return state.marginal(ancilla_list)[0];
    };

    // P(0) = (1 + Re<psi|U|psi>)/2; with the S^dagger twist the real part
    // is replaced by the imaginary part.
    const double p0_real = run_variant(false);
    const double p0_imag = run_variant(true);
    return {2.0 * p0_real - 1.0, 2.0 * p0_imag - 1.0};
}

}  // namespace fqh
