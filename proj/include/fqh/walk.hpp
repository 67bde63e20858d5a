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

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fqh/statevector.hpp"
#include "fqh/types.hpp"

namespace fqh {

/**
 * @brief Finite bitstring input. Length must be >= 1.
 *
 * `original_length` keeps the pre-padding length for reporting; padding
 * preserves it while `bits` grows.
 */
struct Message {
    std::vector<std::uint8_t> bits;  // each 0 or 1
    std::size_t original_length = 0;

    static Message from_bits(std::string_view zero_one_text);
    static Message from_hex(std::string_view hex_text);        // 4 bits per digit, MSB first
    static Message from_bytes(std::span<const std::uint8_t>);  // 8 bits per byte, MSB first

    std::string to_string() const;
    std::size_t size() const { return bits.size(); }
};

/**
 * @brief The four coin rotation angles, indexed by message bit-pair.
 *
 * Index = 2*first_bit + second_bit, i.e. pair "00" -> theta[0], "01" ->
 * theta[1], "10" -> theta[2], "11" -> theta[3]. Valid angles lie strictly
 * inside (0, pi/2) and are pairwise distinct.
 */
struct CoinAngles {
    std::array<double, 4> theta{};

    void validate() const;
};

/**
 * @brief Appends a single 0 bit when the length is odd; identity otherwise.
 */
Message pad_message(const Message& m);

/**
 * @brief Coin operator for one bit-pair:
 *
 *     [[cos t, sin t], [sin t, -cos t]]
 *
 * Real, unitary and involutive for every angle. pair is the 2-bit index
 * described at CoinAngles.
 */
UnitaryMatrix coin_operator(const CoinAngles& angles, unsigned pair);

/**
 * @brief Message-controlled quantum walk on the cycle with 2^position_qubits
 *        nodes.
 *
 * Starting from |position=0, coin=0, ancilla=0...0>, consumes the (already
 * even-length) message two bits at a time, left to right; each pair selects
 * a coin operator which is applied to the coin qubit and is followed by the
 * conditional cyclic shift. The returned register has
 * position_qubits + 1 + ancilla_qubits qubits with the ancilla untouched.
 *
 * Odd-length input raises UnpaddedMessage; call pad_message first.
 */
Statevector run_walk(const Message& m, const CoinAngles& angles,
                     std::size_t position_qubits, std::size_t ancilla_qubits);

}  // namespace fqh
