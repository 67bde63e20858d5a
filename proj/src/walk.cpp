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

#include "fqh/walk.hpp"

#include <cctype>
#include <cmath>
#include <numbers>

#include "fqh/errors.hpp"

namespace fqh {

namespace {

Message with_bits(std::vector<std::uint8_t> bits) {
    if (bits.empty()) {
        throw EmptyMessage("message must contain at least one bit");
    }
    Message m;
    m.original_length = bits.size();
    m.bits = std::move(bits);
    return m;
}

unsigned hex_digit_value(char c) {
    if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
    if (c >= 'a' && c <= 'f') return static_cast<unsigned>(c - 'a' + 10);
    if (c >= 'A' && c <= 'F') return static_cast<unsigned>(c - 'A' + 10);
    throw InputSyntax(std::string("invalid hex digit '") + c + "'");
}

}  // namespace

Message Message::from_bits(std::string_view zero_one_text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(zero_one_text.size());
    for (char c : zero_one_text) {
        if (c != '0' && c != '1') {
            throw InputSyntax(std::string("invalid message character '") + c +
                              "' (expected 0 or 1)");
        }
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return with_bits(std::move(bits));
}

Message Message::from_hex(std::string_view hex_text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(hex_text.size() * 4);
    for (char c : hex_text) {
        const unsigned value = hex_digit_value(c);
        for (int b = 3; b >= 0; --b) {
            bits.push_back(static_cast<std::uint8_t>((value >> b) & 1u));
        }
    }
    return with_bits(std::move(bits));
}

Message Message::from_bytes(std::span<const std::uint8_t> bytes) {
    std::vector<std::uint8_t> bits;
    bits.reserve(bytes.size() * 8);
    for (std::uint8_t byte : bytes) {
        for (int b = 7; b >= 0; --b) {
            bits.push_back(static_cast<std::uint8_t>((byte >> b) & 1u));
        }
    }
    return with_bits(std::move(bits));
}

std::string Message::to_string() const {
    std::string text;
    text.reserve(bits.size());
    for (std::uint8_t b : bits) text.push_back(b ? '1' : '0');
    return text;
}

void CoinAngles::validate() const {
    constexpr double half_pi = std::numbers::pi / 2.0;
    for (double t : theta) {
        if (!(t > 0.0 && t < half_pi)) {
            throw Error("coin angle " + std::to_string(t) +
                        " outside the open interval (0, pi/2)");
        }
    }
    for (std::size_t i = 0; i < theta.size(); ++i) {
        for (std::size_t j = i + 1; j < theta.size(); ++j) {
            if (theta[i] == theta[j]) {
                throw Error("coin angles must be pairwise distinct");
            }
        }
    }
}

Message pad_message(const Message& m) {
    if (m.bits.empty()) {
        throw EmptyMessage("cannot pad an empty message");
    }
    Message padded = m;
    if (padded.bits.size() % 2 != 0) {
        padded.bits.push_back(0);
    }
    return padded;
}

UnitaryMatrix coin_operator(const CoinAngles& angles, unsigned pair) {
    const double t = angles.theta.at(pair);
    UnitaryMatrix c(2);
    c.at(0, 0) = std::cos(t);
    c.at(0, 1) = std::sin(t);
    c.at(1, 0) = std::sin(t);
    c.at(1, 1) = -std::cos(t);
    return c;
}

Statevector run_walk(const Message& m, const CoinAngles& angles,
                     std::size_t position_qubits, std::size_t ancilla_qubits) {
    if (m.bits.size() % 2 != 0) {
        throw UnpaddedMessage("walk requires an even-length message; got " +
                              std::to_string(m.bits.size()) + " bits");
    }
    angles.validate();

    // The walk never touches the ancilla register, so it runs on the compact
    // position+coin block and is embedded into the full register afterwards.
    const std::size_t walk_qubits = position_qubits + 1;
    const std::size_t total = walk_qubits + ancilla_qubits;
    if (total > Statevector::kMaxQubits) {
        throw ResourceLimit("walk register of " + std::to_string(total) +
                            " qubits exceeds the guard");
    }

    Statevector walk_state = Statevector::basis_state(walk_qubits, 0);
    std::vector<std::size_t> positions(position_qubits);
    for (std::size_t k = 0; k < position_qubits; ++k) positions[k] = k;
    const std::size_t coin = position_qubits;

    std::array<UnitaryMatrix, 4> coins;
    for (unsigned pair = 0; pair < 4; ++pair) coins[pair] = coin_operator(angles, pair);

    for (std::size_t step = 0; 2 * step < m.bits.size(); ++step) {
        const unsigned pair =
            static_cast<unsigned>(2 * m.bits[2 * step] + m.bits[2 * step + 1]);
        walk_state.apply_single_qubit(coins[pair], coin);
        walk_state.apply_cyclic_shift(positions, coin);
    }

    if (ancilla_qubits == 0) return walk_state;

    std::vector<Complex> full(std::size_t{1} << total, Complex{0.0, 0.0});
    const auto& compact = walk_state.amplitudes();
    std::copy(compact.begin(), compact.end(), full.begin());
    return Statevector::from_amplitudes(std::move(full));
}

}  // namespace fqh
