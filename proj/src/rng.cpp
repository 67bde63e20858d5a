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

#include "fqh/rng.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace fqh {

std::uint64_t mix_bits(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

RngSeed derive_seed(RngSeed master, std::uint64_t stream) {
    return mix_bits(master ^ mix_bits(stream + 1));
}

double Rng::next_double() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::next_open_double() {
    double u;
    do {
        u = next_double();
    } while (u == 0.0);
    return u;
}

std::uint64_t Rng::next_below(std::uint64_t bound) {
    // rejection keeps the result exactly uniform for every bound
    const std::uint64_t max64 = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t rem = (max64 % bound + 1) % bound;
    const std::uint64_t accept_max = max64 - rem;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x > accept_max);
    return x % bound;
}

std::pair<double, double> Rng::next_gaussian_pair() {
    // Box-Muller on pinned 53-bit uniforms; u1 in (0,1] so the log is finite
    const double u1 =
        static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
    const double u2 = next_double();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

}  // namespace fqh
