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
#include <random>
#include <utility>

namespace fqh {

using RngSeed = std::uint64_t;

/**
 * Name of the generation scheme recorded in every parameter file.
 *
 * All randomness flows through mt19937_64 (whose output sequence the C++
 * standard pins bit-for-bit) and hand-rolled conversions below, so a
 * (seed, algorithm-name) pair replays identically across builds and
 * platforms. Library distributions such as std::normal_distribution are
 * avoided on purpose: their outputs are implementation-defined.
 */
inline constexpr const char* kRngAlgorithm = "mt19937_64/box-muller";

/// SplitMix64 finalizer; bijective 64-bit mixing.
std::uint64_t mix_bits(std::uint64_t z);

/**
 * Derives an independent sub-seed for one component of a larger experiment
 * (stream 0, 1, 2, ... under a single master seed). Pure function, so trials
 * keyed by stream index reproduce regardless of execution order.
 */
RngSeed derive_seed(RngSeed master, std::uint64_t stream);

/**
 * @brief Seedable generator with platform-pinned output.
 */
class Rng {
  public:
    explicit Rng(RngSeed seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double();

    /// Uniform double in the open interval (0, 1).
    double next_open_double();

    /// Uniform integer in [0, bound), unbiased via rejection. bound >= 1.
    std::uint64_t next_below(std::uint64_t bound);

    /// One random bit.
    unsigned next_bit() { return static_cast<unsigned>(engine_() & 1u); }

    /// Pair of independent standard normals (Box-Muller).
    std::pair<double, double> next_gaussian_pair();

  private:
    std::mt19937_64 engine_;
};

}  // namespace fqh
