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
#include <string>
#include <vector>

#include "fqh/dqc1_hash.hpp"

namespace fqh {

/// Circuit shape shared by all trials of a statistics run. Fresh unitaries,
/// angles and targets are drawn per trial from per-trial sub-seeds.
struct AnalysisConfig {
    std::size_t n_pos = 5;
    std::size_t q_anc = 5;
    EnsembleTag ensemble = EnsembleTag::kCue;
    std::size_t dim = 2;
};

/**
 * Input-sensitivity probe. The five conditions:
 *   1 original message
 *   2 one 0 flipped to 1 at a random position
 *   3 one 1 flipped to 0 at a random position
 *   4 first bit deleted
 *   5 one random bit inserted at a random position
 * All five are hashed under the same parameter set.
 */
struct SensitivityReport {
    std::array<std::string, 5> messages;  // bitstrings actually hashed (pre-padding)
    std::array<HashValue, 5> hashes;
    std::array<std::array<std::size_t, 5>, 5> hamming{};  // pairwise, bits
    std::size_t hash_length_bits = 0;
};

struct CollisionReport {
    std::size_t trials = 0;
    std::size_t collisions = 0;
    double rate = 0.0;  // collisions / trials, exactly
    std::vector<std::uint8_t> per_trial;  // 1 = the pair collided
    AnalysisConfig config;
    RngSeed master_seed = 0;
    std::size_t message_length = 0;
};

struct AvalancheReport {
    std::vector<double> avalanche_pct;  // per trial, in [0, 100]
    double mean = 0.0;
    double sem = 0.0;  // sample stddev / sqrt(trials)
    double max = 0.0;
    AnalysisConfig config;
    RngSeed master_seed = 0;
    std::size_t message_length = 0;
};

struct ReliabilityReport {
    std::size_t n_messages = 0;
    std::size_t regenerations = 0;
    double reliability = 0.0;  // fraction of regenerations equal to the first hash
    std::uint64_t shots = 0;   // 0 = exact mode
    AnalysisConfig config;
    RngSeed master_seed = 0;
};

/// Avalanche percentage between two equal-length hashes.
double avalanche_percent(const HashValue& original, const HashValue& modified);

SensitivityReport run_sensitivity(const Message& m, const HashParams& params,
                                  RngSeed seed);

/**
 * Collision sweep: per trial, fresh params and a fresh random message of
 * `message_length` bits; one random bit is flipped and the two hashes
 * compared. `self_check_mode` skips the flip so every trial compares a
 * message against itself (sanity mode: determinism forces a collision).
 * threads = 0 picks the hardware count; results are identical for any value.
 */
CollisionReport run_collision(std::size_t trials, const AnalysisConfig& config,
                              RngSeed master_seed, std::size_t message_length = 32,
                              bool self_check_mode = false, unsigned threads = 0);

/// Avalanche sweep over `trials` fresh (params, message) draws; trials >= 2.
AvalancheReport run_avalanche(std::size_t trials, const AnalysisConfig& config,
                              RngSeed master_seed, std::size_t message_length = 8,
                              unsigned threads = 0);

/**
 * Reliability: hash each of n_messages random messages once, then
 * regenerate `regenerations` times and count identical results. Exact mode
 * (shots = 0) must give 1.0; finite-shot mode redraws measurement outcomes
 * per regeneration and is reported as measured.
 */
ReliabilityReport run_reliability(std::size_t n_messages, std::size_t regenerations,
                                  const AnalysisConfig& config, RngSeed master_seed,
                                  std::uint64_t shots = 0, unsigned threads = 0);

struct BirthdayBound {
    std::size_t tries_exponent;  // 50%-collision work is ~2^tries_exponent
};

/// floor(L/2) for an L-bit hash.
BirthdayBound birthday_bound(std::size_t hash_length_bits);

// JSON documents (text) and flat CSV tables for each report.
std::string to_json(const SensitivityReport& r);
std::string to_json(const CollisionReport& r);
std::string to_json(const AvalancheReport& r);
std::string to_json(const ReliabilityReport& r);

std::string to_csv(const SensitivityReport& r);  // condition,hex,hamming
std::string to_csv(const CollisionReport& r);    // trial,collision
std::string to_csv(const AvalancheReport& r);    // trial,avalanche_pct

}  // namespace fqh
