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

#include "fqh/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "fqh/errors.hpp"

namespace fqh {

namespace {

// Every trial writes only to its own slot, so results are identical for any
// thread count and chunking.
void for_each_trial(std::size_t trials, unsigned threads,
                    const std::function<void(std::size_t)>& body) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(
        std::min<std::size_t>(threads, std::max<std::size_t>(trials, 1)));
    if (threads <= 1 || trials < 2) {
        for (std::size_t t = 0; t < trials; ++t) body(t);
        return;
    }

    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t t = next.fetch_add(1);
            if (t >= trials) return;
            try {
                body(t);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

Message random_message(Rng& rng, std::size_t length) {
    std::vector<std::uint8_t> bits(length);
    for (auto& b : bits) b = static_cast<std::uint8_t>(rng.next_bit());
    Message m;
    m.bits = std::move(bits);
    m.original_length = length;
    return m;
}

Message flip_bit(const Message& m, std::size_t position) {
    Message flipped = m;
    flipped.bits[position] ^= 1u;
    return flipped;
}

// Streams 2t / 2t+1 under the master seed drive trial t's params and message.
HashParams trial_params(const AnalysisConfig& config, RngSeed master_seed,
                        std::size_t trial) {
    return generate_params(config.n_pos, config.q_anc, config.ensemble, config.dim,
                           derive_seed(master_seed, 2 * trial));
}

nlohmann::json config_json(const AnalysisConfig& config) {
    return {{"n_pos", config.n_pos},
            {"q_anc", config.q_anc},
            {"ensemble", std::string(to_string(config.ensemble))},
            {"dim", config.dim}};
}

}  // namespace

double avalanche_percent(const HashValue& original, const HashValue& modified) {
    const auto distance = static_cast<double>(hamming_distance(original, modified));
    return distance / static_cast<double>(original.length_bits()) * 100.0;
}

SensitivityReport run_sensitivity(const Message& m, const HashParams& params,
                                  RngSeed seed) {
    if (m.bits.size() < 2) {
        throw Error("sensitivity needs a message of at least 2 bits");
    }

    std::vector<std::size_t> zero_positions;
    std::vector<std::size_t> one_positions;
    for (std::size_t i = 0; i < m.bits.size(); ++i) {
        (m.bits[i] ? one_positions : zero_positions).push_back(i);
    }
    if (zero_positions.empty()) {
        throw ConditionInapplicable("condition 2 inapplicable: message has no 0 bit");
    }
    if (one_positions.empty()) {
        throw ConditionInapplicable("condition 3 inapplicable: message has no 1 bit");
    }

    Rng rng(seed);
    Message flip_zero = m;
    flip_zero.bits[zero_positions[rng.next_below(zero_positions.size())]] = 1;
    Message flip_one = m;
    flip_one.bits[one_positions[rng.next_below(one_positions.size())]] = 0;
    Message drop_first = m;
    drop_first.bits.erase(drop_first.bits.begin());
    drop_first.original_length = drop_first.bits.size();
    Message inserted = m;
    inserted.bits.insert(inserted.bits.begin() +
                             static_cast<std::ptrdiff_t>(rng.next_below(m.bits.size() + 1)),
                         static_cast<std::uint8_t>(rng.next_bit()));
    inserted.original_length = inserted.bits.size();

    const std::array<Message, 5> variants{m, flip_zero, flip_one, drop_first, inserted};

    SensitivityReport report;
    report.hash_length_bits = params.hash_length_bits();
    for (std::size_t c = 0; c < 5; ++c) {
        report.messages[c] = variants[c].to_string();
        report.hashes[c] = hash_message(variants[c], params);
    }
    for (std::size_t a = 0; a < 5; ++a) {
        for (std::size_t b = 0; b < 5; ++b) {
            report.hamming[a][b] = hamming_distance(report.hashes[a], report.hashes[b]);
        }
    }
    return report;
}

CollisionReport run_collision(std::size_t trials, const AnalysisConfig& config,
                              RngSeed master_seed, std::size_t message_length,
                              bool self_check_mode, unsigned threads) {
    if (trials == 0) throw Error("collision run needs at least one trial");
    CollisionReport report;
    report.trials = trials;
    report.config = config;
    report.master_seed = master_seed;
    report.message_length = message_length;
    report.per_trial.assign(trials, 0);

    for_each_trial(trials, threads, [&](std::size_t t) {
        const HashParams params = trial_params(config, master_seed, t);
        Rng rng(derive_seed(master_seed, 2 * t + 1));
        const Message original = random_message(rng, message_length);
        const Message modified =
            self_check_mode ? original
                            : flip_bit(original, rng.next_below(message_length));
        const HashValue h_org = hash_message(original, params);
        const HashValue h_mod = hash_message(modified, params);
        report.per_trial[t] = h_org == h_mod ? 1 : 0;
    });

    report.collisions = static_cast<std::size_t>(
        std::count(report.per_trial.begin(), report.per_trial.end(), 1));
    report.rate = static_cast<double>(report.collisions) / static_cast<double>(trials);
    return report;
}

AvalancheReport run_avalanche(std::size_t trials, const AnalysisConfig& config,
                              RngSeed master_seed, std::size_t message_length,
                              unsigned threads) {
    if (trials < 2) throw Error("avalanche statistics need at least two trials");
    AvalancheReport report;
    report.config = config;
    report.master_seed = master_seed;
    report.message_length = message_length;
    report.avalanche_pct.assign(trials, 0.0);

    for_each_trial(trials, threads, [&](std::size_t t) {
        const HashParams params = trial_params(config, master_seed, t);
        Rng rng(derive_seed(master_seed, 2 * t + 1));
        const Message original = random_message(rng, message_length);
        const Message modified = flip_bit(original, rng.next_below(message_length));
        report.avalanche_pct[t] =
            avalanche_percent(hash_message(original, params), hash_message(modified, params));
    });

    double sum = 0.0;
    report.max = 0.0;
    for (double v : report.avalanche_pct) {
        sum += v;
        report.max = std::max(report.max, v);
    }
    report.mean = sum / static_cast<double>(trials);
    double squared = 0.0;
    for (double v : report.avalanche_pct) {
        squared += (v - report.mean) * (v - report.mean);
    }
    const double sample_variance = squared / static_cast<double>(trials - 1);
    report.sem = std::sqrt(sample_variance / static_cast<double>(trials));
    return report;
}

ReliabilityReport run_reliability(std::size_t n_messages, std::size_t regenerations,
                                  const AnalysisConfig& config, RngSeed master_seed,
                                  std::uint64_t shots, unsigned threads) {
    if (n_messages == 0 || regenerations == 0) {
        throw Error("reliability needs at least one message and one regeneration");
    }
    ReliabilityReport report;
    report.n_messages = n_messages;
    report.regenerations = regenerations;
    report.shots = shots;
    report.config = config;
    report.master_seed = master_seed;

    std::vector<std::size_t> matches(n_messages, 0);
    for_each_trial(n_messages, threads, [&](std::size_t i) {
        const HashParams params = trial_params(config, master_seed, i);
        Rng rng(derive_seed(master_seed, 2 * i + 1));
        // messages of varying length, 8..64 bits
        const std::size_t length = 8 + rng.next_below(57);
        const Message message = random_message(rng, length);

        const auto shot_seed = [&](std::size_t regen) {
            return derive_seed(master_seed, (i + 1) * 1'000'003 + regen);
        };
        const HashValue reference = hash_message(message, params, shots, shot_seed(0));
        for (std::size_t r = 1; r <= regenerations; ++r) {
            if (hash_message(message, params, shots, shot_seed(r)) == reference) {
                ++matches[i];
            }
        }
    });

    std::size_t total = 0;
    for (std::size_t v : matches) total += v;
    report.reliability = static_cast<double>(total) /
                         static_cast<double>(n_messages * regenerations);
    return report;
}

BirthdayBound birthday_bound(std::size_t hash_length_bits) {
    if (hash_length_bits < 2) {
        throw Error("birthday bound needs a hash of at least 2 bits");
    }
    return {hash_length_bits / 2};
}

std::string to_json(const SensitivityReport& r) {
    nlohmann::json conditions = nlohmann::json::array();
    for (std::size_t c = 0; c < 5; ++c) {
        conditions.push_back({{"condition", c + 1},
                              {"message", r.messages[c]},
                              {"hex", r.hashes[c].hex},
                              {"hamming_to_original", r.hamming[0][c]}});
    }
    nlohmann::json hamming = nlohmann::json::array();
    for (const auto& row : r.hamming) {
        hamming.push_back(std::vector<std::size_t>(row.begin(), row.end()));
    }
    const nlohmann::json doc = {{"type", "sensitivity"},
                                {"hash_length_bits", r.hash_length_bits},
                                {"conditions", conditions},
                                {"hamming", hamming}};
    return doc.dump(2);
}

std::string to_json(const CollisionReport& r) {
    const nlohmann::json doc = {{"type", "collision"},
                                {"trials", r.trials},
                                {"collisions", r.collisions},
                                {"rate", r.rate},
                                {"message_length", r.message_length},
                                {"master_seed", r.master_seed},
                                {"config", config_json(r.config)},
                                {"per_trial", r.per_trial}};
    return doc.dump(2);
}

std::string to_json(const AvalancheReport& r) {
    const nlohmann::json doc = {{"type", "avalanche"},
                                {"trials", r.avalanche_pct.size()},
                                {"mean", r.mean},
                                {"sem", r.sem},
                                {"max", r.max},
                                {"message_length", r.message_length},
                                {"master_seed", r.master_seed},
                                {"config", config_json(r.config)},
                                {"per_trial", r.avalanche_pct}};
    return doc.dump(2);
}

std::string to_json(const ReliabilityReport& r) {
    const nlohmann::json doc = {{"type", "reliability"},
                                {"n_messages", r.n_messages},
                                {"regenerations", r.regenerations},
                                {"shots", r.shots},
                                {"reliability", r.reliability},
                                {"master_seed", r.master_seed},
                                {"config", config_json(r.config)}};
    return doc.dump(2);
}

std::string to_csv(const SensitivityReport& r) {
    std::ostringstream out;
    out << "condition,hex,hamming\n";
    for (std::size_t c = 0; c < 5; ++c) {
        out << (c + 1) << ',' << r.hashes[c].hex << ',' << r.hamming[0][c] << '\n';
    }
    return out.str();
}

std::string to_csv(const CollisionReport& r) {
    std::ostringstream out;
    out << "trial,collision\n";
    for (std::size_t t = 0; t < r.per_trial.size(); ++t) {
        out << t << ',' << static_cast<int>(r.per_trial[t]) << '\n';
    }
    return out.str();
}

std::string to_csv(const AvalancheReport& r) {
    std::ostringstream out;
    out << "trial,avalanche_pct\n";
    for (std::size_t t = 0; t < r.avalanche_pct.size(); ++t) {
        out << t << ',' << r.avalanche_pct[t] << '\n';
    }
    return out.str();
}

}  // namespace fqh
