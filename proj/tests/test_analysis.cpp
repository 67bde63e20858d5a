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

#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "fqh/analysis.hpp"
#include "fqh/errors.hpp"

using namespace fqh;

namespace {

const AnalysisConfig kSmallConfig{3, 3, EnsembleTag::kCue, 2};

}  // namespace

TEST_CASE("sensitivity produces five distinct hashes for the table message") {
    const HashParams params = generate_params(5, 5, EnsembleTag::kCue, 2, 404);
    const Message m = Message::from_bits("01100010110101001");
    const SensitivityReport report = run_sensitivity(m, params, 17);

    CHECK(report.hash_length_bits == 160);
    std::set<std::string> unique;
    for (const auto& h : report.hashes) unique.insert(h.bits);
    CHECK(unique.size() == 5);

    CHECK(report.messages[0] == "01100010110101001");
    CHECK(report.messages[3] == "1100010110101001");  // first bit deleted
    CHECK(report.messages[4].size() == 18);           // one bit inserted

    for (std::size_t a = 0; a < 5; ++a) {
        CHECK(report.hamming[a][a] == 0);
        for (std::size_t b = 0; b < 5; ++b) {
            CHECK(report.hamming[a][b] == report.hamming[b][a]);
        }
    }
}

TEST_CASE("sensitivity condition 4 hashes the first-bit-deleted message") {
    const HashParams params = generate_params(4, 4, EnsembleTag::kCoe, 2, 101);
    const SensitivityReport report =
        run_sensitivity(Message::from_bits("0110"), params, 3);
    const HashValue direct = hash_message(Message::from_bits("110"), params);
    CHECK(report.hashes[3] == direct);
}

TEST_CASE("sensitivity rejects messages without both bit values") {
    const HashParams params = generate_params(4, 4, EnsembleTag::kCue, 2, 7);
    CHECK_THROWS_AS(run_sensitivity(Message::from_bits("1111"), params, 1),
                    ConditionInapplicable);
    CHECK_THROWS_AS(run_sensitivity(Message::from_bits("0000"), params, 1),
                    ConditionInapplicable);
    CHECK_THROWS_WITH_AS(run_sensitivity(Message::from_bits("1111"), params, 1),
                         doctest::Contains("condition 2"), ConditionInapplicable);
}

TEST_CASE("collision sweep finds no collisions at small scale") {
    const CollisionReport report = run_collision(60, kSmallConfig, 1234);
    CHECK(report.trials == 60);
    CHECK(report.collisions == 0);
    CHECK(report.rate == 0.0);
    CHECK(report.per_trial.size() == 60);
    CHECK(report.rate * static_cast<double>(report.trials) ==
          static_cast<double>(report.collisions));
}

TEST_CASE("collision self-check mode collides by determinism") {
    const CollisionReport report =
        run_collision(1, kSmallConfig, 77, 32, /*self_check_mode=*/true);
    CHECK(report.collisions == 1);
    CHECK(report.rate == 1.0);
}

TEST_CASE("collision reports are identical across thread counts") {
    const CollisionReport serial = run_collision(24, kSmallConfig, 99, 32, false, 1);
    const CollisionReport parallel = run_collision(24, kSmallConfig, 99, 32, false, 4);
    CHECK(serial.per_trial == parallel.per_trial);
    CHECK(to_json(serial) == to_json(parallel));
}

TEST_CASE("avalanche percentages and aggregates") {
    CHECK(avalanche_percent(HashValue::from_bits("0101"),
                            HashValue::from_bits("0101")) == 0.0);
    CHECK(avalanche_percent(HashValue::from_bits("0101"),
                            HashValue::from_bits("1010")) == 100.0);
    CHECK(avalanche_percent(HashValue::from_bits("0000"),
                            HashValue::from_bits("0011")) == 50.0);

    const AvalancheReport report = run_avalanche(50, kSmallConfig, 4321);
    CHECK(report.avalanche_pct.size() == 50);
    for (double v : report.avalanche_pct) {
        CHECK(v >= 0.0);
        CHECK(v <= 100.0);
    }
    CHECK(report.mean > 20.0);
    CHECK(report.mean < 80.0);
    CHECK(report.max >= report.mean);
    CHECK(report.sem > 0.0);

    const AvalancheReport again = run_avalanche(50, kSmallConfig, 4321, 8, 3);
    CHECK(report.avalanche_pct == again.avalanche_pct);
    CHECK_THROWS_AS(run_avalanche(1, kSmallConfig, 1), Error);
}

TEST_CASE("reliability is exactly 1 in exact mode") {
    const ReliabilityReport report = run_reliability(3, 4, kSmallConfig, 11);
    CHECK(report.reliability == 1.0);

    const ReliabilityReport vacuous = run_reliability(1, 1, kSmallConfig, 12);
    CHECK(vacuous.reliability == 1.0);
}

TEST_CASE("single-shot mode cannot resolve the distribution") {
    const ReliabilityReport report =
        run_reliability(10, 5, kSmallConfig, 13, /*shots=*/1);
    CHECK(report.reliability < 1.0);
}

TEST_CASE("birthday bound is half the hash length") {
    CHECK(birthday_bound(160).tries_exponent == 80);
    CHECK(birthday_bound(384).tries_exponent == 192);
    CHECK(birthday_bound(2).tries_exponent == 1);
    CHECK_THROWS_AS(birthday_bound(1), Error);
}

TEST_CASE("csv tables use the fixed column names") {
    const CollisionReport collision = run_collision(3, kSmallConfig, 5);
    CHECK(to_csv(collision).rfind("trial,collision\n", 0) == 0);

    const AvalancheReport avalanche = run_avalanche(3, kSmallConfig, 5);
    CHECK(to_csv(avalanche).rfind("trial,avalanche_pct\n", 0) == 0);

    const HashParams params = generate_params(4, 4, EnsembleTag::kCue, 2, 5);
    const SensitivityReport sensitivity =
        run_sensitivity(Message::from_bits("0110"), params, 5);
    const std::string csv = to_csv(sensitivity);
    CHECK(csv.rfind("condition,hex,hamming\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);  // header + 5 rows
}

TEST_CASE("json reports parse and carry the headline numbers") {
    const CollisionReport report = run_collision(5, kSmallConfig, 6);
    const std::string json = to_json(report);
    CHECK(json.find("\"type\": \"collision\"") != std::string::npos);
    CHECK(json.find("\"trials\": 5") != std::string::npos);

    const ReliabilityReport reliability = run_reliability(2, 2, kSmallConfig, 6);
    CHECK(to_json(reliability).find("\"reliability\": 1.0") != std::string::npos);
}
