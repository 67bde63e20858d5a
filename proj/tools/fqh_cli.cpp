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

// Command-line front end. Exit codes:
//   0 success          3 parameter-file problem    5 --check threshold failed
//   1 other failure    4 message-input problem
//   2 usage error

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fqh/analysis.hpp"
#include "fqh/errors.hpp"
#include "fqh/params_io.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitParamsError = 3;
constexpr int kExitMessageError = 4;
constexpr int kExitCheckFailed = 5;

struct MessageSource {
    std::string bits;
    std::string hex;
    std::string file;

    void add_flags(CLI::App& cmd) {
        auto* bits_opt = cmd.add_option("--message", bits, "Message as a 0/1 string");
        auto* hex_opt =
            cmd.add_option("--message-hex", hex, "Message as hex digits (4 bits each)");
        auto* file_opt = cmd.add_option("--message-file", file,
                                        "Read the message from a binary file");
        bits_opt->excludes(hex_opt)->excludes(file_opt);
        hex_opt->excludes(file_opt);
    }

    fqh::Message load() const {
        if (!bits.empty() || !hex.empty()) {
            return bits.empty() ? fqh::Message::from_hex(hex)
                                : fqh::Message::from_bits(bits);
        }
        if (file.empty()) {
            throw fqh::InputSyntax(
                "no message given; use --message, --message-hex or --message-file");
        }
        std::ifstream in(file, std::ios::binary);
        if (!in) {
            throw fqh::InputSyntax("cannot open message file '" + file + "'");
        }
        std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                        std::istreambuf_iterator<char>());
        return fqh::Message::from_bytes(bytes);
    }
};

struct ConfigFlags {
    std::size_t n_pos = 5;
    std::size_t q_anc = 5;
    std::string ensemble = "cue";
    std::size_t dim = 2;

    void add_flags(CLI::App& cmd) {
        cmd.add_option("--qpos", n_pos, "Position-register qubits")->capture_default_str();
        cmd.add_option("--qanc", q_anc, "Ancilla-register qubits")->capture_default_str();
        cmd.add_option("--ensemble", ensemble, "Random-matrix ensemble (cue|coe)")
            ->check(CLI::IsMember({"cue", "coe"}))
            ->capture_default_str();
        cmd.add_option("--dim", dim, "Controlled-unitary dimension")->capture_default_str();
    }

    fqh::AnalysisConfig to_config() const {
        return {n_pos, q_anc, fqh::ensemble_from_string(ensemble), dim};
    }
};

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw fqh::Error("cannot open '" + path + "' for writing");
    out << text;
    if (!out.flush()) throw fqh::Error("failed writing '" + path + "'");
}

std::string format_rate(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.6g", value);
    std::string text(buffer);
    if (text.find('.') == std::string::npos && text.find('e') == std::string::npos) {
        text += ".0";
    }
    return text;
}

int run_gen_params(const ConfigFlags& config, std::uint64_t seed,
                   const std::string& out_path) {
    const fqh::HashParams params =
        fqh::generate_params(config.n_pos, config.q_anc,
                             fqh::ensemble_from_string(config.ensemble), config.dim, seed);
    fqh::save_params(params, out_path);
    std::cout << "wrote " << out_path << " (L=" << params.hash_length_bits()
              << " bits, digest " << fqh::params_digest(params) << ")\n";
    return 0;
}

int run_hash(const std::string& params_path, const MessageSource& source,
             std::uint64_t shots, std::uint64_t seed, const std::string& format) {
    fqh::HashParams params;
    try {
        params = fqh::load_params(params_path);
    } catch (const fqh::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParamsError;
    }

    fqh::Message message;
    try {
        message = source.load();
    } catch (const fqh::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMessageError;
    }

    const fqh::HashValue value = fqh::hash_message(message, params, shots, seed);
    const std::string digest = fqh::params_digest(params);
    if (format == "bits") {
        std::cout << value.bits << "\n";
    } else if (format == "json") {
        const nlohmann::json doc = {{"hex", value.hex},
                                    {"bits", value.bits},
                                    {"L", value.length_bits()},
                                    {"params_digest", digest}};
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << value.hex << "\n";
    }
    std::cerr << "params digest: " << digest << "\n";
    return 0;
}

int run_sensitivity_cmd(const std::string& params_path, const ConfigFlags& config,
                        bool have_params, const MessageSource& source,
                        std::uint64_t seed, const std::string& out_path,
                        const std::string& csv_path, bool check) {
    fqh::HashParams params;
    try {
        params = have_params
                     ? fqh::load_params(params_path)
                     : fqh::generate_params(config.n_pos, config.q_anc,
                                            fqh::ensemble_from_string(config.ensemble),
                                            config.dim, seed);
    } catch (const fqh::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParamsError;
    }

    fqh::Message message;
    try {
        message = source.load();
    } catch (const fqh::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMessageError;
    }

    try {
        const fqh::SensitivityReport report =
            fqh::run_sensitivity(message, params, fqh::derive_seed(seed, 0xA11CE));
        if (!out_path.empty()) write_text(out_path, fqh::to_json(report));
        if (!csv_path.empty()) write_text(csv_path, fqh::to_csv(report));

        bool distinct = true;
        double hamming_sum = 0.0;
        int pairs = 0;
        for (std::size_t a = 0; a < 5; ++a) {
            for (std::size_t b = a + 1; b < 5; ++b) {
                distinct = distinct && report.hamming[a][b] != 0;
                hamming_sum += static_cast<double>(report.hamming[a][b]);
                ++pairs;
            }
        }
        const double mean_pct = hamming_sum / pairs /
                                static_cast<double>(report.hash_length_bits) * 100.0;
        char line[128];
        std::snprintf(line, sizeof(line), "distinct=%s mean_hamming_pct=%.2f",
                      distinct ? "true" : "false", mean_pct);
        std::cout << line << "\n";
        if (check && !distinct) return kExitCheckFailed;
        return 0;
    } catch (const fqh::ConditionInapplicable& e) {
        // surfaced in the output rather than failing, unless --check
        const nlohmann::json doc = {{"type", "sensitivity"},
                                    {"error", "ConditionInapplicable"},
                                    {"detail", e.what()}};
        if (!out_path.empty()) write_text(out_path, doc.dump(2));
        std::cout << "inapplicable: " << e.what() << "\n";
        return check ? kExitCheckFailed : 0;
    }
}

int run_collision_cmd(const ConfigFlags& config, std::size_t trials,
                      std::size_t message_length, std::uint64_t seed,
                      unsigned threads, const std::string& out_path,
                      const std::string& csv_path, bool check) {
    const fqh::CollisionReport report = fqh::run_collision(
        trials, config.to_config(), seed, message_length, false, threads);
    if (!out_path.empty()) write_text(out_path, fqh::to_json(report));
    if (!csv_path.empty()) write_text(csv_path, fqh::to_csv(report));
    std::cout << "collisions=" << report.collisions
              << " rate=" << format_rate(report.rate) << "\n";
    return check && report.collisions != 0 ? kExitCheckFailed : 0;
}

int run_avalanche_cmd(const ConfigFlags& config, std::size_t trials,
                      std::size_t message_length, std::uint64_t seed,
                      unsigned threads, const std::string& out_path,
                      const std::string& csv_path, bool check) {
    const fqh::AvalancheReport report = fqh::run_avalanche(
        trials, config.to_config(), seed, message_length, threads);
    if (!out_path.empty()) write_text(out_path, fqh::to_json(report));
    if (!csv_path.empty()) write_text(csv_path, fqh::to_csv(report));
    char line[128];
    std::snprintf(line, sizeof(line), "mean=%.2f sem=%.2f max=%.2f", report.mean,
                  report.sem, report.max);
    std::cout << line << "\n";
    const bool in_band = report.mean >= 45.0 && report.mean <= 60.0;
    return check && !in_band ? kExitCheckFailed : 0;
}

int run_reliability_cmd(const ConfigFlags& config, std::size_t n_messages,
                        std::size_t regenerations, std::uint64_t shots,
                        std::uint64_t seed, unsigned threads,
                        const std::string& out_path, bool check) {
    const fqh::ReliabilityReport report = fqh::run_reliability(
        n_messages, regenerations, config.to_config(), seed, shots, threads);
    if (!out_path.empty()) write_text(out_path, fqh::to_json(report));
    std::cout << "reliability=" << format_rate(report.reliability) << "\n";
    const bool failed = shots == 0 && report.reliability != 1.0;
    return check && failed ? kExitCheckFailed : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fqh: quantum-walk hashing with an ancilla-controlled readout layer"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "Master seed (or env FQH_SEED)")
        ->envname("FQH_SEED");

    std::string out_path;
    std::string csv_path;
    std::size_t trials = 1000;
    unsigned threads = 0;

    // gen-params
    auto* gen = app.add_subcommand("gen-params", "Sample and store a hash instance");
    ConfigFlags gen_config;
    gen_config.add_flags(*gen);
    std::string gen_out;
    gen->add_option("--out", gen_out, "Output parameter file")->required();

    // hash
    auto* hash = app.add_subcommand("hash", "Hash one message under stored parameters");
    std::string hash_params_path;
    hash->add_option("--params", hash_params_path, "Parameter file")->required();
    MessageSource hash_source;
    hash_source.add_flags(*hash);
    std::uint64_t shots = 0;
    hash->add_option("--shots", shots, "Finite measurement shots (0 = exact)")
        ->capture_default_str();
    std::string format = "hex";
    hash->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"hex", "bits", "json"}))
        ->capture_default_str();

    // sensitivity
    auto* sens = app.add_subcommand("sensitivity",
                                    "Hash five single-edit variants of one message");
    std::string sens_params_path;
    sens->add_option("--params", sens_params_path, "Parameter file (else generated)");
    ConfigFlags sens_config;
    sens_config.add_flags(*sens);
    MessageSource sens_source;
    sens_source.add_flags(*sens);
    sens->add_option("--out", out_path, "JSON report path");
    sens->add_option("--csv", csv_path, "CSV table path");
    bool check = false;
    app.add_flag("--check", check, "Exit nonzero when a quality threshold fails");

    // collision
    auto* coll = app.add_subcommand("collision", "Single-bit-flip collision sweep");
    ConfigFlags coll_config;
    coll_config.add_flags(*coll);
    coll->add_option("--trials", trials, "Trial count")->capture_default_str();
    std::size_t message_length = 32;
    coll->add_option("--message-length", message_length, "Random message length")
        ->capture_default_str();
    coll->add_option("--threads", threads, "Worker threads (0 = auto)");
    coll->add_option("--out", out_path, "JSON report path");
    coll->add_option("--csv", csv_path, "CSV table path");

    // avalanche
    auto* aval = app.add_subcommand("avalanche", "Single-bit-flip avalanche statistics");
    ConfigFlags aval_config;
    aval_config.add_flags(*aval);
    std::size_t aval_trials = 1000;
    aval->add_option("--trials", aval_trials, "Trial count")->capture_default_str();
    std::size_t aval_length = 8;
    aval->add_option("--message-length", aval_length, "Random message length")
        ->capture_default_str();
    aval->add_option("--threads", threads, "Worker threads (0 = auto)");
    aval->add_option("--out", out_path, "JSON report path");
    aval->add_option("--csv", csv_path, "CSV table path");

    // reliability
    auto* rel = app.add_subcommand("reliability", "Regeneration consistency check");
    ConfigFlags rel_config;
    rel_config.add_flags(*rel);
    std::size_t n_messages = 100;
    std::size_t regenerations = 100;
    std::uint64_t rel_shots = 0;
    rel->add_option("--messages", n_messages, "Distinct messages")->capture_default_str();
    rel->add_option("--regenerations", regenerations, "Regenerations per message")
        ->capture_default_str();
    rel->add_option("--shots", rel_shots, "Finite shots per hash (0 = exact)")
        ->capture_default_str();
    rel->add_option("--threads", threads, "Worker threads (0 = auto)");
    rel->add_option("--out", out_path, "JSON report path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            return run_gen_params(gen_config, seed, gen_out);
        }
        if (hash->parsed()) {
            return run_hash(hash_params_path, hash_source, shots, seed, format);
        }
        if (sens->parsed()) {
            return run_sensitivity_cmd(sens_params_path, sens_config,
                                       !sens_params_path.empty(), sens_source, seed,
                                       out_path, csv_path, check);
        }
        if (coll->parsed()) {
            return run_collision_cmd(coll_config, trials, message_length, seed, threads,
                                     out_path, csv_path, check);
        }
        if (aval->parsed()) {
            return run_avalanche_cmd(aval_config, aval_trials, aval_length, seed,
                                     threads, out_path, csv_path, check);
        }
        if (rel->parsed()) {
            return run_reliability_cmd(rel_config, n_messages, regenerations, rel_shots,
                                       seed, threads, out_path, check);
        }
    } catch (const fqh::InputSyntax& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMessageError;
    } catch (const fqh::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return 0;
}
