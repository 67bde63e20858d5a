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

#include "fqh/params_io.hpp"

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "fqh/errors.hpp"

namespace fqh {

namespace {

nlohmann::json matrix_to_json(const UnitaryMatrix& u) {
    nlohmann::json rows = nlohmann::json::array();
    for (const Complex& entry : u.entries) {
        rows.push_back({entry.real(), entry.imag()});
    }
    return rows;
}

UnitaryMatrix matrix_from_json(const nlohmann::json& j, std::size_t dim) {
    if (!j.is_array() || j.size() != dim * dim) {
        throw InputSyntax("unitary entry list must hold dim*dim [re, im] pairs");
    }
    UnitaryMatrix u(dim);
    for (std::size_t i = 0; i < dim * dim; ++i) {
        const auto& pair = j.at(i);
        if (!pair.is_array() || pair.size() != 2) {
            throw InputSyntax("matrix entries must be [re, im] pairs");
        }
        u.entries[i] = Complex(pair.at(0).get<double>(), pair.at(1).get<double>());
    }
    return u;
}

}  // namespace

std::string serialize_params(const HashParams& params) {
    nlohmann::json unitaries = nlohmann::json::array();
    for (const auto& u : params.unitaries) unitaries.push_back(matrix_to_json(u));

    const nlohmann::json doc = {{"schema_version", kParamsSchemaVersion},
                                {"n_pos", params.n_pos},
                                {"q_anc", params.q_anc},
                                {"ensemble", std::string(to_string(params.ensemble))},
                                {"dim", params.dim},
                                {"angles", params.angles.theta},
                                {"unitaries", unitaries},
                                {"targets", params.targets},
                                {"master_seed", params.master_seed},
                                {"rng_algorithm", params.rng_algorithm}};
    return doc.dump(2) + "\n";
}

HashParams parse_params(std::string_view json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw InputSyntax(std::string("parameter file is not valid JSON: ") + e.what());
    }

    HashParams params;
    try {
        const int version = doc.at("schema_version").get<int>();
        if (version != kParamsSchemaVersion) {
            throw InputSyntax("unsupported schema_version " + std::to_string(version));
        }
        params.n_pos = doc.at("n_pos").get<std::size_t>();
        params.q_anc = doc.at("q_anc").get<std::size_t>();
        params.ensemble = ensemble_from_string(doc.at("ensemble").get<std::string>());
        params.dim = doc.at("dim").get<std::size_t>();
        const auto angles = doc.at("angles").get<std::vector<double>>();
        if (angles.size() != 4) {
            throw InputSyntax("expected exactly 4 coin angles");
        }
        std::copy(angles.begin(), angles.end(), params.angles.theta.begin());
        for (const auto& matrix : doc.at("unitaries")) {
            params.unitaries.push_back(matrix_from_json(matrix, params.dim));
        }
        params.targets =
            doc.at("targets").get<std::vector<std::vector<std::size_t>>>();
        params.master_seed = doc.at("master_seed").get<std::uint64_t>();
        params.rng_algorithm = doc.at("rng_algorithm").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw InputSyntax(std::string("parameter file is missing fields: ") + e.what());
    }

    params.validate();
    return params;
}

void save_params(const HashParams& params, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot open '" + path.string() + "' for writing");
    }
    out << serialize_params(params);
    if (!out.flush()) {
        throw Error("failed writing parameter file '" + path.string() + "'");
    }
}

HashParams load_params(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open parameter file '" + path.string() + "'");
    }
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return parse_params(text);
}

std::string params_digest(const HashParams& params) {
    const std::string canonical = serialize_params(params);
    std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a 64
    for (unsigned char c : canonical) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buffer[17];
    std::snprintf(buffer, sizeof(buffer), "%016llx",
                  static_cast<unsigned long long>(h));
    return buffer;
}

}  // namespace fqh
