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

#include <filesystem>
#include <string>
#include <string_view>

#include "fqh/dqc1_hash.hpp"

namespace fqh {

inline constexpr int kParamsSchemaVersion = 1;

/**
 * Canonical JSON form of a parameter set: sorted keys, two-space indent,
 * matrices as row-major [re, im] pairs. Numbers round-trip bit-exactly, so
 * parse(serialize(p)) reproduces p and serializing again yields identical
 * bytes.
 */
std::string serialize_params(const HashParams& params);

/// Inverse of serialize_params. Validates the result; malformed documents
/// raise InputSyntax.
HashParams parse_params(std::string_view json_text);

void save_params(const HashParams& params, const std::filesystem::path& path);
HashParams load_params(const std::filesystem::path& path);

/// FNV-1a 64 over the canonical serialization, as 16 lowercase hex chars.
/// Identifies the exact hash instance a result came from.
std::string params_digest(const HashParams& params);

}  // namespace fqh
