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

#include <stdexcept>
#include <string>

namespace fqh {

/**
 * @brief Base class of every error raised by this library.
 *
 * Each failure mode has a dedicated subclass so callers (and tests) can
 * distinguish them without parsing messages.
 */
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Basis index outside the register dimension.
struct InvalidBasisState : Error {
    using Error::Error;
};

/// Register would exceed the simulator's qubit-count guard.
struct ResourceLimit : Error {
    using Error::Error;
};

/// Gate dimension does not match its target subspace.
struct DimensionMismatch : Error {
    using Error::Error;
};

/// Control and target qubit lists overlap or repeat indices.
struct IndexClash : Error {
    using Error::Error;
};

/// Zero shots requested from the finite-shot sampler.
struct InvalidShots : Error {
    using Error::Error;
};

/// Requested random-unitary dimension is not supported.
struct DimensionUnsupported : Error {
    using Error::Error;
};

/// Unitary dimension larger than the position register can host.
struct DimensionExceedsRegister : Error {
    using Error::Error;
};

/// Message with no bits.
struct EmptyMessage : Error {
    using Error::Error;
};

/// Walk invoked with an odd-length (unpadded) message.
struct UnpaddedMessage : Error {
    using Error::Error;
};

/// Ancilla register was not |0...0> before the controlled-unitary layer.
struct DirtyAncilla : Error {
    using Error::Error;
};

/// Sensitivity condition cannot be formed for this message.
struct ConditionInapplicable : Error {
    using Error::Error;
};

/// Malformed textual input (bitstring, hex string, ...).
struct InputSyntax : Error {
    using Error::Error;
};

}  // namespace fqh
