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

#include "fqh/types.hpp"

#include <algorithm>
#include <cmath>

namespace fqh {

double UnitaryMatrix::unitarity_error() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            Complex acc = 0.0;
            for (std::size_t k = 0; k < dim; ++k) {
                acc += at(i, k) * std::conj(at(j, k));
            }
            if (i == j) acc -= 1.0;
            worst = std::max(worst, std::abs(acc));
        }
    }
    return worst;
}

double UnitaryMatrix::symmetry_error() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            worst = std::max(worst, std::abs(at(i, j) - at(j, i)));
        }
    }
    return worst;
}

UnitaryMatrix UnitaryMatrix::identity(std::size_t d) {
    UnitaryMatrix u(d);
    for (std::size_t i = 0; i < d; ++i) u.at(i, i) = 1.0;
    return u;
}

UnitaryMatrix make_hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    UnitaryMatrix h(2);
    h.at(0, 0) = s;
    h.at(0, 1) = s;
    h.at(1, 0) = s;
    h.at(1, 1) = -s;
    return h;
}

UnitaryMatrix make_s_dagger() {
    UnitaryMatrix s(2);
    s.at(0, 0) = 1.0;
    s.at(1, 1) = Complex(0.0, -1.0);
    return s;
}

}  // namespace fqh
