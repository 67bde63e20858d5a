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

#include "oracle.hpp"

#include <random>

namespace fqh::oracle {

Matrix to_eigen(const UnitaryMatrix& u) {
    Matrix m(u.dim, u.dim);
    for (std::size_t r = 0; r < u.dim; ++r) {
        for (std::size_t c = 0; c < u.dim; ++c) {
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = u.at(r, c);
        }
    }
    return m;
}

Vector to_eigen(const Statevector& state) {
    Vector v(static_cast<Eigen::Index>(state.dim()));
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        v(static_cast<Eigen::Index>(i)) = state.amplitude(i);
    }
    return v;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Matrix single_qubit_matrix(const Matrix& gate, std::size_t target,
                           std::size_t total_qubits) {
    const auto low = static_cast<Eigen::Index>(std::size_t{1} << target);
    const auto high =
        static_cast<Eigen::Index>(std::size_t{1} << (total_qubits - target - 1));
    return kron(Matrix::Identity(high, high), kron(gate, Matrix::Identity(low, low)));
}

Matrix controlled_matrix(const Matrix& u, std::size_t control,
                         const std::vector<std::size_t>& targets,
                         std::size_t total_qubits) {
    const std::size_t dim = std::size_t{1} << total_qubits;
    const std::size_t d = std::size_t{1} << targets.size();
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim),
                            static_cast<Eigen::Index>(dim));
    for (std::size_t col = 0; col < dim; ++col) {
        if (((col >> control) & 1u) == 0) {
            m(static_cast<Eigen::Index>(col), static_cast<Eigen::Index>(col)) = 1.0;
            continue;
        }
        std::size_t in_pattern = 0;
        std::size_t cleared = col;
        for (std::size_t k = 0; k < targets.size(); ++k) {
            in_pattern |= ((col >> targets[k]) & 1u) << k;
            cleared &= ~(std::size_t{1} << targets[k]);
        }
        for (std::size_t out = 0; out < d; ++out) {
            std::size_t row = cleared;
            for (std::size_t k = 0; k < targets.size(); ++k) {
                row |= ((out >> k) & 1u) << targets[k];
            }
            m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
                u(static_cast<Eigen::Index>(out), static_cast<Eigen::Index>(in_pattern));
        }
    }
    return m;
}

Matrix cyclic_shift_matrix(const std::vector<std::size_t>& position_qubits,
                           std::size_t coin, std::size_t total_qubits) {
    const std::size_t dim = std::size_t{1} << total_qubits;
    const std::size_t nodes = std::size_t{1} << position_qubits.size();
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim),
                            static_cast<Eigen::Index>(dim));
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t x = 0;
        for (std::size_t k = 0; k < position_qubits.size(); ++k) {
            x |= ((col >> position_qubits[k]) & 1u) << k;
        }
        const bool down = ((col >> coin) & 1u) != 0;
        const std::size_t moved =
            down ? (x + nodes - 1) % nodes : (x + 1) % nodes;
        std::size_t row = col;
        for (std::size_t k = 0; k < position_qubits.size(); ++k) {
            row &= ~(std::size_t{1} << position_qubits[k]);
            row |= ((moved >> k) & 1u) << position_qubits[k];
        }
        m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = 1.0;
    }
    return m;
}

Vector walk_vector(const Message& padded, const CoinAngles& angles,
                   std::size_t position_qubits) {
    const std::size_t total = position_qubits + 1;
    const std::size_t dim = std::size_t{1} << total;
    std::vector<std::size_t> positions(position_qubits);
    for (std::size_t k = 0; k < position_qubits; ++k) positions[k] = k;
    const Matrix shift = cyclic_shift_matrix(positions, position_qubits, total);

    Vector v = Vector::Zero(static_cast<Eigen::Index>(dim));
    v(0) = 1.0;
    for (std::size_t step = 0; 2 * step < padded.bits.size(); ++step) {
        const unsigned pair = static_cast<unsigned>(2 * padded.bits[2 * step] +
                                                    padded.bits[2 * step + 1]);
        const Matrix coin = to_eigen(coin_operator(angles, pair));
        v = shift * (single_qubit_matrix(coin, position_qubits, total) * v);
    }
    return v;
}

double dqc1_p0(const Matrix& u, const Vector& psi) {
    const std::complex<double> expectation = psi.adjoint() * (u * psi);
    return 0.5 * (1.0 + expectation.real());
}

Vector random_state(std::size_t dim, std::uint64_t seed) {
    std::mt19937_64 engine(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    Vector v(static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i < dim; ++i) {
        v(static_cast<Eigen::Index>(i)) = std::complex<double>(normal(engine), normal(engine));
    }
    v.normalize();
    return v;
}

}  // namespace fqh::oracle
