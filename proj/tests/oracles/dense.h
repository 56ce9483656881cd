// Copyright 2026 The symrand Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense reference implementations used only by the tests. Everything here is
// built from explicit Kronecker products so it shares no index tricks with the
// library.

#ifndef SYMRAND_TESTS_ORACLES_DENSE_H
#define SYMRAND_TESTS_ORACLES_DENSE_H

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "symrand/circuit.h"

namespace oracle {

using Matrix = Eigen::MatrixXcd;
using cd = std::complex<double>;

inline Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

inline Matrix single(char letter) {
    Matrix m(2, 2);
    switch (letter) {
        case 'I':
            m << 1, 0, 0, 1;
            break;
        case 'X':
            m << 0, 1, 1, 0;
            break;
        case 'Y':
            m << 0, cd(0, -1), cd(0, 1), 0;
            break;
        case 'Z':
            m << 1, 0, 0, -1;
            break;
        case 'H':
            m << 1, 1, 1, -1;
            m /= std::sqrt(2.0);
            break;
        case '0':  // |0><0|
            m << 1, 0, 0, 0;
            break;
        case '1':  // |1><1|
            m << 0, 0, 0, 1;
            break;
        default:
            throw std::invalid_argument("oracle::single");
    }
    return m;
}

/// Tensor product of per-qubit 2x2 factors, qubit 0 leftmost.
inline Matrix tensor(const std::vector<Matrix> &factors) {
    Matrix out = factors[0];
    for (std::size_t k = 1; k < factors.size(); ++k) {
        out = kron(out, factors[k]);
    }
    return out;
}

inline Matrix pauli(const std::string &letters) {
    std::vector<Matrix> factors;
    for (char c : letters) {
        factors.push_back(single(c));
    }
    return tensor(factors);
}

/// Letters of the k-th Pauli in base-4 order, first letter most significant.
inline std::string pauli_letters(std::uint64_t code, int n) {
    std::string s(n, 'I');
    for (int q = n - 1; q >= 0; --q) {
        s[q] = "IXYZ"[code % 4];
        code /= 4;
    }
    return s;
}

inline Matrix apply_channel(const Matrix &rho, const std::vector<double> &coeffs, int n) {
    Matrix out = Matrix::Zero(rho.rows(), rho.cols());
    for (std::uint64_t code = 0; code < coeffs.size(); ++code) {
        if (coeffs[code] == 0) {
            continue;
        }
        Matrix p = pauli(pauli_letters(code, n));
        out += coeffs[code] * p * rho * p.adjoint();
    }
    return out;
}

inline double expectation(const Matrix &rho, const std::string &letters) {
    return (rho * pauli(letters)).trace().real();
}

/// Operator `factor` on qubit q, identity elsewhere.
inline Matrix embed(const Matrix &factor, int q, int n) {
    std::vector<Matrix> factors(n, single('I'));
    factors[q] = factor;
    return tensor(factors);
}

inline Matrix gate_unitary(const symrand::Gate &gate, int n) {
    using symrand::GateKind;
    switch (gate.kind) {
        case GateKind::H:
            return embed(single('H'), gate.q0, n);
        case GateKind::X:
            return embed(single('X'), gate.q0, n);
        case GateKind::Y:
            return embed(single('Y'), gate.q0, n);
        case GateKind::Z:
            return embed(single('Z'), gate.q0, n);
        case GateKind::RX: {
            Matrix x = embed(single('X'), gate.q0, n);
            Matrix id = Matrix::Identity(x.rows(), x.cols());
            return std::cos(gate.theta / 2) * id - cd(0, 1) * std::sin(gate.theta / 2) * x;
        }
        case GateKind::CZ: {
            std::vector<Matrix> f(n, single('I'));
            f[gate.q0] = single('1');
            f[gate.q1] = single('1');
            Matrix p11 = tensor(f);
            return Matrix::Identity(p11.rows(), p11.cols()) - 2.0 * p11;
        }
        case GateKind::CNOT: {
            std::vector<Matrix> f0(n, single('I')), f1(n, single('I'));
            f0[gate.q0] = single('0');
            f1[gate.q0] = single('1');
            f1[gate.q1] = single('X');
            return tensor(f0) + tensor(f1);
        }
    }
    throw std::logic_error("gate_unitary");
}

/// Dense simulation of a layered noisy circuit.
inline Matrix run(const symrand::Circuit &circuit, Matrix rho) {
    int n = circuit.num_qubits();
    for (const auto &layer : circuit.layers()) {
        Matrix u = Matrix::Identity(rho.rows(), rho.cols());
        for (const auto &gate : layer.gates) {
            u = gate_unitary(gate, n) * u;
        }
        rho = u * rho * u.adjoint();
        if (layer.noise) {
            auto c = layer.noise->coeffs();
            rho = apply_channel(rho, std::vector<double>(c.begin(), c.end()), n);
        }
    }
    return rho;
}

inline Matrix zero_state(int n) {
    std::uint64_t d = std::uint64_t{1} << n;
    Matrix rho = Matrix::Zero(d, d);
    rho(0, 0) = 1;
    return rho;
}

/// Random full-rank density matrix A A^dagger / Tr.
inline Matrix random_density(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    std::uint64_t d = std::uint64_t{1} << n;
    Matrix a(d, d);
    for (std::uint64_t i = 0; i < d; ++i) {
        for (std::uint64_t j = 0; j < d; ++j) {
            a(i, j) = cd(normal(rng), normal(rng));
        }
    }
    Matrix rho = a * a.adjoint();
    return rho / rho.trace();
}

/// Random strictly positive probability vector of length `size`.
inline std::vector<double> random_distribution(std::size_t size, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.01, 1.0);
    std::vector<double> p(size);
    double sum = 0;
    for (double &v : p) {
        v = u(rng);
        sum += v;
    }
    for (double &v : p) {
        v /= sum;
    }
    return p;
}

inline double max_abs(const Matrix &a, const Matrix &b) {
    return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace oracle

#endif  // SYMRAND_TESTS_ORACLES_DENSE_H
