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

#include "symrand/density_matrix.h"

#include <stdexcept>
#include <string>

namespace symrand {

namespace {

void check_qubits(int num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxDensityQubits) {
        throw std::invalid_argument("DensityMatrix: qubit count " + std::to_string(num_qubits) + " outside [1, " +
                                    std::to_string(kMaxDensityQubits) + "]");
    }
}

}  // namespace

DensityMatrix DensityMatrix::zero_state(int num_qubits) {
    return basis_state(num_qubits, 0);
}

DensityMatrix DensityMatrix::basis_state(int num_qubits, std::uint64_t index) {
    check_qubits(num_qubits);
    std::uint64_t d = std::uint64_t{1} << num_qubits;
    if (index >= d) {
        throw std::invalid_argument("DensityMatrix::basis_state: index out of range");
    }
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    m(index, index) = 1.0;
    return DensityMatrix(num_qubits, std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(int num_qubits) {
    check_qubits(num_qubits);
    std::uint64_t d = std::uint64_t{1} << num_qubits;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(d, d) / static_cast<double>(d);
    return DensityMatrix(num_qubits, std::move(m));
}

DensityMatrix DensityMatrix::from_pure(int num_qubits, const Eigen::VectorXcd &psi) {
    check_qubits(num_qubits);
    if (static_cast<std::uint64_t>(psi.size()) != (std::uint64_t{1} << num_qubits)) {
        throw std::invalid_argument("DensityMatrix::from_pure: vector length is not 2^n");
    }
    double norm = psi.norm();
    if (std::abs(norm - 1.0) > kTraceTolerance) {
        throw std::invalid_argument("DensityMatrix::from_pure: state is not normalised");
    }
    return DensityMatrix(num_qubits, psi * psi.adjoint());
}

DensityMatrix DensityMatrix::from_matrix(int num_qubits, Eigen::MatrixXcd matrix, bool check_psd) {
    check_qubits(num_qubits);
    auto d = static_cast<Eigen::Index>(std::uint64_t{1} << num_qubits);
    if (matrix.rows() != d || matrix.cols() != d) {
        throw std::invalid_argument("DensityMatrix::from_matrix: matrix is not 2^n x 2^n");
    }
    DensityMatrix rho(num_qubits, std::move(matrix));
    try {
        rho.check_invariants(check_psd);
    } catch (const std::runtime_error &e) {
        throw std::invalid_argument(e.what());
    }
    return rho;
}

double DensityMatrix::trace_deviation() const {
    return std::abs(matrix_.trace() - std::complex<double>(1.0, 0.0));
}

double DensityMatrix::hermiticity_deviation() const {
    return (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(matrix_, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

void DensityMatrix::check_invariants(bool check_psd) const {
    double trace = trace_deviation();
    if (!(trace <= kTraceTolerance)) {
        throw std::runtime_error("density matrix trace deviates from 1 by " + std::to_string(trace));
    }
    double herm = hermiticity_deviation();
    if (!(herm <= kHermiticityTolerance)) {
        throw std::runtime_error("density matrix is not Hermitian (deviation " + std::to_string(herm) + ")");
    }
    if (check_psd) {
        double lowest = min_eigenvalue();
        if (lowest < -kPsdTolerance) {
            throw std::runtime_error("density matrix has negative eigenvalue " + std::to_string(lowest));
        }
    }
}

double max_abs_difference(const DensityMatrix &a, const DensityMatrix &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("max_abs_difference: qubit count mismatch");
    }
    return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

}  // namespace symrand
