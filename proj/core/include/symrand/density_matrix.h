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

#ifndef SYMRAND_DENSITY_MATRIX_H
#define SYMRAND_DENSITY_MATRIX_H

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

namespace symrand {

/// Exact simulation stores 4^n complex entries.
inline constexpr int kMaxDensityQubits = 8;

inline constexpr double kTraceTolerance = 1e-10;
inline constexpr double kHermiticityTolerance = 1e-10;
inline constexpr double kPsdTolerance = 1e-9;

/// 2^n x 2^n density matrix in the computational basis. Basis index bit
/// (n - 1 - q) is qubit q, so qubit 0 is the leftmost character of a
/// bitstring.
class DensityMatrix {
  public:
    static DensityMatrix zero_state(int num_qubits);
    static DensityMatrix basis_state(int num_qubits, std::uint64_t index);
    static DensityMatrix maximally_mixed(int num_qubits);
    static DensityMatrix from_pure(int num_qubits, const Eigen::VectorXcd &psi);
    /// Validates trace and hermiticity; PSD is checked when `check_psd`.
    static DensityMatrix from_matrix(int num_qubits, Eigen::MatrixXcd matrix, bool check_psd = true);

    int num_qubits() const { return num_qubits_; }
    std::uint64_t dim() const { return std::uint64_t{1} << num_qubits_; }
    const Eigen::MatrixXcd &matrix() const { return matrix_; }
    Eigen::MatrixXcd &mutable_matrix() { return matrix_; }

    double trace_deviation() const;
    double hermiticity_deviation() const;
    double min_eigenvalue() const;

    /// Throws std::runtime_error naming the violated invariant.
    void check_invariants(bool check_psd = false) const;

  private:
    DensityMatrix(int num_qubits, Eigen::MatrixXcd matrix) : num_qubits_(num_qubits), matrix_(std::move(matrix)) {}

    int num_qubits_;
    Eigen::MatrixXcd matrix_;
};

/// Largest elementwise modulus of a - b.
double max_abs_difference(const DensityMatrix &a, const DensityMatrix &b);

}  // namespace symrand

#endif  // SYMRAND_DENSITY_MATRIX_H
