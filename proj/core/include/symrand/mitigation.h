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

#ifndef SYMRAND_MITIGATION_H
#define SYMRAND_MITIGATION_H

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "symrand/circuit.h"
#include "symrand/symmetry.h"

namespace symrand {

inline constexpr double kColumnSumTolerance = 1e-9;
inline constexpr double kMaxConditionNumber = 1e8;
/// Depolarizing factors below this mark a failed run.
inline constexpr double kLambdaRejectionThreshold = 0.1;

/// Column-stochastic readout matrix: entry (j, k) is the probability of
/// reading bitstring j after preparing basis state k.
class TransitionMatrix {
  public:
    /// Throws std::invalid_argument unless every entry lies in [0, 1] and each
    /// column sums to one within kColumnSumTolerance.
    static TransitionMatrix from_matrix(int num_qubits, Eigen::MatrixXd matrix,
                                        std::vector<std::uint64_t> shots_per_column = {});
    static TransitionMatrix identity(int num_qubits);

    int num_qubits() const { return num_qubits_; }
    const Eigen::MatrixXd &matrix() const { return matrix_; }
    /// Shots measured for each column; 0 marks a column derived by symmetry.
    std::span<const std::uint64_t> shots_per_column() const { return shots_; }
    std::uint64_t total_shots() const;

    std::vector<double> apply(std::span<const double> p_ideal) const;

  private:
    TransitionMatrix(int num_qubits, Eigen::MatrixXd matrix, std::vector<std::uint64_t> shots)
        : num_qubits_(num_qubits), matrix_(std::move(matrix)), shots_(std::move(shots)) {}

    int num_qubits_;
    Eigen::MatrixXd matrix_;
    std::vector<std::uint64_t> shots_;
};

/// Readout noise as a distribution over bit-flip patterns: the observed
/// bitstring is the prepared one XOR a pattern drawn from this distribution.
class ReadoutNoiseModel {
  public:
    static ReadoutNoiseModel from_pattern_probabilities(int num_qubits, std::vector<double> probabilities);
    /// Independent events, each flipping the bits of its mask with its
    /// probability; the pattern is the XOR of the events that fire.
    static ReadoutNoiseModel from_events(int num_qubits, std::span<const std::pair<std::uint64_t, double>> events);
    static ReadoutNoiseModel noiseless(int num_qubits);
    /// Independent flip with probability p on every qubit.
    static ReadoutNoiseModel independent(int num_qubits, double p);
    /// Single flips p on every qubit plus correlated pair flips q on every
    /// nearest-neighbour edge of the n-loop. Invariant under the dihedral group.
    static ReadoutNoiseModel loop_correlated(int num_qubits, double p, double q);

    int num_qubits() const { return num_qubits_; }
    std::span<const double> pattern_probabilities() const { return probabilities_; }

    TransitionMatrix exact_transition_matrix() const;
    /// Exact noisy distribution for an ideal input distribution.
    std::vector<double> apply(std::span<const double> p_ideal) const;

  private:
    ReadoutNoiseModel(int num_qubits, std::vector<double> probabilities)
        : num_qubits_(num_qubits), probabilities_(std::move(probabilities)) {}

    int num_qubits_;
    std::vector<double> probabilities_;
};

/// Prepares each of the 2^n basis states `shots_per_state` times.
TransitionMatrix calibrate_full(const ReadoutNoiseModel &noise, std::uint64_t shots_per_state, std::uint64_t seed);

/// Calibrates orbit representatives only. Each representative's column is
/// averaged over the group elements fixing it; every other column k = g(rep)
/// is the g-image of that averaged column. The result is exactly invariant
/// under the simultaneous row/column action of the group.
TransitionMatrix calibrate_symmetric(const ReadoutNoiseModel &noise, const SymmetryGroup &group,
                                     std::uint64_t shots_per_rep, std::uint64_t seed);

struct MitigatedDistribution {
    std::vector<double> p;
    /// Total negative mass removed before renormalising.
    double clipped_mass = 0.0;
    double condition_number = 1.0;
    /// True when the condition number exceeded kMaxConditionNumber and a
    /// least-squares solve was used.
    bool least_squares = false;
};

/// S^-1 p_noisy, negatives clipped to zero, renormalised.
MitigatedDistribution mitigate_distribution(const TransitionMatrix &s, std::span<const double> p_noisy);

double tvd(std::span<const double> p, std::span<const double> q);

/// <Z on the qubits of `z_mask`> for a distribution over basis-state indices.
double parity_expectation(std::span<const double> p, std::uint64_t z_mask);

struct MitigationResult {
    std::vector<double> p_mitigated;
    double tvd_before;
    double tvd_after;
    double expectation_error_before;
    double expectation_error_after;
    std::uint64_t samples_used;
    double clipped_mass;
};

/// Mitigates p_noisy with S and scores both distributions against p_ideal;
/// expectation errors use the parity observable `z_mask`.
MitigationResult evaluate_mitigation(const TransitionMatrix &s, std::span<const double> p_noisy,
                                     std::span<const double> p_ideal, std::uint64_t z_mask);

/// Run rejected because its depolarizing factor is below the threshold.
class RejectedRunError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Expectation of `observable` on rho. shots == 0 gives the exact value;
/// otherwise the observable must be diagonal (I and Z only) and is estimated
/// from sampled counts.
double measure_expectation(const DensityMatrix &rho, const PauliString &observable, std::uint64_t shots,
                           std::uint64_t seed);

/// lambda' = O_noisy / O_ideal measured on the estimation circuit (all RX
/// angles zero, same noise), clamped to [-1, 1]. Throws std::invalid_argument
/// when |O_ideal| < 0.1 on that circuit.
double estimate_lambda(const Circuit &circuit, const PauliString &observable, std::uint64_t shots,
                       std::uint64_t seed);

/// o_noisy / lambda', clamped to [-1, 1]. Throws RejectedRunError when
/// lambda' < kLambdaRejectionThreshold.
double mitigate_expectation(double o_noisy, double lambda_prime);

struct TvdBounds {
    double best;
    /// Mean of the per-circuit TVDs.
    double eff;
    double worst;
    /// TVD of the averaged distribution itself; never above eff.
    double of_average;
};

/// Per-circuit output distributions scored against the ideal distribution.
TvdBounds tvd_bounds(std::span<const std::vector<double>> outputs, std::span<const double> ideal);

/// {"n", "columns": [[...]], "shots_per_column": [...]}; columns[k] is the
/// distribution observed after preparing basis state k.
std::string transition_matrix_to_json(const TransitionMatrix &s);
TransitionMatrix transition_matrix_from_json(std::string_view text);

}  // namespace symrand

#endif  // SYMRAND_MITIGATION_H
