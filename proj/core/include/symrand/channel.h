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

#ifndef SYMRAND_CHANNEL_H
#define SYMRAND_CHANNEL_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symrand/pauli.h"

namespace symrand {

/// Qubit cap for dense channel storage (4^n doubles).
inline constexpr int kMaxChannelQubits = 12;

/// Sum-to-one slack accepted as-is.
inline constexpr double kNormalizationTolerance = 1e-12;
/// Sum-to-one slack repaired by renormalisation; anything larger is rejected.
inline constexpr double kRenormalizationThreshold = 1e-9;
/// Default clustering tolerance for channel_complexity.
inline constexpr double kDefaultComplexityTolerance = 1e-9;

/// Stochastic Pauli channel rho -> sum_P c_P P rho P^dagger, stored as the 4^n
/// probabilities indexed by the canonical PauliString encoding.
///
/// Instances are immutable and always valid: every coefficient lies in [0, 1]
/// and the coefficients sum to one within kNormalizationTolerance.
class PauliChannel {
  public:
    int num_qubits() const { return num_qubits_; }
    std::span<const double> coeffs() const { return coeffs_; }
    double operator[](std::uint64_t code) const { return coeffs_[code]; }
    double operator[](const PauliString &p) const { return coeffs_[p.code()]; }
    double identity_coefficient() const { return coeffs_[0]; }

    bool operator==(const PauliChannel &other) const = default;

  private:
    PauliChannel(int num_qubits, std::vector<double> coeffs);

    friend PauliChannel make_channel(int num_qubits, std::vector<double> coeffs);

    int num_qubits_;
    std::vector<double> coeffs_;
};

/// Validates and wraps a coefficient vector of length 4^n.
///
/// Rejects (std::invalid_argument) negative or >1 coefficients, a wrong length,
/// and sums further than kRenormalizationThreshold from one. Sums off by more
/// than kNormalizationTolerance but within the threshold are renormalised.
PauliChannel make_channel(int num_qubits, std::vector<double> coeffs);

PauliChannel identity_channel(int num_qubits);

/// Channel with the same coefficient on every non-identity Pauli; the identity
/// coefficient takes the remainder.
PauliChannel uniform_channel(int num_qubits, double per_operator);

/// Global depolarizing channel (1 - lambda) rho + lambda I / 2^n, lambda in [0, 1].
///
/// Expanding I / 2^n = 4^-n sum_P P rho P^dagger gives the per-operator
/// coefficient lambda / 4^n on every non-identity Pauli.
PauliChannel depolarizing_channel(int num_qubits, double lambda);

/// Depolarizing parameter of uniform_channel(n, per_operator): 4^n * per_operator.
double depolarizing_parameter(int num_qubits, double per_operator);

/// Number of clusters among `values` under single-link clustering of the
/// sorted values: neighbours closer than or equal to `tol` share a cluster.
std::size_t count_distinct(std::span<const double> values, double tol);

/// Error complexity: distinct non-identity coefficients (identity excluded).
std::size_t channel_complexity(const PauliChannel &channel, double tol = kDefaultComplexityTolerance);

/// Same clustering, but the identity coefficient is counted as well. Orbit
/// counts of the symmetry theorems follow this convention.
std::size_t channel_complexity_with_identity(const PauliChannel &channel,
                                             double tol = kDefaultComplexityTolerance);

/// Channel of `second` applied after `first`. Products of Pauli strings are
/// taken up to phase, which in the canonical encoding is the XOR of codes, so
/// c_P = sum_Q first_Q second_(P xor Q).
PauliChannel compose_channels(const PauliChannel &second, const PauliChannel &first);

/// Total variation distance between the coefficient distributions.
double channel_distance(const PauliChannel &a, const PauliChannel &b);

/// {"n": int, "coeffs": [float; 4^n]}, floats written with 17 significant digits.
std::string channel_to_json(const PauliChannel &channel);
PauliChannel channel_from_json(std::string_view text);

}  // namespace symrand

#endif  // SYMRAND_CHANNEL_H
