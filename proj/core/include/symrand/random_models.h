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

#ifndef SYMRAND_RANDOM_MODELS_H
#define SYMRAND_RANDOM_MODELS_H

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "symrand/channel.h"
#include "symrand/rng.h"

namespace symrand {

/// Shape of the per-coefficient distribution around its mean. Both have
/// bounded support [mean - half_width, mean + half_width].
enum class CoefficientDistribution {
    Uniform,
    /// Symmetric triangular, sum of two uniforms.
    Triangular,
};

/// Support-subset mask: qubit q owns bit (n - 1 - q), like basis-state
/// indices. Mask 0 is the empty subset.
using SubsetMask = std::uint64_t;

/// Qubits of a subset, increasing.
std::vector<int> subset_qubits(SubsetMask mask, int num_qubits);
SubsetMask subset_mask(std::span<const int> qubits, int num_qubits);

/// Every non-identity coefficient drawn i.i.d. with mean eta.
struct R1Model {
    int num_qubits = 1;
    double eta = 0.0;
    /// Half-width of the support around eta.
    double spread = 0.0;
    CoefficientDistribution distribution = CoefficientDistribution::Uniform;
};

/// Coefficients of Paulis supported exactly on subset q drawn with mean eta_q.
struct R2Model {
    int num_qubits = 1;
    /// Indexed by SubsetMask, length 2^n; entry 0 is ignored.
    std::vector<double> eta_by_subset;
    /// Half-width of subset q is relative_spread * eta_q, so weak subsets stay
    /// non-negative without truncation.
    double relative_spread = 0.0;
    CoefficientDistribution distribution = CoefficientDistribution::Uniform;
};

/// eta_q = base * decay^(|q| - 1).
R2Model default_r2_model(int num_qubits, double base = 0.01, double decay = 0.1, double relative_spread = 0.0);

/// Throws std::invalid_argument when a model cannot produce valid channels:
/// eta +- spread outside [0, 1], eta_q outside [0, 1/2], or a mean channel
/// whose identity coefficient is negative.
void validate_model(const R1Model &model);
void validate_model(const R2Model &model);

using RandomModel = std::variant<R1Model, R2Model>;

int num_qubits(const RandomModel &model);

/// Mean coefficient of every Pauli under the model, identity taking the
/// remainder.
std::vector<double> expected_coefficients(const RandomModel &model);

/// Maximum number of whole-channel redraws before a model is declared
/// infeasible.
inline constexpr int kMaxSampleAttempts = 1000;

/// Streaming channel sampler. Deterministic in (model, seed); successive
/// draws form one stream, which is how randomisation in time is modelled.
///
/// A draw whose identity coefficient would come out negative is discarded and
/// the whole channel redrawn. After kMaxSampleAttempts consecutive rejections
/// draw() throws std::runtime_error.
class ChannelSampler {
  public:
    ChannelSampler(const RandomModel &model, std::uint64_t seed);

    int num_qubits() const { return num_qubits_; }

    /// Writes one channel's 4^n coefficients into `out`.
    void draw(std::span<double> out);
    PauliChannel next();

  private:
    double offset();

    int num_qubits_;
    CoefficientDistribution distribution_;
    std::vector<double> mean_;
    std::vector<double> half_width_;
    Rng rng_;
};

PauliChannel sample_channel_r1(const R1Model &model, std::uint64_t seed);
PauliChannel sample_channel_r2(const R2Model &model, std::uint64_t seed);

/// Coefficient-wise mean. Throws on an empty list or mixed qubit counts.
PauliChannel average_channels(std::span<const PauliChannel> channels);

/// Averages of the first N draws of one sampler stream for every N in
/// `checkpoints` (strictly increasing).
std::vector<PauliChannel> running_averages(ChannelSampler &sampler, std::span<const std::uint64_t> checkpoints);

/// Smallest N with 2 exp(-2 N eps^2) <= delta, i.e. ceil(ln(2/delta) / (2 eps^2)).
std::uint64_t hoeffding_n(double epsilon, double delta);

struct DepolarizingFit {
    /// Depolarizing parameter 4^n * per_operator.
    double lambda;
    /// Mean of the non-identity coefficients.
    double per_operator;
    /// channel_distance to uniform_channel(n, per_operator).
    double residual;
};
DepolarizingFit fit_depolarizing(const PauliChannel &channel);

inline constexpr int kMaxSubsetFitQubits = 6;

struct SubsetDepolarizingFit {
    int num_qubits;
    /// Mean coefficient of the Paulis supported exactly on each subset,
    /// indexed by SubsetMask; entry 0 holds the identity coefficient.
    std::vector<double> eta;
    /// Weights w_A of the mixture sum_A w_A D_A, where D_A fully depolarizes
    /// subset A. Indexed by SubsetMask; entry 0 is the no-error weight. They
    /// sum to one and reproduce the per-subset uniform channel exactly.
    std::vector<double> weights;
    /// channel_distance to the channel rebuilt from eta.
    double residual;

    /// Number of clusters among the non-empty-subset eta values at `tol`.
    std::size_t distinct_values(double tol) const;
};
SubsetDepolarizingFit fit_subset_depolarizing(const PauliChannel &channel);

/// Diagnostics of one averaged channel against its model.
struct ConvergenceReport {
    std::uint64_t num_channels;
    /// max_P |c_P - E[c_P]| over non-identity P.
    double max_dev;
    double epsilon;
    double delta;
    /// r1: global fit lambda. r2: total non-trivial mixture weight 1 - w_0.
    double fitted_lambda;
    /// r2 only: mixture weights per subset.
    std::vector<double> subset_weights;
    /// r1: fit_depolarizing residual. r2: fit_subset_depolarizing residual.
    double residual;
    /// channel_complexity at tolerance 2 * epsilon.
    std::size_t complexity_at_tol;
};

ConvergenceReport convergence_report(const RandomModel &model, const PauliChannel &average,
                                     std::uint64_t num_channels, double epsilon, double delta);

}  // namespace symrand

#endif  // SYMRAND_RANDOM_MODELS_H
