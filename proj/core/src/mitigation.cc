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

#include "symrand/mitigation.h"

#include <algorithm>
#include <bit>
#include <cmath>

#include "symrand/circuit_library.h"
#include "symrand/rng.h"

namespace symrand {

namespace {

void check_readout_qubits(int num_qubits, const char *where) {
    if (num_qubits < 1 || num_qubits > kMaxDensityQubits) {
        throw std::invalid_argument(std::string(where) + ": qubit count " + std::to_string(num_qubits) +
                                    " out of range");
    }
}

// Observed-outcome histogram of basis state k, normalised.
std::vector<double> sample_column(const ReadoutNoiseModel &noise, std::uint64_t k, std::uint64_t shots,
                                  std::uint64_t seed) {
    auto flips = sample_distribution(noise.num_qubits(), noise.pattern_probabilities(), shots, seed);
    std::vector<double> column(flips.counts.size(), 0.0);
    for (std::uint64_t m = 0; m < flips.counts.size(); ++m) {
        column[k ^ m] = static_cast<double>(flips.counts[m]) / static_cast<double>(shots);
    }
    return column;
}

}  // namespace

TransitionMatrix TransitionMatrix::from_matrix(int num_qubits, Eigen::MatrixXd matrix,
                                               std::vector<std::uint64_t> shots_per_column) {
    check_readout_qubits(num_qubits, "TransitionMatrix");
    auto d = static_cast<Eigen::Index>(std::uint64_t{1} << num_qubits);
    if (matrix.rows() != d || matrix.cols() != d) {
        throw std::invalid_argument("TransitionMatrix: matrix is not 2^n x 2^n");
    }
    if (shots_per_column.empty()) {
        shots_per_column.assign(d, 0);
    }
    if (static_cast<Eigen::Index>(shots_per_column.size()) != d) {
        throw std::invalid_argument("TransitionMatrix: need one shot count per column");
    }
    for (Eigen::Index k = 0; k < d; ++k) {
        double sum = 0;
        for (Eigen::Index j = 0; j < d; ++j) {
            double v = matrix(j, k);
            if (!(v >= 0.0 && v <= 1.0)) {
                throw std::invalid_argument("TransitionMatrix: entry (" + std::to_string(j) + ", " +
                                            std::to_string(k) + ") outside [0, 1]");
            }
            sum += v;
        }
        if (std::abs(sum - 1.0) > kColumnSumTolerance) {
            throw std::invalid_argument("TransitionMatrix: column " + std::to_string(k) + " sums to " +
                                        std::to_string(sum));
        }
    }
    return TransitionMatrix(num_qubits, std::move(matrix), std::move(shots_per_column));
}

TransitionMatrix TransitionMatrix::identity(int num_qubits) {
    check_readout_qubits(num_qubits, "TransitionMatrix");
    auto d = static_cast<Eigen::Index>(std::uint64_t{1} << num_qubits);
    return from_matrix(num_qubits, Eigen::MatrixXd::Identity(d, d));
}

std::uint64_t TransitionMatrix::total_shots() const {
    std::uint64_t total = 0;
    for (auto s : shots_) {
        total += s;
    }
    return total;
}

std::vector<double> TransitionMatrix::apply(std::span<const double> p_ideal) const {
    if (static_cast<Eigen::Index>(p_ideal.size()) != matrix_.cols()) {
        throw std::invalid_argument("TransitionMatrix::apply: distribution has the wrong length");
    }
    Eigen::VectorXd p = Eigen::Map<const Eigen::VectorXd>(p_ideal.data(), p_ideal.size());
    Eigen::VectorXd out = matrix_ * p;
    return std::vector<double>(out.data(), out.data() + out.size());
}

ReadoutNoiseModel ReadoutNoiseModel::from_pattern_probabilities(int num_qubits, std::vector<double> probabilities) {
    check_readout_qubits(num_qubits, "ReadoutNoiseModel");
    if (probabilities.size() != (std::size_t{1} << num_qubits)) {
        throw std::invalid_argument("ReadoutNoiseModel: need 2^n flip-pattern probabilities");
    }
    double sum = 0;
    for (double p : probabilities) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw std::invalid_argument("ReadoutNoiseModel: probability outside [0, 1]");
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > kColumnSumTolerance) {
        throw std::invalid_argument("ReadoutNoiseModel: flip-pattern probabilities sum to " + std::to_string(sum));
    }
    return ReadoutNoiseModel(num_qubits, std::move(probabilities));
}

ReadoutNoiseModel ReadoutNoiseModel::from_events(int num_qubits,
                                                 std::span<const std::pair<std::uint64_t, double>> events) {
    check_readout_qubits(num_qubits, "ReadoutNoiseModel");
    std::size_t d = std::size_t{1} << num_qubits;
    std::vector<double> dist(d, 0.0);
    dist[0] = 1.0;
    for (auto [mask, prob] : events) {
        if (mask >= d || !(prob >= 0.0 && prob <= 1.0)) {
            throw std::invalid_argument("ReadoutNoiseModel: invalid flip event");
        }
        std::vector<double> next(d);
        for (std::size_t k = 0; k < d; ++k) {
            next[k] = (1.0 - prob) * dist[k] + prob * dist[k ^ mask];
        }
        dist = std::move(next);
    }
    return from_pattern_probabilities(num_qubits, std::move(dist));
}

ReadoutNoiseModel ReadoutNoiseModel::noiseless(int num_qubits) {
    return from_events(num_qubits, {});
}

ReadoutNoiseModel ReadoutNoiseModel::independent(int num_qubits, double p) {
    std::vector<std::pair<std::uint64_t, double>> events;
    for (int q = 0; q < num_qubits; ++q) {
        events.emplace_back(std::uint64_t{1} << q, p);
    }
    return from_events(num_qubits, events);
}

ReadoutNoiseModel ReadoutNoiseModel::loop_correlated(int num_qubits, double p, double q) {
    std::vector<std::pair<std::uint64_t, double>> events;
    for (int k = 0; k < num_qubits; ++k) {
        events.emplace_back(std::uint64_t{1} << k, p);
    }
    if (num_qubits >= 2) {
        int edges = num_qubits == 2 ? 1 : num_qubits;
        for (int k = 0; k < edges; ++k) {
            int next = (k + 1) % num_qubits;
            events.emplace_back((std::uint64_t{1} << k) | (std::uint64_t{1} << next), q);
        }
    }
    return from_events(num_qubits, events);
}

TransitionMatrix ReadoutNoiseModel::exact_transition_matrix() const {
    auto d = static_cast<Eigen::Index>(probabilities_.size());
    Eigen::MatrixXd s(d, d);
    for (Eigen::Index k = 0; k < d; ++k) {
        for (Eigen::Index j = 0; j < d; ++j) {
            s(j, k) = probabilities_[static_cast<std::size_t>(j ^ k)];
        }
    }
    return TransitionMatrix::from_matrix(num_qubits_, std::move(s));
}

std::vector<double> ReadoutNoiseModel::apply(std::span<const double> p_ideal) const {
    if (p_ideal.size() != probabilities_.size()) {
        throw std::invalid_argument("ReadoutNoiseModel::apply: distribution has the wrong length");
    }
    std::vector<double> out(p_ideal.size(), 0.0);
    for (std::size_t k = 0; k < p_ideal.size(); ++k) {
        if (p_ideal[k] == 0.0) {
            continue;
        }
        for (std::size_t m = 0; m < probabilities_.size(); ++m) {
            out[k ^ m] += p_ideal[k] * probabilities_[m];
        }
    }
    return out;
}

TransitionMatrix calibrate_full(const ReadoutNoiseModel &noise, std::uint64_t shots_per_state, std::uint64_t seed) {
    if (shots_per_state < 1) {
        throw std::invalid_argument("calibrate_full: need at least one shot per state");
    }
    std::uint64_t d = std::uint64_t{1} << noise.num_qubits();
    Eigen::MatrixXd s(d, d);
    for (std::uint64_t k = 0; k < d; ++k) {
        auto column = sample_column(noise, k, shots_per_state, derive_seed(seed, k));
        for (std::uint64_t j = 0; j < d; ++j) {
            s(j, k) = column[j];
        }
    }
    return TransitionMatrix::from_matrix(noise.num_qubits(), std::move(s),
                                         std::vector<std::uint64_t>(d, shots_per_state));
}

TransitionMatrix calibrate_symmetric(const ReadoutNoiseModel &noise, const SymmetryGroup &group,
                                     std::uint64_t shots_per_rep, std::uint64_t seed) {
    if (shots_per_rep < 1) {
        throw std::invalid_argument("calibrate_symmetric: need at least one shot per representative");
    }
    int n = noise.num_qubits();
    if (group.num_qubits() != n) {
        throw std::invalid_argument("calibrate_symmetric: group and noise act on different qubit counts");
    }
    std::uint64_t d = std::uint64_t{1} << n;
    auto elements = group.elements();
    // images[g][k] = g(k) on bitstrings.
    std::vector<std::vector<std::uint64_t>> images(elements.size(), std::vector<std::uint64_t>(d));
    for (std::size_t g = 0; g < elements.size(); ++g) {
        for (std::uint64_t k = 0; k < d; ++k) {
            images[g][k] = act_on_word(elements[g], k, 2);
        }
    }

    Eigen::MatrixXd s = Eigen::MatrixXd::Zero(d, d);
    std::vector<bool> filled(d, false);
    std::vector<std::uint64_t> shots(d, 0);
    for (const auto &rep : orbit_representatives(group, 2)) {
        std::uint64_t r = rep.word;
        auto raw = sample_column(noise, r, shots_per_rep, derive_seed(seed, r));
        shots[r] = shots_per_rep;

        std::vector<std::size_t> stabilizer;
        for (std::size_t g = 0; g < elements.size(); ++g) {
            if (images[g][r] == r) {
                stabilizer.push_back(g);
            }
        }
        // Average over the stabiliser, summing in sorted index order so that
        // stabiliser-related rows get bit-identical values.
        std::vector<double> averaged(d);
        std::vector<std::uint64_t> members(stabilizer.size());
        for (std::uint64_t j = 0; j < d; ++j) {
            for (std::size_t t = 0; t < stabilizer.size(); ++t) {
                members[t] = images[stabilizer[t]][j];
            }
            std::sort(members.begin(), members.end());
            double sum = 0;
            for (auto m : members) {
                sum += raw[m];
            }
            averaged[j] = sum / static_cast<double>(stabilizer.size());
        }

        for (std::size_t g = 0; g < elements.size(); ++g) {
            std::uint64_t k = images[g][r];
            if (filled[k]) {
                continue;
            }
            filled[k] = true;
            // S(g(j), g(r)) = S(j, r).
            for (std::uint64_t j = 0; j < d; ++j) {
                s(images[g][j], k) = averaged[j];
            }
        }
    }
    return TransitionMatrix::from_matrix(n, std::move(s), std::move(shots));
}

MitigatedDistribution mitigate_distribution(const TransitionMatrix &s, std::span<const double> p_noisy) {
    const auto &m = s.matrix();
    if (static_cast<Eigen::Index>(p_noisy.size()) != m.rows()) {
        throw std::invalid_argument("mitigate_distribution: distribution has the wrong length");
    }
    Eigen::VectorXd b = Eigen::Map<const Eigen::VectorXd>(p_noisy.data(), p_noisy.size());
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto &sv = svd.singularValues();
    double smallest = sv(sv.size() - 1);

    MitigatedDistribution out;
    out.condition_number = smallest > 0 ? sv(0) / smallest : std::numeric_limits<double>::infinity();
    Eigen::VectorXd x;
    if (out.condition_number <= kMaxConditionNumber) {
        x = m.partialPivLu().solve(b);
    } else {
        out.least_squares = true;
        x = svd.solve(b);
    }

    out.p.resize(x.size());
    double total = 0;
    for (Eigen::Index k = 0; k < x.size(); ++k) {
        if (x(k) < 0) {
            out.clipped_mass += -x(k);
            out.p[k] = 0.0;
        } else {
            out.p[k] = x(k);
        }
        total += out.p[k];
    }
    if (total > 0) {
        for (double &v : out.p) {
            v /= total;
        }
    }
    return out;
}

double tvd(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) {
        throw std::invalid_argument("tvd: distributions have different lengths");
    }
    double total = 0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        total += std::abs(p[k] - q[k]);
    }
    return 0.5 * total;
}

double parity_expectation(std::span<const double> p, std::uint64_t z_mask) {
    double total = 0;
    for (std::uint64_t k = 0; k < p.size(); ++k) {
        total += (std::popcount(k & z_mask) & 1) ? -p[k] : p[k];
    }
    return total;
}

MitigationResult evaluate_mitigation(const TransitionMatrix &s, std::span<const double> p_noisy,
                                     std::span<const double> p_ideal, std::uint64_t z_mask) {
    auto mitigated = mitigate_distribution(s, p_noisy);
    double ideal = parity_expectation(p_ideal, z_mask);
    MitigationResult result;
    result.tvd_before = tvd(p_noisy, p_ideal);
    result.tvd_after = tvd(mitigated.p, p_ideal);
    result.expectation_error_before = std::abs(parity_expectation(p_noisy, z_mask) - ideal);
    result.expectation_error_after = std::abs(parity_expectation(mitigated.p, z_mask) - ideal);
    result.samples_used = s.total_shots();
    result.clipped_mass = mitigated.clipped_mass;
    result.p_mitigated = std::move(mitigated.p);
    return result;
}

double measure_expectation(const DensityMatrix &rho, const PauliString &observable, std::uint64_t shots,
                           std::uint64_t seed) {
    if (shots == 0) {
        return expectation(rho, observable);
    }
    if (observable.x_mask() != 0) {
        throw std::invalid_argument("measure_expectation: sampled estimates need a diagonal (I/Z) observable");
    }
    auto counts = sample_counts(rho, shots, seed);
    return parity_expectation(counts.frequencies(), observable.z_mask());
}

double estimate_lambda(const Circuit &circuit, const PauliString &observable, std::uint64_t shots,
                       std::uint64_t seed) {
    Circuit estimation = zero_angle_circuit(circuit);
    double ideal = expectation(run_noisy(estimation.without_noise()), observable);
    if (std::abs(ideal) < 0.1) {
        throw std::invalid_argument("estimate_lambda: estimation circuit has |O_ideal| = " + std::to_string(ideal) +
                                    " < 0.1 for " + observable.str());
    }
    double noisy = measure_expectation(run_noisy(estimation), observable, shots, seed);
    return std::clamp(noisy / ideal, -1.0, 1.0);
}

double mitigate_expectation(double o_noisy, double lambda_prime) {
    if (!(lambda_prime >= kLambdaRejectionThreshold)) {
        throw RejectedRunError("mitigate_expectation: depolarizing factor " + std::to_string(lambda_prime) +
                               " below " + std::to_string(kLambdaRejectionThreshold) + ", run rejected");
    }
    return std::clamp(o_noisy / lambda_prime, -1.0, 1.0);
}

TvdBounds tvd_bounds(std::span<const std::vector<double>> outputs, std::span<const double> ideal) {
    if (outputs.empty()) {
        throw std::invalid_argument("tvd_bounds: no outputs");
    }
    TvdBounds bounds{std::numeric_limits<double>::infinity(), 0.0, 0.0, 0.0};
    std::vector<double> average(ideal.size(), 0.0);
    for (const auto &p : outputs) {
        double t = tvd(p, ideal);
        bounds.best = std::min(bounds.best, t);
        bounds.worst = std::max(bounds.worst, t);
        bounds.eff += t;
        for (std::size_t k = 0; k < average.size(); ++k) {
            average[k] += p[k];
        }
    }
    double scale = 1.0 / static_cast<double>(outputs.size());
    bounds.eff /= static_cast<double>(outputs.size());
    for (double &v : average) {
        v *= scale;
    }
    // Exact arithmetic gives best <= eff <= worst and of_average <= eff
    // (convexity); clamping removes last-ulp rounding when the TVDs tie.
    bounds.eff = std::clamp(bounds.eff, bounds.best, bounds.worst);
    bounds.of_average = std::min(tvd(average, ideal), bounds.eff);
    return bounds;
}

}  // namespace symrand
