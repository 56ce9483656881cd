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

#include "symrand/random_models.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace symrand {

namespace {

void check_subset_qubits(int num_qubits, const char *where) {
    if (num_qubits < 1 || num_qubits > kMaxChannelQubits) {
        throw std::invalid_argument(std::string(where) + ": qubit count " + std::to_string(num_qubits) +
                                    " out of range");
    }
}

// Support mask of every encoded Pauli, in subset-mask convention.
std::vector<SubsetMask> support_table(int num_qubits) {
    std::vector<SubsetMask> table(pauli_count(num_qubits));
    for (std::uint64_t code = 0; code < table.size(); ++code) {
        table[code] = pauli_support(code, num_qubits);
    }
    return table;
}

}  // namespace

std::vector<int> subset_qubits(SubsetMask mask, int num_qubits) {
    std::vector<int> qubits;
    for (int q = 0; q < num_qubits; ++q) {
        if (mask & (SubsetMask{1} << (num_qubits - 1 - q))) {
            qubits.push_back(q);
        }
    }
    return qubits;
}

SubsetMask subset_mask(std::span<const int> qubits, int num_qubits) {
    SubsetMask mask = 0;
    int previous = -1;
    for (int q : qubits) {
        if (q <= previous || q >= num_qubits) {
            throw std::invalid_argument("subset_mask: qubits must be strictly increasing and in range");
        }
        mask |= SubsetMask{1} << (num_qubits - 1 - q);
        previous = q;
    }
    return mask;
}

R2Model default_r2_model(int num_qubits, double base, double decay, double relative_spread) {
    check_subset_qubits(num_qubits, "default_r2_model");
    R2Model model;
    model.num_qubits = num_qubits;
    model.relative_spread = relative_spread;
    model.eta_by_subset.assign(std::size_t{1} << num_qubits, 0.0);
    for (SubsetMask mask = 1; mask < model.eta_by_subset.size(); ++mask) {
        model.eta_by_subset[mask] = base * std::pow(decay, std::popcount(mask) - 1);
    }
    return model;
}

void validate_model(const R1Model &model) {
    check_subset_qubits(model.num_qubits, "R1Model");
    if (!(model.spread >= 0.0) || !(model.eta - model.spread >= 0.0) || !(model.eta + model.spread <= 1.0)) {
        throw std::invalid_argument("R1Model: support [eta - spread, eta + spread] = [" +
                                    std::to_string(model.eta - model.spread) + ", " +
                                    std::to_string(model.eta + model.spread) + "] leaves [0, 1]");
    }
    double identity = 1.0 - static_cast<double>(pauli_count(model.num_qubits) - 1) * model.eta;
    if (identity < -kNormalizationTolerance) {
        throw std::invalid_argument("R1Model: infeasible, mean identity coefficient 1 - (4^n - 1) eta = " +
                                    std::to_string(identity) + " is negative");
    }
}

void validate_model(const R2Model &model) {
    check_subset_qubits(model.num_qubits, "R2Model");
    if (model.eta_by_subset.size() != (std::size_t{1} << model.num_qubits)) {
        throw std::invalid_argument("R2Model: eta map needs 2^n entries");
    }
    if (!(model.relative_spread >= 0.0 && model.relative_spread <= 1.0)) {
        throw std::invalid_argument("R2Model: relative spread outside [0, 1]");
    }
    double identity = 1.0;
    for (SubsetMask mask = 1; mask < model.eta_by_subset.size(); ++mask) {
        double eta = model.eta_by_subset[mask];
        if (!(eta >= 0.0 && eta <= 0.5)) {
            throw std::invalid_argument("R2Model: eta for subset mask " + std::to_string(mask) +
                                        " outside [0, 1/2]");
        }
        identity -= std::pow(3.0, std::popcount(mask)) * eta;
    }
    if (identity < -kNormalizationTolerance) {
        throw std::invalid_argument("R2Model: infeasible, mean identity coefficient " + std::to_string(identity) +
                                    " is negative");
    }
}

int num_qubits(const RandomModel &model) {
    return std::visit([](const auto &m) { return m.num_qubits; }, model);
}

std::vector<double> expected_coefficients(const RandomModel &model) {
    int n = num_qubits(model);
    check_subset_qubits(n, "expected_coefficients");
    std::vector<double> mean(pauli_count(n), 0.0);
    if (const auto *r1 = std::get_if<R1Model>(&model)) {
        std::fill(mean.begin() + 1, mean.end(), r1->eta);
    } else {
        const auto &r2 = std::get<R2Model>(model);
        auto support = support_table(n);
        for (std::uint64_t code = 1; code < mean.size(); ++code) {
            mean[code] = r2.eta_by_subset.at(support[code]);
        }
    }
    double rest = 0;
    for (std::uint64_t code = 1; code < mean.size(); ++code) {
        rest += mean[code];
    }
    mean[0] = 1.0 - rest;
    return mean;
}

ChannelSampler::ChannelSampler(const RandomModel &model, std::uint64_t seed) : rng_(seed) {
    std::visit([](const auto &m) { validate_model(m); }, model);
    num_qubits_ = symrand::num_qubits(model);
    mean_ = expected_coefficients(model);
    half_width_.assign(mean_.size(), 0.0);
    if (const auto *r1 = std::get_if<R1Model>(&model)) {
        distribution_ = r1->distribution;
        std::fill(half_width_.begin() + 1, half_width_.end(), r1->spread);
    } else {
        const auto &r2 = std::get<R2Model>(model);
        distribution_ = r2.distribution;
        for (std::size_t k = 1; k < mean_.size(); ++k) {
            half_width_[k] = r2.relative_spread * mean_[k];
        }
    }
}

double ChannelSampler::offset() {
    if (distribution_ == CoefficientDistribution::Uniform) {
        return 2.0 * rng_.uniform() - 1.0;
    }
    return rng_.uniform() + rng_.uniform() - 1.0;
}

void ChannelSampler::draw(std::span<double> out) {
    if (out.size() != mean_.size()) {
        throw std::invalid_argument("ChannelSampler::draw: output span has wrong length");
    }
    for (int attempt = 0; attempt < kMaxSampleAttempts; ++attempt) {
        double rest = 0;
        for (std::size_t k = 1; k < out.size(); ++k) {
            double c = mean_[k] + half_width_[k] * offset();
            out[k] = c;
            rest += c;
        }
        double identity = 1.0 - rest;
        if (identity >= 0.0) {
            out[0] = identity;
            return;
        }
    }
    throw std::runtime_error("ChannelSampler: identity coefficient negative in " +
                             std::to_string(kMaxSampleAttempts) + " consecutive draws; model infeasible");
}

PauliChannel ChannelSampler::next() {
    std::vector<double> coeffs(mean_.size());
    draw(coeffs);
    return make_channel(num_qubits_, std::move(coeffs));
}

PauliChannel sample_channel_r1(const R1Model &model, std::uint64_t seed) {
    return ChannelSampler(model, seed).next();
}

PauliChannel sample_channel_r2(const R2Model &model, std::uint64_t seed) {
    return ChannelSampler(model, seed).next();
}

PauliChannel average_channels(std::span<const PauliChannel> channels) {
    if (channels.empty()) {
        throw std::invalid_argument("average_channels: empty list");
    }
    int n = channels.front().num_qubits();
    std::vector<double> sum(pauli_count(n), 0.0);
    for (const auto &channel : channels) {
        if (channel.num_qubits() != n) {
            throw std::invalid_argument("average_channels: mixed qubit counts");
        }
        auto coeffs = channel.coeffs();
        for (std::size_t k = 0; k < sum.size(); ++k) {
            sum[k] += coeffs[k];
        }
    }
    double scale = 1.0 / static_cast<double>(channels.size());
    for (double &c : sum) {
        c *= scale;
    }
    return make_channel(n, std::move(sum));
}

std::vector<PauliChannel> running_averages(ChannelSampler &sampler, std::span<const std::uint64_t> checkpoints) {
    std::vector<PauliChannel> out;
    std::size_t size = pauli_count(sampler.num_qubits());
    std::vector<double> sum(size, 0.0);
    std::vector<double> draw(size);
    std::uint64_t drawn = 0;
    for (std::uint64_t target : checkpoints) {
        if (target <= drawn) {
            throw std::invalid_argument("running_averages: checkpoints must be strictly increasing and positive");
        }
        for (; drawn < target; ++drawn) {
            sampler.draw(draw);
            for (std::size_t k = 0; k < size; ++k) {
                sum[k] += draw[k];
            }
        }
        std::vector<double> mean(size);
        for (std::size_t k = 0; k < size; ++k) {
            mean[k] = sum[k] / static_cast<double>(target);
        }
        out.push_back(make_channel(sampler.num_qubits(), std::move(mean)));
    }
    return out;
}

std::uint64_t hoeffding_n(double epsilon, double delta) {
    if (!(epsilon > 0.0 && epsilon < 1.0) || !(delta > 0.0 && delta < 1.0)) {
        throw std::invalid_argument("hoeffding_n: epsilon and delta must lie in (0, 1)");
    }
    double bound = std::log(2.0 / delta) / (2.0 * epsilon * epsilon);
    // Absorb rounding when the bound is an exact integer.
    return static_cast<std::uint64_t>(std::max(1.0, std::ceil(bound * (1.0 - 1e-12))));
}

DepolarizingFit fit_depolarizing(const PauliChannel &channel) {
    int n = channel.num_qubits();
    double per_operator = (1.0 - channel.identity_coefficient()) / static_cast<double>(pauli_count(n) - 1);
    per_operator = std::max(per_operator, 0.0);
    double residual = channel_distance(channel, uniform_channel(n, per_operator));
    return DepolarizingFit{depolarizing_parameter(n, per_operator), per_operator, residual};
}

std::size_t SubsetDepolarizingFit::distinct_values(double tol) const {
    return count_distinct(std::span<const double>(eta).subspan(1), tol);
}

SubsetDepolarizingFit fit_subset_depolarizing(const PauliChannel &channel) {
    int n = channel.num_qubits();
    if (n > kMaxSubsetFitQubits) {
        throw std::invalid_argument("fit_subset_depolarizing: limited to n <= " +
                                    std::to_string(kMaxSubsetFitQubits));
    }
    std::size_t subsets = std::size_t{1} << n;
    auto support = support_table(n);
    auto coeffs = channel.coeffs();

    std::vector<double> sum(subsets, 0.0);
    std::vector<double> count(subsets, 0.0);
    for (std::uint64_t code = 0; code < coeffs.size(); ++code) {
        sum[support[code]] += coeffs[code];
        count[support[code]] += 1.0;
    }
    SubsetDepolarizingFit fit;
    fit.num_qubits = n;
    fit.eta.resize(subsets);
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        fit.eta[mask] = sum[mask] / count[mask];
    }

    std::vector<double> rebuilt(coeffs.size());
    for (std::uint64_t code = 0; code < coeffs.size(); ++code) {
        rebuilt[code] = fit.eta[support[code]];
    }
    fit.residual = channel_distance(channel, make_channel(n, std::move(rebuilt)));

    // eta_q = sum_{A >= q} w_A / 4^|A|; invert on the superset lattice.
    std::vector<double> g = fit.eta;
    for (int bit = 0; bit < n; ++bit) {
        SubsetMask b = SubsetMask{1} << bit;
        for (std::size_t mask = 0; mask < subsets; ++mask) {
            if (!(mask & b)) {
                g[mask] -= g[mask | b];
            }
        }
    }
    fit.weights.resize(subsets);
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        fit.weights[mask] = g[mask] * static_cast<double>(pauli_count(std::popcount(mask)));
    }
    return fit;
}

ConvergenceReport convergence_report(const RandomModel &model, const PauliChannel &average,
                                     std::uint64_t num_channels, double epsilon, double delta) {
    auto expected = expected_coefficients(model);
    if (expected.size() != average.coeffs().size()) {
        throw std::invalid_argument("convergence_report: model and channel qubit counts differ");
    }
    ConvergenceReport report{};
    report.num_channels = num_channels;
    report.epsilon = epsilon;
    report.delta = delta;
    for (std::size_t k = 1; k < expected.size(); ++k) {
        report.max_dev = std::max(report.max_dev, std::abs(average[k] - expected[k]));
    }
    report.complexity_at_tol = channel_complexity(average, 2.0 * epsilon);
    if (std::holds_alternative<R1Model>(model)) {
        auto fit = fit_depolarizing(average);
        report.fitted_lambda = fit.lambda;
        report.residual = fit.residual;
    } else {
        auto fit = fit_subset_depolarizing(average);
        report.fitted_lambda = 1.0 - fit.weights[0];
        report.subset_weights = fit.weights;
        report.residual = fit.residual;
    }
    return report;
}

}  // namespace symrand
