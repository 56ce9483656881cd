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

#include "symrand/channel.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace symrand {

namespace {

void check_qubits(int num_qubits, const char *where) {
    if (num_qubits < 1 || num_qubits > kMaxChannelQubits) {
        throw std::invalid_argument(std::string(where) + ": qubit count " + std::to_string(num_qubits) +
                                    " outside [1, " + std::to_string(kMaxChannelQubits) + "]");
    }
}

}  // namespace

PauliChannel::PauliChannel(int num_qubits, std::vector<double> coeffs)
    : num_qubits_(num_qubits), coeffs_(std::move(coeffs)) {
}

PauliChannel make_channel(int num_qubits, std::vector<double> coeffs) {
    check_qubits(num_qubits, "make_channel");
    if (coeffs.size() != pauli_count(num_qubits)) {
        throw std::invalid_argument("make_channel: expected " + std::to_string(pauli_count(num_qubits)) +
                                    " coefficients, got " + std::to_string(coeffs.size()));
    }
    double sum = 0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        double c = coeffs[k];
        if (!(c >= 0.0)) {
            throw std::invalid_argument("make_channel: coefficient " + std::to_string(k) + " of " +
                                        PauliString(num_qubits, k).str() + " is negative or NaN");
        }
        if (c > 1.0) {
            throw std::invalid_argument("make_channel: coefficient " + std::to_string(k) + " exceeds 1");
        }
        sum += c;
    }
    double drift = std::abs(sum - 1.0);
    if (drift > kRenormalizationThreshold) {
        throw std::invalid_argument("make_channel: coefficients sum to " + std::to_string(sum));
    }
    if (drift > kNormalizationTolerance) {
        for (double &c : coeffs) {
            c /= sum;
        }
    }
    return PauliChannel(num_qubits, std::move(coeffs));
}

PauliChannel identity_channel(int num_qubits) {
    check_qubits(num_qubits, "identity_channel");
    std::vector<double> coeffs(pauli_count(num_qubits), 0.0);
    coeffs[0] = 1.0;
    return make_channel(num_qubits, std::move(coeffs));
}

PauliChannel uniform_channel(int num_qubits, double per_operator) {
    check_qubits(num_qubits, "uniform_channel");
    std::uint64_t count = pauli_count(num_qubits);
    double identity = 1.0 - static_cast<double>(count - 1) * per_operator;
    if (per_operator < 0.0 || identity < -kNormalizationTolerance) {
        throw std::invalid_argument("uniform_channel: per-operator coefficient " + std::to_string(per_operator) +
                                    " does not give a valid channel");
    }
    std::vector<double> coeffs(count, per_operator);
    coeffs[0] = std::max(identity, 0.0);
    return make_channel(num_qubits, std::move(coeffs));
}

PauliChannel depolarizing_channel(int num_qubits, double lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw std::invalid_argument("depolarizing_channel: lambda " + std::to_string(lambda) + " outside [0, 1]");
    }
    check_qubits(num_qubits, "depolarizing_channel");
    return uniform_channel(num_qubits, lambda / static_cast<double>(pauli_count(num_qubits)));
}

double depolarizing_parameter(int num_qubits, double per_operator) {
    return static_cast<double>(pauli_count(num_qubits)) * per_operator;
}

std::size_t count_distinct(std::span<const double> values, double tol) {
    if (values.empty()) {
        return 0;
    }
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    std::size_t clusters = 1;
    for (std::size_t k = 1; k < sorted.size(); ++k) {
        if (sorted[k] - sorted[k - 1] > tol) {
            ++clusters;
        }
    }
    return clusters;
}

std::size_t channel_complexity(const PauliChannel &channel, double tol) {
    return count_distinct(channel.coeffs().subspan(1), tol);
}

std::size_t channel_complexity_with_identity(const PauliChannel &channel, double tol) {
    return count_distinct(channel.coeffs(), tol);
}

PauliChannel compose_channels(const PauliChannel &second, const PauliChannel &first) {
    if (second.num_qubits() != first.num_qubits()) {
        throw std::invalid_argument("compose_channels: qubit count mismatch");
    }
    auto a = first.coeffs();
    auto b = second.coeffs();
    std::vector<double> out(a.size(), 0.0);
    for (std::uint64_t q = 0; q < a.size(); ++q) {
        if (a[q] == 0) {
            continue;
        }
        for (std::uint64_t p = 0; p < b.size(); ++p) {
            out[p ^ q] += a[q] * b[p];
        }
    }
    return make_channel(first.num_qubits(), std::move(out));
}

double channel_distance(const PauliChannel &a, const PauliChannel &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("channel_distance: qubit count mismatch");
    }
    double total = 0;
    auto ca = a.coeffs();
    auto cb = b.coeffs();
    for (std::size_t k = 0; k < ca.size(); ++k) {
        total += std::abs(ca[k] - cb[k]);
    }
    return 0.5 * total;
}

}  // namespace symrand
