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

#include "symrand/circuit.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

#include "symrand/rng.h"

namespace symrand {

namespace {

using cd = std::complex<double>;

struct Matrix2 {
    cd m00, m01, m10, m11;
};

Matrix2 single_qubit_matrix(const Gate &gate) {
    const double r = 1.0 / std::sqrt(2.0);
    const cd i(0.0, 1.0);
    switch (gate.kind) {
        case GateKind::H:
            return {r, r, r, -r};
        case GateKind::X:
            return {0.0, 1.0, 1.0, 0.0};
        case GateKind::Y:
            return {0.0, -i, i, 0.0};
        case GateKind::Z:
            return {1.0, 0.0, 0.0, -1.0};
        case GateKind::RX: {
            double c = std::cos(gate.theta / 2);
            double s = std::sin(gate.theta / 2);
            return {c, -i * s, -i * s, c};
        }
        default:
            throw std::logic_error("single_qubit_matrix: not a single-qubit gate");
    }
}

std::uint64_t qubit_bit(int num_qubits, int q) {
    return std::uint64_t{1} << (num_qubits - 1 - q);
}

// rows <- U rows
void left_single(Eigen::MatrixXcd &m, const Matrix2 &u, std::uint64_t bit) {
    auto d = static_cast<std::uint64_t>(m.rows());
    for (std::uint64_t i0 = 0; i0 < d; ++i0) {
        if (i0 & bit) {
            continue;
        }
        std::uint64_t i1 = i0 | bit;
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            cd a0 = m(i0, c);
            cd a1 = m(i1, c);
            m(i0, c) = u.m00 * a0 + u.m01 * a1;
            m(i1, c) = u.m10 * a0 + u.m11 * a1;
        }
    }
}

// columns <- columns U^dagger
void right_single_adjoint(Eigen::MatrixXcd &m, const Matrix2 &u, std::uint64_t bit) {
    auto d = static_cast<std::uint64_t>(m.cols());
    for (std::uint64_t j0 = 0; j0 < d; ++j0) {
        if (j0 & bit) {
            continue;
        }
        std::uint64_t j1 = j0 | bit;
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            cd a0 = m(r, j0);
            cd a1 = m(r, j1);
            m(r, j0) = a0 * std::conj(u.m00) + a1 * std::conj(u.m01);
            m(r, j1) = a0 * std::conj(u.m10) + a1 * std::conj(u.m11);
        }
    }
}

std::uint64_t cnot_map(std::uint64_t index, std::uint64_t control, std::uint64_t target) {
    return (index & control) ? index ^ target : index;
}

// Applies one gate as U . m (rows only) when `adjoint_side` is false, or
// m . U^dagger (columns only) when true.
void apply_gate_side(Eigen::MatrixXcd &m, int num_qubits, const Gate &gate, bool adjoint_side) {
    if (gate.kind == GateKind::CZ) {
        std::uint64_t both = qubit_bit(num_qubits, gate.q0) | qubit_bit(num_qubits, gate.q1);
        auto d = static_cast<std::uint64_t>(adjoint_side ? m.cols() : m.rows());
        for (std::uint64_t k = 0; k < d; ++k) {
            if ((k & both) == both) {
                if (adjoint_side) {
                    m.col(k) *= -1.0;
                } else {
                    m.row(k) *= -1.0;
                }
            }
        }
        return;
    }
    if (gate.kind == GateKind::CNOT) {
        std::uint64_t control = qubit_bit(num_qubits, gate.q0);
        std::uint64_t target = qubit_bit(num_qubits, gate.q1);
        auto d = static_cast<std::uint64_t>(adjoint_side ? m.cols() : m.rows());
        for (std::uint64_t k = 0; k < d; ++k) {
            std::uint64_t f = cnot_map(k, control, target);
            if (f > k) {
                if (adjoint_side) {
                    m.col(k).swap(m.col(f));
                } else {
                    m.row(k).swap(m.row(f));
                }
            }
        }
        return;
    }
    Matrix2 u = single_qubit_matrix(gate);
    if (adjoint_side) {
        right_single_adjoint(m, u, qubit_bit(num_qubits, gate.q0));
    } else {
        left_single(m, u, qubit_bit(num_qubits, gate.q0));
    }
}

struct PauliMasks {
    std::uint64_t x;
    std::uint64_t z;
};

std::vector<PauliMasks> mask_table(int num_qubits) {
    std::vector<PauliMasks> table(pauli_count(num_qubits));
    for (std::uint64_t code = 0; code < table.size(); ++code) {
        PauliString p(num_qubits, code);
        table[code] = {p.x_mask(), p.z_mask()};
    }
    return table;
}

// In-place unnormalised Walsh-Hadamard transform: out[d] = sum_z in[z] (-1)^{|d & z|}.
void walsh_hadamard(std::vector<double> &v) {
    for (std::size_t half = 1; half < v.size(); half <<= 1) {
        for (std::size_t i = 0; i < v.size(); i += 2 * half) {
            for (std::size_t j = i; j < i + half; ++j) {
                double a = v[j];
                double b = v[j + half];
                v[j] = a + b;
                v[j + half] = a - b;
            }
        }
    }
}

void check_same_qubits(int a, int b, const char *where) {
    if (a != b) {
        throw std::invalid_argument(std::string(where) + ": qubit count mismatch (" + std::to_string(a) + " vs " +
                                    std::to_string(b) + ")");
    }
}

std::vector<std::uint64_t> basis_permutation(const QubitPermutation &perm) {
    std::uint64_t d = std::uint64_t{1} << perm.num_qubits();
    std::vector<std::uint64_t> map(d);
    for (std::uint64_t k = 0; k < d; ++k) {
        map[k] = act_on_word(perm, k, 2);
    }
    return map;
}

}  // namespace

std::string_view to_string(GateKind kind) {
    switch (kind) {
        case GateKind::H:
            return "H";
        case GateKind::X:
            return "X";
        case GateKind::Y:
            return "Y";
        case GateKind::Z:
            return "Z";
        case GateKind::CZ:
            return "CZ";
        case GateKind::CNOT:
            return "CNOT";
        case GateKind::RX:
            return "RX";
    }
    return "?";
}

GateKind parse_gate_kind(std::string_view name) {
    for (auto kind : {GateKind::H, GateKind::X, GateKind::Y, GateKind::Z, GateKind::CZ, GateKind::CNOT, GateKind::RX}) {
        if (to_string(kind) == name) {
            return kind;
        }
    }
    throw std::invalid_argument("unknown gate kind '" + std::string(name) + "'");
}

bool is_two_qubit(GateKind kind) {
    return kind == GateKind::CZ || kind == GateKind::CNOT;
}

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxDensityQubits) {
        throw std::invalid_argument("Circuit: qubit count " + std::to_string(num_qubits) + " outside [1, " +
                                    std::to_string(kMaxDensityQubits) + "]");
    }
}

Circuit &Circuit::add_layer(std::vector<Gate> gates, std::optional<PauliChannel> noise) {
    std::vector<bool> used(num_qubits_, false);
    auto claim = [&](int q, std::size_t index) {
        if (q < 0 || q >= num_qubits_) {
            throw std::invalid_argument("Circuit: gate " + std::to_string(index) + " in layer " +
                                        std::to_string(layers_.size()) + " targets qubit " + std::to_string(q) +
                                        " out of range");
        }
        if (used[q]) {
            throw std::invalid_argument("Circuit: qubit " + std::to_string(q) + " appears twice in layer " +
                                        std::to_string(layers_.size()));
        }
        used[q] = true;
    };
    for (std::size_t k = 0; k < gates.size(); ++k) {
        claim(gates[k].q0, k);
        if (is_two_qubit(gates[k].kind)) {
            claim(gates[k].q1, k);
        } else {
            gates[k].q1 = -1;
        }
        if (gates[k].kind != GateKind::RX) {
            gates[k].theta = 0.0;
        }
    }
    if (noise && noise->num_qubits() != num_qubits_) {
        throw std::invalid_argument("Circuit: noise channel on layer " + std::to_string(layers_.size()) +
                                    " has the wrong qubit count");
    }
    layers_.push_back(Layer{std::move(gates), std::move(noise)});
    return *this;
}

Circuit Circuit::without_noise() const {
    Circuit out = *this;
    for (auto &layer : out.layers_) {
        layer.noise.reset();
    }
    return out;
}

Circuit Circuit::with_noise(std::span<const std::optional<PauliChannel>> noise) const {
    if (noise.size() != layers_.size()) {
        throw std::invalid_argument("Circuit::with_noise: need one entry per layer");
    }
    Circuit out(num_qubits_);
    for (std::size_t k = 0; k < layers_.size(); ++k) {
        out.add_layer(layers_[k].gates, noise[k]);
    }
    return out;
}

DensityMatrix apply_gates(const DensityMatrix &rho, std::span<const Gate> gates) {
    DensityMatrix out = rho;
    auto &m = out.mutable_matrix();
    for (const auto &gate : gates) {
        apply_gate_side(m, rho.num_qubits(), gate, false);
        apply_gate_side(m, rho.num_qubits(), gate, true);
    }
    return out;
}

DensityMatrix apply_channel(const DensityMatrix &rho, const PauliChannel &channel) {
    check_same_qubits(rho.num_qubits(), channel.num_qubits(), "apply_channel");
    int n = rho.num_qubits();
    std::uint64_t d = rho.dim();
    auto masks = mask_table(n);

    // Coefficients grouped by x mask, indexed by z mask.
    std::vector<std::vector<double>> by_x(d);
    auto coeffs = channel.coeffs();
    for (std::uint64_t code = 0; code < coeffs.size(); ++code) {
        if (coeffs[code] == 0.0) {
            continue;
        }
        auto &row = by_x[masks[code].x];
        if (row.empty()) {
            row.assign(d, 0.0);
        }
        row[masks[code].z] += coeffs[code];
    }

    const auto &in = rho.matrix();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
    for (std::uint64_t x = 0; x < d; ++x) {
        auto &w = by_x[x];
        if (w.empty()) {
            continue;
        }
        walsh_hadamard(w);
        for (std::uint64_t l = 0; l < d; ++l) {
            for (std::uint64_t k = 0; k < d; ++k) {
                out(k, l) += w[k ^ l] * in(k ^ x, l ^ x);
            }
        }
    }
    DensityMatrix result = rho;
    result.mutable_matrix() = std::move(out);
    return result;
}

DensityMatrix run_noisy(const Circuit &circuit) {
    return run_noisy(circuit, DensityMatrix::zero_state(circuit.num_qubits()));
}

DensityMatrix run_noisy(const Circuit &circuit, const DensityMatrix &initial) {
    check_same_qubits(circuit.num_qubits(), initial.num_qubits(), "run_noisy");
    DensityMatrix rho = initial;
    auto layers = circuit.layers();
    for (std::size_t k = 0; k < layers.size(); ++k) {
        rho = apply_gates(rho, layers[k].gates);
        if (layers[k].noise) {
            rho = apply_channel(rho, *layers[k].noise);
        }
        try {
            rho.check_invariants();
        } catch (const std::runtime_error &e) {
            throw std::runtime_error("run_noisy: layer " + std::to_string(k) + ": " + e.what());
        }
    }
    return rho;
}

double expectation(const DensityMatrix &rho, const PauliString &observable) {
    check_same_qubits(rho.num_qubits(), observable.num_qubits(), "expectation");
    std::uint64_t x = observable.x_mask();
    std::uint64_t z = observable.z_mask();
    static constexpr cd kPowersOfI[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    cd alpha = kPowersOfI[std::popcount(x & z) % 4];
    const auto &m = rho.matrix();
    cd total = 0;
    for (std::uint64_t k = 0; k < rho.dim(); ++k) {
        double sign = (std::popcount(k & z) & 1) ? -1.0 : 1.0;
        total += m(k, k ^ x) * sign;
    }
    return (alpha * total).real();
}

std::vector<double> probabilities(const DensityMatrix &rho) {
    std::vector<double> p(rho.dim());
    for (std::uint64_t k = 0; k < rho.dim(); ++k) {
        p[k] = std::max(rho.matrix()(k, k).real(), 0.0);
    }
    return p;
}

std::uint64_t Counts::total() const {
    std::uint64_t sum = 0;
    for (auto c : counts) {
        sum += c;
    }
    return sum;
}

std::vector<double> Counts::frequencies() const {
    std::vector<double> f(counts.size(), 0.0);
    double shots = static_cast<double>(total());
    if (shots == 0) {
        return f;
    }
    for (std::size_t k = 0; k < counts.size(); ++k) {
        f[k] = static_cast<double>(counts[k]) / shots;
    }
    return f;
}

Counts sample_distribution(int num_qubits, std::span<const double> distribution, std::uint64_t shots,
                           std::uint64_t seed) {
    if (distribution.size() != (std::size_t{1} << num_qubits)) {
        throw std::invalid_argument("sample_distribution: distribution length is not 2^n");
    }
    if (shots < 1) {
        throw std::invalid_argument("sample_distribution: need at least one shot");
    }
    double mass = 0;
    for (double p : distribution) {
        if (!(p >= 0.0)) {
            throw std::invalid_argument("sample_distribution: negative or NaN probability");
        }
        mass += p;
    }
    if (std::abs(mass - 1.0) > kRenormalizationThreshold) {
        throw std::invalid_argument("sample_distribution: probabilities sum to " + std::to_string(mass));
    }
    Rng rng(seed);
    Counts out{num_qubits, std::vector<std::uint64_t>(distribution.size(), 0)};
    std::uint64_t remaining = shots;
    for (std::size_t k = 0; k + 1 < distribution.size() && remaining > 0; ++k) {
        double p = mass > 0 ? std::clamp(distribution[k] / mass, 0.0, 1.0) : 0.0;
        std::uint64_t c = 0;
        if (p >= 1.0) {
            c = remaining;
        } else if (p > 0.0) {
            std::binomial_distribution<std::uint64_t> binomial(remaining, p);
            c = binomial(rng);
        }
        out.counts[k] = c;
        remaining -= c;
        mass -= distribution[k];
    }
    out.counts.back() += remaining;
    return out;
}

Counts sample_counts(const DensityMatrix &rho, std::uint64_t shots, std::uint64_t seed) {
    auto p = probabilities(rho);
    return sample_distribution(rho.num_qubits(), p, shots, seed);
}

DensityMatrix permute_state(const DensityMatrix &rho, const QubitPermutation &perm) {
    check_same_qubits(rho.num_qubits(), perm.num_qubits(), "permute_state");
    auto map = basis_permutation(perm);
    const auto &in = rho.matrix();
    Eigen::MatrixXcd out(in.rows(), in.cols());
    for (std::uint64_t j = 0; j < map.size(); ++j) {
        for (std::uint64_t i = 0; i < map.size(); ++i) {
            out(map[i], map[j]) = in(i, j);
        }
    }
    DensityMatrix result = rho;
    result.mutable_matrix() = std::move(out);
    return result;
}

std::vector<double> permute_distribution(std::span<const double> distribution, const QubitPermutation &perm) {
    if (distribution.size() != (std::size_t{1} << perm.num_qubits())) {
        throw std::invalid_argument("permute_distribution: distribution length is not 2^n");
    }
    auto map = basis_permutation(perm);
    std::vector<double> out(distribution.size());
    for (std::size_t k = 0; k < map.size(); ++k) {
        out[map[k]] = distribution[k];
    }
    return out;
}

Circuit permute_circuit(const Circuit &circuit, const QubitPermutation &perm) {
    check_same_qubits(circuit.num_qubits(), perm.num_qubits(), "permute_circuit");
    Circuit out(circuit.num_qubits());
    for (const auto &layer : circuit.layers()) {
        std::vector<Gate> gates = layer.gates;
        for (auto &gate : gates) {
            gate.q0 = perm(gate.q0);
            if (is_two_qubit(gate.kind)) {
                gate.q1 = perm(gate.q1);
            }
        }
        out.add_layer(std::move(gates), layer.noise);
    }
    return out;
}

DensityMatrix parallel_average(std::span<const Circuit> circuits, const DensityMatrix &initial) {
    if (circuits.empty()) {
        throw std::invalid_argument("parallel_average: empty circuit list");
    }
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(initial.dim(), initial.dim());
    for (const auto &circuit : circuits) {
        sum += run_noisy(circuit, initial).matrix();
    }
    DensityMatrix result = initial;
    result.mutable_matrix() = sum / static_cast<double>(circuits.size());
    return result;
}

DensityMatrix parallel_average(const Circuit &circuit, std::span<const QubitPermutation> mappings,
                               const DensityMatrix &initial) {
    if (mappings.empty()) {
        throw std::invalid_argument("parallel_average: empty mapping list");
    }
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(initial.dim(), initial.dim());
    for (const auto &g : mappings) {
        auto physical = run_noisy(permute_circuit(circuit, g), permute_state(initial, g));
        sum += permute_state(physical, g.inverse()).matrix();
    }
    DensityMatrix result = initial;
    result.mutable_matrix() = sum / static_cast<double>(mappings.size());
    return result;
}

PauliChannel propagate_pauli_through_pauli_layer(const PauliChannel &channel, std::span<const Gate> layer) {
    for (std::size_t k = 0; k < layer.size(); ++k) {
        GateKind kind = layer[k].kind;
        if (kind != GateKind::X && kind != GateKind::Y && kind != GateKind::Z) {
            throw std::invalid_argument("propagate_pauli_through_pauli_layer: gate " + std::to_string(k) + " is " +
                                        std::string(to_string(kind)) + ", not a Pauli");
        }
        if (layer[k].q0 < 0 || layer[k].q0 >= channel.num_qubits()) {
            throw std::invalid_argument("propagate_pauli_through_pauli_layer: gate target out of range");
        }
    }
    return channel;
}

Counts sample_trajectories(const Circuit &circuit, std::uint64_t shots, std::uint64_t seed,
                           std::uint64_t initial_index) {
    int n = circuit.num_qubits();
    std::uint64_t d = std::uint64_t{1} << n;
    if (initial_index >= d) {
        throw std::invalid_argument("sample_trajectories: initial index out of range");
    }
    auto masks = mask_table(n);
    auto layers = circuit.layers();
    std::vector<std::vector<double>> cumulative(layers.size());
    for (std::size_t k = 0; k < layers.size(); ++k) {
        if (!layers[k].noise) {
            continue;
        }
        auto coeffs = layers[k].noise->coeffs();
        cumulative[k].resize(coeffs.size());
        double acc = 0;
        for (std::size_t c = 0; c < coeffs.size(); ++c) {
            acc += coeffs[c];
            cumulative[k][c] = acc;
        }
    }

    Rng rng(seed);
    Counts out{n, std::vector<std::uint64_t>(d, 0)};
    Eigen::MatrixXcd psi(d, 1);
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        psi.setZero();
        psi(initial_index, 0) = 1.0;
        for (std::size_t k = 0; k < layers.size(); ++k) {
            for (const auto &gate : layers[k].gates) {
                apply_gate_side(psi, n, gate, false);
            }
            if (cumulative[k].empty()) {
                continue;
            }
            double u = rng.uniform() * cumulative[k].back();
            auto it = std::upper_bound(cumulative[k].begin(), cumulative[k].end(), u);
            std::size_t code = std::min<std::size_t>(it - cumulative[k].begin(), cumulative[k].size() - 1);
            // The global phase i^#Y is irrelevant for sampling.
            auto [x, z] = masks[code];
            Eigen::MatrixXcd next(d, 1);
            for (std::uint64_t j = 0; j < d; ++j) {
                double sign = (std::popcount(j & z) & 1) ? -1.0 : 1.0;
                next(j ^ x, 0) = sign * psi(j, 0);
            }
            psi = std::move(next);
        }
        double u = rng.uniform();
        double acc = 0;
        std::uint64_t outcome = d - 1;
        for (std::uint64_t j = 0; j < d; ++j) {
            acc += std::norm(psi(j, 0));
            if (u < acc) {
                outcome = j;
                break;
            }
        }
        ++out.counts[outcome];
    }
    return out;
}

}  // namespace symrand
