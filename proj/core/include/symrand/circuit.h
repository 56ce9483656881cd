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

#ifndef SYMRAND_CIRCUIT_H
#define SYMRAND_CIRCUIT_H

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symrand/channel.h"
#include "symrand/density_matrix.h"
#include "symrand/symmetry.h"

namespace symrand {

enum class GateKind { H, X, Y, Z, CZ, CNOT, RX };

std::string_view to_string(GateKind kind);
GateKind parse_gate_kind(std::string_view name);
bool is_two_qubit(GateKind kind);

/// q0 is the target of single-qubit gates and the control of CNOT.
struct Gate {
    GateKind kind;
    int q0;
    int q1 = -1;
    /// RX angle in radians; ignored otherwise.
    double theta = 0.0;

    static Gate h(int q) { return {GateKind::H, q}; }
    static Gate x(int q) { return {GateKind::X, q}; }
    static Gate y(int q) { return {GateKind::Y, q}; }
    static Gate z(int q) { return {GateKind::Z, q}; }
    static Gate cz(int a, int b) { return {GateKind::CZ, a, b}; }
    static Gate cnot(int control, int target) { return {GateKind::CNOT, control, target}; }
    static Gate rx(int q, double theta) { return {GateKind::RX, q, -1, theta}; }

    bool operator==(const Gate &other) const = default;
};

/// Ideal gate layer U_k followed by its error channel, if any.
struct Layer {
    std::vector<Gate> gates;
    std::optional<PauliChannel> noise;

    bool operator==(const Layer &other) const = default;
};

class Circuit {
  public:
    explicit Circuit(int num_qubits);

    /// Throws std::invalid_argument on out-of-range or repeated qubits inside
    /// the layer, or a noise channel of the wrong size.
    Circuit &add_layer(std::vector<Gate> gates, std::optional<PauliChannel> noise = std::nullopt);

    int num_qubits() const { return num_qubits_; }
    std::span<const Layer> layers() const { return layers_; }

    /// Same gates, every layer noiseless.
    Circuit without_noise() const;
    /// Same gates with one channel (or nullopt) per layer.
    Circuit with_noise(std::span<const std::optional<PauliChannel>> noise) const;

    bool operator==(const Circuit &other) const = default;

  private:
    int num_qubits_;
    std::vector<Layer> layers_;
};

/// U rho U^dagger for one layer of non-overlapping gates.
DensityMatrix apply_gates(const DensityMatrix &rho, std::span<const Gate> gates);

/// sum_P c_P P rho P^dagger, applied through bit and phase flips on indices.
DensityMatrix apply_channel(const DensityMatrix &rho, const PauliChannel &channel);

/// Alternates each gate layer with its channel. Throws std::runtime_error
/// naming the layer if the state stops being a density matrix.
DensityMatrix run_noisy(const Circuit &circuit);
DensityMatrix run_noisy(const Circuit &circuit, const DensityMatrix &initial);

/// Re Tr(rho P).
double expectation(const DensityMatrix &rho, const PauliString &observable);

/// Computational-basis outcome probabilities, tiny negative round-off
/// clipped to zero.
std::vector<double> probabilities(const DensityMatrix &rho);

/// Histogram over basis-state indices.
struct Counts {
    int num_qubits = 0;
    std::vector<std::uint64_t> counts;

    std::uint64_t total() const;
    std::vector<double> frequencies() const;
};

/// Multinomial draw of `shots` outcomes from `distribution`.
Counts sample_distribution(int num_qubits, std::span<const double> distribution, std::uint64_t shots,
                           std::uint64_t seed);
Counts sample_counts(const DensityMatrix &rho, std::uint64_t shots, std::uint64_t seed);

/// Relabels qubits: the content of qubit q moves to perm(q).
DensityMatrix permute_state(const DensityMatrix &rho, const QubitPermutation &perm);
std::vector<double> permute_distribution(std::span<const double> distribution, const QubitPermutation &perm);

/// Relabels every gate target by perm. Noise channels stay on their physical
/// qubits.
Circuit permute_circuit(const Circuit &circuit, const QubitPermutation &perm);

/// Equal-weight mixture of the noisy outputs of `circuits`.
DensityMatrix parallel_average(std::span<const Circuit> circuits, const DensityMatrix &initial);

/// Runs `circuit` once per mapping g: the logical circuit and input are placed
/// on physical qubits through g, the shared physical noise acts, and the
/// output is mapped back through g^-1. Returns the equal-weight mixture.
DensityMatrix parallel_average(const Circuit &circuit, std::span<const QubitPermutation> mappings,
                               const DensityMatrix &initial);

/// Commutes a stochastic Pauli channel past a layer of single-qubit Pauli
/// gates. Conjugating P by a Pauli only flips its sign, which cancels in
/// P rho P^dagger, so the coefficients come back unchanged. Throws
/// std::invalid_argument for any gate outside {X, Y, Z}.
PauliChannel propagate_pauli_through_pauli_layer(const PauliChannel &channel, std::span<const Gate> layer);

/// Pauli-trajectory sampler: each shot evolves a state vector from basis
/// state `initial_index`, drawing one Pauli per noisy layer.
Counts sample_trajectories(const Circuit &circuit, std::uint64_t shots, std::uint64_t seed,
                           std::uint64_t initial_index = 0);

/// {"n", "layers": [[{"kind", "targets", "theta"?}]], "noise": [channel | null]}
/// with 1-based targets.
std::string circuit_to_json(const Circuit &circuit);
Circuit circuit_from_json(std::string_view text);

}  // namespace symrand

#endif  // SYMRAND_CIRCUIT_H
