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

#include <cmath>

#include "gtest/gtest.h"
#include "oracles/dense.h"
#include "oracles/generators.h"
#include "oracles/orbits.h"
#include "symrand/circuit_library.h"

using namespace symrand;

namespace {

DensityMatrix wrap(int n, const oracle::Matrix &m) {
    return DensityMatrix::from_matrix(n, m);
}

// Basis permutation |b> -> |g.b> built from the orbit oracle's digit action.
oracle::Matrix basis_permutation(const QubitPermutation &g) {
    int n = g.num_qubits();
    std::uint64_t d = std::uint64_t{1} << n;
    oracle::Perm p(g.images().begin(), g.images().end());
    oracle::Matrix m = oracle::Matrix::Zero(d, d);
    for (std::uint64_t b = 0; b < d; ++b) {
        m(oracle::act(p, b, n, 2), b) = 1;
    }
    return m;
}

}  // namespace

TEST(circuit, density_matrix_invariants) {
    auto z = DensityMatrix::zero_state(3);
    ASSERT_EQ(z.dim(), 8u);
    ASSERT_EQ(z.matrix()(0, 0), 1.0);
    ASSERT_NO_THROW(z.check_invariants(true));
    auto mixed = DensityMatrix::maximally_mixed(2);
    ASSERT_NEAR(mixed.min_eigenvalue(), 0.25, 1e-15);
    auto b = DensityMatrix::basis_state(2, 2);
    ASSERT_EQ(b.matrix()(2, 2), 1.0);
    Eigen::MatrixXcd bad = 2.0 * oracle::zero_state(1);
    ASSERT_THROW(DensityMatrix::from_matrix(1, bad), std::invalid_argument);
    Eigen::MatrixXcd skew = oracle::zero_state(1);
    skew(0, 1) = 0.3;
    ASSERT_THROW(DensityMatrix::from_matrix(1, skew), std::invalid_argument);
    Eigen::MatrixXcd negative(2, 2);
    negative << 1.5, 0, 0, -0.5;
    ASSERT_THROW(DensityMatrix::from_matrix(1, negative), std::invalid_argument);
    ASSERT_NO_THROW(DensityMatrix::from_matrix(1, negative, false));
    ASSERT_THROW(DensityMatrix::zero_state(9), std::invalid_argument);
}

TEST(circuit, apply_channel_matches_dense_oracle) {
    for (int n = 1; n <= 4; ++n) {
        for (int seed = 0; seed < 3; ++seed) {
            auto c = gen::channel(n, 31 * seed + n);
            auto rho = oracle::random_density(n, 7 * seed + n);
            auto out = apply_channel(wrap(n, rho), c);
            auto expected = oracle::apply_channel(rho, {c.coeffs().begin(), c.coeffs().end()}, n);
            ASSERT_LE(oracle::max_abs(out.matrix(), expected), 1e-13) << "n=" << n;
        }
    }
}

TEST(circuit, expectation_matches_dense_oracle) {
    for (int n = 1; n <= 3; ++n) {
        auto rho = oracle::random_density(n, 50 + n);
        for (std::uint64_t code = 0; code < pauli_count(n); ++code) {
            auto p = PauliString(n, code);
            ASSERT_NEAR(expectation(wrap(n, rho), p), oracle::expectation(rho, p.str()), 1e-13) << p.str();
        }
    }
}

TEST(circuit, gates_match_dense_unitaries) {
    for (int n = 2; n <= 4; ++n) {
        for (int seed = 0; seed < 4; ++seed) {
            auto circuit = gen::circuit(n, 3, 1000 * n + seed, false);
            auto rho = oracle::random_density(n, seed);
            auto out = run_noisy(circuit, wrap(n, rho));
            ASSERT_LE(oracle::max_abs(out.matrix(), oracle::run(circuit, rho)), 1e-12);
        }
    }
}

TEST(circuit, noisy_run_matches_dense_oracle) {
    for (int n = 2; n <= 4; ++n) {
        for (int seed = 0; seed < 3; ++seed) {
            auto circuit = gen::circuit(n, 4, 77 * n + seed, true);
            auto out = run_noisy(circuit);
            ASSERT_LE(oracle::max_abs(out.matrix(), oracle::run(circuit, oracle::zero_state(n))), 1e-12);
            ASSERT_NO_THROW(out.check_invariants(true));
        }
    }
}

TEST(circuit, add_layer_validates) {
    Circuit c(3);
    ASSERT_THROW(c.add_layer({Gate::h(3)}), std::invalid_argument);
    ASSERT_THROW(c.add_layer({Gate::cz(1, 1)}), std::invalid_argument);
    ASSERT_THROW(c.add_layer({Gate::h(0), Gate::x(0)}), std::invalid_argument);
    ASSERT_THROW(c.add_layer({Gate::h(0)}, identity_channel(2)), std::invalid_argument);
    ASSERT_NO_THROW(c.add_layer({Gate::h(0), Gate::cnot(1, 2)}, identity_channel(3)));
    ASSERT_EQ(c.layers().size(), 1u);
    ASSERT_THROW(Circuit(0), std::invalid_argument);
}

TEST(circuit, bell_pair_distribution) {
    auto p = probabilities(run_noisy(bell_pair_circuit()));
    ASSERT_NEAR(p[0], 0.5, 1e-15);
    ASSERT_NEAR(p[1], 0.0, 1e-15);
    ASSERT_NEAR(p[2], 0.0, 1e-15);
    ASSERT_NEAR(p[3], 0.5, 1e-15);
    auto rho = run_noisy(bell_pair_circuit());
    ASSERT_NEAR(expectation(rho, PauliString::parse("ZZ")), 1.0, 1e-15);
    ASSERT_NEAR(expectation(rho, PauliString::parse("XX")), 1.0, 1e-15);
    ASSERT_NEAR(expectation(rho, PauliString::parse("YY")), -1.0, 1e-15);
}

TEST(circuit, library_circuits) {
    auto two = run_noisy(two_bell_pairs_circuit());
    ASSERT_NEAR(expectation(two, PauliString::parse("ZZII")), 1.0, 1e-15);
    ASSERT_NEAR(expectation(two, PauliString::parse("IIXX")), 1.0, 1e-15);
    for (double target : {-1.0, -0.5, 0.5, 1.0}) {
        auto ansatz = cz_rx_ansatz(ansatz_angles_for_target(target));
        ASSERT_EQ(ansatz.layers().size(), 4u);
        ASSERT_NEAR(expectation(run_noisy(ansatz), PauliString::parse("ZIII")), target, 1e-12);
        auto zero = zero_angle_circuit(ansatz);
        ASSERT_NEAR(expectation(run_noisy(zero), PauliString::parse("ZIII")), 1.0, 1e-12);
    }
}

TEST(circuit, sampling_is_seeded_and_unbiased) {
    std::vector<double> dist{0.1, 0.2, 0.3, 0.4};
    auto a = sample_distribution(2, dist, 100000, 3);
    auto b = sample_distribution(2, dist, 100000, 3);
    ASSERT_EQ(a.counts, b.counts);
    ASSERT_EQ(a.total(), 100000u);
    auto f = a.frequencies();
    for (int k = 0; k < 4; ++k) {
        double sd = std::sqrt(dist[k] * (1 - dist[k]) / 100000);
        ASSERT_NEAR(f[k], dist[k], 5 * sd);
    }
    ASSERT_NE(sample_distribution(2, dist, 1000, 4).counts, sample_distribution(2, dist, 1000, 5).counts);
    std::vector<double> bad{0.5, 0.6, 0.0, 0.0};
    ASSERT_THROW(sample_distribution(2, bad, 10, 1), std::invalid_argument);
    auto counts = sample_counts(run_noisy(bell_pair_circuit()), 1000, 9);
    ASSERT_EQ(counts.counts[1] + counts.counts[2], 0u);
}

TEST(circuit, trajectories_match_exact_distribution) {
    Circuit c(2);
    c.add_layer({Gate::h(0)}, gen::channel(2, 4, 0.2));
    c.add_layer({Gate::cnot(0, 1)}, gen::channel(2, 5, 0.2));
    auto exact = probabilities(run_noisy(c));
    const std::uint64_t shots = 200000;
    auto f = sample_trajectories(c, shots, 12).frequencies();
    for (int k = 0; k < 4; ++k) {
        double sd = std::sqrt(exact[k] * (1 - exact[k]) / shots);
        ASSERT_NEAR(f[k], exact[k], 5 * sd + 1e-12) << k;
    }
}

TEST(circuit, permutations_relabel_consistently) {
    for (int seed = 0; seed < 10; ++seed) {
        int n = 4;
        auto g = gen::permutation(n, seed);
        auto rho = oracle::random_density(n, seed);
        auto moved = permute_state(wrap(n, rho), g);
        oracle::Matrix pm = basis_permutation(g);
        ASSERT_LE(oracle::max_abs(moved.matrix(), pm * rho * pm.transpose()), 1e-15);
        for (std::uint64_t code = 0; code < pauli_count(n); code += 5) {
            auto p = PauliString(n, code);
            ASSERT_NEAR(expectation(moved, act_on_pauli(g, p)), expectation(wrap(n, rho), p), 1e-13);
        }
        auto probs = probabilities(wrap(n, rho));
        auto moved_probs = permute_distribution(probs, g);
        auto direct = probabilities(moved);
        for (std::size_t k = 0; k < probs.size(); ++k) {
            ASSERT_NEAR(moved_probs[k], direct[k], 1e-15);
        }
        auto circuit = gen::circuit(n, 3, seed, false);
        auto relabelled = run_noisy(permute_circuit(circuit, g), permute_state(wrap(n, rho), g));
        auto expected = permute_state(run_noisy(circuit, wrap(n, rho)), g);
        ASSERT_LE(max_abs_difference(relabelled, expected), 1e-12);
    }
}

TEST(circuit, parallel_average_matches_dense_construction) {
    int n = 4;
    auto circuit = gen::circuit(n, 3, 99, true);
    std::vector<QubitPermutation> maps{QubitPermutation::identity(n), reflection(n), rotation(n, 2)};
    auto rho = oracle::random_density(n, 3);
    auto avg = parallel_average(circuit, maps, wrap(n, rho));
    oracle::Matrix expected = oracle::Matrix::Zero(rho.rows(), rho.cols());
    for (const auto &g : maps) {
        oracle::Matrix pm = basis_permutation(g);
        // Logical gates placed through g; the physical noise is unchanged.
        oracle::Matrix physical = oracle::run(permute_circuit(circuit, g), pm * rho * pm.transpose());
        expected += pm.transpose() * physical * pm;
    }
    expected /= double(maps.size());
    ASSERT_LE(oracle::max_abs(avg.matrix(), expected), 1e-12);

    std::vector<Circuit> same{circuit, circuit};
    ASSERT_LE(max_abs_difference(parallel_average(same, wrap(n, rho)), run_noisy(circuit, wrap(n, rho))), 1e-15);
}

TEST(circuit, pauli_layer_propagation) {
    auto c = gen::channel(3, 8);
    std::vector<Gate> paulis{Gate::x(0), Gate::y(1), Gate::z(2)};
    ASSERT_EQ(propagate_pauli_through_pauli_layer(c, paulis), c);
    std::vector<Gate> clifford{Gate::h(0)};
    ASSERT_THROW(propagate_pauli_through_pauli_layer(c, clifford), std::invalid_argument);
    // Check the commutation itself on a dense state: G E(rho) G^dag = E(G rho G^dag).
    auto rho = oracle::random_density(3, 1);
    Circuit gates_then_noise(3), noise_then_gates(3);
    gates_then_noise.add_layer(paulis, c);
    noise_then_gates.add_layer({}, c);
    noise_then_gates.add_layer(paulis);
    ASSERT_LE(max_abs_difference(run_noisy(gates_then_noise, wrap(3, rho)), run_noisy(noise_then_gates, wrap(3, rho))),
              1e-14);
}

TEST(circuit, json_round_trip_and_labels) {
    auto c = gen::circuit(3, 4, 5, true);
    auto text = circuit_to_json(c);
    ASSERT_EQ(circuit_from_json(text), c);
    Circuit simple(2);
    simple.add_layer({Gate::cnot(0, 1)});
    ASSERT_NE(circuit_to_json(simple).find("\"targets\":[1,2]"), std::string::npos);
    ASSERT_THROW(circuit_from_json(R"({"n":2,"layers":[[{"kind":"H","targets":[0]}]]})"), std::invalid_argument);
    ASSERT_THROW(circuit_from_json(R"({"n":2,"layers":[[{"kind":"RX","targets":[1]}]]})"), std::invalid_argument);
    ASSERT_THROW(circuit_from_json(R"({"n":2,"layers":[[{"kind":"T","targets":[1]}]]})"), std::invalid_argument);
    auto parsed = circuit_from_json(R"({"n":2,"layers":[[{"kind":"CZ","targets":[2,1]}]]})");
    ASSERT_EQ(parsed.layers()[0].gates[0], Gate::cz(1, 0));
    ASSERT_EQ(parse_gate_kind("CNOT"), GateKind::CNOT);
    ASSERT_TRUE(is_two_qubit(GateKind::CZ));
    ASSERT_FALSE(is_two_qubit(GateKind::RX));
}
