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

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "oracles/dense.h"
#include "oracles/orbits.h"
#include "symrand/circuit_library.h"

using namespace symrand;

namespace {

Eigen::MatrixXd kron(const Eigen::MatrixXd &a, const Eigen::MatrixXd &b) {
    Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

void expect_group_invariant(const Eigen::MatrixXd &s, SymmetryKind kind, int n) {
    auto g = make_group(kind, n);
    for (const auto &e : g.elements()) {
        for (Eigen::Index j = 0; j < s.rows(); ++j) {
            for (Eigen::Index k = 0; k < s.cols(); ++k) {
                ASSERT_EQ(s(act_on_word(e, j, 2), act_on_word(e, k, 2)), s(j, k));
            }
        }
    }
}

}  // namespace

TEST(mitigation, transition_matrix_validation) {
    Eigen::MatrixXd m(2, 2);
    m << 0.9, 0.2, 0.1, 0.8;
    auto s = TransitionMatrix::from_matrix(1, m);
    auto out = s.apply(std::vector<double>{1.0, 0.0});
    ASSERT_DOUBLE_EQ(out[0], 0.9);
    ASSERT_DOUBLE_EQ(out[1], 0.1);
    Eigen::MatrixXd bad = m;
    bad(0, 0) = 0.95;
    ASSERT_THROW(TransitionMatrix::from_matrix(1, bad), std::invalid_argument);
    Eigen::MatrixXd negative(2, 2);
    negative << 1.1, 0.0, -0.1, 1.0;
    ASSERT_THROW(TransitionMatrix::from_matrix(1, negative), std::invalid_argument);
    ASSERT_THROW(TransitionMatrix::from_matrix(2, m), std::invalid_argument);
    ASSERT_EQ(TransitionMatrix::identity(3).matrix(), Eigen::MatrixXd::Identity(8, 8));
}

TEST(mitigation, independent_noise_is_tensor_product) {
    for (int n = 1; n <= 4; ++n) {
        double p = 0.03 * n;
        Eigen::MatrixXd one(2, 2);
        one << 1 - p, p, p, 1 - p;
        Eigen::MatrixXd expected = one;
        for (int k = 1; k < n; ++k) {
            expected = kron(expected, one);
        }
        auto s = ReadoutNoiseModel::independent(n, p).exact_transition_matrix();
        ASSERT_LE((s.matrix() - expected).cwiseAbs().maxCoeff(), 1e-15) << n;
    }
}

TEST(mitigation, loop_correlated_noise) {
    auto noise = ReadoutNoiseModel::loop_correlated(4, 0.05, 0.02);
    double sum = 0;
    for (double v : noise.pattern_probabilities()) {
        sum += v;
    }
    ASSERT_NEAR(sum, 1.0, 1e-15);
    // Brute force over all 2^8 subsets of the eight flip events.
    std::vector<std::pair<std::uint64_t, double>> events{{0b1000, 0.05}, {0b0100, 0.05}, {0b0010, 0.05},
                                                         {0b0001, 0.05}, {0b1100, 0.02}, {0b0110, 0.02},
                                                         {0b0011, 0.02}, {0b1001, 0.02}};
    std::vector<double> expected(16, 0.0);
    for (unsigned fired = 0; fired < 256; ++fired) {
        double prob = 1;
        std::uint64_t pattern = 0;
        for (unsigned e = 0; e < 8; ++e) {
            bool on = (fired >> e) & 1;
            prob *= on ? events[e].second : 1 - events[e].second;
            pattern ^= on ? events[e].first : 0;
        }
        expected[pattern] += prob;
    }
    for (int k = 0; k < 16; ++k) {
        ASSERT_NEAR(noise.pattern_probabilities()[k], expected[k], 1e-15) << k;
    }
    auto s = noise.exact_transition_matrix().matrix();
    for (Eigen::Index k = 0; k < s.cols(); ++k) {
        ASSERT_NEAR(s.col(k).sum(), 1.0, 1e-14);
    }
    auto g = make_group(SymmetryKind::Dihedral, 4);
    for (const auto &e : g.elements()) {
        for (int j = 0; j < 16; ++j) {
            for (int k = 0; k < 16; ++k) {
                ASSERT_NEAR(s(act_on_word(e, j, 2), act_on_word(e, k, 2)), s(j, k), 1e-15);
            }
        }
    }
    std::vector<std::pair<std::uint64_t, double>> twice{{0b1, 0.5}, {0b1, 0.5}};
    auto cancel = ReadoutNoiseModel::from_events(1, twice);
    ASSERT_NEAR(cancel.pattern_probabilities()[1], 0.5, 1e-15);
    ASSERT_THROW(ReadoutNoiseModel::from_pattern_probabilities(1, {0.5, 0.6}), std::invalid_argument);
}

TEST(mitigation, full_calibration_estimates_columns) {
    auto noise = ReadoutNoiseModel::loop_correlated(3, 0.05, 0.02);
    const std::uint64_t shots = 50000;
    auto s = calibrate_full(noise, shots, 4);
    ASSERT_EQ(s.total_shots(), 8 * shots);
    auto exact = noise.exact_transition_matrix().matrix();
    for (int j = 0; j < 8; ++j) {
        for (int k = 0; k < 8; ++k) {
            double sd = std::sqrt(exact(j, k) * (1 - exact(j, k)) / shots);
            ASSERT_NEAR(s.matrix()(j, k), exact(j, k), 5 * sd + 1e-12);
        }
    }
    ASSERT_EQ(calibrate_full(noise, 100, 7).matrix(), calibrate_full(noise, 100, 7).matrix());
}

TEST(mitigation, symmetric_calibration_budget_and_invariance) {
    auto noise = ReadoutNoiseModel::loop_correlated(4, 0.05, 0.02);
    auto group = make_group(SymmetryKind::Dihedral, 4);
    auto s = calibrate_symmetric(noise, group, 10000, 2);
    ASSERT_EQ(s.total_shots(), 60000u);
    std::uint64_t calibrated = 0;
    for (auto shots : s.shots_per_column()) {
        calibrated += shots > 0;
    }
    ASSERT_EQ(calibrated, 6u);
    expect_group_invariant(s.matrix(), SymmetryKind::Dihedral, 4);
    for (Eigen::Index k = 0; k < 16; ++k) {
        ASSERT_NEAR(s.matrix().col(k).sum(), 1.0, 1e-12);
    }
    auto reflection_only = calibrate_symmetric(noise, make_group(SymmetryKind::Reflection, 4), 1000, 2);
    ASSERT_EQ(reflection_only.total_shots(), 1000 * oracle::orbit_count(oracle::reflection_group(4), 4, 2));
    expect_group_invariant(reflection_only.matrix(), SymmetryKind::Reflection, 4);
}

TEST(mitigation, exact_inversion_recovers_ideal) {
    auto noise = ReadoutNoiseModel::loop_correlated(4, 0.05, 0.02);
    auto s = noise.exact_transition_matrix();
    auto ideal = oracle::random_distribution(16, 3);
    auto noisy = noise.apply(ideal);
    auto via_matrix = s.apply(ideal);
    for (int k = 0; k < 16; ++k) {
        ASSERT_NEAR(noisy[k], via_matrix[k], 1e-15);
    }
    auto m = mitigate_distribution(s, noisy);
    ASSERT_FALSE(m.least_squares);
    ASSERT_EQ(m.clipped_mass, 0.0);
    ASSERT_LT(m.condition_number, 10);
    for (int k = 0; k < 16; ++k) {
        ASSERT_NEAR(m.p[k], ideal[k], 1e-12);
    }
}

TEST(mitigation, clipping_and_ill_conditioning) {
    Eigen::MatrixXd m(2, 2);
    m << 0.8, 0.2, 0.2, 0.8;
    auto s = TransitionMatrix::from_matrix(1, m);
    auto r = mitigate_distribution(s, std::vector<double>{0.9, 0.1});
    ASSERT_NEAR(r.clipped_mass, 1.0 / 6, 1e-12);
    ASSERT_NEAR(r.p[0], 1.0, 1e-12);
    ASSERT_EQ(r.p[1], 0.0);
    Eigen::MatrixXd singular(2, 2);
    singular << 0.5, 0.5, 0.5, 0.5;
    auto sing = mitigate_distribution(TransitionMatrix::from_matrix(1, singular), std::vector<double>{0.5, 0.5});
    ASSERT_TRUE(sing.least_squares);
    ASSERT_NEAR(sing.p[0] + sing.p[1], 1.0, 1e-12);
}

TEST(mitigation, tvd_and_parity) {
    std::vector<double> p{0.5, 0.5, 0, 0}, q{0, 0.5, 0.5, 0};
    ASSERT_DOUBLE_EQ(tvd(p, q), 0.5);
    ASSERT_EQ(tvd(p, p), 0.0);
    ASSERT_THROW(tvd(p, std::vector<double>{1.0}), std::invalid_argument);
    // Z0 Z1 on 2 qubits: +1 on 00 and 11.
    std::vector<double> r{0.4, 0.1, 0.2, 0.3};
    ASSERT_DOUBLE_EQ(parity_expectation(r, 0b11), 0.4 - 0.1 - 0.2 + 0.3);
    ASSERT_DOUBLE_EQ(parity_expectation(r, 0b10), 0.4 + 0.1 - 0.2 - 0.3);
    ASSERT_DOUBLE_EQ(parity_expectation(r, 0), 1.0);
}

TEST(mitigation, evaluate_mitigation_reports_both_sides) {
    auto noise = ReadoutNoiseModel::loop_correlated(4, 0.05, 0.02);
    auto ideal = oracle::random_distribution(16, 8);
    auto noisy = noise.apply(ideal);
    auto result = evaluate_mitigation(noise.exact_transition_matrix(), noisy, ideal, 0b1100);
    ASSERT_NEAR(result.tvd_before, tvd(noisy, ideal), 1e-15);
    ASSERT_LT(result.tvd_after, 1e-12);
    ASSERT_NEAR(result.expectation_error_before,
                std::abs(parity_expectation(noisy, 0b1100) - parity_expectation(ideal, 0b1100)), 1e-15);
    ASSERT_LT(result.expectation_error_after, 1e-12);
}

TEST(mitigation, expectation_estimates) {
    auto rho = run_noisy(bell_pair_circuit());
    auto zz = PauliString::parse("ZZ");
    ASSERT_NEAR(measure_expectation(rho, zz, 0, 1), 1.0, 1e-15);
    ASSERT_NEAR(measure_expectation(rho, PauliString::parse("XX"), 0, 1), 1.0, 1e-15);
    ASSERT_EQ(measure_expectation(rho, zz, 1000, 1), 1.0);
    ASSERT_THROW(measure_expectation(rho, PauliString::parse("XX"), 1000, 1), std::invalid_argument);
    double zi = measure_expectation(rho, PauliString::parse("ZI"), 40000, 2);
    ASSERT_NEAR(zi, 0.0, 5 / std::sqrt(40000.0));
}

TEST(mitigation, depolarizing_estimate_and_rescaling) {
    auto base = cz_rx_ansatz(ansatz_angles_for_target(0.5));
    std::vector<std::optional<PauliChannel>> noise(4);
    noise[3] = depolarizing_channel(4, 0.2);
    auto noisy = base.with_noise(noise);
    auto obs = PauliString::parse("ZIII");
    double lambda_prime = estimate_lambda(noisy, obs, 0, 0);
    ASSERT_NEAR(lambda_prime, 0.8, 1e-12);
    double o_noisy = expectation(run_noisy(noisy), obs);
    ASSERT_NEAR(o_noisy, 0.4, 1e-12);
    ASSERT_NEAR(mitigate_expectation(o_noisy, lambda_prime), 0.5, 1e-12);
    ASSERT_THROW(mitigate_expectation(0.01, 0.05), RejectedRunError);
    ASSERT_EQ(mitigate_expectation(0.9, 0.5), 1.0);
}

TEST(mitigation, tvd_bound_ordering) {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t size = 2 + rng() % 15;
        std::size_t count = 1 + rng() % 6;
        std::vector<std::vector<double>> outputs;
        for (std::size_t k = 0; k < count; ++k) {
            outputs.push_back(oracle::random_distribution(size, rng()));
        }
        auto ideal = oracle::random_distribution(size, rng());
        auto b = tvd_bounds(outputs, ideal);
        ASSERT_LE(b.best, b.eff);
        ASSERT_LE(b.eff, b.worst);
        ASSERT_LE(b.of_average, b.eff);
        double mean = 0;
        std::vector<double> average(size, 0.0);
        for (const auto &o : outputs) {
            mean += tvd(o, ideal);
            for (std::size_t k = 0; k < size; ++k) {
                average[k] += o[k] / count;
            }
        }
        ASSERT_NEAR(b.eff, mean / count, 1e-15);
        ASSERT_NEAR(b.of_average, tvd(average, ideal), 1e-15);
    }
    // Identical outputs: the mean must not round above the maximum.
    for (int copies = 2; copies < 12; ++copies) {
        std::vector<std::vector<double>> same(copies, std::vector<double>{0.1, 0.9});
        std::vector<double> ideal{0.4, 0.6};
        auto b = tvd_bounds(same, ideal);
        ASSERT_LE(b.best, b.eff);
        ASSERT_LE(b.eff, b.worst);
        ASSERT_LE(b.of_average, b.eff);
    }
}

TEST(mitigation, json_round_trip) {
    auto s = calibrate_full(ReadoutNoiseModel::independent(2, 0.1), 1000, 5);
    auto back = transition_matrix_from_json(transition_matrix_to_json(s));
    ASSERT_EQ(back.matrix(), s.matrix());
    ASSERT_EQ(std::vector<std::uint64_t>(back.shots_per_column().begin(), back.shots_per_column().end()),
              std::vector<std::uint64_t>(s.shots_per_column().begin(), s.shots_per_column().end()));
    ASSERT_THROW(transition_matrix_from_json(R"({"n":1,"columns":[[1,0]]})"), std::invalid_argument);
}
