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

#ifndef SYMRAND_EXPERIMENTS_H
#define SYMRAND_EXPERIMENTS_H

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "symrand/closed_form.h"
#include "symrand/random_models.h"

namespace symrand {

enum class ExperimentKind { Counts, Converge, ReadoutMitigation, NoiseEstimation, TimeSeries };

std::string_view to_string(ExperimentKind kind);
ExperimentKind parse_experiment_kind(std::string_view name);

/// Closed forms against orbit oracles, plus the complexity actually measured
/// on a symmetrised random channel.
struct CountsConfig {
    std::vector<int> n_values{2, 3, 4, 5, 6, 7, 8};
    std::vector<CountFormula> formulas{CountFormula::Ref,   CountFormula::Rot,   CountFormula::RefRot,
                                       CountFormula::Perm,  CountFormula::R1,    CountFormula::R2,
                                       CountFormula::R2Ref, CountFormula::R2Rot, CountFormula::R2RefRot,
                                       CountFormula::R2Perm};
};

/// Averages of random channels at increasing N.
struct ConvergeConfig {
    /// "r1" or "r2".
    std::string model = "r1";
    int n = 2;
    /// r1: mean coefficient. r2: base of the default subset map.
    double eta = 0.002;
    /// r1 half-width.
    double spread = 0.001;
    /// r2 map decay per extra qubit.
    double decay = 0.1;
    /// r2 half-width relative to eta_q.
    double relative_spread = 0.5;
    CoefficientDistribution distribution = CoefficientDistribution::Uniform;
    double epsilon = 0.0005;
    double delta = 0.05;
    int trials = 200;
    /// Empty means {10, 100, 1000, hoeffding_n(epsilon, delta)}.
    std::vector<std::uint64_t> checkpoints;
    /// r1: allowed fraction of trials with max_dev > epsilon at the last checkpoint.
    double max_failure_fraction = 0.075;
    /// r2: required fraction of trials inside the residual and count envelope.
    double min_pass_fraction = 0.95;
};

/// Full versus symmetry-reduced readout calibration on a 4-loop running two
/// Bell pairs under every dihedral placement.
struct ReadoutConfig {
    int n = 4;
    double p_single = 0.05;
    double p_pair = 0.02;
    std::uint64_t shots_per_state = 10000;
    std::uint64_t shots_per_rep = 10000;
    std::uint64_t shots_per_mapping = 10000;
    int trials = 50;
    double max_median_difference = 0.01;
    double max_after_ratio = 0.25;
};

/// Depolarizing-rescaling mitigation of <Z_0> on the four-qubit CZ/RX ansatz.
struct NoiseEstimationConfig {
    std::vector<double> targets{-1.0, -0.5, 0.5, 1.0};
    int copies = 3;
    /// Per-layer r1 noise of every copy.
    double eta = 2e-4;
    double spread = 2e-4;
    std::uint64_t shots = 10000;
    int trials = 100;
};

/// Bell circuits under bit-flip noise whose strength changes every timestep.
struct TimeSeriesConfig {
    int n_parallel = 10;
    int timesteps = 50;
    double p_max = 0.2;
    int seeds = 20;
    double ratio_min = 2.4;
    double ratio_max = 4.0;
};

using ExperimentParams =
    std::variant<CountsConfig, ConvergeConfig, ReadoutConfig, NoiseEstimationConfig, TimeSeriesConfig>;

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::Counts;
    std::uint64_t seed = 0;
    ExperimentParams params;
};

/// Parses {"experiment": ..., "seed": ..., <parameters>}. "seed" is required;
/// unknown keys and invalid values throw std::invalid_argument. When
/// `expected` is given, a present "experiment" field must agree with it and
/// an absent one defaults to it.
ExperimentConfig parse_experiment_config(std::string_view text, std::optional<ExperimentKind> expected = {});
std::string experiment_config_to_json(const ExperimentConfig &config);

/// Default parameters for an experiment.
ExperimentConfig default_config(ExperimentKind kind, std::uint64_t seed);

using Cell = std::variant<std::monostate, std::int64_t, std::uint64_t, double, bool, std::string>;

struct ExperimentResult {
    std::string experiment;
    std::uint64_t seed = 0;
    bool passed = false;
    /// The built-in check, stated with its measured value.
    std::string assertion;
    std::vector<std::pair<std::string, Cell>> metrics;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::string config_json;
};

ExperimentResult run_counts(const CountsConfig &config, std::uint64_t seed);
ExperimentResult run_converge(const ConvergeConfig &config, std::uint64_t seed);
ExperimentResult run_readout_mitigation(const ReadoutConfig &config, std::uint64_t seed);
ExperimentResult run_noise_estimation(const NoiseEstimationConfig &config, std::uint64_t seed);
ExperimentResult run_time_series(const TimeSeriesConfig &config, std::uint64_t seed);

ExperimentResult run_experiment(const ExperimentConfig &config);

inline constexpr int kReportSchemaVersion = 1;

/// Header plus one line per row, RFC 4180 quoting, doubles at 17 significant
/// digits, empty cells for nulls.
std::string format_csv(const ExperimentResult &result);
/// {"schema_version", "results": [...]} with stable key order.
std::string format_report_json(std::span<const ExperimentResult> results);

/// Writes <dir>/<experiment>.csv per result and <dir>/report.json. Throws
/// std::runtime_error on write failure.
void emit_report(std::span<const ExperimentResult> results, const std::filesystem::path &dir);

std::string format_double(double value);

}  // namespace symrand

#endif  // SYMRAND_EXPERIMENTS_H
