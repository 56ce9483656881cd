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

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "symrand/closed_form.h"
#include "symrand/experiments.h"
#include "symrand/random_models.h"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int verify_counts(const std::string &kind, int n) {
    auto check = symrand::verify_count(symrand::parse_count_formula(kind), n);
    std::cout << "kind,n,closed_form,oracle,match\n"
              << kind << "," << n << "," << check.closed_form.str() << "," << check.oracle << ","
              << (check.match ? "true" : "false") << "\n";
    return 0;
}

struct ConvergeFlags {
    std::string model = "r1";
    int n = 2;
    double eta = 0.002;
    double spread = 0.001;
    double decay = 0.1;
    double relative_spread = 0.5;
    std::string distribution = "uniform";
    double epsilon = 0.0005;
    double delta = 0.05;
    int trials = 10;
    std::uint64_t seed = 1;
};

int converge_rows(const ConvergeFlags &flags) {
    symrand::ConvergeConfig config;
    config.model = flags.model;
    config.n = flags.n;
    config.eta = flags.eta;
    config.spread = flags.spread;
    config.decay = flags.decay;
    config.relative_spread = flags.relative_spread;
    config.distribution = flags.distribution == "triangular" ? symrand::CoefficientDistribution::Triangular
                                                             : symrand::CoefficientDistribution::Uniform;
    config.epsilon = flags.epsilon;
    config.delta = flags.delta;
    config.trials = flags.trials;
    config.checkpoints = {symrand::hoeffding_n(flags.epsilon, flags.delta)};
    auto result = symrand::run_converge(config, flags.seed);
    std::cout << symrand::format_csv(result);
    return 0;
}

int run_from_config(symrand::ExperimentKind kind, const std::string &path, std::optional<std::uint64_t> seed,
                    const std::string &out_dir) {
    std::ifstream file(path);
    if (!file) {
        throw std::invalid_argument("cannot open config " + path);
    }
    std::stringstream text;
    text << file.rdbuf();
    auto config = symrand::parse_experiment_config(text.str(), kind);
    if (seed) {
        config.seed = *seed;
    }
    auto result = symrand::run_experiment(config);
    symrand::emit_report(std::span(&result, 1), out_dir);
    std::cout << (result.passed ? "PASS " : "FAIL ") << result.experiment << ": " << result.assertion << "\n";
    return result.passed ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Symmetrised and randomised stochastic Pauli channels: counts, convergence and mitigation."};
    app.require_subcommand(1);

    std::string kind;
    int n = 0;
    auto *verify = app.add_subcommand("verify-counts", "Closed-form coefficient count against the orbit oracle");
    verify->add_option("--kind", kind, "ref, rot, refrot, perm, r1, r2, r2_ref, r2_rot, r2_refrot, r2_perm")
        ->required();
    verify->add_option("--n", n, "Number of qubits")->required();

    std::optional<std::string> config_path;
    std::optional<std::uint64_t> seed;
    std::string out_dir = "results";

    ConvergeFlags flags;
    auto *converge = app.add_subcommand(
        "converge", "Average random channels; with --config runs the full convergence experiment instead");
    converge->add_option("--model", flags.model, "r1 or r2")->check(CLI::IsMember({"r1", "r2"}));
    converge->add_option("--n", flags.n, "Number of qubits");
    converge->add_option("--eta", flags.eta, "r1 mean coefficient, or r2 single-qubit eta");
    converge->add_option("--spread", flags.spread, "r1 half-width");
    converge->add_option("--decay", flags.decay, "r2 eta decay per extra qubit");
    converge->add_option("--relative-spread", flags.relative_spread, "r2 half-width relative to eta");
    converge->add_option("--distribution", flags.distribution, "uniform or triangular")
        ->check(CLI::IsMember({"uniform", "triangular"}));
    converge->add_option("--epsilon", flags.epsilon, "Accuracy");
    converge->add_option("--delta", flags.delta, "Failure probability");
    converge->add_option("--trials", flags.trials, "Independent trials");
    converge->add_option("--config", config_path, "Experiment config JSON");
    converge->add_option("--seed", seed, "Base seed");
    converge->add_option("--out", out_dir, "Output directory for --config runs");

    std::vector<std::pair<CLI::App *, symrand::ExperimentKind>> experiments;
    for (auto k : {symrand::ExperimentKind::Counts, symrand::ExperimentKind::ReadoutMitigation,
                   symrand::ExperimentKind::NoiseEstimation, symrand::ExperimentKind::TimeSeries}) {
        auto *sub = app.add_subcommand(std::string(symrand::to_string(k)), "Run the experiment from a config file");
        sub->add_option("--config", config_path, "Experiment config JSON")->required();
        sub->add_option("--seed", seed, "Override the config seed");
        sub->add_option("--out", out_dir, "Output directory");
        experiments.emplace_back(sub, k);
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            return verify_counts(kind, n);
        }
        if (converge->parsed()) {
            if (config_path) {
                return run_from_config(symrand::ExperimentKind::Converge, *config_path, seed, out_dir);
            }
            if (seed) {
                flags.seed = *seed;
            }
            return converge_rows(flags);
        }
        for (auto &[sub, k] : experiments) {
            if (sub->parsed()) {
                return run_from_config(k, *config_path, seed, out_dir);
            }
        }
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
