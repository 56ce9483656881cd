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

#include "symrand/experiments.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"

using namespace symrand;

namespace {

std::string slurp(const std::filesystem::path &path) {
    std::ifstream file(path, std::ios::binary);
    std::stringstream s;
    s << file.rdbuf();
    return s.str();
}

}  // namespace

TEST(experiments, config_requires_seed_and_known_keys) {
    ASSERT_THROW(parse_experiment_config(R"({"experiment": "counts"})"), std::invalid_argument);
    ASSERT_THROW(parse_experiment_config(R"({"experiment": "counts", "seed": -1})"), std::invalid_argument);
    ASSERT_THROW(parse_experiment_config(R"({"experiment": "counts", "seed": 1, "bogus": 2})"),
                 std::invalid_argument);
    ASSERT_THROW(parse_experiment_config(R"({"experiment": "warp", "seed": 1})"), std::invalid_argument);
    ASSERT_THROW(parse_experiment_config(R"({"seed": 1})"), std::invalid_argument);
    ASSERT_THROW(parse_experiment_config("not json"), std::invalid_argument);
    ASSERT_THROW(parse_experiment_config(R"({"experiment": "counts", "seed": 1})", ExperimentKind::TimeSeries),
                 std::invalid_argument);
    auto c = parse_experiment_config(R"({"seed": 9})", ExperimentKind::TimeSeries);
    ASSERT_EQ(c.kind, ExperimentKind::TimeSeries);
    ASSERT_EQ(c.seed, 9u);
    ASSERT_EQ(std::get<TimeSeriesConfig>(c.params).n_parallel, 10);
}

TEST(experiments, config_values_are_read_and_checked) {
    auto c = parse_experiment_config(
        R"({"experiment": "converge", "seed": 3, "model": "r2", "n": 3, "epsilon": 0.002,
            "distribution": "triangular", "checkpoints": [5, 50]})");
    const auto &p = std::get<ConvergeConfig>(c.params);
    ASSERT_EQ(p.model, "r2");
    ASSERT_EQ(p.n, 3);
    ASSERT_EQ(p.epsilon, 0.002);
    ASSERT_EQ(p.distribution, CoefficientDistribution::Triangular);
    ASSERT_EQ(p.checkpoints, (std::vector<std::uint64_t>{5, 50}));
    ASSERT_EQ(p.trials, 200);
    ASSERT_THROW(parse_experiment_config(R"({"experiment": "converge", "seed": 3, "model": "r3"})"),
                 std::invalid_argument);
    ASSERT_THROW(parse_experiment_config(R"({"experiment": "counts", "seed": 3, "n_values": [1]})"),
                 std::invalid_argument);
    ASSERT_THROW(parse_experiment_config(R"({"experiment": "counts", "seed": 3, "formulas": ["nope"]})"),
                 std::invalid_argument);
    ASSERT_THROW(parse_experiment_config(R"({"experiment": "time-series", "seed": 3, "timesteps": "x"})"),
                 std::invalid_argument);
}

TEST(experiments, config_json_round_trip) {
    for (auto kind : {ExperimentKind::Counts, ExperimentKind::Converge, ExperimentKind::ReadoutMitigation,
                      ExperimentKind::NoiseEstimation, ExperimentKind::TimeSeries}) {
        auto config = default_config(kind, 17);
        auto text = experiment_config_to_json(config);
        auto back = parse_experiment_config(text);
        ASSERT_EQ(back.kind, kind);
        ASSERT_EQ(back.seed, 17u);
        ASSERT_EQ(experiment_config_to_json(back), text);
        ASSERT_EQ(parse_experiment_kind(to_string(kind)), kind);
    }
}

TEST(experiments, double_formatting) {
    ASSERT_EQ(format_double(0.1), "0.10000000000000001");
    ASSERT_EQ(format_double(1.0), "1");
    ASSERT_EQ(std::stod(format_double(1.0 / 3)), 1.0 / 3);
}

TEST(experiments, csv_is_rfc4180) {
    ExperimentResult r;
    r.experiment = "demo";
    r.columns = {"a", "b,c", "d"};
    r.rows = {{std::int64_t{-1}, std::string("say \"hi\""), 0.5},
              {std::monostate{}, true, std::numeric_limits<double>::quiet_NaN()}};
    ASSERT_EQ(format_csv(r), "a,\"b,c\",d\r\n-1,\"say \"\"hi\"\"\",0.5\r\n,true,\r\n");
}

TEST(experiments, counts_small_run) {
    CountsConfig config;
    config.n_values = {2, 4};
    auto r = run_counts(config, 5);
    ASSERT_TRUE(r.passed) << r.assertion;
    ASSERT_EQ(r.experiment, "counts");
    bool found = false;
    for (const auto &row : r.rows) {
        if (std::get<std::string>(row[0]) == "ref" && std::get<std::int64_t>(row[1]) == 4) {
            found = true;
            ASSERT_EQ(std::get<std::string>(row[2]), "136");
        }
    }
    ASSERT_TRUE(found);
}

TEST(experiments, time_series_is_reproducible) {
    TimeSeriesConfig config;
    config.seeds = 3;
    auto a = run_time_series(config, 11);
    auto b = run_time_series(config, 11);
    ASSERT_EQ(format_csv(a), format_csv(b));
    auto c = run_time_series(config, 12);
    ASSERT_NE(format_csv(a), format_csv(c));
    ASSERT_EQ(a.rows.size(), 3u * 50 * 11);
}

TEST(experiments, converge_small_run) {
    ConvergeConfig config;
    config.trials = 5;
    config.epsilon = 0.005;
    auto r = run_converge(config, 2);
    ASSERT_TRUE(r.passed) << r.assertion;
    // Checkpoints 10, 100, 1000 and N* for each trial.
    ASSERT_EQ(r.rows.size(), 5u * 4);
    ASSERT_EQ(std::get<std::uint64_t>(r.rows[3][1]), hoeffding_n(0.005, 0.05));
}

TEST(experiments, report_files) {
    auto dir = std::filesystem::temp_directory_path() / "symrand_report_test";
    std::filesystem::remove_all(dir);
    CountsConfig config;
    config.n_values = {2};
    std::vector<ExperimentResult> results{run_counts(config, 1)};
    results[0].config_json = experiment_config_to_json(ExperimentConfig{ExperimentKind::Counts, 1, config});
    emit_report(results, dir);
    ASSERT_EQ(slurp(dir / "counts.csv"), format_csv(results[0]));
    auto report = nlohmann::json::parse(slurp(dir / "report.json"));
    ASSERT_EQ(report["schema_version"], 1);
    ASSERT_EQ(report["results"][0]["experiment"], "counts");
    ASSERT_EQ(report["results"][0]["passed"], true);
    ASSERT_EQ(report["results"][0]["config"]["seed"], 1);
    std::filesystem::remove_all(dir);
    ASSERT_THROW(emit_report({}, dir), std::invalid_argument);
}
