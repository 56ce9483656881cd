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

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "symrand/experiments.h"

namespace symrand {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string_view to_string(CoefficientDistribution d) {
    return d == CoefficientDistribution::Uniform ? "uniform" : "triangular";
}

CoefficientDistribution parse_distribution(const std::string &name) {
    if (name == "uniform") {
        return CoefficientDistribution::Uniform;
    }
    if (name == "triangular") {
        return CoefficientDistribution::Triangular;
    }
    throw std::invalid_argument("config: distribution must be \"uniform\" or \"triangular\"");
}

template <typename T>
void read(const json &j, const char *key, T &out) {
    if (j.contains(key)) {
        try {
            out = j.at(key).get<T>();
        } catch (const json::exception &e) {
            throw std::invalid_argument(std::string("config: bad value for \"") + key + "\": " + e.what());
        }
    }
}

void require(bool condition, const std::string &message) {
    if (!condition) {
        throw std::invalid_argument("config: " + message);
    }
}

void check_keys(const json &j, std::initializer_list<const char *> allowed) {
    std::set<std::string> keys{"experiment", "seed"};
    for (const char *k : allowed) {
        keys.insert(k);
    }
    for (const auto &item : j.items()) {
        if (!keys.contains(item.key())) {
            throw std::invalid_argument("config: unknown key \"" + item.key() + "\"");
        }
    }
}

ordered_json cell_json(const Cell &cell) {
    return std::visit(
        [](const auto &v) -> ordered_json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return nullptr;
            } else if constexpr (std::is_same_v<T, double>) {
                return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr);
            } else {
                return v;
            }
        },
        cell);
}

std::string csv_field(const Cell &cell) {
    std::string text = std::visit(
        [](const auto &v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return "";
            } else if constexpr (std::is_same_v<T, double>) {
                return std::isfinite(v) ? format_double(v) : "";
            } else if constexpr (std::is_same_v<T, bool>) {
                return v ? "true" : "false";
            } else if constexpr (std::is_same_v<T, std::string>) {
                return v;
            } else {
                return std::to_string(v);
            }
        },
        cell);
    if (text.find_first_of(",\"\r\n") == std::string::npos) {
        return text;
    }
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') {
            quoted += '"';
        }
        quoted += c;
    }
    return quoted + "\"";
}

}  // namespace

std::string format_double(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
    if (ec != std::errc()) {
        throw std::runtime_error("format_double: conversion failed");
    }
    return std::string(buf, end);
}

ExperimentConfig parse_experiment_config(std::string_view text, std::optional<ExperimentKind> expected) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw std::invalid_argument(std::string("config: malformed JSON: ") + e.what());
    }
    require(j.is_object(), "expected a JSON object");
    std::optional<ExperimentKind> kind = expected;
    if (j.contains("experiment")) {
        require(j.at("experiment").is_string(), "\"experiment\" must be a string");
        auto named = parse_experiment_kind(j.at("experiment").get<std::string>());
        require(!expected || named == *expected, "\"experiment\" is " + std::string(to_string(named)) +
                                                     " but " + std::string(to_string(*expected)) + " was requested");
        kind = named;
    }
    require(kind.has_value(), "missing \"experiment\"");
    require(j.contains("seed"), "missing mandatory \"seed\"");
    require(j.at("seed").is_number_unsigned(), "\"seed\" must be a non-negative integer");

    ExperimentConfig config = default_config(*kind, j.at("seed").get<std::uint64_t>());
    switch (*kind) {
        case ExperimentKind::Counts: {
            check_keys(j, {"n_values", "formulas"});
            auto &p = std::get<CountsConfig>(config.params);
            read(j, "n_values", p.n_values);
            if (j.contains("formulas")) {
                std::vector<std::string> names;
                read(j, "formulas", names);
                p.formulas.clear();
                for (const auto &name : names) {
                    p.formulas.push_back(parse_count_formula(name));
                }
            }
            for (int n : p.n_values) {
                require(n >= 2 && n <= 10, "n_values entries must lie in [2, 10]");
            }
            break;
        }
        case ExperimentKind::Converge: {
            check_keys(j, {"model", "n", "eta", "spread", "decay", "relative_spread", "distribution", "epsilon",
                           "delta", "trials", "checkpoints", "max_failure_fraction", "min_pass_fraction"});
            auto &p = std::get<ConvergeConfig>(config.params);
            read(j, "model", p.model);
            read(j, "n", p.n);
            read(j, "eta", p.eta);
            read(j, "spread", p.spread);
            read(j, "decay", p.decay);
            read(j, "relative_spread", p.relative_spread);
            if (j.contains("distribution")) {
                std::string name;
                read(j, "distribution", name);
                p.distribution = parse_distribution(name);
            }
            read(j, "epsilon", p.epsilon);
            read(j, "delta", p.delta);
            read(j, "trials", p.trials);
            read(j, "checkpoints", p.checkpoints);
            read(j, "max_failure_fraction", p.max_failure_fraction);
            read(j, "min_pass_fraction", p.min_pass_fraction);
            require(p.model == "r1" || p.model == "r2", "model must be \"r1\" or \"r2\"");
            require(p.n >= 1 && p.n <= (p.model == "r2" ? kMaxSubsetFitQubits : 6), "n out of range");
            require(p.epsilon > 0 && p.epsilon < 1 && p.delta > 0 && p.delta < 1, "epsilon and delta must lie in (0, 1)");
            require(p.trials >= 1, "trials must be >= 1");
            break;
        }
        case ExperimentKind::ReadoutMitigation: {
            check_keys(j, {"n", "p_single", "p_pair", "shots_per_state", "shots_per_rep", "shots_per_mapping",
                           "trials", "max_median_difference", "max_after_ratio"});
            auto &p = std::get<ReadoutConfig>(config.params);
            read(j, "n", p.n);
            read(j, "p_single", p.p_single);
            read(j, "p_pair", p.p_pair);
            read(j, "shots_per_state", p.shots_per_state);
            read(j, "shots_per_rep", p.shots_per_rep);
            read(j, "shots_per_mapping", p.shots_per_mapping);
            read(j, "trials", p.trials);
            read(j, "max_median_difference", p.max_median_difference);
            read(j, "max_after_ratio", p.max_after_ratio);
            require(p.n == 4, "readout-mitigation needs n = 4");
            require(p.p_single >= 0 && p.p_single <= 1 && p.p_pair >= 0 && p.p_pair <= 1,
                    "flip probabilities must lie in [0, 1]");
            require(p.shots_per_state >= 1 && p.shots_per_rep >= 1 && p.shots_per_mapping >= 1,
                    "shot counts must be >= 1");
            require(p.trials >= 1, "trials must be >= 1");
            break;
        }
        case ExperimentKind::NoiseEstimation: {
            check_keys(j, {"targets", "copies", "eta", "spread", "shots", "trials"});
            auto &p = std::get<NoiseEstimationConfig>(config.params);
            read(j, "targets", p.targets);
            read(j, "copies", p.copies);
            read(j, "eta", p.eta);
            read(j, "spread", p.spread);
            read(j, "shots", p.shots);
            read(j, "trials", p.trials);
            for (double t : p.targets) {
                require(t >= -1 && t <= 1, "targets must lie in [-1, 1]");
            }
            require(p.copies >= 1 && p.trials >= 1, "copies and trials must be >= 1");
            validate_model(R1Model{4, p.eta, p.spread});
            break;
        }
        case ExperimentKind::TimeSeries: {
            check_keys(j, {"n_parallel", "timesteps", "p_max", "seeds", "ratio_min", "ratio_max"});
            auto &p = std::get<TimeSeriesConfig>(config.params);
            read(j, "n_parallel", p.n_parallel);
            read(j, "timesteps", p.timesteps);
            read(j, "p_max", p.p_max);
            read(j, "seeds", p.seeds);
            read(j, "ratio_min", p.ratio_min);
            read(j, "ratio_max", p.ratio_max);
            require(p.n_parallel >= 2, "n_parallel must be >= 2");
            require(p.timesteps >= 2, "timesteps must be >= 2");
            require(p.p_max >= 0 && p.p_max <= 1, "p_max must lie in [0, 1]");
            require(p.seeds >= 1, "seeds must be >= 1");
            break;
        }
    }
    return config;
}

std::string experiment_config_to_json(const ExperimentConfig &config) {
    ordered_json j;
    j["experiment"] = std::string(to_string(config.kind));
    j["seed"] = config.seed;
    std::visit(
        [&](const auto &p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, CountsConfig>) {
                j["n_values"] = p.n_values;
                std::vector<std::string> names;
                for (auto f : p.formulas) {
                    names.emplace_back(to_string(f));
                }
                j["formulas"] = names;
            } else if constexpr (std::is_same_v<T, ConvergeConfig>) {
                j["model"] = p.model;
                j["n"] = p.n;
                j["eta"] = p.eta;
                j["spread"] = p.spread;
                j["decay"] = p.decay;
                j["relative_spread"] = p.relative_spread;
                j["distribution"] = std::string(to_string(p.distribution));
                j["epsilon"] = p.epsilon;
                j["delta"] = p.delta;
                j["trials"] = p.trials;
                j["checkpoints"] = p.checkpoints;
                j["max_failure_fraction"] = p.max_failure_fraction;
                j["min_pass_fraction"] = p.min_pass_fraction;
            } else if constexpr (std::is_same_v<T, ReadoutConfig>) {
                j["n"] = p.n;
                j["p_single"] = p.p_single;
                j["p_pair"] = p.p_pair;
                j["shots_per_state"] = p.shots_per_state;
                j["shots_per_rep"] = p.shots_per_rep;
                j["shots_per_mapping"] = p.shots_per_mapping;
                j["trials"] = p.trials;
                j["max_median_difference"] = p.max_median_difference;
                j["max_after_ratio"] = p.max_after_ratio;
            } else if constexpr (std::is_same_v<T, NoiseEstimationConfig>) {
                j["targets"] = p.targets;
                j["copies"] = p.copies;
                j["eta"] = p.eta;
                j["spread"] = p.spread;
                j["shots"] = p.shots;
                j["trials"] = p.trials;
            } else {
                j["n_parallel"] = p.n_parallel;
                j["timesteps"] = p.timesteps;
                j["p_max"] = p.p_max;
                j["seeds"] = p.seeds;
                j["ratio_min"] = p.ratio_min;
                j["ratio_max"] = p.ratio_max;
            }
        },
        config.params);
    return j.dump();
}

std::string format_csv(const ExperimentResult &result) {
    std::ostringstream out;
    for (std::size_t c = 0; c < result.columns.size(); ++c) {
        out << (c ? "," : "") << csv_field(result.columns[c]);
    }
    out << "\r\n";
    for (const auto &row : result.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << (c ? "," : "") << csv_field(row[c]);
        }
        out << "\r\n";
    }
    return out.str();
}

std::string format_report_json(std::span<const ExperimentResult> results) {
    ordered_json report;
    report["schema_version"] = kReportSchemaVersion;
    ordered_json records = ordered_json::array();
    for (const auto &r : results) {
        ordered_json record;
        record["experiment"] = r.experiment;
        record["seed"] = r.seed;
        record["passed"] = r.passed;
        record["assertion"] = r.assertion;
        ordered_json metrics = ordered_json::object();
        for (const auto &[name, value] : r.metrics) {
            metrics[name] = cell_json(value);
        }
        record["metrics"] = std::move(metrics);
        record["config"] = r.config_json.empty() ? ordered_json(nullptr) : ordered_json::parse(r.config_json);
        record["columns"] = r.columns;
        record["row_count"] = r.rows.size();
        record["csv"] = r.experiment + ".csv";
        records.push_back(std::move(record));
    }
    report["results"] = std::move(records);
    return report.dump(2) + "\n";
}

void emit_report(std::span<const ExperimentResult> results, const std::filesystem::path &dir) {
    if (results.empty()) {
        throw std::invalid_argument("emit_report: no results");
    }
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw std::runtime_error("emit_report: cannot create " + dir.string() + ": " + ec.message());
    }
    auto write = [](const std::filesystem::path &path, const std::string &content) {
        std::ofstream file(path, std::ios::binary);
        file << content;
        file.close();
        if (!file) {
            throw std::runtime_error("emit_report: failed writing " + path.string());
        }
    };
    for (const auto &r : results) {
        write(dir / (r.experiment + ".csv"), format_csv(r));
    }
    write(dir / "report.json", format_report_json(results));
}

}  // namespace symrand
