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

#include <stdexcept>

#include "json.hpp"
#include "symrand/channel.h"
#include "symrand/circuit.h"
#include "symrand/mitigation.h"

namespace symrand {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

json parse_object(std::string_view text, const char *what) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw std::invalid_argument(std::string(what) + ": malformed JSON: " + e.what());
    }
    if (!j.is_object()) {
        throw std::invalid_argument(std::string(what) + ": expected a JSON object");
    }
    return j;
}

ordered_json channel_value(const PauliChannel &channel) {
    ordered_json j;
    j["n"] = channel.num_qubits();
    j["coeffs"] = std::vector<double>(channel.coeffs().begin(), channel.coeffs().end());
    return j;
}

PauliChannel channel_from_value(const json &j) {
    try {
        return make_channel(j.at("n").get<int>(), j.at("coeffs").get<std::vector<double>>());
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("channel JSON: ") + e.what());
    }
}

}  // namespace

std::string channel_to_json(const PauliChannel &channel) {
    return channel_value(channel).dump();
}

PauliChannel channel_from_json(std::string_view text) {
    return channel_from_value(parse_object(text, "channel_from_json"));
}

std::string circuit_to_json(const Circuit &circuit) {
    ordered_json j;
    j["n"] = circuit.num_qubits();
    ordered_json layers = ordered_json::array();
    ordered_json noise = ordered_json::array();
    for (const auto &layer : circuit.layers()) {
        ordered_json gates = ordered_json::array();
        for (const auto &gate : layer.gates) {
            ordered_json g;
            g["kind"] = std::string(to_string(gate.kind));
            if (is_two_qubit(gate.kind)) {
                g["targets"] = {gate.q0 + 1, gate.q1 + 1};
            } else {
                g["targets"] = {gate.q0 + 1};
            }
            if (gate.kind == GateKind::RX) {
                g["theta"] = gate.theta;
            }
            gates.push_back(std::move(g));
        }
        layers.push_back(std::move(gates));
        noise.push_back(layer.noise ? channel_value(*layer.noise) : ordered_json(nullptr));
    }
    j["layers"] = std::move(layers);
    j["noise"] = std::move(noise);
    return j.dump();
}

Circuit circuit_from_json(std::string_view text) {
    json j = parse_object(text, "circuit_from_json");
    try {
        Circuit circuit(j.at("n").get<int>());
        const auto &layers = j.at("layers");
        json noise = j.contains("noise") ? j.at("noise") : json::array();
        if (!noise.is_array() || (!noise.empty() && noise.size() != layers.size())) {
            throw std::invalid_argument("circuit_from_json: \"noise\" needs one entry per layer");
        }
        for (std::size_t k = 0; k < layers.size(); ++k) {
            std::vector<Gate> gates;
            for (const auto &g : layers.at(k)) {
                GateKind kind = parse_gate_kind(g.at("kind").get<std::string>());
                auto targets = g.at("targets").get<std::vector<int>>();
                std::size_t expected = is_two_qubit(kind) ? 2 : 1;
                if (targets.size() != expected) {
                    throw std::invalid_argument("circuit_from_json: gate " + std::string(to_string(kind)) +
                                                " needs " + std::to_string(expected) + " targets");
                }
                Gate gate{kind, targets[0] - 1, expected == 2 ? targets[1] - 1 : -1,
                          g.contains("theta") ? g.at("theta").get<double>() : 0.0};
                if (kind == GateKind::RX && !g.contains("theta")) {
                    throw std::invalid_argument("circuit_from_json: RX gate without \"theta\"");
                }
                gates.push_back(gate);
            }
            std::optional<PauliChannel> channel;
            if (!noise.empty() && !noise.at(k).is_null()) {
                channel = channel_from_value(noise.at(k));
            }
            circuit.add_layer(std::move(gates), std::move(channel));
        }
        return circuit;
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("circuit_from_json: ") + e.what());
    }
}

std::string transition_matrix_to_json(const TransitionMatrix &s) {
    ordered_json j;
    j["n"] = s.num_qubits();
    ordered_json columns = ordered_json::array();
    const auto &m = s.matrix();
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
        std::vector<double> column(m.rows());
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            column[r] = m(r, k);
        }
        columns.push_back(column);
    }
    j["columns"] = std::move(columns);
    j["shots_per_column"] = std::vector<std::uint64_t>(s.shots_per_column().begin(), s.shots_per_column().end());
    return j.dump();
}

TransitionMatrix transition_matrix_from_json(std::string_view text) {
    json j = parse_object(text, "transition_matrix_from_json");
    try {
        int n = j.at("n").get<int>();
        auto columns = j.at("columns").get<std::vector<std::vector<double>>>();
        auto d = static_cast<Eigen::Index>(columns.size());
        Eigen::MatrixXd m(d, d);
        for (Eigen::Index k = 0; k < d; ++k) {
            if (static_cast<Eigen::Index>(columns[k].size()) != d) {
                throw std::invalid_argument("transition_matrix_from_json: ragged columns");
            }
            for (Eigen::Index r = 0; r < d; ++r) {
                m(r, k) = columns[k][r];
            }
        }
        std::vector<std::uint64_t> shots;
        if (j.contains("shots_per_column")) {
            shots = j.at("shots_per_column").get<std::vector<std::uint64_t>>();
        }
        return TransitionMatrix::from_matrix(n, std::move(m), std::move(shots));
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("transition_matrix_from_json: ") + e.what());
    }
}

}  // namespace symrand
