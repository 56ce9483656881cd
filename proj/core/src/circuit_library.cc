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

#include "symrand/circuit_library.h"

#include <cmath>
#include <stdexcept>

namespace symrand {

Circuit bell_pair_circuit() {
    Circuit c(2);
    c.add_layer({Gate::h(0)});
    c.add_layer({Gate::cnot(0, 1)});
    return c;
}

Circuit two_bell_pairs_circuit() {
    Circuit c(4);
    c.add_layer({Gate::h(0), Gate::h(2)});
    c.add_layer({Gate::cnot(0, 1), Gate::cnot(2, 3)});
    return c;
}

Circuit cz_rx_ansatz(const AnsatzAngles &theta) {
    Circuit c(4);
    c.add_layer({Gate::rx(0, theta[0]), Gate::rx(1, theta[1]), Gate::rx(2, theta[2]), Gate::rx(3, theta[3])});
    c.add_layer({Gate::cz(0, 1), Gate::cz(2, 3)});
    c.add_layer({Gate::rx(0, theta[4]), Gate::rx(1, theta[5]), Gate::rx(2, theta[6]), Gate::rx(3, theta[7])});
    c.add_layer({Gate::cz(0, 3), Gate::cz(1, 2)});
    return c;
}

AnsatzAngles ansatz_angles_for_target(double target) {
    if (!(target >= -1.0 && target <= 1.0)) {
        throw std::invalid_argument("ansatz_angles_for_target: target outside [-1, 1]");
    }
    // Z_0 commutes with every CZ, so only the first rotation on qubit 0 moves it.
    return {std::acos(target), 0.7, 1.1, 0.4, 0.0, 0.9, 0.3, 1.3};
}

Circuit zero_angle_circuit(const Circuit &circuit) {
    Circuit out(circuit.num_qubits());
    for (const auto &layer : circuit.layers()) {
        std::vector<Gate> gates = layer.gates;
        for (auto &gate : gates) {
            if (gate.kind == GateKind::RX) {
                gate.theta = 0.0;
            }
        }
        out.add_layer(std::move(gates), layer.noise);
    }
    return out;
}

}  // namespace symrand
