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

#ifndef SYMRAND_CIRCUIT_LIBRARY_H
#define SYMRAND_CIRCUIT_LIBRARY_H

#include <array>

#include "symrand/circuit.h"

namespace symrand {

/// H on qubit 0, then CNOT 0 -> 1. Prepares (|00> + |11>)/sqrt(2).
Circuit bell_pair_circuit();

/// Two Bell pairs on a 4-loop: H on qubits 0 and 2, then CNOTs 0 -> 1 and 2 -> 3.
Circuit two_bell_pairs_circuit();

/// Four-qubit layered ansatz of alternating RX and CZ layers:
///   RX(theta[0..3]) | CZ(0,1) CZ(2,3) | RX(theta[4..7]) | CZ(0,3) CZ(1,2)
using AnsatzAngles = std::array<double, 8>;
Circuit cz_rx_ansatz(const AnsatzAngles &theta);

/// Angles with <Z_0> = target exactly in the noiseless ansatz: theta[0] =
/// acos(target), theta[4] = 0, and fixed non-zero angles elsewhere so the other
/// qubits still carry noise-sensitive rotations. target must lie in [-1, 1].
AnsatzAngles ansatz_angles_for_target(double target);

/// Estimation variant of any circuit: every RX angle set to zero.
Circuit zero_angle_circuit(const Circuit &circuit);

}  // namespace symrand

#endif  // SYMRAND_CIRCUIT_LIBRARY_H
