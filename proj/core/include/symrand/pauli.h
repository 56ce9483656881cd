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

#ifndef SYMRAND_PAULI_H
#define SYMRAND_PAULI_H

#include <cstdint>
#include <string>
#include <string_view>

namespace symrand {

/// Single-qubit Pauli letter. The numeric value is the base-4 digit used by
/// the canonical string encoding.
enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);

/// Largest qubit count a PauliString can encode (two bits per qubit in 64 bits).
inline constexpr int kMaxEncodedQubits = 32;

/// Number of n-qubit Pauli strings, 4^n.
constexpr std::uint64_t pauli_count(int num_qubits) {
    return std::uint64_t{1} << (2 * num_qubits);
}

/// Length-n word over {I, X, Y, Z}.
///
/// Canonical encoding: one base-4 digit per qubit (I=0, X=1, Y=2, Z=3) with
/// qubit 0 as the most significant digit, so "XZ" encodes to 1*4 + 3 = 7 and
/// the all-identity string encodes to 0. Qubit indices in the C++ API are
/// 0-based; file formats and the CLI use 1-based labels.
class PauliString {
  public:
    PauliString(int num_qubits, std::uint64_t code);

    static PauliString identity(int num_qubits);
    /// Parses letters such as "XZII". Throws std::invalid_argument naming the
    /// offending position on any symbol outside {I, X, Y, Z}.
    static PauliString parse(std::string_view letters);

    int num_qubits() const { return num_qubits_; }
    std::uint64_t code() const { return code_; }

    Pauli operator[](int qubit) const;
    int weight() const;

    /// Bit masks over basis-state indices: qubit q owns bit (n - 1 - q), so the
    /// bitstring "01" is index 1. X and Y set the x bit; Y and Z set the z bit.
    std::uint64_t x_mask() const;
    std::uint64_t z_mask() const;
    /// Mask of qubits acted on non-trivially, same bit convention.
    std::uint64_t support_mask() const { return x_mask() | z_mask(); }

    std::string str() const;

    bool operator==(const PauliString &other) const = default;

  private:
    int num_qubits_;
    std::uint64_t code_;
};

/// Canonical integer encoding of a Pauli word.
std::uint64_t encode_pauli(std::string_view letters);
PauliString decode_pauli(std::uint64_t code, int num_qubits);

/// Letter of qubit `qubit` inside an encoded n-qubit word.
inline Pauli pauli_letter(std::uint64_t code, int num_qubits, int qubit) {
    return static_cast<Pauli>((code >> (2 * (num_qubits - 1 - qubit))) & 3);
}

/// Support mask (bit n-1-q set when qubit q is non-identity) of an encoded word.
std::uint64_t pauli_support(std::uint64_t code, int num_qubits);

}  // namespace symrand

#endif  // SYMRAND_PAULI_H
