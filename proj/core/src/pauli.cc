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

#include "symrand/pauli.h"

#include <stdexcept>

namespace symrand {

char pauli_char(Pauli p) {
    static constexpr char kChars[] = {'I', 'X', 'Y', 'Z'};
    return kChars[static_cast<int>(p)];
}

PauliString::PauliString(int num_qubits, std::uint64_t code) : num_qubits_(num_qubits), code_(code) {
    if (num_qubits < 1 || num_qubits > kMaxEncodedQubits) {
        throw std::invalid_argument("PauliString: qubit count " + std::to_string(num_qubits) + " out of range");
    }
    if (num_qubits < kMaxEncodedQubits && code >= pauli_count(num_qubits)) {
        throw std::invalid_argument("PauliString: code " + std::to_string(code) + " out of range for " +
                                    std::to_string(num_qubits) + " qubits");
    }
}

PauliString PauliString::identity(int num_qubits) {
    return PauliString(num_qubits, 0);
}

PauliString PauliString::parse(std::string_view letters) {
    return PauliString(static_cast<int>(letters.size()), encode_pauli(letters));
}

Pauli PauliString::operator[](int qubit) const {
    if (qubit < 0 || qubit >= num_qubits_) {
        throw std::out_of_range("PauliString: qubit index out of range");
    }
    return pauli_letter(code_, num_qubits_, qubit);
}

int PauliString::weight() const {
    int w = 0;
    for (int q = 0; q < num_qubits_; ++q) {
        w += pauli_letter(code_, num_qubits_, q) != Pauli::I;
    }
    return w;
}

std::uint64_t PauliString::x_mask() const {
    std::uint64_t mask = 0;
    for (int q = 0; q < num_qubits_; ++q) {
        Pauli p = pauli_letter(code_, num_qubits_, q);
        if (p == Pauli::X || p == Pauli::Y) {
            mask |= std::uint64_t{1} << (num_qubits_ - 1 - q);
        }
    }
    return mask;
}

std::uint64_t PauliString::z_mask() const {
    std::uint64_t mask = 0;
    for (int q = 0; q < num_qubits_; ++q) {
        Pauli p = pauli_letter(code_, num_qubits_, q);
        if (p == Pauli::Y || p == Pauli::Z) {
            mask |= std::uint64_t{1} << (num_qubits_ - 1 - q);
        }
    }
    return mask;
}

std::string PauliString::str() const {
    std::string out(num_qubits_, 'I');
    for (int q = 0; q < num_qubits_; ++q) {
        out[q] = pauli_char(pauli_letter(code_, num_qubits_, q));
    }
    return out;
}

std::uint64_t encode_pauli(std::string_view letters) {
    if (letters.empty() || letters.size() > static_cast<std::size_t>(kMaxEncodedQubits)) {
        throw std::invalid_argument("encode_pauli: word length must be in [1, 32]");
    }
    std::uint64_t code = 0;
    for (std::size_t k = 0; k < letters.size(); ++k) {
        std::uint64_t digit;
        switch (letters[k]) {
            case 'I':
                digit = 0;
                break;
            case 'X':
                digit = 1;
                break;
            case 'Y':
                digit = 2;
                break;
            case 'Z':
                digit = 3;
                break;
            default:
                throw std::invalid_argument("encode_pauli: invalid symbol '" + std::string(1, letters[k]) +
                                            "' at position " + std::to_string(k));
        }
        code = (code << 2) | digit;
    }
    return code;
}

PauliString decode_pauli(std::uint64_t code, int num_qubits) {
    return PauliString(num_qubits, code);
}

std::uint64_t pauli_support(std::uint64_t code, int num_qubits) {
    std::uint64_t mask = 0;
    for (int q = 0; q < num_qubits; ++q) {
        if (((code >> (2 * q)) & 3) != 0) {
            mask |= std::uint64_t{1} << q;
        }
    }
    return mask;
}

}  // namespace symrand
