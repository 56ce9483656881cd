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

#include "gtest/gtest.h"

using namespace symrand;

TEST(pauli, encoding_is_base4_with_qubit0_most_significant) {
    ASSERT_EQ(encode_pauli("I"), 0u);
    ASSERT_EQ(encode_pauli("Z"), 3u);
    ASSERT_EQ(encode_pauli("XZ"), 7u);
    ASSERT_EQ(encode_pauli("ZX"), 13u);
    ASSERT_EQ(encode_pauli("IIII"), 0u);
    ASSERT_EQ(encode_pauli("ZZZZ"), 255u);
    ASSERT_EQ(PauliString::parse("YI").code(), 8u);
}

TEST(pauli, parse_rejects_bad_symbols) {
    ASSERT_THROW(PauliString::parse("XQ"), std::invalid_argument);
    ASSERT_THROW(PauliString::parse("x"), std::invalid_argument);
    ASSERT_THROW(PauliString::parse(""), std::invalid_argument);
    ASSERT_THROW(PauliString(2, 16), std::invalid_argument);
    ASSERT_THROW(PauliString(0, 0), std::invalid_argument);
}

TEST(pauli, round_trip_every_code) {
    for (int n = 1; n <= 4; ++n) {
        for (std::uint64_t code = 0; code < pauli_count(n); ++code) {
            auto p = decode_pauli(code, n);
            ASSERT_EQ(encode_pauli(p.str()), code);
            ASSERT_EQ(PauliString::parse(p.str()), p);
        }
    }
}

TEST(pauli, letters_and_weight) {
    auto p = PauliString::parse("XYZI");
    ASSERT_EQ(p[0], Pauli::X);
    ASSERT_EQ(p[1], Pauli::Y);
    ASSERT_EQ(p[2], Pauli::Z);
    ASSERT_EQ(p[3], Pauli::I);
    ASSERT_THROW(p[4], std::out_of_range);
    ASSERT_EQ(p.weight(), 3);
    ASSERT_EQ(PauliString::identity(5).weight(), 0);
    ASSERT_EQ(pauli_char(Pauli::Y), 'Y');
}

TEST(pauli, masks_use_basis_bit_convention) {
    auto p = PauliString::parse("XYZI");
    ASSERT_EQ(p.x_mask(), 0b1100u);
    ASSERT_EQ(p.z_mask(), 0b0110u);
    ASSERT_EQ(p.support_mask(), 0b1110u);
    ASSERT_EQ(PauliString::parse("IIIZ").z_mask(), 1u);
}

TEST(pauli, support_of_code_matches_masks) {
    for (int n = 1; n <= 5; ++n) {
        for (std::uint64_t code = 0; code < pauli_count(n); ++code) {
            auto p = decode_pauli(code, n);
            ASSERT_EQ(pauli_support(code, n), p.support_mask()) << p.str();
            int letters = 0;
            for (char c : p.str()) {
                letters += c != 'I';
            }
            ASSERT_EQ(letters, p.weight());
        }
    }
}

TEST(pauli, wide_strings) {
    std::string letters(32, 'Z');
    auto p = PauliString::parse(letters);
    ASSERT_EQ(p.num_qubits(), 32);
    ASSERT_EQ(p.code(), ~std::uint64_t{0});
    ASSERT_EQ(p.str(), letters);
    ASSERT_THROW(PauliString::parse(std::string(33, 'X')), std::invalid_argument);
}
