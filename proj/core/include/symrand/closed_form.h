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

#ifndef SYMRAND_CLOSED_FORM_H
#define SYMRAND_CLOSED_FORM_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "symrand/symmetry.h"

namespace symrand {

/// Closed-form coefficient counts for symmetrised and randomised channels.
///
/// ref, rot, refrot, perm: Pauli-string orbits under the matching symmetry
/// group (identity string included).
/// r1, r2: limit-channel complexity after randomisation (identity excluded).
/// r2_ref, r2_rot, r2_refrot, r2_perm: support-subset orbits under the group
/// (empty subset included).
enum class CountFormula { Ref, Rot, RefRot, Perm, R1, R2, R2Ref, R2Rot, R2RefRot, R2Perm };

std::string_view to_string(CountFormula formula);
CountFormula parse_count_formula(std::string_view name);

/// Reduced fraction. den > 0.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    bool is_integer() const { return den == 1; }
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    /// "136" or "16463/2".
    std::string str() const;
    bool operator==(const Rational &other) const = default;
};

Rational make_rational(std::int64_t num, std::int64_t den);

/// Largest n any formula is evaluated at (keeps 2^(2n+1) inside int64).
inline constexpr int kMaxClosedFormQubits = 30;

/// Evaluates the formula exactly. Throws std::invalid_argument when n lies
/// outside the formula's domain: even n for the reflection/rotation families,
/// n = 4k with k >= 2 for refrot.
Rational closed_form_count(CountFormula formula, int num_qubits);

/// Group, alphabet and identity convention the formula is compared against.
struct OracleSpec {
    SymmetryKind kind;
    int alphabet_size;
    bool include_identity;
};
OracleSpec oracle_spec(CountFormula formula);

/// Exact count by Burnside's lemma over the formula's group. For the
/// permutation family above kMaxPermutationGroupQubits the multiset count
/// C(n + a - 1, a - 1) is used instead of an explicit group. r1 is measured as
/// the complexity of a global depolarizing channel.
std::uint64_t oracle_count(CountFormula formula, int num_qubits);

struct CountCheck {
    CountFormula formula;
    int num_qubits;
    Rational closed_form;
    std::uint64_t oracle;
    bool match;
};

/// Evaluates both sides. match is exact integer equality; a non-integral
/// closed form never matches.
CountCheck verify_count(CountFormula formula, int num_qubits);

}  // namespace symrand

#endif  // SYMRAND_CLOSED_FORM_H
