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

#include "symrand/closed_form.h"

#include <numeric>
#include <stdexcept>

#include "symrand/channel.h"

namespace symrand {

namespace {

constexpr std::int64_t pow2(int k) {
    return std::int64_t{1} << k;
}

[[noreturn]] void domain_error(CountFormula formula, int n, const char *domain) {
    throw std::invalid_argument("closed_form_count: " + std::string(to_string(formula)) + " is defined for " +
                                domain + ", got n=" + std::to_string(n));
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    std::uint64_t result = 1;
    for (std::uint64_t j = 1; j <= k; ++j) {
        result = result * (n - k + j) / j;
    }
    return result;
}

constexpr CountFormula kAllFormulas[] = {
    CountFormula::Ref,   CountFormula::Rot,   CountFormula::RefRot, CountFormula::Perm,     CountFormula::R1,
    CountFormula::R2,    CountFormula::R2Ref, CountFormula::R2Rot,  CountFormula::R2RefRot, CountFormula::R2Perm,
};

}  // namespace

std::string_view to_string(CountFormula formula) {
    switch (formula) {
        case CountFormula::Ref:
            return "ref";
        case CountFormula::Rot:
            return "rot";
        case CountFormula::RefRot:
            return "refrot";
        case CountFormula::Perm:
            return "perm";
        case CountFormula::R1:
            return "r1";
        case CountFormula::R2:
            return "r2";
        case CountFormula::R2Ref:
            return "r2_ref";
        case CountFormula::R2Rot:
            return "r2_rot";
        case CountFormula::R2RefRot:
            return "r2_refrot";
        case CountFormula::R2Perm:
            return "r2_perm";
    }
    return "?";
}

CountFormula parse_count_formula(std::string_view name) {
    for (auto formula : kAllFormulas) {
        if (to_string(formula) == name) {
            return formula;
        }
    }
    throw std::invalid_argument("unknown count formula '" + std::string(name) + "'");
}

Rational make_rational(std::int64_t num, std::int64_t den) {
    if (den == 0) {
        throw std::invalid_argument("make_rational: zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational{num, den};
}

std::string Rational::str() const {
    if (den == 1) {
        return std::to_string(num);
    }
    return std::to_string(num) + "/" + std::to_string(den);
}

Rational closed_form_count(CountFormula formula, int n) {
    if (n < 2 || n > kMaxClosedFormQubits) {
        throw std::invalid_argument("closed_form_count: n=" + std::to_string(n) + " outside [2, " +
                                    std::to_string(kMaxClosedFormQubits) + "]");
    }
    bool even = n % 2 == 0;
    switch (formula) {
        case CountFormula::Ref:
            if (!even) domain_error(formula, n, "even n");
            return make_rational(pow2(2 * n - 1) + pow2(n - 1), 1);
        case CountFormula::Rot:
            if (!even) domain_error(formula, n, "even n");
            // (2^(2n+1) - 32)/n + 16
            return make_rational(pow2(2 * n + 1) - 32 + 16 * std::int64_t{n}, n);
        case CountFormula::RefRot:
            if (n % 4 != 0 || n < 8) domain_error(formula, n, "n = 4k with k >= 2");
            return make_rational(pow2(2 * n) + pow2(n) + 10 * std::int64_t{n} - 20, n);
        case CountFormula::Perm:
            return make_rational(std::int64_t{n + 1} * (n + 2) * (n + 3), 6);
        case CountFormula::R1:
            return make_rational(1, 1);
        case CountFormula::R2:
            return make_rational(pow2(n) - 1, 1);
        case CountFormula::R2Ref:
            if (!even) domain_error(formula, n, "even n");
            return make_rational(pow2(n) + pow2(n / 2), 2);
        case CountFormula::R2Rot:
            if (!even) domain_error(formula, n, "even n");
            return make_rational(2 * pow2(n) + 4 * std::int64_t{n} - 8, n);
        case CountFormula::R2RefRot:
            if (!even) domain_error(formula, n, "even n");
            return make_rational(pow2(n) + pow2(n / 2) + 4 * std::int64_t{n} - 8, n);
        case CountFormula::R2Perm:
            return make_rational(n + 1, 1);
    }
    throw std::invalid_argument("closed_form_count: unknown formula");
}

OracleSpec oracle_spec(CountFormula formula) {
    switch (formula) {
        case CountFormula::Ref:
            return {SymmetryKind::Reflection, 4, true};
        case CountFormula::Rot:
            return {SymmetryKind::Rotation, 4, true};
        case CountFormula::RefRot:
            return {SymmetryKind::ReflectionRotation, 4, true};
        case CountFormula::Perm:
            return {SymmetryKind::Permutation, 4, true};
        case CountFormula::R1:
            return {SymmetryKind::Trivial, 4, false};
        case CountFormula::R2:
            return {SymmetryKind::Trivial, 2, false};
        case CountFormula::R2Ref:
            return {SymmetryKind::Reflection, 2, true};
        case CountFormula::R2Rot:
            return {SymmetryKind::Rotation, 2, true};
        case CountFormula::R2RefRot:
            return {SymmetryKind::ReflectionRotation, 2, true};
        case CountFormula::R2Perm:
            return {SymmetryKind::Permutation, 2, true};
    }
    throw std::invalid_argument("oracle_spec: unknown formula");
}

std::uint64_t oracle_count(CountFormula formula, int n) {
    OracleSpec spec = oracle_spec(formula);
    if (formula == CountFormula::R1) {
        // Every non-identity coefficient of the limit channel equals eta.
        if (n > 10) {
            throw std::invalid_argument("oracle_count: r1 limit channel limited to n <= 10");
        }
        return channel_complexity(depolarizing_channel(n, 0.5));
    }
    std::uint64_t orbits;
    if (spec.kind == SymmetryKind::Permutation && n > kMaxPermutationGroupQubits) {
        orbits = binomial(static_cast<std::uint64_t>(n + spec.alphabet_size - 1),
                          static_cast<std::uint64_t>(spec.alphabet_size - 1));
    } else {
        orbits = burnside_orbit_count(make_group(spec.kind, n), spec.alphabet_size);
    }
    return spec.include_identity ? orbits : orbits - 1;
}

CountCheck verify_count(CountFormula formula, int n) {
    Rational closed = closed_form_count(formula, n);
    std::uint64_t oracle = oracle_count(formula, n);
    bool match = closed.is_integer() && closed.num >= 0 && static_cast<std::uint64_t>(closed.num) == oracle;
    return CountCheck{formula, n, closed, oracle, match};
}

}  // namespace symrand
