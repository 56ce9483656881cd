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

#ifndef SYMRAND_SYMMETRY_H
#define SYMRAND_SYMMETRY_H

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symrand/channel.h"
#include "symrand/pauli.h"

namespace symrand {

/// Bijection of qubit positions. image(q) is where the content of qubit q
/// moves to. 0-based.
class QubitPermutation {
  public:
    static QubitPermutation identity(int num_qubits);
    /// Throws std::invalid_argument unless `image` is a bijection on [0, n).
    static QubitPermutation from_images(std::vector<int> image);

    int num_qubits() const { return static_cast<int>(image_.size()); }
    int operator()(int qubit) const { return image_[qubit]; }
    std::span<const int> images() const { return image_; }

    QubitPermutation inverse() const;
    int cycle_count() const;
    bool is_identity() const;

    bool operator==(const QubitPermutation &other) const = default;
    auto operator<=>(const QubitPermutation &other) const = default;

  private:
    explicit QubitPermutation(std::vector<int> image) : image_(std::move(image)) {}

    std::vector<int> image_;
};

/// Composition (g * h)(q) = g(h(q)): apply h first.
QubitPermutation operator*(const QubitPermutation &g, const QubitPermutation &h);

/// Reversal q -> n - 1 - q.
QubitPermutation reflection(int num_qubits);
/// Rotation around a loop by `shift` positions: q -> (q - shift) mod n. The
/// loop rotation used for two-qubit-gate circuits is shift 2, which sends
/// qubit 1 to position n - 1 in 1-based labels.
QubitPermutation rotation(int num_qubits, int shift);

enum class SymmetryKind {
    /// {e}. Baseline for unsymmetrised counts.
    Trivial,
    /// {e, reversal}; n even.
    Reflection,
    /// Rotations by even shifts around an n-loop, order n/2; n even.
    Rotation,
    /// Even-shift rotations plus their reflections, order n; n even.
    ReflectionRotation,
    /// Full dihedral group of the n-gon (all shifts and reflections), order 2n.
    /// Used for readout calibration where no two-qubit gate layout pins the
    /// rotation step.
    Dihedral,
    /// Sym(n), order n!; n <= kMaxPermutationGroupQubits.
    Permutation,
};

inline constexpr int kMaxPermutationGroupQubits = 8;

std::string_view to_string(SymmetryKind kind);
SymmetryKind parse_symmetry_kind(std::string_view name);

/// Finite group of qubit relabelings with its explicit element list.
class SymmetryGroup {
  public:
    SymmetryKind kind() const { return kind_; }
    int num_qubits() const { return num_qubits_; }
    /// Sorted, identity first.
    std::span<const QubitPermutation> elements() const { return elements_; }
    std::span<const QubitPermutation> generators() const { return generators_; }
    std::size_t order() const { return elements_.size(); }

  private:
    SymmetryGroup(SymmetryKind kind, int num_qubits, std::vector<QubitPermutation> generators);

    friend SymmetryGroup make_group(SymmetryKind kind, int num_qubits);

    SymmetryKind kind_;
    int num_qubits_;
    std::vector<QubitPermutation> generators_;
    std::vector<QubitPermutation> elements_;
};

/// Builds the group by closing its generators under composition.
/// Throws std::invalid_argument for odd n on loop kinds, n < 2, or
/// Permutation with n > kMaxPermutationGroupQubits.
SymmetryGroup make_group(SymmetryKind kind, int num_qubits);

/// Moves the letter on qubit q to position perm(q).
PauliString act_on_pauli(const QubitPermutation &perm, const PauliString &p);

/// Positional action on a length-n word over an alphabet of `alphabet_size`
/// letters, encoded base-alphabet_size with position 0 most significant.
/// For alphabet 2 this is a computational-basis bitstring index.
std::uint64_t act_on_word(const QubitPermutation &perm, std::uint64_t word, int alphabet_size);

/// Group-averaged channel: c'_P = (1/|S|) sum_s c_{s^-1(P)}.
/// Computed as an orbit average so every member of an orbit receives the
/// bit-identical value.
PauliChannel symmetrize_channel(const PauliChannel &channel, const SymmetryGroup &group);

/// Exact orbit count of length-n words by Burnside's lemma:
/// (1/|S|) sum_g alphabet_size^cycles(g). Not bound by the enumeration guard;
/// throws only when |S| a^n would overflow 63 bits.
std::uint64_t burnside_orbit_count(const SymmetryGroup &group, int alphabet_size);

/// Orbit count by explicitly partitioning the word space (union-find over
/// every group element). Independent of the cycle-counting route above.
std::uint64_t enumerate_orbit_count(const SymmetryGroup &group, int alphabet_size);

struct OrbitRepresentative {
    std::uint64_t word;  ///< lexicographically smallest member
    std::uint64_t orbit_size;
};

/// One representative per orbit, ordered by word.
std::vector<OrbitRepresentative> orbit_representatives(const SymmetryGroup &group, int alphabet_size);

/// For every word, the smallest member of its orbit.
std::vector<std::uint64_t> orbit_labels(const SymmetryGroup &group, int alphabet_size);

/// Length-n word written as letters; bitstrings for alphabet 2, Pauli letters
/// for alphabet 4.
std::string word_string(std::uint64_t word, int num_qubits, int alphabet_size);

}  // namespace symrand

#endif  // SYMRAND_SYMMETRY_H
