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

#include "symrand/symmetry.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace symrand {

namespace {

std::uint64_t word_space_size(int num_qubits, int alphabet_size) {
    std::uint64_t size = 1;
    for (int k = 0; k < num_qubits; ++k) {
        size *= static_cast<std::uint64_t>(alphabet_size);
    }
    return size;
}

// Enumerable word spaces: 4^10 Pauli strings, 2^16 bitstrings, 2^20 otherwise.
void check_enumerable(int num_qubits, int alphabet_size, const char *where) {
    if (alphabet_size < 2) {
        throw std::invalid_argument(std::string(where) + ": alphabet size must be >= 2");
    }
    int max_qubits;
    if (alphabet_size == 4) {
        max_qubits = 10;
    } else if (alphabet_size == 2) {
        max_qubits = 16;
    } else {
        max_qubits = 0;
        std::uint64_t size = 1;
        while (size * static_cast<std::uint64_t>(alphabet_size) <= (std::uint64_t{1} << 20)) {
            size *= static_cast<std::uint64_t>(alphabet_size);
            ++max_qubits;
        }
    }
    if (num_qubits > max_qubits) {
        throw std::invalid_argument(std::string(where) + ": " + std::to_string(alphabet_size) + "^" +
                                    std::to_string(num_qubits) + " words exceeds the enumeration guard");
    }
}

class DisjointSets {
  public:
    explicit DisjointSets(std::size_t size) : parent_(size) {
        std::iota(parent_.begin(), parent_.end(), std::uint64_t{0});
    }

    std::uint64_t find(std::uint64_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    // Keeps the smaller root so that roots end up as orbit minima.
    void unite(std::uint64_t a, std::uint64_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return;
        }
        if (a < b) {
            parent_[b] = a;
        } else {
            parent_[a] = b;
        }
    }

  private:
    std::vector<std::uint64_t> parent_;
};

// Digit of position q (0 = most significant) of an n-letter word.
struct WordLayout {
    int num_qubits;
    std::uint64_t alphabet;
    std::vector<std::uint64_t> place;  // place[q] = alphabet^(n-1-q)

    WordLayout(int n, int alphabet_size) : num_qubits(n), alphabet(static_cast<std::uint64_t>(alphabet_size)), place(n) {
        std::uint64_t value = 1;
        for (int q = n - 1; q >= 0; --q) {
            place[q] = value;
            value *= alphabet;
        }
    }

    std::uint64_t apply(const QubitPermutation &perm, std::uint64_t word) const {
        std::uint64_t out = 0;
        for (int q = 0; q < num_qubits; ++q) {
            std::uint64_t digit = (word / place[q]) % alphabet;
            out += digit * place[perm(q)];
        }
        return out;
    }
};

std::vector<std::uint64_t> orbit_roots(std::span<const QubitPermutation> perms, int num_qubits, int alphabet_size) {
    WordLayout layout(num_qubits, alphabet_size);
    std::uint64_t size = word_space_size(num_qubits, alphabet_size);
    DisjointSets sets(size);
    for (const auto &g : perms) {
        if (g.is_identity()) {
            continue;
        }
        for (std::uint64_t w = 0; w < size; ++w) {
            sets.unite(w, layout.apply(g, w));
        }
    }
    std::vector<std::uint64_t> roots(size);
    for (std::uint64_t w = 0; w < size; ++w) {
        roots[w] = sets.find(w);
    }
    return roots;
}

bool is_even(int n) {
    return n % 2 == 0;
}

}  // namespace

QubitPermutation QubitPermutation::identity(int num_qubits) {
    if (num_qubits < 1) {
        throw std::invalid_argument("QubitPermutation: need at least one qubit");
    }
    std::vector<int> image(num_qubits);
    std::iota(image.begin(), image.end(), 0);
    return QubitPermutation(std::move(image));
}

QubitPermutation QubitPermutation::from_images(std::vector<int> image) {
    std::vector<bool> seen(image.size(), false);
    for (int target : image) {
        if (target < 0 || target >= static_cast<int>(image.size()) || seen[target]) {
            throw std::invalid_argument("QubitPermutation: image is not a bijection");
        }
        seen[target] = true;
    }
    if (image.empty()) {
        throw std::invalid_argument("QubitPermutation: need at least one qubit");
    }
    return QubitPermutation(std::move(image));
}

QubitPermutation QubitPermutation::inverse() const {
    std::vector<int> inv(image_.size());
    for (std::size_t q = 0; q < image_.size(); ++q) {
        inv[image_[q]] = static_cast<int>(q);
    }
    return QubitPermutation(std::move(inv));
}

int QubitPermutation::cycle_count() const {
    std::vector<bool> visited(image_.size(), false);
    int cycles = 0;
    for (std::size_t start = 0; start < image_.size(); ++start) {
        if (visited[start]) {
            continue;
        }
        ++cycles;
        for (std::size_t q = start; !visited[q]; q = static_cast<std::size_t>(image_[q])) {
            visited[q] = true;
        }
    }
    return cycles;
}

bool QubitPermutation::is_identity() const {
    for (std::size_t q = 0; q < image_.size(); ++q) {
        if (image_[q] != static_cast<int>(q)) {
            return false;
        }
    }
    return true;
}

QubitPermutation operator*(const QubitPermutation &g, const QubitPermutation &h) {
    if (g.num_qubits() != h.num_qubits()) {
        throw std::invalid_argument("QubitPermutation: composing permutations of different sizes");
    }
    std::vector<int> image(g.num_qubits());
    for (int q = 0; q < g.num_qubits(); ++q) {
        image[q] = g(h(q));
    }
    return QubitPermutation::from_images(std::move(image));
}

QubitPermutation reflection(int num_qubits) {
    std::vector<int> image(num_qubits);
    for (int q = 0; q < num_qubits; ++q) {
        image[q] = num_qubits - 1 - q;
    }
    return QubitPermutation::from_images(std::move(image));
}

QubitPermutation rotation(int num_qubits, int shift) {
    std::vector<int> image(num_qubits);
    for (int q = 0; q < num_qubits; ++q) {
        image[q] = ((q - shift) % num_qubits + num_qubits) % num_qubits;
    }
    return QubitPermutation::from_images(std::move(image));
}

std::string_view to_string(SymmetryKind kind) {
    switch (kind) {
        case SymmetryKind::Trivial:
            return "trivial";
        case SymmetryKind::Reflection:
            return "reflection";
        case SymmetryKind::Rotation:
            return "rotation";
        case SymmetryKind::ReflectionRotation:
            return "reflection_rotation";
        case SymmetryKind::Dihedral:
            return "dihedral";
        case SymmetryKind::Permutation:
            return "permutation";
    }
    return "?";
}

SymmetryKind parse_symmetry_kind(std::string_view name) {
    for (auto kind : {SymmetryKind::Trivial, SymmetryKind::Reflection, SymmetryKind::Rotation,
                      SymmetryKind::ReflectionRotation, SymmetryKind::Dihedral, SymmetryKind::Permutation}) {
        if (to_string(kind) == name) {
            return kind;
        }
    }
    throw std::invalid_argument("unknown symmetry kind '" + std::string(name) + "'");
}

SymmetryGroup::SymmetryGroup(SymmetryKind kind, int num_qubits, std::vector<QubitPermutation> generators)
    : kind_(kind), num_qubits_(num_qubits), generators_(std::move(generators)) {
    std::set<QubitPermutation> closed{QubitPermutation::identity(num_qubits)};
    std::vector<QubitPermutation> frontier{QubitPermutation::identity(num_qubits)};
    while (!frontier.empty()) {
        std::vector<QubitPermutation> next;
        for (const auto &element : frontier) {
            for (const auto &gen : generators_) {
                auto product = gen * element;
                if (closed.insert(product).second) {
                    next.push_back(std::move(product));
                }
            }
        }
        frontier = std::move(next);
    }
    elements_.assign(closed.begin(), closed.end());
}

SymmetryGroup make_group(SymmetryKind kind, int num_qubits) {
    if (num_qubits < 2) {
        throw std::invalid_argument("make_group: need n >= 2");
    }
    auto require_even = [&]() {
        if (!is_even(num_qubits)) {
            throw std::invalid_argument("make_group: " + std::string(to_string(kind)) + " requires even n, got " +
                                        std::to_string(num_qubits));
        }
    };
    std::vector<QubitPermutation> generators;
    switch (kind) {
        case SymmetryKind::Trivial:
            break;
        case SymmetryKind::Reflection:
            require_even();
            generators.push_back(reflection(num_qubits));
            break;
        case SymmetryKind::Rotation:
            require_even();
            generators.push_back(rotation(num_qubits, 2));
            break;
        case SymmetryKind::ReflectionRotation:
            require_even();
            generators.push_back(rotation(num_qubits, 2));
            generators.push_back(reflection(num_qubits));
            break;
        case SymmetryKind::Dihedral:
            generators.push_back(rotation(num_qubits, 1));
            generators.push_back(reflection(num_qubits));
            break;
        case SymmetryKind::Permutation: {
            if (num_qubits > kMaxPermutationGroupQubits) {
                throw std::invalid_argument("make_group: permutation group limited to n <= " +
                                            std::to_string(kMaxPermutationGroupQubits));
            }
            std::vector<int> swap01(num_qubits);
            std::iota(swap01.begin(), swap01.end(), 0);
            std::swap(swap01[0], swap01[1]);
            generators.push_back(QubitPermutation::from_images(std::move(swap01)));
            generators.push_back(rotation(num_qubits, 1));
            break;
        }
    }
    return SymmetryGroup(kind, num_qubits, std::move(generators));
}

PauliString act_on_pauli(const QubitPermutation &perm, const PauliString &p) {
    if (perm.num_qubits() != p.num_qubits()) {
        throw std::invalid_argument("act_on_pauli: permutation acts on " + std::to_string(perm.num_qubits()) +
                                    " qubits, string has " + std::to_string(p.num_qubits()));
    }
    return PauliString(p.num_qubits(), act_on_word(perm, p.code(), 4));
}

std::uint64_t act_on_word(const QubitPermutation &perm, std::uint64_t word, int alphabet_size) {
    return WordLayout(perm.num_qubits(), alphabet_size).apply(perm, word);
}

PauliChannel symmetrize_channel(const PauliChannel &channel, const SymmetryGroup &group) {
    if (channel.num_qubits() != group.num_qubits()) {
        throw std::invalid_argument("symmetrize_channel: channel has " + std::to_string(channel.num_qubits()) +
                                    " qubits, group acts on " + std::to_string(group.num_qubits()));
    }
    int n = channel.num_qubits();
    auto roots = orbit_roots(group.generators(), n, 4);
    std::vector<double> sums(roots.size(), 0.0);
    std::vector<std::uint64_t> sizes(roots.size(), 0);
    auto coeffs = channel.coeffs();
    for (std::uint64_t w = 0; w < roots.size(); ++w) {
        sums[roots[w]] += coeffs[w];
        ++sizes[roots[w]];
    }
    std::vector<double> out(roots.size());
    for (std::uint64_t w = 0; w < roots.size(); ++w) {
        out[w] = sums[roots[w]] / static_cast<double>(sizes[roots[w]]);
    }
    return make_channel(n, std::move(out));
}

std::uint64_t burnside_orbit_count(const SymmetryGroup &group, int alphabet_size) {
    if (alphabet_size < 2) {
        throw std::invalid_argument("burnside_orbit_count: alphabet size must be >= 2");
    }
    // Every fixed-word count is at most a^n; keep |S| a^n inside 63 bits.
    double bits = group.num_qubits() * std::log2(alphabet_size) + std::log2(static_cast<double>(group.order()));
    if (bits >= 63) {
        throw std::invalid_argument("burnside_orbit_count: word space too large for 64-bit counts");
    }
    std::uint64_t fixed_total = 0;
    for (const auto &g : group.elements()) {
        fixed_total += word_space_size(g.cycle_count(), alphabet_size);
    }
    if (fixed_total % group.order() != 0) {
        throw std::logic_error("burnside_orbit_count: fixed-point total not divisible by group order");
    }
    return fixed_total / group.order();
}

std::uint64_t enumerate_orbit_count(const SymmetryGroup &group, int alphabet_size) {
    check_enumerable(group.num_qubits(), alphabet_size, "enumerate_orbit_count");
    auto roots = orbit_roots(group.elements(), group.num_qubits(), alphabet_size);
    std::uint64_t count = 0;
    for (std::uint64_t w = 0; w < roots.size(); ++w) {
        count += roots[w] == w;
    }
    return count;
}

std::vector<std::uint64_t> orbit_labels(const SymmetryGroup &group, int alphabet_size) {
    check_enumerable(group.num_qubits(), alphabet_size, "orbit_labels");
    return orbit_roots(group.generators(), group.num_qubits(), alphabet_size);
}

std::vector<OrbitRepresentative> orbit_representatives(const SymmetryGroup &group, int alphabet_size) {
    auto labels = orbit_labels(group, alphabet_size);
    std::vector<std::uint64_t> sizes(labels.size(), 0);
    for (std::uint64_t root : labels) {
        ++sizes[root];
    }
    std::vector<OrbitRepresentative> reps;
    for (std::uint64_t w = 0; w < labels.size(); ++w) {
        if (labels[w] == w) {
            reps.push_back({w, sizes[w]});
        }
    }
    return reps;
}

std::string word_string(std::uint64_t word, int num_qubits, int alphabet_size) {
    WordLayout layout(num_qubits, alphabet_size);
    std::string out(num_qubits, '0');
    for (int q = 0; q < num_qubits; ++q) {
        std::uint64_t digit = (word / layout.place[q]) % layout.alphabet;
        if (alphabet_size == 4) {
            out[q] = pauli_char(static_cast<Pauli>(digit));
        } else {
            out[q] = static_cast<char>('0' + digit);
        }
    }
    return out;
}

}  // namespace symrand
