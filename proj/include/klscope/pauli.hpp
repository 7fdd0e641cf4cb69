// Copyright 2026 The klscope Authors
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

#ifndef KLSCOPE_PAULI_HPP
#define KLSCOPE_PAULI_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "klscope/error.hpp"

namespace klscope {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);

/// Exact global phase i^k.
enum class Phase : std::uint8_t { PlusOne = 0, PlusI = 1, MinusOne = 2, MinusI = 3 };

Phase phase_times(Phase a, Phase b);
Complex phase_value(Phase p);
std::string phase_prefix(Phase p);

/// An n-qubit tensor product of single-qubit Paulis. Letter 0 is qubit 1 in
/// ket notation and the most significant bit of a basis index.
class PauliString {
   public:
    PauliString() = default;
    explicit PauliString(std::vector<Pauli> letters);

    static PauliString from_string(std::string_view text);
    static PauliString identity(std::size_t n);
    /// Word with `p` on each listed qubit (0-based) and I elsewhere.
    static PauliString on_qubits(std::size_t n, std::initializer_list<std::size_t> qubits, Pauli p);

    std::size_t num_qubits() const { return letters_.size(); }
    std::size_t weight() const;
    Pauli operator[](std::size_t k) const { return letters_[k]; }
    const std::vector<Pauli> &letters() const { return letters_; }

    bool commutes_with(const PauliString &other) const;
    std::string str() const;

    /// Bit masks in the basis-index convention (qubit 0 = bit n-1).
    std::uint64_t x_mask() const;
    std::uint64_t z_mask() const;
    int y_count() const;

    /// Ordering: weight first, then letters lexicographically with I<X<Y<Z.
    std::strong_ordering operator<=>(const PauliString &other) const;
    bool operator==(const PauliString &other) const = default;

   private:
    std::vector<Pauli> letters_;
};

struct PhasedPauli {
    Phase phase = Phase::PlusOne;
    PauliString word;

    /// Accepts an optional prefix "+", "-", "+i", "-i" (ASCII or U+2212 minus).
    static PhasedPauli from_string(std::string_view text);
    std::string str() const;
    bool operator==(const PhasedPauli &other) const = default;
};

PhasedPauli multiply(const PhasedPauli &p, const PhasedPauli &q);
inline PhasedPauli operator*(const PhasedPauli &p, const PhasedPauli &q) { return multiply(p, q); }

/// The operators O_alpha with 0 < wt(O_alpha) < d, sorted by weight then letters.
class ErrorBasis {
   public:
    ErrorBasis(std::size_t n, std::size_t d, std::vector<PauliString> ops);

    std::size_t num_qubits() const { return n_; }
    std::size_t distance() const { return d_; }
    std::size_t size() const { return ops_.size(); }
    const PauliString &operator[](std::size_t i) const { return ops_[i]; }
    const std::vector<PauliString> &ops() const { return ops_; }
    auto begin() const { return ops_.begin(); }
    auto end() const { return ops_.end(); }

    std::optional<std::size_t> index_of(const PauliString &word) const;

   private:
    std::size_t n_;
    std::size_t d_;
    std::vector<PauliString> ops_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// sum_{w=1}^{d-1} C(n,w) 3^w
std::size_t error_basis_size(std::size_t n, std::size_t d);

ErrorBasis enumerate_error_basis(std::size_t n, std::size_t d);

inline constexpr std::size_t kDenseQubitLimit = 12;

/// Dense 2^n x 2^n matrix of the word, built by iterated Kronecker products.
CMatrix dense_matrix(const PauliString &p);

/// out = P * in for a column block `in` with 2^n rows. Equivalent to
/// dense_matrix(p) * in without materializing the matrix.
void apply_pauli(const PauliString &p, const CMatrix &in, CMatrix &out);
CMatrix apply_pauli(const PauliString &p, const CMatrix &in);

}  // namespace klscope

#endif
