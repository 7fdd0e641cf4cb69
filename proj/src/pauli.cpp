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

#include "klscope/pauli.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>

namespace klscope {

const char *error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse: return "parse";
        case ErrorKind::Dimension: return "dimension";
        case ErrorKind::Capacity: return "capacity";
        case ErrorKind::DegenerateInput: return "degenerate-input";
        case ErrorKind::NotACode: return "not-a-code";
        case ErrorKind::Domain: return "domain";
        case ErrorKind::Validation: return "validation";
        case ErrorKind::Incompatible: return "incompatible";
        case ErrorKind::Rank: return "rank";
        case ErrorKind::Inconsistent: return "inconsistent";
        case ErrorKind::Conditioning: return "conditioning";
        case ErrorKind::MissingTarget: return "missing-target";
        case ErrorKind::UnknownName: return "unknown-name";
        case ErrorKind::Construction: return "construction";
    }
    return "unknown";
}

char pauli_char(Pauli p) { return "IXYZ"[static_cast<int>(p)]; }

Phase phase_times(Phase a, Phase b) {
    return static_cast<Phase>((static_cast<int>(a) + static_cast<int>(b)) & 3);
}

Complex phase_value(Phase p) {
    switch (p) {
        case Phase::PlusOne: return {1, 0};
        case Phase::PlusI: return {0, 1};
        case Phase::MinusOne: return {-1, 0};
        case Phase::MinusI: return {0, -1};
    }
    return {1, 0};
}

std::string phase_prefix(Phase p) {
    switch (p) {
        case Phase::PlusOne: return "+";
        case Phase::PlusI: return "+i";
        case Phase::MinusOne: return "-";
        case Phase::MinusI: return "-i";
    }
    return "+";
}

PauliString::PauliString(std::vector<Pauli> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) {
        throw Error(ErrorKind::Parse, "Pauli string must have at least one letter");
    }
}

PauliString PauliString::from_string(std::string_view text) {
    if (text.empty()) {
        throw Error(ErrorKind::Parse, "empty Pauli string");
    }
    std::vector<Pauli> letters;
    letters.reserve(text.size());
    for (std::size_t k = 0; k < text.size(); ++k) {
        switch (text[k]) {
            case 'I': letters.push_back(Pauli::I); break;
            case 'X': letters.push_back(Pauli::X); break;
            case 'Y': letters.push_back(Pauli::Y); break;
            case 'Z': letters.push_back(Pauli::Z); break;
            default:
                throw Error(ErrorKind::Parse, "invalid Pauli letter '" + std::string(1, text[k]) +
                                                  "' at position " + std::to_string(k));
        }
    }
    return PauliString(std::move(letters));
}

PauliString PauliString::identity(std::size_t n) { return PauliString(std::vector<Pauli>(n, Pauli::I)); }

PauliString PauliString::on_qubits(std::size_t n, std::initializer_list<std::size_t> qubits, Pauli p) {
    std::vector<Pauli> letters(n, Pauli::I);
    for (auto q : qubits) {
        if (q >= n) throw Error(ErrorKind::Dimension, "qubit index out of range");
        letters[q] = p;
    }
    return PauliString(std::move(letters));
}

std::size_t PauliString::weight() const {
    return static_cast<std::size_t>(std::count_if(letters_.begin(), letters_.end(), [](Pauli p) { return p != Pauli::I; }));
}

bool PauliString::commutes_with(const PauliString &other) const {
    if (other.num_qubits() != num_qubits()) {
        throw Error(ErrorKind::Dimension, "Pauli strings have different lengths");
    }
    int anti = 0;
    for (std::size_t k = 0; k < letters_.size(); ++k) {
        Pauli a = letters_[k], b = other.letters_[k];
        if (a != Pauli::I && b != Pauli::I && a != b) ++anti;
    }
    return anti % 2 == 0;
}

std::string PauliString::str() const {
    std::string s;
    s.reserve(letters_.size());
    for (auto p : letters_) s.push_back(pauli_char(p));
    return s;
}

std::uint64_t PauliString::x_mask() const {
    std::uint64_t m = 0;
    const std::size_t n = letters_.size();
    for (std::size_t k = 0; k < n; ++k) {
        if (letters_[k] == Pauli::X || letters_[k] == Pauli::Y) m |= std::uint64_t{1} << (n - 1 - k);
    }
    return m;
}

std::uint64_t PauliString::z_mask() const {
    std::uint64_t m = 0;
    const std::size_t n = letters_.size();
    for (std::size_t k = 0; k < n; ++k) {
        if (letters_[k] == Pauli::Z || letters_[k] == Pauli::Y) m |= std::uint64_t{1} << (n - 1 - k);
    }
    return m;
}

int PauliString::y_count() const {
    return static_cast<int>(std::count(letters_.begin(), letters_.end(), Pauli::Y));
}

std::strong_ordering PauliString::operator<=>(const PauliString &other) const {
    if (auto c = weight() <=> other.weight(); c != 0) return c;
    return letters_ <=> other.letters_;
}

PhasedPauli PhasedPauli::from_string(std::string_view text) {
    Phase phase = Phase::PlusOne;
    bool negative = false;
    if (text.starts_with("+")) {
        text.remove_prefix(1);
    } else if (text.starts_with("-")) {
        negative = true;
        text.remove_prefix(1);
    } else if (text.starts_with("\xE2\x88\x92")) {
        negative = true;
        text.remove_prefix(3);
    }
    bool imaginary = false;
    if (text.starts_with("i")) {
        imaginary = true;
        text.remove_prefix(1);
    }
    if (imaginary) {
        phase = negative ? Phase::MinusI : Phase::PlusI;
    } else if (negative) {
        phase = Phase::MinusOne;
    }
    return PhasedPauli{phase, PauliString::from_string(text)};
}

std::string PhasedPauli::str() const { return phase_prefix(phase) + word.str(); }

namespace {

// a*b = i^phase * letter, single qubit.
std::pair<Phase, Pauli> single_product(Pauli a, Pauli b) {
    if (a == Pauli::I) return {Phase::PlusOne, b};
    if (b == Pauli::I) return {Phase::PlusOne, a};
    if (a == b) return {Phase::PlusOne, Pauli::I};
    int ia = static_cast<int>(a), ib = static_cast<int>(b);
    auto c = static_cast<Pauli>(6 - ia - ib);
    // Cyclic (X,Y), (Y,Z), (Z,X) give +i.
    bool cyclic = (ib - ia + 3) % 3 == 1;
    return {cyclic ? Phase::PlusI : Phase::MinusI, c};
}

}  // namespace

PhasedPauli multiply(const PhasedPauli &p, const PhasedPauli &q) {
    const std::size_t n = p.word.num_qubits();
    if (q.word.num_qubits() != n) {
        throw Error(ErrorKind::Dimension, "cannot multiply Pauli strings of lengths " + std::to_string(n) +
                                              " and " + std::to_string(q.word.num_qubits()));
    }
    Phase phase = phase_times(p.phase, q.phase);
    std::vector<Pauli> letters(n);
    for (std::size_t k = 0; k < n; ++k) {
        auto [ph, letter] = single_product(p.word[k], q.word[k]);
        phase = phase_times(phase, ph);
        letters[k] = letter;
    }
    return PhasedPauli{phase, PauliString(std::move(letters))};
}

ErrorBasis::ErrorBasis(std::size_t n, std::size_t d, std::vector<PauliString> ops)
    : n_(n), d_(d), ops_(std::move(ops)) {
    for (std::size_t i = 0; i < ops_.size(); ++i) {
        if (ops_[i].num_qubits() != n_) throw Error(ErrorKind::Dimension, "error basis word has wrong length");
        index_.emplace(ops_[i].str(), i);
    }
}

std::optional<std::size_t> ErrorBasis::index_of(const PauliString &word) const {
    auto it = index_.find(word.str());
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t error_basis_size(std::size_t n, std::size_t d) {
    std::size_t total = 0;
    for (std::size_t w = 1; w < d && w <= n; ++w) {
        std::size_t binom = 1;
        for (std::size_t k = 0; k < w; ++k) binom = binom * (n - k) / (k + 1);
        std::size_t pow3 = 1;
        for (std::size_t k = 0; k < w; ++k) pow3 *= 3;
        total += binom * pow3;
    }
    return total;
}

ErrorBasis enumerate_error_basis(std::size_t n, std::size_t d) {
    if (n < 1) throw Error(ErrorKind::Domain, "error basis needs n >= 1");
    if (d < 2) throw Error(ErrorKind::Domain, "distance below 2 has no correctable structure");
    if (d > n + 1) throw Error(ErrorKind::Domain, "distance above n+1");

    std::vector<PauliString> ops;
    ops.reserve(error_basis_size(n, d));
    std::vector<Pauli> letters(n, Pauli::I);
    // Depth-first over sites, choosing I or one of X/Y/Z, bounded by weight.
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t site, std::size_t weight) {
        if (site == n) {
            if (weight > 0) ops.emplace_back(letters);
            return;
        }
        letters[site] = Pauli::I;
        rec(site + 1, weight);
        if (weight + 1 < d) {
            for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
                letters[site] = p;
                rec(site + 1, weight + 1);
            }
            letters[site] = Pauli::I;
        }
    };
    rec(0, 0);
    std::sort(ops.begin(), ops.end());
    return ErrorBasis(n, d, std::move(ops));
}

CMatrix dense_matrix(const PauliString &p) {
    if (p.num_qubits() > kDenseQubitLimit) {
        throw Error(ErrorKind::Capacity, "dense matrices are limited to " + std::to_string(kDenseQubitLimit) + " qubits");
    }
    static const std::array<Eigen::Matrix2cd, 4> single = [] {
        std::array<Eigen::Matrix2cd, 4> m;
        const Complex i1(0, 1);
        m[0] << 1, 0, 0, 1;
        m[1] << 0, 1, 1, 0;
        m[2] << 0, -i1, i1, 0;
        m[3] << 1, 0, 0, -1;
        return m;
    }();
    CMatrix out = CMatrix::Identity(1, 1);
    for (Pauli letter : p.letters()) {
        const auto &f = single[static_cast<int>(letter)];
        CMatrix next(out.rows() * 2, out.cols() * 2);
        for (Eigen::Index r = 0; r < out.rows(); ++r) {
            for (Eigen::Index c = 0; c < out.cols(); ++c) {
                next.block<2, 2>(2 * r, 2 * c) = out(r, c) * f;
            }
        }
        out = std::move(next);
    }
    return out;
}

void apply_pauli(const PauliString &p, const CMatrix &in, CMatrix &out) {
    const std::size_t n = p.num_qubits();
    const Eigen::Index dim = Eigen::Index{1} << n;
    if (in.rows() != dim) {
        throw Error(ErrorKind::Dimension, "state block has " + std::to_string(in.rows()) + " rows, expected " +
                                              std::to_string(dim));
    }
    out.resize(in.rows(), in.cols());
    const std::uint64_t xm = p.x_mask();
    const std::uint64_t zm = p.z_mask();
    const Complex base = phase_value(static_cast<Phase>(p.y_count() & 3));
    // P|b> = i^{#Y} (-1)^{popcount(b & zm)} |b ^ xm>
    for (Eigen::Index b = 0; b < dim; ++b) {
        const auto ub = static_cast<std::uint64_t>(b);
        const Complex coef = (std::popcount(ub & zm) & 1) ? -base : base;
        out.row(static_cast<Eigen::Index>(ub ^ xm)) = coef * in.row(b);
    }
}

CMatrix apply_pauli(const PauliString &p, const CMatrix &in) {
    CMatrix out;
    apply_pauli(p, in, out);
    return out;
}

}  // namespace klscope
