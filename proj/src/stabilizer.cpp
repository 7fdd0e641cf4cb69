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

#include "klscope/stabilizer.hpp"

#include <fstream>

namespace klscope {

namespace {

// Rank over GF(2) of the (x|z) bit vectors.
std::size_t binary_rank(std::vector<std::pair<std::uint64_t, std::uint64_t>> rows) {
    std::size_t rank = 0;
    for (int bit = 127; bit >= 0 && rank < rows.size(); --bit) {
        auto test = [bit](const std::pair<std::uint64_t, std::uint64_t> &r) {
            return bit >= 64 ? ((r.first >> (bit - 64)) & 1) : ((r.second >> bit) & 1);
        };
        std::size_t pivot = rank;
        while (pivot < rows.size() && !test(rows[pivot])) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != rank && test(rows[r])) {
                rows[r].first ^= rows[rank].first;
                rows[r].second ^= rows[rank].second;
            }
        }
        ++rank;
    }
    return rank;
}

CMatrix apply_generator(const PhasedPauli &g, const CMatrix &m) {
    return phase_value(g.phase) * apply_pauli(g.word, m);
}

}  // namespace

StabilizerCode::StabilizerCode(std::size_t n, std::vector<PhasedPauli> generators)
    : n_(n), generators_(std::move(generators)) {
    if (n_ == 0 || n_ > kDenseQubitLimit) throw Error(ErrorKind::Capacity, "unsupported qubit count");
    if (generators_.size() > n_) throw Error(ErrorKind::Rank, "more generators than qubits");
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        const auto &g = generators_[i];
        if (g.word.num_qubits() != n_) {
            throw Error(ErrorKind::Dimension, "generator " + std::to_string(i + 1) + " has length " +
                                                  std::to_string(g.word.num_qubits()));
        }
        if (g.phase == Phase::PlusI || g.phase == Phase::MinusI) {
            throw Error(ErrorKind::Validation, "generator " + std::to_string(i + 1) + " is not Hermitian");
        }
    }
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        for (std::size_t j = i + 1; j < generators_.size(); ++j) {
            if (!generators_[i].word.commutes_with(generators_[j].word)) {
                throw Error(ErrorKind::Incompatible, "generators g" + std::to_string(i + 1) + " and g" +
                                                         std::to_string(j + 1) + " anticommute");
            }
        }
    }
    std::vector<std::pair<std::uint64_t, std::uint64_t>> rows;
    for (const auto &g : generators_) rows.emplace_back(g.word.x_mask(), g.word.z_mask());
    if (binary_rank(rows) != generators_.size()) {
        throw Error(ErrorKind::Rank, "generators are not independent");
    }
}

StabilizerCode parse_generators(const std::vector<std::string> &rows) {
    if (rows.empty()) throw Error(ErrorKind::Parse, "no generators given");
    std::vector<PhasedPauli> gens;
    for (const auto &row : rows) {
        std::string compact;
        for (char c : row) {
            if (c != ' ' && c != '\t' && c != '\r') compact.push_back(c);
        }
        gens.push_back(PhasedPauli::from_string(compact));
    }
    const std::size_t n = gens.front().word.num_qubits();
    return StabilizerCode(n, std::move(gens));
}

StabilizerCode read_generator_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
    std::vector<std::string> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        rows.push_back(line);
    }
    return parse_generators(rows);
}

StabilizerCode builtin_code(std::string_view name) {
    if (name == "steane") {
        return parse_generators({
            "X I X I X I X",
            "I X X I I X X",
            "I I I X X X X",
            "Z I Z I Z I Z",
            "I Z Z I I Z Z",
            "I I I Z Z Z Z",
        });
    }
    if (name == "shaw623") {
        return parse_generators({
            "Y I Z X X Y",
            "Z X I I X Z",
            "I Z X X X X",
            "I I I Z I Z",
            "Z Z Z I Z I",
        });
    }
    throw Error(ErrorKind::UnknownName, "unknown built-in code '" + std::string(name) + "'");
}

CodeSubspace codespace_from_stabilizer(const StabilizerCode &code) {
    const std::size_t n = code.num_qubits();
    const Eigen::Index dim = Eigen::Index{1} << n;
    CMatrix span = CMatrix::Identity(dim, dim);
    for (const auto &g : code.generators()) {
        CMatrix projected = 0.5 * (span + apply_generator(g, span));
        Eigen::ColPivHouseholderQR<CMatrix> qr(projected);
        qr.setThreshold(1e-10);
        const Eigen::Index rank = qr.rank();
        if (rank == 0) throw Error(ErrorKind::Inconsistent, "stabilizer eigenspace is empty");
        CMatrix q = qr.householderQ() * CMatrix::Identity(dim, rank);
        span = std::move(q);
    }
    if (static_cast<std::size_t>(span.cols()) != code.code_dim()) {
        throw Error(ErrorKind::Inconsistent, "stabilizer eigenspace has dimension " + std::to_string(span.cols()) +
                                                 ", expected " + std::to_string(code.code_dim()));
    }
    return CodeSubspace::from_isometry(n, std::move(span), 1e-10);
}

CMatrix stabilizer_projector(const StabilizerCode &code) {
    const Eigen::Index dim = Eigen::Index{1} << code.num_qubits();
    CMatrix p = CMatrix::Identity(dim, dim);
    for (const auto &g : code.generators()) p = 0.5 * (p + apply_generator(g, p));
    return p;
}

}  // namespace klscope
