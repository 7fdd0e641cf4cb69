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

#include "klscope/codespace.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace klscope {

namespace {

void require_state_rows(std::size_t n, Eigen::Index rows) {
    if (n > kDenseQubitLimit) throw Error(ErrorKind::Capacity, "too many qubits");
    if (rows != (Eigen::Index{1} << n)) {
        throw Error(ErrorKind::Dimension,
                    "vector length " + std::to_string(rows) + " does not match 2^" + std::to_string(n));
    }
}

}  // namespace

CodeSubspace CodeSubspace::from_vectors(std::size_t n, const std::vector<CVector> &vectors) {
    if (vectors.empty()) throw Error(ErrorKind::DegenerateInput, "code needs at least one vector");
    const Eigen::Index dim = vectors.front().size();
    require_state_rows(n, dim);
    CMatrix basis(dim, static_cast<Eigen::Index>(vectors.size()));
    for (std::size_t k = 0; k < vectors.size(); ++k) {
        const auto &v = vectors[k];
        if (v.size() != dim) throw Error(ErrorKind::Dimension, "vectors have different lengths");
        const double original = v.norm();
        if (original == 0.0) throw Error(ErrorKind::DegenerateInput, "zero vector at position " + std::to_string(k));
        CVector w = v;
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t j = 0; j < k; ++j) {
                auto q = basis.col(static_cast<Eigen::Index>(j));
                w -= q * q.dot(w);
            }
        }
        const double remaining = w.norm();
        if (remaining <= 1e-10 * original) {
            throw Error(ErrorKind::DegenerateInput,
                        "vector " + std::to_string(k) + " is linearly dependent on the previous ones", remaining);
        }
        basis.col(static_cast<Eigen::Index>(k)) = w / remaining;
    }
    return CodeSubspace(n, std::move(basis));
}

CodeSubspace CodeSubspace::from_isometry(std::size_t n, CMatrix basis, double tol) {
    require_state_rows(n, basis.rows());
    if (basis.cols() < 1 || basis.cols() > basis.rows()) {
        throw Error(ErrorKind::Dimension, "code dimension out of range");
    }
    const Eigen::Index k = basis.cols();
    const double dev = (basis.adjoint() * basis - CMatrix::Identity(k, k)).norm();
    if (dev > tol) throw Error(ErrorKind::Validation, "columns are not orthonormal", dev);
    return CodeSubspace(n, std::move(basis));
}

double KLTensor::violation() const {
    double total = 0.0;
    for (const auto &s : slices) {
        const Eigen::Index k = s.rows();
        const Complex mean = s.trace() / static_cast<double>(k);
        total += (s - mean.real() * CMatrix::Identity(k, k)).squaredNorm();
    }
    return total;
}

std::vector<double> KLTensor::mean_diagonals() const {
    std::vector<double> out;
    out.reserve(slices.size());
    for (const auto &s : slices) out.push_back(s.trace().real() / static_cast<double>(s.rows()));
    return out;
}

KLTensor kl_tensor(const CodeSubspace &code, const ErrorBasis &basis) {
    if (basis.num_qubits() != code.num_qubits()) {
        throw Error(ErrorKind::Dimension, "error basis and code act on different qubit counts");
    }
    KLTensor t;
    t.slices.reserve(basis.size());
    CMatrix applied;
    for (const auto &op : basis) {
        apply_pauli(op, code.basis(), applied);
        t.slices.push_back(code.basis().adjoint() * applied);
    }
    return t;
}

double kl_violation(const CodeSubspace &code, const ErrorBasis &basis) { return kl_tensor(code, basis).violation(); }

double SignatureVector::norm_sq() const {
    double s = 0.0;
    for (double c : components) s += c * c;
    return s;
}

double SignatureVector::norm() const { return std::sqrt(norm_sq()); }

double SignatureVector::value(const PauliString &word) const {
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (words[i] == word) return components[i];
    }
    return 0.0;
}

std::string SignatureVector::to_csv() const {
    std::ostringstream out;
    out.precision(17);
    out << "pauli_word,value\n";
    for (std::size_t i = 0; i < words.size(); ++i) out << words[i].str() << ',' << components[i] << '\n';
    return out.str();
}

SignatureVector signature_vector(const CodeSubspace &code, const ErrorBasis &basis, double tol) {
    const KLTensor t = kl_tensor(code, basis);
    const double violation = t.violation();
    if (violation > tol) {
        throw Error(ErrorKind::NotACode, "KL violation " + std::to_string(violation) + " exceeds tolerance",
                    violation);
    }
    SignatureVector sig;
    sig.words = basis.ops();
    sig.components.reserve(basis.size());
    const double k = static_cast<double>(code.dim());
    for (std::size_t a = 0; a < t.slices.size(); ++a) {
        const Complex mean = t.slices[a].trace() / k;
        if (std::abs(mean.imag()) > 1e-10) {
            throw Error(ErrorKind::NotACode, "complex signature component for " + basis[a].str(), mean.imag());
        }
        sig.components.push_back(mean.real());
    }
    return sig;
}

double lambda_star(const SignatureVector &sig) { return sig.norm(); }

CMatrix reduced_density_matrix(const CVector &state, std::size_t n, std::span<const std::size_t> qubits) {
    require_state_rows(n, state.size());
    std::vector<std::size_t> keep(qubits.begin(), qubits.end());
    std::sort(keep.begin(), keep.end());
    if (keep.empty() || keep.size() >= n) {
        throw Error(ErrorKind::Domain, "reduced density matrix needs a proper nonempty subset of qubits");
    }
    if (std::adjacent_find(keep.begin(), keep.end()) != keep.end() || keep.back() >= n) {
        throw Error(ErrorKind::Domain, "qubit subset has duplicates or out-of-range entries");
    }
    std::vector<bool> kept(n, false);
    for (auto q : keep) kept[q] = true;

    const Eigen::Index sub = Eigen::Index{1} << keep.size();
    const Eigen::Index rest = Eigen::Index{1} << (n - keep.size());
    CMatrix m = CMatrix::Zero(sub, rest);
    for (Eigen::Index b = 0; b < state.size(); ++b) {
        Eigen::Index a = 0, r = 0;
        for (std::size_t q = 0; q < n; ++q) {
            const Eigen::Index bit = (b >> (n - 1 - q)) & 1;
            if (kept[q]) {
                a = (a << 1) | bit;
            } else {
                r = (r << 1) | bit;
            }
        }
        m(a, r) = state(b);
    }
    return m * m.adjoint();
}

CMatrix reduced_density_matrix(const CodeSubspace &code, std::size_t codeword, std::span<const std::size_t> qubits) {
    if (codeword >= code.dim()) throw Error(ErrorKind::Domain, "codeword index out of range");
    return reduced_density_matrix(code.codeword(codeword), code.num_qubits(), qubits);
}

double purity(const CMatrix &rho) { return (rho * rho).trace().real(); }

CodeSubspace apply_local_unitary(const CodeSubspace &code, std::span<const Eigen::Matrix2cd> factors) {
    const std::size_t n = code.num_qubits();
    if (factors.size() != n) throw Error(ErrorKind::Dimension, "need one 2x2 factor per qubit");
    for (std::size_t k = 0; k < n; ++k) {
        const double dev = (factors[k].adjoint() * factors[k] - Eigen::Matrix2cd::Identity()).norm();
        if (dev > 1e-12) throw Error(ErrorKind::Validation, "factor " + std::to_string(k) + " is not unitary", dev);
    }
    CMatrix out = code.basis();
    for (std::size_t k = 0; k < n; ++k) {
        const auto &u = factors[k];
        const Eigen::Index stride = Eigen::Index{1} << (n - 1 - k);
        for (Eigen::Index b = 0; b < out.rows(); ++b) {
            if (b & stride) continue;
            for (Eigen::Index c = 0; c < out.cols(); ++c) {
                const Complex v0 = out(b, c), v1 = out(b | stride, c);
                out(b, c) = u(0, 0) * v0 + u(0, 1) * v1;
                out(b | stride, c) = u(1, 0) * v0 + u(1, 1) * v1;
            }
        }
    }
    return CodeSubspace::from_isometry(n, std::move(out), 1e-9);
}

}  // namespace klscope
