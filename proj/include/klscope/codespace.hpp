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

#ifndef KLSCOPE_CODESPACE_HPP
#define KLSCOPE_CODESPACE_HPP

#include <span>
#include <vector>

#include "klscope/error.hpp"
#include "klscope/pauli.hpp"

namespace klscope {

inline constexpr double kDefaultKlTolerance = 1e-10;

/// K orthonormal vectors |psi_i> in the 2^n-dimensional space of n qubits,
/// stored as the columns of a 2^n x K matrix.
class CodeSubspace {
   public:
    /// Orthonormalizes `vectors` with modified Gram-Schmidt (two passes).
    static CodeSubspace from_vectors(std::size_t n, const std::vector<CVector> &vectors);
    /// Wraps a matrix whose columns are already orthonormal within `tol`.
    static CodeSubspace from_isometry(std::size_t n, CMatrix basis, double tol = 1e-10);

    std::size_t num_qubits() const { return n_; }
    std::size_t dim() const { return static_cast<std::size_t>(basis_.cols()); }
    Eigen::Index hilbert_dim() const { return basis_.rows(); }
    const CMatrix &basis() const { return basis_; }
    CVector codeword(std::size_t i) const { return basis_.col(static_cast<Eigen::Index>(i)); }
    CMatrix projector() const { return basis_ * basis_.adjoint(); }

   private:
    CodeSubspace(std::size_t n, CMatrix basis) : n_(n), basis_(std::move(basis)) {}

    std::size_t n_ = 0;
    CMatrix basis_;
};

/// values[alpha](i, j) = <psi_i| O_alpha |psi_j>
struct KLTensor {
    std::vector<CMatrix> slices;

    double violation() const;
    std::vector<double> mean_diagonals() const;
};

KLTensor kl_tensor(const CodeSubspace &code, const ErrorBasis &basis);

/// Sum of |off-diagonal|^2 plus squared spread of the diagonal around its mean.
double kl_violation(const CodeSubspace &code, const ErrorBasis &basis);

struct SignatureVector {
    std::vector<PauliString> words;
    std::vector<double> components;

    double norm() const;
    double norm_sq() const;
    /// Component for `word`, zero when the word is not in the basis.
    double value(const PauliString &word) const;
    /// CSV rows "pauli_word,value" with a header line.
    std::string to_csv() const;
};

/// Throws ErrorKind::NotACode (carrying the violation) when the KL
/// violation exceeds `tol`.
SignatureVector signature_vector(const CodeSubspace &code, const ErrorBasis &basis, double tol = kDefaultKlTolerance);

double lambda_star(const SignatureVector &sig);

/// Partial trace of |psi><psi| onto `qubits` (0-based, any order; the
/// result's first qubit is the smallest index).
CMatrix reduced_density_matrix(const CVector &state, std::size_t n, std::span<const std::size_t> qubits);
CMatrix reduced_density_matrix(const CodeSubspace &code, std::size_t codeword, std::span<const std::size_t> qubits);

double purity(const CMatrix &rho);

/// Applies U_1 (x) ... (x) U_n to every codeword.
CodeSubspace apply_local_unitary(const CodeSubspace &code, std::span<const Eigen::Matrix2cd> factors);

/// Haar-random single-qubit unitary from four normal draws.
template <class Rng>
Eigen::Matrix2cd random_unitary_2x2(Rng &rng);

}  // namespace klscope

#include "klscope/detail/random_unitary.hpp"

#endif
