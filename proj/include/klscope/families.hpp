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

#ifndef KLSCOPE_FAMILIES_HPP
#define KLSCOPE_FAMILIES_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "klscope/codespace.hpp"

namespace klscope {

using Vec5 = Eigen::Matrix<double, 5, 1>;
using Mat5 = Eigen::Matrix<double, 5, 5>;
using CMat5 = Eigen::Matrix<Complex, 5, 5>;

// ---------------------------------------------------------------------------
// ((6,2,3)) orthogonal-frame family
// ---------------------------------------------------------------------------

/// Columns a, b, c, d, e of a 5x5 matrix A with 2A orthogonal. The code
/// depends on (a, b, c, d); its signature depends only on e.
struct OrthoFrame {
    Vec5 a, b, c, d, e;

    Mat5 matrix() const;
    /// max |(A^T A - I/4)_{ij}|
    double orthogonality_residual() const;
};

/// Five states on qubits q2..q6: (|u> + |~u>)/sqrt(2) with u = 00001, 00010,
/// 00100, 01000, 10000.
std::vector<CVector> s_basis_623();

/// Completes (a, b, c, d) with e, e.e = 1/4, first nonzero entry positive.
OrthoFrame frame_from_abcd(const Vec5 &a, const Vec5 &b, const Vec5 &c, const Vec5 &d);

/// Some frame whose fifth column is `e` (e.e = 1/4 required).
OrthoFrame frame_from_e(const Vec5 &e);

/// The closed-form matrix A(theta) interpolating lambda*^2 from 1 (theta=0)
/// to 0.6 (cos theta = 1/sqrt 5).
OrthoFrame single_param_frame_623(double theta);

/// Uniform random frame from the QR factor of a Gaussian 5x5 matrix.
OrthoFrame random_frame_623(std::uint64_t seed);

inline double theta_min_623() { return std::acos(1.0 / std::sqrt(5.0)); }

/// |0_L> = sum_i |x_i>|S_i>, |1_L> = sum_i |y_i>|S_i> with
/// x_i = gamma_i|0> + gamma_{i+5}|1>, y_i = conj(gamma_{i+5})|0> - conj(gamma_i)|1>,
/// gamma_j = a_j + i b_j, gamma_{j+5} = c_j + i d_j.
std::array<CVector, 2> logical_states_623(const OrthoFrame &frame);

/// Throws ErrorKind::Construction if the d=3 KL violation exceeds 1e-10.
CodeSubspace code_623(const OrthoFrame &frame);

/// Nonzero components: X_iX_j = Y_iY_j = -2 e_{7-i} e_{7-j},
/// Z_iZ_j = 2 e_{7-i}^2 + 2 e_{7-j}^2 for qubits i < j in {2..6} (1-based).
SignatureVector predicted_signature_623(const Vec5 &e);

/// 1/2 + 8 sum e_i^4
double lambda_star_sq_623(const Vec5 &e);

/// 1/2 + (sin^4(theta)/4 + cos^4(theta))/2
double lambda_star_sq_623_theta(double theta);

/// B = [[1, r 1^T], [r 1, (1-s) I + s J]] (5x5).
Mat5 block_matrix(double r, double s);

/// {1-s, 1-s, 1-s, (2+3s+sqrt(9s^2+16r^2))/2, (2+3s-sqrt(9s^2+16r^2))/2}
std::array<double, 5> block_eigenvalues(double r, double s);

struct BlockParams {
    double r = 0.0;
    double s = 0.0;
};
/// (r, s) of the X/Y blocks and of the Z block along the single-parameter family.
BlockParams xy_block_params_623(double theta);
BlockParams z_block_params_623(double theta);

struct LogicalOverlaps {
    CMat5 xx, xy, yx, yy;  // M^{xx}_{ij} = <x_i|x_j>, ...

    /// Largest deviation among M^{xy}_{ii} = 0, M^{xx}_{ii} = M^{yy}_{ii},
    /// M^{xx}_{ij} = M^{yy}_{ji}, M^{xy} + (M^{xy})^T = 0.
    double identity_residual() const;
};

LogicalOverlaps logical_overlaps(const OrthoFrame &frame);

enum class So4Generator { K1 = 1, K2, K3, K4, K5, K6 };

/// K1 = E12+E34, K2 = E12-E34, K3 = E23+E14, K4 = E23-E14, K5 = E13+E24,
/// K6 = E13-E24, with (E_ij)_{ij} = 1, (E_ij)_{ji} = -1.
Eigen::Matrix4d so4_generator(So4Generator g);
/// exp(theta K); every K squares to -I so this is cos(theta) I + sin(theta) K.
Eigen::Matrix4d so4_rotation(So4Generator g, double theta);

enum class So4Partner { X1, Y1, Z1, XL, YL, ZL };

struct So4Correspondence {
    So4Partner partner;
    int sign;  // frame rotates by exp(sign * theta * K)
};
So4Correspondence so4_partner(So4Generator g);
std::string so4_partner_name(So4Partner p);

struct So4Report {
    So4Generator generator;
    So4Partner partner;
    int sign = 1;
    double theta = 0.0;
    /// ||P' - U P U^dag|| (Frobenius) between the frame-rotated code and the
    /// unitary image of the original code.
    double projector_deviation = 0.0;
    /// Same comparison for the codeword columns themselves.
    double codeword_deviation = 0.0;
    bool ok = false;
};

So4Report so4_check(const OrthoFrame &frame, So4Generator g, double theta, double tol = 1e-10);

// ---------------------------------------------------------------------------
// ((7,2,3)) permutation-invariant and cyclic families
// ---------------------------------------------------------------------------

CVector dicke(std::size_t n, std::size_t k);

enum class PermVariant { Plus, Minus };

/// 8|0_L> = sqrt15 D0 -+ sqrt7 D2 + sqrt21 D4 +- sqrt21 D6, |1_L> = X^7 |0_L>.
CodeSubspace perm_code_723(PermVariant variant);

/// Cyclic-orbit states in order {0000000}, {0000011}, {0000101}, {0001001},
/// {0001111}, {0011011}, {0011101}, {0101011}, {0010111}, {0111111}.
std::vector<CVector> cyclic_basis_723();
std::vector<std::string> cyclic_orbit_labels_723();

struct CyclicCoeffs {
    std::array<double, 5> c{};
    int branch_c1 = -1;  // sign of c1
    int branch_c3 = -1;  // sign in front of the square root in c3

    /// Residuals of normalization and of <0|Z_i|0> = <0|X_i X^7|0> = <0|Y_i X^7|0> = 0.
    std::array<double, 4> constraint_residuals() const;
    double max_constraint_residual() const;
};

/// c0 = sqrt(sqrt7 l + 8)/8, c1 = +-sqrt(sqrt7 l)/8, c4 = -sqrt3 c1,
/// c3 = (2/5)(sqrt7 c0 +- sqrt(7 c0^2 - 15 sqrt7 l / 64)), c2 = -2 c3 + sqrt7 c0.
/// Throws ErrorKind::Domain outside [0, sqrt 7].
CyclicCoeffs cyclic_coeffs_from_lambda(double lambda_star, int branch_c1, int branch_c3);

/// Checks the constraints (<= tol) and builds |0_L>, |1_L> = X^7|0_L>.
CodeSubspace cyclic_code_723(const CyclicCoeffs &c, double tol = 1e-10);

/// Closed-form two-body signature value of the cyclic family: 21<XX> with the
/// constraint eliminations applied, divided by 21.
double cyclic_two_body_value(const CyclicCoeffs &c);

struct CyclicBranch {
    CyclicCoeffs coeffs;
    CodeSubspace code;
    /// Index of an earlier branch spanning the same subspace, if any.
    std::optional<std::size_t> same_projector_as;
};

/// All four (c1, c3) sign branches at `lambda_star`, with duplicate projectors flagged.
std::vector<CyclicBranch> cyclic_family_723(double lambda_star);

struct AppendixBReport {
    double e1 = 0, e2 = 0, e3 = 0, e4 = 0, e5 = 0, e6 = 0;
    double quartic = 0;         // 28c4^4 + (7+8c1^2)c4^2 + 96 sqrt3 c1^3 c4 + 12c1^4 - 21c1^2
    double factored = 0;        // (c4 + sqrt3 c1)(28c4^3 - 28 sqrt3 c1 c4^2 + (92c1^2+7)c4 + sqrt3(4c1^3 - 7c1))
    double linear_factor = 0;   // c4 + sqrt3 c1

    double max_equation_residual() const;
};

AppendixBReport appendix_b_residuals(const CyclicCoeffs &c);

/// (1-s) I + s J, 7x7.
Eigen::MatrixXd uniform_coupling_matrix(double s, int size = 7);

// ---------------------------------------------------------------------------
// Ground-space checks
// ---------------------------------------------------------------------------

enum class HamiltonianKind { H623, H723 };

/// H623 = -2 Z2 sum_{i=3..6} Z_i + 1/2 sum_{i != j in 3..6} Z_i Z_j
/// H723 = -sum_{i != j} (X_iX_j + Y_iY_j + Z_iZ_j)
CMatrix hamiltonian(HamiltonianKind kind);

struct GroundSpaceReport {
    double ground_energy = 0.0;
    std::size_t degeneracy = 0;
    /// max over codewords of ||(I - P_ground)|psi>||
    double containment_deviation = 0.0;
    /// H723 only: ||P_ground - P_symmetric|| (Frobenius).
    std::optional<double> symmetric_subspace_deviation;
};

/// H623 is checked against the theta = 0 frame code, H723 against the plus
/// permutation-invariant code.
GroundSpaceReport hamiltonian_ground_check(HamiltonianKind kind);

}  // namespace klscope

#endif
