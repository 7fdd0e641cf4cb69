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

#include "klscope/families.hpp"

#include <cmath>
#include <bit>
#include <random>

#include "klscope/pauli.hpp"

namespace klscope {

namespace {

constexpr std::size_t kQubits623 = 6;
constexpr std::size_t kQubits723 = 7;
const double kSqrt3 = std::sqrt(3.0);
const double kSqrt7 = std::sqrt(7.0);

void require_quarter_norm(const Vec5 &v, const char *name) {
    if (std::abs(v.squaredNorm() - 0.25) > 1e-10) {
        throw Error(ErrorKind::Validation, std::string(name) + " must satisfy v.v = 1/4",
                    std::abs(v.squaredNorm() - 0.25));
    }
}

std::size_t bits_from_string(const std::string &s) {
    std::size_t b = 0;
    for (char c : s) b = (b << 1) | static_cast<std::size_t>(c == '1');
    return b;
}

std::size_t rotate_left(std::size_t b, std::size_t n) {
    const std::size_t top = (b >> (n - 1)) & 1;
    return ((b << 1) & ((std::size_t{1} << n) - 1)) | top;
}

CVector flip_all(const CVector &v) {
    CVector out(v.size());
    const Eigen::Index last = v.size() - 1;
    for (Eigen::Index b = 0; b < v.size(); ++b) out(last - b) = v(b);
    return out;
}

}  // namespace

Mat5 OrthoFrame::matrix() const {
    Mat5 m;
    m << a, b, c, d, e;
    return m;
}

double OrthoFrame::orthogonality_residual() const {
    const Mat5 m = matrix();
    return (m.transpose() * m - 0.25 * Mat5::Identity()).cwiseAbs().maxCoeff();
}

std::vector<CVector> s_basis_623() {
    std::vector<CVector> out;
    const double amp = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < 5; ++i) {
        CVector v = CVector::Zero(32);
        const int u = 1 << i;
        v(u) = amp;
        v(31 - u) = amp;
        out.push_back(std::move(v));
    }
    return out;
}

OrthoFrame frame_from_abcd(const Vec5 &a, const Vec5 &b, const Vec5 &c, const Vec5 &d) {
    const std::array<const Vec5 *, 4> cols{&a, &b, &c, &d};
    const char *names[] = {"a", "b", "c", "d"};
    for (int i = 0; i < 4; ++i) require_quarter_norm(*cols[i], names[i]);
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            const double dot = cols[i]->dot(*cols[j]);
            if (std::abs(dot) > 1e-10) {
                throw Error(ErrorKind::Validation,
                            std::string(names[i]) + " and " + names[j] + " are not orthogonal", dot);
            }
        }
    }
    Eigen::Matrix<double, 4, 5> rows;
    rows << a.transpose(), b.transpose(), c.transpose(), d.transpose();
    Eigen::JacobiSVD<Eigen::Matrix<double, 4, 5>> svd(rows, Eigen::ComputeFullV);
    if (svd.singularValues()(3) < 1e-8) {
        throw Error(ErrorKind::Rank, "frame columns are rank deficient", svd.singularValues()(3));
    }
    Vec5 e = 0.5 * svd.matrixV().col(4);
    for (int i = 0; i < 5; ++i) {
        if (std::abs(e(i)) > 1e-12) {
            if (e(i) < 0) e = -e;
            break;
        }
    }
    return OrthoFrame{a, b, c, d, e};
}

OrthoFrame frame_from_e(const Vec5 &e) {
    require_quarter_norm(e, "e");
    Eigen::Matrix<double, 5, 1> unit = 2.0 * e;
    Eigen::HouseholderQR<Eigen::Matrix<double, 5, 1>> qr(unit);
    Mat5 q = qr.householderQ();
    return OrthoFrame{0.5 * q.col(1), 0.5 * q.col(2), 0.5 * q.col(3), 0.5 * q.col(4), e};
}

OrthoFrame single_param_frame_623(double theta) {
    const double co = std::cos(theta), si = std::sin(theta);
    Mat5 m;
    // clang-format off
    m <<  0.5,  0.5,  0.5, 0.5 * co, 0.5 * si,
          0.5, -0.5, -0.5, 0.5 * co, 0.5 * si,
         -0.5,  0.5, -0.5, 0.5 * co, 0.5 * si,
         -0.5, -0.5,  0.5, 0.5 * co, 0.5 * si,
          0.0,  0.0,  0.0, -si,      co;
    // clang-format on
    m *= 0.5;
    return OrthoFrame{m.col(0), m.col(1), m.col(2), m.col(3), m.col(4)};
}

OrthoFrame random_frame_623(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    Mat5 g;
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 5; ++c) g(r, c) = normal(rng);
    Eigen::HouseholderQR<Mat5> qr(g);
    Mat5 q = qr.householderQ();
    q *= 0.5;
    return OrthoFrame{q.col(0), q.col(1), q.col(2), q.col(3), q.col(4)};
}

std::array<CVector, 2> logical_states_623(const OrthoFrame &frame) {
    const auto s = s_basis_623();
    CVector zero = CVector::Zero(64), one = CVector::Zero(64);
    for (int i = 0; i < 5; ++i) {
        const Complex g_lo(frame.a(i), frame.b(i));
        const Complex g_hi(frame.c(i), frame.d(i));
        // q1 is the most significant bit: |0>|S> occupies rows 0..31, |1>|S> rows 32..63.
        zero.head(32) += g_lo * s[i];
        zero.tail(32) += g_hi * s[i];
        one.head(32) += std::conj(g_hi) * s[i];
        one.tail(32) += -std::conj(g_lo) * s[i];
    }
    return {zero, one};
}

CodeSubspace code_623(const OrthoFrame &frame) {
    if (frame.orthogonality_residual() > 1e-10) {
        throw Error(ErrorKind::Validation, "frame is not orthogonal", frame.orthogonality_residual());
    }
    auto states = logical_states_623(frame);
    auto code = CodeSubspace::from_vectors(kQubits623, {states[0], states[1]});
    const double v = kl_violation(code, enumerate_error_basis(kQubits623, 3));
    if (v > 1e-10) throw Error(ErrorKind::Construction, "frame code violates the KL conditions", v);
    return code;
}

SignatureVector predicted_signature_623(const Vec5 &e) {
    const auto basis = enumerate_error_basis(kQubits623, 3);
    SignatureVector sig;
    sig.words = basis.ops();
    sig.components.assign(basis.size(), 0.0);
    // 0-based qubit q in 1..5 reads e[5 - q].
    for (std::size_t qi = 1; qi < kQubits623; ++qi) {
        for (std::size_t qj = qi + 1; qj < kQubits623; ++qj) {
            const double ei = e(static_cast<Eigen::Index>(5 - qi));
            const double ej = e(static_cast<Eigen::Index>(5 - qj));
            const double xx = -2.0 * ei * ej;
            const double zz = 2.0 * ei * ei + 2.0 * ej * ej;
            sig.components[*basis.index_of(PauliString::on_qubits(kQubits623, {qi, qj}, Pauli::X))] = xx;
            sig.components[*basis.index_of(PauliString::on_qubits(kQubits623, {qi, qj}, Pauli::Y))] = xx;
            sig.components[*basis.index_of(PauliString::on_qubits(kQubits623, {qi, qj}, Pauli::Z))] = zz;
        }
    }
    return sig;
}

double lambda_star_sq_623(const Vec5 &e) { return 0.5 + 8.0 * e.array().pow(4).sum(); }

double lambda_star_sq_623_theta(double theta) {
    const double s = std::sin(theta), c = std::cos(theta);
    return 0.5 + 0.5 * (std::pow(s, 4) / 4.0 + std::pow(c, 4));
}

Mat5 block_matrix(double r, double s) {
    Mat5 m = Mat5::Constant(s);
    m.row(0).setConstant(r);
    m.col(0).setConstant(r);
    m.diagonal().setOnes();
    return m;
}

std::array<double, 5> block_eigenvalues(double r, double s) {
    const double root = std::sqrt(9.0 * s * s + 16.0 * r * r);
    return {1.0 - s, 1.0 - s, 1.0 - s, (2.0 + 3.0 * s + root) / 2.0, (2.0 + 3.0 * s - root) / 2.0};
}

BlockParams xy_block_params_623(double theta) {
    const double q = std::sin(theta) / 4.0;
    return {-0.25 * std::sin(theta) * std::cos(theta), -2.0 * q * q};
}

BlockParams z_block_params_623(double theta) {
    const double q = std::sin(theta) / 4.0, h = std::cos(theta) / 2.0;
    return {2.0 * q * q + 2.0 * h * h, 4.0 * q * q};
}

double LogicalOverlaps::identity_residual() const {
    double worst = 0.0;
    for (int i = 0; i < 5; ++i) {
        worst = std::max(worst, std::abs(xy(i, i)));
        worst = std::max(worst, std::abs(xx(i, i) - yy(i, i)));
        for (int j = 0; j < 5; ++j) {
            worst = std::max(worst, std::abs(xx(i, j) - yy(j, i)));
            worst = std::max(worst, std::abs(xy(i, j) + xy(j, i)));
        }
    }
    return worst;
}

LogicalOverlaps logical_overlaps(const OrthoFrame &frame) {
    std::array<Eigen::Vector2cd, 5> x, y;
    for (int i = 0; i < 5; ++i) {
        const Complex g_lo(frame.a(i), frame.b(i));
        const Complex g_hi(frame.c(i), frame.d(i));
        x[i] << g_lo, g_hi;
        y[i] << std::conj(g_hi), -std::conj(g_lo);
    }
    LogicalOverlaps m;
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            m.xx(i, j) = x[i].dot(x[j]);
            m.xy(i, j) = x[i].dot(y[j]);
            m.yx(i, j) = y[i].dot(x[j]);
            m.yy(i, j) = y[i].dot(y[j]);
        }
    }
    return m;
}

Eigen::Matrix4d so4_generator(So4Generator g) {
    auto e = [](int i, int j) {
        Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
        m(i - 1, j - 1) = 1.0;
        m(j - 1, i - 1) = -1.0;
        return m;
    };
    switch (g) {
        case So4Generator::K1: return e(1, 2) + e(3, 4);
        case So4Generator::K2: return e(1, 2) - e(3, 4);
        case So4Generator::K3: return e(2, 3) + e(1, 4);
        case So4Generator::K4: return e(2, 3) - e(1, 4);
        case So4Generator::K5: return e(1, 3) + e(2, 4);
        case So4Generator::K6: return e(1, 3) - e(2, 4);
    }
    return Eigen::Matrix4d::Zero();
}

Eigen::Matrix4d so4_rotation(So4Generator g, double theta) {
    return std::cos(theta) * Eigen::Matrix4d::Identity() + std::sin(theta) * so4_generator(g);
}

So4Correspondence so4_partner(So4Generator g) {
    switch (g) {
        case So4Generator::K4: return {So4Partner::X1, +1};
        case So4Generator::K5: return {So4Partner::Y1, +1};
        case So4Generator::K2: return {So4Partner::Z1, -1};
        case So4Generator::K3: return {So4Partner::XL, +1};
        case So4Generator::K6: return {So4Partner::YL, -1};
        case So4Generator::K1: return {So4Partner::ZL, -1};
    }
    return {So4Partner::X1, +1};
}

std::string so4_partner_name(So4Partner p) {
    switch (p) {
        case So4Partner::X1: return "X1";
        case So4Partner::Y1: return "Y1";
        case So4Partner::Z1: return "Z1";
        case So4Partner::XL: return "XL";
        case So4Partner::YL: return "YL";
        case So4Partner::ZL: return "ZL";
    }
    return "?";
}

So4Report so4_check(const OrthoFrame &frame, So4Generator g, double theta, double tol) {
    const auto [partner, sign] = so4_partner(g);
    Eigen::Matrix<double, 5, 4> abcd;
    abcd << frame.a, frame.b, frame.c, frame.d;
    const Eigen::Matrix<double, 5, 4> rotated = abcd * so4_rotation(g, sign * theta);
    const OrthoFrame turned{rotated.col(0), rotated.col(1), rotated.col(2), rotated.col(3), frame.e};

    auto original = logical_states_623(frame);
    auto moved = logical_states_623(turned);
    CMatrix before(64, 2), after(64, 2);
    before << original[0], original[1];
    after << moved[0], moved[1];

    // exp(-i theta P) for a single-qubit Pauli P.
    const Complex i1(0, 1);
    const double co = std::cos(theta), si = std::sin(theta);
    Eigen::Matrix2cd u;
    switch (partner) {
        case So4Partner::X1:
        case So4Partner::XL: u << co, -i1 * si, -i1 * si, co; break;
        case So4Partner::Y1:
        case So4Partner::YL: u << co, -si, si, co; break;
        case So4Partner::Z1:
        case So4Partner::ZL: u << std::exp(-i1 * theta), 0, 0, std::exp(i1 * theta); break;
    }

    CMatrix expected;
    if (partner == So4Partner::X1 || partner == So4Partner::Y1 || partner == So4Partner::Z1) {
        expected = before;
        // Qubit q1 is the most significant bit: rows [0, 32) and [32, 64).
        expected.topRows(32) = u(0, 0) * before.topRows(32) + u(0, 1) * before.bottomRows(32);
        expected.bottomRows(32) = u(1, 0) * before.topRows(32) + u(1, 1) * before.bottomRows(32);
    } else {
        // U|j_L> = sum_i |i_L> U_ij
        expected = before * u;
    }

    So4Report report;
    report.generator = g;
    report.partner = partner;
    report.sign = sign;
    report.theta = theta;
    report.codeword_deviation = (after - expected).norm();
    report.projector_deviation = (after * after.adjoint() - expected * expected.adjoint()).norm();
    report.ok = report.projector_deviation <= tol;
    return report;
}

CVector dicke(std::size_t n, std::size_t k) {
    if (k > n) throw Error(ErrorKind::Domain, "Dicke weight exceeds qubit count");
    if (n > kDenseQubitLimit) throw Error(ErrorKind::Capacity, "too many qubits");
    const Eigen::Index dim = Eigen::Index{1} << n;
    CVector v = CVector::Zero(dim);
    std::size_t count = 0;
    for (Eigen::Index b = 0; b < dim; ++b) {
        if (static_cast<std::size_t>(std::popcount(static_cast<std::uint64_t>(b))) == k) {
            v(b) = 1.0;
            ++count;
        }
    }
    return v / std::sqrt(static_cast<double>(count));
}

CodeSubspace perm_code_723(PermVariant variant) {
    const double s = variant == PermVariant::Plus ? 1.0 : -1.0;
    CVector zero = (std::sqrt(15.0) * dicke(7, 0) - s * std::sqrt(7.0) * dicke(7, 2) + std::sqrt(21.0) * dicke(7, 4) +
                    s * std::sqrt(21.0) * dicke(7, 6)) /
                   8.0;
    return CodeSubspace::from_vectors(kQubits723, {zero, flip_all(zero)});
}

std::vector<std::string> cyclic_orbit_labels_723() {
    return {"0000000", "0000011", "0000101", "0001001", "0001111",
            "0011011", "0011101", "0101011", "0010111", "0111111"};
}

std::vector<CVector> cyclic_basis_723() {
    std::vector<CVector> out;
    for (const auto &label : cyclic_orbit_labels_723()) {
        CVector v = CVector::Zero(128);
        std::size_t b = bits_from_string(label);
        for (int k = 0; k < 7; ++k) {
            v(static_cast<Eigen::Index>(b)) += 1.0;
            b = rotate_left(b, 7);
        }
        out.push_back(v / v.norm());
    }
    return out;
}

std::array<double, 4> CyclicCoeffs::constraint_residuals() const {
    const auto [c0, c1, c2, c3, c4] = c;
    return {
        c0 * c0 + c1 * c1 + c2 * c2 + c3 * c3 + c4 * c4 - 1.0,
        7 * c0 * c0 + 3 * c1 * c1 - c2 * c2 - c3 * c3 - 5 * c4 * c4,
        2 * kSqrt7 * c0 * c4 + 2 * kSqrt3 * c1 * c2 + 4 * kSqrt3 * c1 * c3 + 4 * kSqrt3 * c1 * c4 + 4 * c2 * c3 +
            3 * c3 * c3,
        2 * kSqrt7 * c0 * c4 + 2 * kSqrt3 * c1 * c2 + 4 * kSqrt3 * c1 * c3 - 4 * kSqrt3 * c1 * c4 - 4 * c2 * c3 -
            3 * c3 * c3,
    };
}

double CyclicCoeffs::max_constraint_residual() const {
    double worst = 0.0;
    for (double r : constraint_residuals()) worst = std::max(worst, std::abs(r));
    return worst;
}

CyclicCoeffs cyclic_coeffs_from_lambda(double lambda_star, int branch_c1, int branch_c3) {
    if (!(lambda_star >= 0.0) || lambda_star > kSqrt7 * (1.0 + 1e-14)) {
        throw Error(ErrorKind::Domain, "cyclic family requires 0 <= lambda* <= sqrt(7)", lambda_star);
    }
    if ((branch_c1 != 1 && branch_c1 != -1) || (branch_c3 != 1 && branch_c3 != -1)) {
        throw Error(ErrorKind::Domain, "branch signs must be +1 or -1");
    }
    const double l = std::min(lambda_star, kSqrt7);
    CyclicCoeffs out;
    out.branch_c1 = branch_c1;
    out.branch_c3 = branch_c3;
    const double c0 = std::sqrt(kSqrt7 * l + 8.0) / 8.0;
    const double c1 = branch_c1 * std::sqrt(kSqrt7 * l) / 8.0;
    const double c4 = -kSqrt3 * c1;
    // 7 c0^2 - 15 sqrt7 l / 64 simplified so that it is exactly zero at l = sqrt 7
    const double disc = std::max(0.0, kSqrt7 * (kSqrt7 - l) / 8.0);
    const double c3 = 0.4 * (kSqrt7 * c0 + branch_c3 * std::sqrt(disc));
    const double c2 = -2.0 * c3 + kSqrt7 * c0;
    out.c = {c0, c1, c2, c3, c4};
    return out;
}

CodeSubspace cyclic_code_723(const CyclicCoeffs &coeffs, double tol) {
    const auto res = coeffs.constraint_residuals();
    if (coeffs.max_constraint_residual() > tol) {
        throw Error(ErrorKind::Validation,
                    "cyclic coefficients violate the constraints: residuals " + std::to_string(res[0]) + ", " +
                        std::to_string(res[1]) + ", " + std::to_string(res[2]) + ", " + std::to_string(res[3]),
                    coeffs.max_constraint_residual());
    }
    const auto basis = cyclic_basis_723();
    const auto [c0, c1, c2, c3, c4] = coeffs.c;
    CVector zero = c0 * basis[0] + (c1 / kSqrt3) * (basis[1] + basis[2] + basis[3]) +
                   (c3 / 2.0) * (basis[4] + basis[5] + basis[6] + basis[7]) + c2 * basis[8] + c4 * basis[9];
    return CodeSubspace::from_vectors(kQubits723, {zero, flip_all(zero)});
}

double cyclic_two_body_value(const CyclicCoeffs &coeffs) {
    const auto [c0, c1, c2, c3, c4] = coeffs.c;
    (void)c2;
    (void)c4;
    return (12.0 * kSqrt7 * c0 * c3 + 28.0 * c1 * c1 - 15.0 * c3 * c3) / 21.0;
}

std::vector<CyclicBranch> cyclic_family_723(double lambda_star) {
    std::vector<CyclicBranch> out;
    for (int b1 : {-1, 1}) {
        for (int b3 : {-1, 1}) {
            auto coeffs = cyclic_coeffs_from_lambda(lambda_star, b1, b3);
            auto code = cyclic_code_723(coeffs);
            std::optional<std::size_t> same;
            const CMatrix p = code.projector();
            for (std::size_t k = 0; k < out.size(); ++k) {
                if ((out[k].code.projector() - p).norm() < 1e-9) {
                    same = k;
                    break;
                }
            }
            out.push_back(CyclicBranch{coeffs, std::move(code), same});
        }
    }
    return out;
}

double AppendixBReport::max_equation_residual() const {
    return std::max({std::abs(e1), std::abs(e2), std::abs(e3), std::abs(e4), std::abs(e5), std::abs(e6)});
}

AppendixBReport appendix_b_residuals(const CyclicCoeffs &coeffs) {
    const auto [c0, c1, c2, c3, c4] = coeffs.c;
    const auto base = coeffs.constraint_residuals();
    AppendixBReport r;
    r.e1 = base[0];
    r.e2 = base[1];
    r.e3 = base[2];
    r.e4 = base[3];
    r.e5 = 4 * kSqrt3 * c1 * c4 + 4 * c2 * c3 + 3 * c3 * c3;
    r.e6 = kSqrt7 * c0 * c4 + kSqrt3 * c1 * c2 + 2 * kSqrt3 * c1 * c3;
    r.quartic = 28 * std::pow(c4, 4) + (7 + 8 * c1 * c1) * c4 * c4 + 96 * kSqrt3 * std::pow(c1, 3) * c4 +
                (12 * std::pow(c1, 4) - 21 * c1 * c1);
    r.linear_factor = c4 + kSqrt3 * c1;
    r.factored = r.linear_factor * (28 * std::pow(c4, 3) - 28 * kSqrt3 * c1 * c4 * c4 + (92 * c1 * c1 + 7) * c4 +
                                    kSqrt3 * (4 * std::pow(c1, 3) - 7 * c1));
    return r;
}

Eigen::MatrixXd uniform_coupling_matrix(double s, int size) {
    return (1.0 - s) * Eigen::MatrixXd::Identity(size, size) + s * Eigen::MatrixXd::Ones(size, size);
}

CMatrix hamiltonian(HamiltonianKind kind) {
    auto term = [](std::size_t n, std::initializer_list<std::size_t> qs, Pauli p) {
        return dense_matrix(PauliString::on_qubits(n, qs, p));
    };
    if (kind == HamiltonianKind::H623) {
        const std::size_t n = kQubits623;
        CMatrix h = CMatrix::Zero(64, 64);
        for (std::size_t i = 2; i < n; ++i) h += -2.0 * term(n, {1, i}, Pauli::Z);
        for (std::size_t i = 2; i < n; ++i)
            for (std::size_t j = 2; j < n; ++j)
                if (i != j) h += 0.5 * term(n, {i, j}, Pauli::Z);
        return h;
    }
    const std::size_t n = kQubits723;
    CMatrix h = CMatrix::Zero(128, 128);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j)
                for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) h -= term(n, {i, j}, p);
    return h;
}

GroundSpaceReport hamiltonian_ground_check(HamiltonianKind kind) {
    const CMatrix h = hamiltonian(kind);
    Eigen::SelfAdjointEigenSolver<CMatrix> eig(h);
    const auto &values = eig.eigenvalues();
    GroundSpaceReport report;
    report.ground_energy = values(0);
    Eigen::Index count = 0;
    while (count < values.size() && values(count) - values(0) <= 1e-8) ++count;
    report.degeneracy = static_cast<std::size_t>(count);
    const CMatrix ground = eig.eigenvectors().leftCols(count);
    const CMatrix pg = ground * ground.adjoint();

    const CodeSubspace code =
        kind == HamiltonianKind::H623 ? code_623(single_param_frame_623(0.0)) : perm_code_723(PermVariant::Plus);
    for (std::size_t i = 0; i < code.dim(); ++i) {
        const CVector psi = code.codeword(i);
        report.containment_deviation = std::max(report.containment_deviation, (psi - pg * psi).norm());
    }
    if (kind == HamiltonianKind::H723) {
        CMatrix sym(128, 8);
        for (std::size_t k = 0; k <= 7; ++k) sym.col(static_cast<Eigen::Index>(k)) = dicke(7, k);
        report.symmetric_subspace_deviation = (pg - sym * sym.adjoint()).norm();
    }
    return report;
}

}  // namespace klscope
