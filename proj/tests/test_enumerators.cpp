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

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "klscope/enumerators.hpp"
#include "test_util.hpp"

using namespace klscope;
using namespace klscope::testing;

namespace {

const double kSqrt7 = std::sqrt(7.0);

// Dense oracle: A_j = K^-2 sum Tr(OP)^2, B_j = K^-1 sum Tr(OPOP).
WeightEnumerator dense_oracle(const CodeSubspace &code) {
    const std::size_t n = code.num_qubits();
    const double k = static_cast<double>(code.dim());
    const CMatrix p = code.projector();
    WeightEnumerator we;
    we.n = n;
    we.A.assign(n + 1, 0.0);
    we.B.assign(n + 1, 0.0);
    const std::size_t total = std::size_t{1} << (2 * n);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::vector<Pauli> letters(n);
        for (std::size_t q = 0; q < n; ++q) letters[q] = static_cast<Pauli>((idx >> (2 * q)) & 3u);
        const PauliString w(letters);
        const CMatrix o = dense_matrix(w);
        const Complex t = (o * p).trace();
        we.A[w.weight()] += std::norm(t) / (k * k);
        we.B[w.weight()] += (o * p * o * p).trace().real() / k;
    }
    return we;
}

void expect_coefficients(const WeightEnumerator &got, const WeightEnumerator &want, double tol) {
    ASSERT_EQ(got.A.size(), want.A.size());
    for (std::size_t j = 0; j < got.A.size(); ++j) {
        EXPECT_NEAR(got.A[j], want.A[j], tol) << "A_" << j;
        EXPECT_NEAR(got.B[j], want.B[j], tol) << "B_" << j;
    }
}

}  // namespace

TEST(WeightEnumerators, Steane) {
    const auto we = weight_enumerators(steane());
    const std::vector<double> a{1, 0, 0, 0, 21, 0, 42, 0};
    const std::vector<double> b{1, 0, 0, 21, 21, 126, 42, 45};
    for (std::size_t j = 0; j < 8; ++j) {
        EXPECT_NEAR(we.A[j], a[j], 1e-9);
        EXPECT_NEAR(we.B[j], b[j], 1e-9);
    }
    EXPECT_NEAR(lambda_star_sq_from_enumerator(we), 0.0, 1e-12);
}

TEST(WeightEnumerators, PermutationCode) {
    const auto we = weight_enumerators(perm_code_723(PermVariant::Plus));
    EXPECT_NEAR(we.A[2], 7.0, 1e-9);
    EXPECT_NEAR(we.A[4], 7.0, 1e-9);
    EXPECT_NEAR(we.A[6], 49.0, 1e-9);
    EXPECT_NEAR(lambda_star_sq_from_enumerator(we), 7.0, 1e-9);
}

TEST(WeightEnumerators, ShawAndFamilyStart) {
    EXPECT_NEAR(lambda_star_sq_from_enumerator(weight_enumerators(shaw())), 1.0, 1e-10);
    const auto we = weight_enumerators(code_623(single_param_frame_623(0.0)));
    EXPECT_NEAR(we.A[2], 1.0, 1e-10);
}

TEST(WeightEnumerators, MatchesDenseOracleOnSmallCodes) {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 4; ++t) {
        const std::size_t k = 1 + static_cast<std::size_t>(t % 2);
        std::vector<CVector> vs;
        for (std::size_t i = 0; i < k; ++i) vs.push_back(random_state(4, rng));
        const CodeSubspace c = CodeSubspace::from_vectors(2, vs);
        const auto we = weight_enumerators(c);
        expect_coefficients(we, dense_oracle(c), 1e-12);
        // sum_j A_j = 2^n / K and sum_j B_j = 2^n K
        const double sa = std::accumulate(we.A.begin(), we.A.end(), 0.0);
        const double sb = std::accumulate(we.B.begin(), we.B.end(), 0.0);
        EXPECT_NEAR(sa, 4.0 / static_cast<double>(k), 1e-12);
        EXPECT_NEAR(sb, 4.0 * static_cast<double>(k), 1e-12);
        EXPECT_NEAR(we.A[0], 1.0, 1e-12);
        EXPECT_NEAR(we.B[0], 1.0, 1e-12);
    }
    const CodeSubspace five = codespace_from_stabilizer(parse_generators({"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}));
    expect_coefficients(weight_enumerators(five), dense_oracle(five), 1e-10);
}

TEST(WeightEnumerators, DominanceOnConstructedCodes) {
    for (const CodeSubspace &c : {steane(), shaw(), code_623(random_frame_623(2)),
                                  cyclic_code_723(cyclic_coeffs_from_lambda(1.3, 1, -1))}) {
        const auto we = weight_enumerators(c);
        for (std::size_t j = 0; j < we.A.size(); ++j) EXPECT_GE(we.B[j], we.A[j] - 1e-9);
        EXPECT_NEAR(we.A[0], 1.0, 1e-10);
    }
}

TEST(WeightEnumerators, GuardAndCsv) {
    std::vector<CVector> v{CVector::Unit(512, 0)};
    try {
        weight_enumerators(CodeSubspace::from_vectors(9, v));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::Capacity);
    }
    const auto csv = weight_enumerators(steane()).to_csv();
    EXPECT_EQ(csv.rfind("j,A_j,B_j\n", 0), 0u);
    EXPECT_NE(closed_form_723(0.0).polynomial('A').find("21 z^4"), std::string::npos);
}

TEST(ClosedForm723, Values) {
    EXPECT_NEAR(closed_form_723(0.0).A[4], 21.0, 1e-14);
    EXPECT_NEAR(closed_form_723(kSqrt7).A[4], 7.0, 1e-12);
    EXPECT_NEAR(closed_form_723(1.0).B[3], 24.0, 1e-14);
    for (double l : {0.0, 1.0, kSqrt7}) EXPECT_NEAR(lambda_star_sq_from_enumerator(closed_form_723(l)), l * l, 1e-12);
}

TEST(ClosedForm623, Values) {
    const auto z = closed_form_623(0.0);
    EXPECT_NEAR(z.A[2], 1.0, 1e-15);
    EXPECT_NEAR(z.A[3], 0.0, 1e-15);
    EXPECT_NEAR(z.A[6], 3.0, 1e-15);
    for (double t : {0.0, 0.3, 1.0, 2.5}) EXPECT_NEAR(closed_form_623(t).A[0], 1.0, 0.0);
}

TEST(ClosedForms, AgreeWithComputedEnumerators) {
    for (double t : {0.0, 0.2, 0.4, 0.8, theta_min_623()}) {
        expect_coefficients(weight_enumerators(code_623(single_param_frame_623(t))), closed_form_623(t), 1e-8);
    }
    for (double l : {0.0, 0.5, 1.0, 2.0, kSqrt7}) {
        for (int b1 : {-1, 1}) {
            const CodeSubspace c = cyclic_code_723(cyclic_coeffs_from_lambda(l, b1, -1));
            expect_coefficients(weight_enumerators(c), closed_form_723(l), 1e-8);
        }
    }
}

TEST(ClosedForms, LambdaConsistency) {
    for (const CodeSubspace &c : {steane(), shaw(), perm_code_723(PermVariant::Minus), code_623(random_frame_623(8)),
                                  cyclic_code_723(cyclic_coeffs_from_lambda(0.4, 1, 1))}) {
        const double l = lambda_of(c);
        EXPECT_NEAR(lambda_star_sq_from_enumerator(weight_enumerators(c)), l * l, 1e-8);
    }
}
