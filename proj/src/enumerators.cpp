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

#include "klscope/enumerators.hpp"

#include <cmath>
#include <sstream>

#include "klscope/pauli.hpp"

namespace klscope {

namespace {

double pairwise_sum(const std::vector<double> &v, std::size_t lo, std::size_t hi) {
    if (hi - lo <= 8) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += v[i];
        return s;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

}  // namespace

std::string WeightEnumerator::to_csv() const {
    std::ostringstream out;
    out.precision(17);
    out << "j,A_j,B_j\n";
    for (std::size_t j = 0; j <= n; ++j) out << j << ',' << A[j] << ',' << B[j] << '\n';
    return out.str();
}

std::string WeightEnumerator::polynomial(char which) const {
    const auto &c = which == 'A' ? A : B;
    std::ostringstream out;
    out.precision(10);
    out << which << "(z) =";
    bool first = true;
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (std::abs(c[j]) < 1e-9) continue;
        out << (first ? " " : " + ") << c[j];
        if (j == 1) out << " z";
        if (j > 1) out << " z^" << j;
        first = false;
    }
    if (first) out << " 0";
    return out.str();
}

WeightEnumerator weight_enumerators(const CodeSubspace &code) {
    const std::size_t n = code.num_qubits();
    if (n > kEnumeratorQubitLimit) {
        throw Error(ErrorKind::Capacity, "weight enumerators are limited to " +
                                             std::to_string(kEnumeratorQubitLimit) + " qubits");
    }
    const double k = static_cast<double>(code.dim());
    std::vector<std::vector<double>> a_terms(n + 1), b_terms(n + 1);
    const std::size_t words = std::size_t{1} << (2 * n);
    std::vector<Pauli> letters(n);
    CMatrix applied;
    for (std::size_t w = 0; w < words; ++w) {
        for (std::size_t q = 0; q < n; ++q) letters[q] = static_cast<Pauli>((w >> (2 * (n - 1 - q))) & 3);
        const PauliString op(letters);
        apply_pauli(op, code.basis(), applied);
        // T = Psi^dag O Psi: Tr(O P) = tr T, Tr(O P O P) = sum |T_ij|^2.
        const CMatrix t = code.basis().adjoint() * applied;
        const std::size_t wt = op.weight();
        a_terms[wt].push_back(std::norm(t.trace()));
        b_terms[wt].push_back(t.squaredNorm());
    }
    WeightEnumerator we;
    we.n = n;
    we.A.resize(n + 1);
    we.B.resize(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        we.A[j] = pairwise_sum(a_terms[j], 0, a_terms[j].size()) / (k * k);
        we.B[j] = pairwise_sum(b_terms[j], 0, b_terms[j].size()) / k;
    }
    return we;
}

WeightEnumerator closed_form_723(double lambda_star) {
    const double l2 = lambda_star * lambda_star;
    WeightEnumerator we;
    we.n = 7;
    we.A = {1.0, 0.0, l2, 0.0, 21.0 - 2.0 * l2, 0.0, 42.0 + l2, 0.0};
    we.B = {1.0, 0.0, l2, 3.0 * (7.0 + l2), 21.0 - 2.0 * l2, 6.0 * (21.0 - l2), 42.0 + l2, 3.0 * (15.0 + l2)};
    return we;
}

WeightEnumerator closed_form_623(double theta) {
    const double c2 = std::cos(2.0 * theta), c4 = std::cos(4.0 * theta);
    // Every non-constant coefficient is a multiple of u = (3/16) cos 2t + (5/64) cos 4t.
    const double u = 3.0 / 16.0 * c2 + 5.0 / 64.0 * c4;
    WeightEnumerator we;
    we.n = 6;
    we.A = {1.0, 0.0, u + 47.0 / 64.0, -u + 17.0 / 64.0, -u + 721.0 / 64.0, u + 1007.0 / 64.0, 3.0};
    we.B = {1.0,
            0.0,
            u + 47.0 / 64.0,
            2.0 * u + 751.0 / 32.0,
            -4.0 * u + 577.0 / 16.0,
            -2.0 * u + 1297.0 / 32.0,
            3.0 * u + 1677.0 / 64.0};
    return we;
}

double lambda_star_sq_from_enumerator(const WeightEnumerator &we) {
    double s = 0.0;
    if (we.A.size() > 1) s += we.A[1];
    if (we.A.size() > 2) s += we.A[2];
    return s;
}

}  // namespace klscope
