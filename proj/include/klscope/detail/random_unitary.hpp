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

#ifndef KLSCOPE_DETAIL_RANDOM_UNITARY_HPP
#define KLSCOPE_DETAIL_RANDOM_UNITARY_HPP

#include <random>

namespace klscope {

template <class Rng>
Eigen::Matrix2cd random_unitary_2x2(Rng &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::Matrix2cd g;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) g(r, c) = Complex(normal(rng), normal(rng));
    Eigen::HouseholderQR<Eigen::Matrix2cd> qr(g);
    Eigen::Matrix2cd q = qr.householderQ();
    Eigen::Matrix2cd r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the phase ambiguity of QR so the distribution is Haar.
    for (int k = 0; k < 2; ++k) {
        Complex d = r(k, k);
        double a = std::abs(d);
        if (a > 0) q.col(k) *= d / a;
    }
    return q;
}

}  // namespace klscope

#endif
