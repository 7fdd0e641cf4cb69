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

#ifndef KLSCOPE_ENUMERATORS_HPP
#define KLSCOPE_ENUMERATORS_HPP

#include <string>
#include <vector>

#include "klscope/codespace.hpp"

namespace klscope {

inline constexpr std::size_t kEnumeratorQubitLimit = 8;

/// Shor-Laflamme enumerator coefficients A_j, B_j for j = 0..n.
struct WeightEnumerator {
    std::size_t n = 0;
    std::vector<double> A;
    std::vector<double> B;

    /// Rows "j,A_j,B_j" with a header line.
    std::string to_csv() const;
    /// e.g. "A(z) = 1 + 7 z^2 + ..." for documentation.
    std::string polynomial(char which) const;
};

/// A_j = K^-2 sum_{wt O = j} |Tr(O P)|^2, B_j = K^-1 sum_{wt O = j} Tr(O P O P),
/// summed over all 4^n Pauli words.
WeightEnumerator weight_enumerators(const CodeSubspace &code);

/// A = 1 + l^2 z^2 + (21 - 2 l^2) z^4 + (42 + l^2) z^6,
/// B = 1 + l^2 z^2 + 3(7 + l^2) z^3 + (21 - 2 l^2) z^4 + 6(21 - l^2) z^5 + (42 + l^2) z^6 + 3(15 + l^2) z^7.
WeightEnumerator closed_form_723(double lambda_star);

/// Polynomials in cos(2 theta), cos(4 theta) for the single-parameter ((6,2,3)) family.
WeightEnumerator closed_form_623(double theta);

/// A_1 + A_2, equal to lambda*^2 for a distance-3 code.
double lambda_star_sq_from_enumerator(const WeightEnumerator &we);

}  // namespace klscope

#endif
