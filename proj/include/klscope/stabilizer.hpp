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

#ifndef KLSCOPE_STABILIZER_HPP
#define KLSCOPE_STABILIZER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "klscope/codespace.hpp"
#include "klscope/pauli.hpp"

namespace klscope {

/// Commuting, independent Hermitian Pauli generators (phase +1 or -1).
class StabilizerCode {
   public:
    StabilizerCode(std::size_t n, std::vector<PhasedPauli> generators);

    std::size_t num_qubits() const { return n_; }
    const std::vector<PhasedPauli> &generators() const { return generators_; }
    std::size_t code_dim() const { return std::size_t{1} << (n_ - generators_.size()); }

   private:
    std::size_t n_;
    std::vector<PhasedPauli> generators_;
};

/// Rows are letter strings with optional whitespace between letters and an
/// optional leading sign, e.g. "Y I Z X X Y" or "-ZZ".
StabilizerCode parse_generators(const std::vector<std::string> &rows);

/// Generator file: one row per line, blank lines and '#' comments ignored.
StabilizerCode read_generator_file(const std::string &path);

/// "steane" or "shaw623".
StabilizerCode builtin_code(std::string_view name);

CodeSubspace codespace_from_stabilizer(const StabilizerCode &code);

/// prod_g (I + g)/2 as a dense matrix.
CMatrix stabilizer_projector(const StabilizerCode &code);

}  // namespace klscope

#endif
