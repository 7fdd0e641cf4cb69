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

#ifndef KLSCOPE_ERROR_HPP
#define KLSCOPE_ERROR_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace klscope {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using Complex = std::complex<double>;

enum class ErrorKind {
    Parse,
    Dimension,
    Capacity,
    DegenerateInput,
    NotACode,
    Domain,
    Validation,
    Incompatible,
    Rank,
    Inconsistent,
    Conditioning,
    MissingTarget,
    UnknownName,
    Construction,
};

const char *error_kind_name(ErrorKind kind);

/// Every failure raised by the library. `value()` carries the offending
/// measurement when there is one (e.g. the KL violation of a non-code).
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message, std::optional<double> value = std::nullopt)
        : std::runtime_error(message), kind_(kind), value_(value) {}

    ErrorKind kind() const { return kind_; }
    std::optional<double> value() const { return value_; }

   private:
    ErrorKind kind_;
    std::optional<double> value_;
};

}  // namespace klscope

#endif
