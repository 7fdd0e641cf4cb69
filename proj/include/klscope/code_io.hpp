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

#ifndef KLSCOPE_CODE_IO_HPP
#define KLSCOPE_CODE_IO_HPP

#include <string>

#include "json.hpp"
#include "klscope/codespace.hpp"

namespace klscope {

inline constexpr const char *kCodeFormat = "klscope.code.v1";

/// {"format", "n", "K", "amplitudes": K arrays of 2^n [re, im] pairs}
nlohmann::json code_to_json(const CodeSubspace &code);
CodeSubspace code_from_json(const nlohmann::json &j);

void write_code_file(const std::string &path, const CodeSubspace &code);
CodeSubspace read_code_file(const std::string &path);

}  // namespace klscope

#endif
