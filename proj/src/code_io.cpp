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

#include "klscope/code_io.hpp"

#include <fstream>

namespace klscope {

nlohmann::json code_to_json(const CodeSubspace &code) {
    nlohmann::json amps = nlohmann::json::array();
    for (Eigen::Index c = 0; c < code.basis().cols(); ++c) {
        nlohmann::json col = nlohmann::json::array();
        for (Eigen::Index r = 0; r < code.basis().rows(); ++r) {
            const Complex z = code.basis()(r, c);
            col.push_back({z.real(), z.imag()});
        }
        amps.push_back(std::move(col));
    }
    return {{"format", kCodeFormat}, {"n", code.num_qubits()}, {"K", code.dim()}, {"amplitudes", std::move(amps)}};
}

CodeSubspace code_from_json(const nlohmann::json &j) {
    try {
        if (j.contains("format") && j.at("format").get<std::string>() != kCodeFormat) {
            throw Error(ErrorKind::Parse, "unsupported code format " + j.at("format").get<std::string>());
        }
        const auto n = j.at("n").get<std::size_t>();
        const auto k = j.at("K").get<std::size_t>();
        const auto &amps = j.at("amplitudes");
        if (amps.size() != k) throw Error(ErrorKind::Parse, "amplitude list count differs from K");
        std::vector<CVector> vectors;
        for (const auto &col : amps) {
            CVector v(static_cast<Eigen::Index>(col.size()));
            for (std::size_t r = 0; r < col.size(); ++r) {
                v(static_cast<Eigen::Index>(r)) = Complex(col[r].at(0).get<double>(), col[r].at(1).get<double>());
            }
            vectors.push_back(std::move(v));
        }
        return CodeSubspace::from_vectors(n, vectors);
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorKind::Parse, std::string("malformed code JSON: ") + e.what());
    }
}

void write_code_file(const std::string &path, const CodeSubspace &code) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::Parse, "cannot open " + path + " for writing");
    out << code_to_json(code).dump(1) << '\n';
}

CodeSubspace read_code_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorKind::Parse, std::string("invalid JSON in ") + path + ": " + e.what());
    }
    return code_from_json(j);
}

}  // namespace klscope
