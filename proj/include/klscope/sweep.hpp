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

#ifndef KLSCOPE_SWEEP_HPP
#define KLSCOPE_SWEEP_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "klscope/optimizer.hpp"

namespace klscope {

struct SweepRow {
    double target_lambda_sq = 0.0;
    double final_loss = 0.0;  // (|lambda|^2 - target)^2 + kl_violation
    double kl_violation = 0.0;
    double achieved_lambda_sq = 0.0;
    int restarts_used = 0;
    std::int64_t wall_ms = 0;
    bool converged = false;
};

struct SweepResult {
    std::vector<SweepRow> rows;

    static constexpr const char *kHeader =
        "target_lambda_sq,final_loss,kl_violation,achieved_lambda_sq,restarts_used,wall_ms";

    std::string to_csv() const;
    static SweepResult from_csv(std::istream &in);
};

void write_sweep_row(std::ostream &out, const SweepRow &row);

/// from, from + step, ... up to `to` (inclusive within step/1000).
std::vector<double> sweep_grid(double from, double to, double step);

struct SweepConfig {
    std::size_t n = 6;
    std::size_t k = 2;
    std::size_t d = 3;
    std::vector<double> grid;
    double mu = 1000.0;
    OptimizerConfig optimizer;
    /// Grid-level workers; 0 reads KLSCOPE_THREADS or the hardware count.
    int threads = 0;
    /// Rows from an interrupted run; matching grid points are not recomputed.
    std::vector<SweepRow> resume;
    /// Called in grid order as soon as each prefix of rows is complete.
    std::function<void(const SweepRow &)> on_row;
};

SweepResult sweep(const SweepConfig &config);

}  // namespace klscope

#endif
