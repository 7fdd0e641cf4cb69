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

#include "klscope/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iomanip>
#include <istream>
#include <limits>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

namespace klscope {

void write_sweep_row(std::ostream &out, const SweepRow &r) {
    std::ostringstream os;
    os << std::setprecision(17) << r.target_lambda_sq << ',' << r.final_loss << ',' << r.kl_violation << ','
       << r.achieved_lambda_sq << ',' << r.restarts_used << ',' << r.wall_ms << '\n';
    out << os.str();
}

std::string SweepResult::to_csv() const {
    std::ostringstream os;
    os << kHeader << '\n';
    for (const auto &r : rows) write_sweep_row(os, r);
    return os.str();
}

SweepResult SweepResult::from_csv(std::istream &in) {
    SweepResult res;
    std::string line;
    if (!std::getline(in, line)) return res;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kHeader) throw Error(ErrorKind::Parse, "unexpected sweep CSV header: " + line);
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (cells.size() != 6) {
            throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": expected 6 fields");
        }
        try {
            SweepRow r;
            r.target_lambda_sq = std::stod(cells[0]);
            r.final_loss = std::stod(cells[1]);
            r.kl_violation = std::stod(cells[2]);
            r.achieved_lambda_sq = std::stod(cells[3]);
            r.restarts_used = std::stoi(cells[4]);
            r.wall_ms = std::stoll(cells[5]);
            r.converged = true;
            res.rows.push_back(r);
        } catch (const std::exception &) {
            throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": malformed number");
        }
    }
    return res;
}

std::vector<double> sweep_grid(double from, double to, double step) {
    if (!(step > 0.0)) throw Error(ErrorKind::Validation, "grid step must be positive", step);
    if (to < from) throw Error(ErrorKind::Validation, "grid end lies before its start");
    std::vector<double> grid;
    const auto count = static_cast<std::size_t>(std::floor((to - from) / step + 1e-3)) + 1;
    for (std::size_t i = 0; i < count; ++i) grid.push_back(from + static_cast<double>(i) * step);
    return grid;
}

SweepResult sweep(const SweepConfig &config) {
    if (config.grid.empty()) throw Error(ErrorKind::Validation, "sweep grid is empty");
    for (double t : config.grid) {
        if (t < 0.0) throw Error(ErrorKind::Domain, "negative target length squared", t);
    }
    std::vector<double> grid = config.grid;
    std::sort(grid.begin(), grid.end());

    const ErrorBasis basis = enumerate_error_basis(config.n, config.d);
    const PauliOperatorSet ops(basis);

    std::vector<std::optional<SweepRow>> rows(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        for (const auto &r : config.resume) {
            if (std::abs(r.target_lambda_sq - grid[i]) <= 1e-9) rows[i] = r;
        }
    }

    std::mutex mu;
    std::size_t flushed = 0;
    auto flush = [&] {
        while (flushed < rows.size() && rows[flushed]) {
            if (config.on_row) config.on_row(*rows[flushed]);
            ++flushed;
        }
    };
    {
        std::lock_guard<std::mutex> lock(mu);
        flush();
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= grid.size()) return;
            {
                std::lock_guard<std::mutex> lock(mu);
                if (rows[i] || failure) continue;
            }
            try {
                OptimizerConfig oc = config.optimizer;
                oc.seed = config.optimizer.seed + 1000003ULL * i;
                oc.threads = 1;
                const LossSpec spec = LossSpec::target(std::sqrt(grid[i]), config.mu);
                const OptimizationResult res = optimize(config.n, config.k, ops, spec, oc);
                SweepRow row;
                row.target_lambda_sq = grid[i];
                row.achieved_lambda_sq = res.lambda_star * res.lambda_star;
                row.kl_violation = res.kl_violation;
                const double r = row.achieved_lambda_sq - grid[i];
                row.final_loss = r * r + res.kl_violation;
                row.restarts_used = res.restarts_used;
                row.wall_ms = res.wall_time_ms;
                row.converged = res.converged;
                std::lock_guard<std::mutex> lock(mu);
                rows[i] = row;
                flush();
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!failure) failure = std::current_exception();
            }
        }
    };

    const int threads = std::min<int>(resolve_thread_count(config.threads), static_cast<int>(grid.size()));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto &t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    SweepResult out;
    for (auto &r : rows) out.rows.push_back(*r);
    return out;
}

}  // namespace klscope
