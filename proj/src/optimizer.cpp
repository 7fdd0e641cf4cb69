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

#include "klscope/optimizer.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <limits>
#include <mutex>
#include <random>
#include <string>
#include <thread>

namespace klscope {

DenseOperatorSet::DenseOperatorSet(std::vector<CMatrix> ops) : ops_(std::move(ops)) {
    for (std::size_t i = 0; i < ops_.size(); ++i) {
        const CMatrix &a = ops_[i];
        if (a.rows() != a.cols() || a.rows() != ops_.front().rows()) {
            throw Error(ErrorKind::Dimension, "operator " + std::to_string(i) + " has the wrong shape");
        }
        const double dev = (a - a.adjoint()).cwiseAbs().maxCoeff();
        if (dev > 1e-12) throw Error(ErrorKind::Validation, "operator " + std::to_string(i) + " is not Hermitian", dev);
    }
}

namespace {

constexpr double kMinSingularValue = 1e-8;

struct PolarFactor {
    CMatrix psi;
    CMatrix s;  // (theta^dag theta)^{-1/2}
    Eigen::VectorXd g;
    CMatrix v;
};

PolarFactor polar(const CMatrix &theta) {
    const CMatrix gram = theta.adjoint() * theta;
    Eigen::SelfAdjointEigenSolver<CMatrix> es(gram);
    PolarFactor f;
    f.g = es.eigenvalues();
    f.v = es.eigenvectors();
    const double smin = std::sqrt(std::max(f.g.minCoeff(), 0.0));
    if (!(smin >= kMinSingularValue)) {
        throw Error(ErrorKind::Conditioning, "theta is numerically rank deficient", smin);
    }
    const Eigen::VectorXd isq = f.g.cwiseSqrt().cwiseInverse();
    f.s = f.v * isq.cast<Complex>().asDiagonal() * f.v.adjoint();
    f.psi = theta * f.s;
    return f;
}

double inner(const CMatrix &a, const CMatrix &b) { return (a.conjugate().cwiseProduct(b)).sum().real(); }

}  // namespace

CMatrix stiefel_map(const CMatrix &theta) { return polar(theta).psi; }

const char *loss_kind_name(LossKind kind) {
    switch (kind) {
        case LossKind::KlOnly: return "kl_only";
        case LossKind::MinimizeLength: return "minimize_length";
        case LossKind::MaximizeLength: return "maximize_length";
        case LossKind::TargetLength: return "target_length";
        case LossKind::TargetVector: return "target_vector";
    }
    return "?";
}

LossKind parse_loss_kind(const std::string &name) {
    for (LossKind k : {LossKind::KlOnly, LossKind::MinimizeLength, LossKind::MaximizeLength, LossKind::TargetLength,
                       LossKind::TargetVector}) {
        if (name == loss_kind_name(k)) return k;
    }
    if (name == "minimize") return LossKind::MinimizeLength;
    if (name == "maximize") return LossKind::MaximizeLength;
    if (name == "target") return LossKind::TargetLength;
    throw Error(ErrorKind::UnknownName, "unknown loss kind '" + name + "'");
}

void LossSpec::validate(std::size_t num_ops) const {
    if (!(mu > 0.0)) throw Error(ErrorKind::Validation, "penalty weight mu must be positive", mu);
    if (kind == LossKind::TargetLength && !target_length) {
        throw Error(ErrorKind::MissingTarget, "target_length loss needs a target length");
    }
    if (kind == LossKind::TargetVector) {
        if (!target_vector) throw Error(ErrorKind::MissingTarget, "target_vector loss needs a target vector");
        if (target_vector->size() != num_ops) {
            throw Error(ErrorKind::Dimension, "target vector has " + std::to_string(target_vector->size()) +
                                                  " entries, expected " + std::to_string(num_ops));
        }
    }
}

Evaluation evaluate(const CMatrix &theta, const OperatorSet &ops, const LossSpec &spec, bool with_gradient,
                    const std::vector<CMatrix> *shifts) {
    spec.validate(ops.size());
    if (theta.rows() != ops.dim()) {
        throw Error(ErrorKind::Dimension, "theta has " + std::to_string(theta.rows()) + " rows, operators act on " +
                                              std::to_string(ops.dim()));
    }
    if (shifts && shifts->size() != ops.size()) throw Error(ErrorKind::Dimension, "shift count mismatch");

    const PolarFactor pf = polar(theta);
    const CMatrix &psi = pf.psi;
    const Eigen::Index k = theta.cols();
    const double kd = static_cast<double>(k);
    const std::size_t na = ops.size();
    const bool penalized = spec.kind != LossKind::KlOnly;
    const double mu = penalized ? spec.mu : 1.0;

    std::vector<CMatrix> opsi(with_gradient ? na : 1);
    std::vector<CMatrix> resid(na);
    std::vector<double> mean(na);
    double kl = 0.0, pen = 0.0, len = 0.0;
    CMatrix tmp;
    for (std::size_t a = 0; a < na; ++a) {
        CMatrix &o = with_gradient ? opsi[a] : tmp;
        ops.apply(a, psi, o);
        CMatrix t = psi.adjoint() * o;
        mean[a] = t.trace().real() / kd;
        t.diagonal().array() -= mean[a];
        kl += t.squaredNorm();
        if (shifts) {
            t -= (*shifts)[a];
            pen += t.squaredNorm();
        }
        resid[a] = std::move(t);
        len += mean[a] * mean[a];
    }
    if (!shifts) pen = kl;

    double extra = 0.0;
    const double t2 = spec.target_length ? (*spec.target_length) * (*spec.target_length) : 0.0;
    switch (spec.kind) {
        case LossKind::KlOnly: break;
        case LossKind::MinimizeLength: extra = len; break;
        case LossKind::MaximizeLength: extra = -len; break;
        case LossKind::TargetLength: extra = (len - t2) * (len - t2); break;
        case LossKind::TargetVector:
            for (std::size_t a = 0; a < na; ++a) {
                const double r = mean[a] - (*spec.target_vector)[a];
                extra += r * r;
            }
            break;
    }

    Evaluation ev;
    ev.parts.kl = kl;
    ev.parts.length_sq = len;
    ev.parts.total = mu * kl + extra;
    ev.penalty_total = mu * pen + extra;
    if (!with_gradient) return ev;

    // d(loss) = sum_a Re tr(W_a dT_a), T_a = psi^dag O_a psi
    CMatrix gamma = CMatrix::Zero(theta.rows(), k);
    CMatrix w(k, k);
    for (std::size_t a = 0; a < na; ++a) {
        w = resid[a];
        const Complex tr = w.trace() / kd;
        w.diagonal().array() -= tr;
        w *= 2.0 * mu;
        double diag = 0.0;
        switch (spec.kind) {
            case LossKind::KlOnly: break;
            case LossKind::MinimizeLength: diag = 2.0 * mean[a] / kd; break;
            case LossKind::MaximizeLength: diag = -2.0 * mean[a] / kd; break;
            case LossKind::TargetLength: diag = 2.0 * (len - t2) * 2.0 * mean[a] / kd; break;
            case LossKind::TargetVector: diag = 2.0 * (mean[a] - (*spec.target_vector)[a]) / kd; break;
        }
        w.diagonal().array() += diag;
        gamma.noalias() += 2.0 * opsi[a] * w;
    }

    // chain rule through psi = theta (theta^dag theta)^{-1/2}
    const CMatrix h = pf.v.adjoint() * (theta.adjoint() * gamma) * pf.v;
    const Eigen::VectorXd rg = pf.g.cwiseSqrt();
    CMatrix fh(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
        for (Eigen::Index j = 0; j < k; ++j) {
            const double f = -1.0 / (rg(i) * rg(j) * (rg(i) + rg(j)));
            fh(i, j) = f * h(i, j);
        }
    }
    const CMatrix q = pf.v * fh * pf.v.adjoint();
    const CMatrix qh = 0.5 * (q + q.adjoint());
    ev.gradient = gamma * pf.s + 2.0 * theta * qh;
    return ev;
}

double loss(const CMatrix &theta, const OperatorSet &ops, const LossSpec &spec) {
    return evaluate(theta, ops, spec, false).parts.total;
}

CMatrix gradient(const CMatrix &theta, const OperatorSet &ops, const LossSpec &spec) {
    return evaluate(theta, ops, spec, true).gradient;
}

std::vector<double> mean_diagonal_components(const CMatrix &theta, const OperatorSet &ops) {
    const CMatrix psi = stiefel_map(theta);
    std::vector<double> out(ops.size());
    CMatrix o;
    for (std::size_t a = 0; a < ops.size(); ++a) {
        ops.apply(a, psi, o);
        out[a] = (psi.adjoint() * o).trace().real() / static_cast<double>(psi.cols());
    }
    return out;
}

CMatrix random_theta(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    CMatrix theta(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j) {
        for (Eigen::Index i = 0; i < rows; ++i) {
            const double re = normal(rng);
            const double im = normal(rng);
            theta(i, j) = Complex(re, im);
        }
    }
    return theta;
}

namespace {

struct InnerResult {
    CMatrix theta;
    Evaluation eval;
    int iterations = 0;
};

// L-BFGS with Armijo backtracking on the (shifted) penalty objective.
InnerResult lbfgs(CMatrix theta, const OperatorSet &ops, const LossSpec &spec, const std::vector<CMatrix> *shifts,
                  const OptimizerConfig &config, std::vector<double> *trace) {
    Evaluation cur = evaluate(theta, ops, spec, true, shifts);
    std::deque<CMatrix> ss, ys;
    std::deque<double> rhos;
    int it = 0;
    int stall = 0;
    for (; it < config.max_iters; ++it) {
        const CMatrix &g = cur.gradient;
        const double gnorm = g.norm();
        if (gnorm <= config.grad_tol) break;

        CMatrix d = -g;
        if (!ss.empty()) {
            std::vector<double> alpha(ss.size());
            for (std::size_t i = ss.size(); i-- > 0;) {
                alpha[i] = rhos[i] * inner(ss[i], d);
                d -= alpha[i] * ys[i];
            }
            d *= inner(ss.back(), ys.back()) / inner(ys.back(), ys.back());
            for (std::size_t i = 0; i < ss.size(); ++i) {
                const double beta = rhos[i] * inner(ys[i], d);
                d += (alpha[i] - beta) * ss[i];
            }
        } else {
            d *= std::min(1.0, 0.1 / gnorm);
        }
        double slope = inner(g, d);
        if (!(slope < 0.0)) {
            ss.clear();
            ys.clear();
            rhos.clear();
            d = -g * std::min(1.0, 0.1 / gnorm);
            slope = inner(g, d);
        }

        double step = 1.0;
        bool accepted = false;
        Evaluation next;
        CMatrix trial;
        for (int ls = 0; ls < 60; ++ls) {
            trial = theta + step * d;
            try {
                next = evaluate(trial, ops, spec, true, shifts);
                if (next.penalty_total <= cur.penalty_total + 1e-4 * step * slope) {
                    accepted = true;
                    break;
                }
            } catch (const Error &e) {
                if (e.kind() != ErrorKind::Conditioning) throw;
            }
            step *= 0.5;
        }
        if (!accepted) break;

        CMatrix s = trial - theta;
        CMatrix y = next.gradient - g;
        const double sy = inner(s, y);
        if (sy > 1e-12 * s.norm() * y.norm()) {
            ss.push_back(std::move(s));
            ys.push_back(std::move(y));
            rhos.push_back(1.0 / sy);
            if (static_cast<int>(ss.size()) > config.lbfgs_memory) {
                ss.pop_front();
                ys.pop_front();
                rhos.pop_front();
            }
        }
        const double decrease = cur.penalty_total - next.penalty_total;
        theta = std::move(trial);
        cur = std::move(next);
        if (trace) trace->push_back(cur.penalty_total);
        if (decrease <= 1e-15 * std::max(1.0, std::abs(cur.penalty_total))) {
            if (++stall >= 20) {
                ++it;
                break;
            }
        } else {
            stall = 0;
        }
    }
    return {std::move(theta), std::move(cur), it};
}

}  // namespace

OptimizationResult optimize_from(const CMatrix &theta0, const OperatorSet &ops, const LossSpec &spec,
                                 const OptimizerConfig &config) {
    spec.validate(ops.size());
    const auto start = std::chrono::steady_clock::now();
    OptimizationResult res;
    CMatrix theta = stiefel_map(theta0);
    const bool penalized = spec.kind != LossKind::KlOnly;
    std::vector<CMatrix> shifts(ops.size(), CMatrix::Zero(theta.cols(), theta.cols()));

    InnerResult inner_res;
    if (penalized) {
        for (double factor : config.mu_continuation) {
            LossSpec warm = spec;
            warm.mu = spec.mu * factor;
            inner_res = lbfgs(theta, ops, warm, nullptr, config, nullptr);
            res.iterations += inner_res.iterations;
            theta = stiefel_map(inner_res.theta);
        }
    }
    const int outer_limit = penalized ? std::max(1, config.max_outer) : 1;
    for (int outer = 0; outer < outer_limit; ++outer) {
        inner_res = lbfgs(theta, ops, spec, penalized ? &shifts : nullptr, config, &res.loss_trace);
        res.iterations += inner_res.iterations;
        theta = stiefel_map(inner_res.theta);
        if (!penalized || inner_res.eval.parts.kl <= config.kl_tol) break;
        // multiplier update: shift <- shift - residual
        const CMatrix psi = theta;
        CMatrix o;
        const double kd = static_cast<double>(psi.cols());
        for (std::size_t a = 0; a < ops.size(); ++a) {
            ops.apply(a, psi, o);
            CMatrix t = psi.adjoint() * o;
            t.diagonal().array() -= t.trace().real() / kd;
            shifts[a] -= t;
        }
    }

    const Evaluation fin = evaluate(theta, ops, spec, false);
    res.basis = theta;
    res.kl_violation = fin.parts.kl;
    res.lambda_star = std::sqrt(fin.parts.length_sq);
    res.final_loss = fin.parts.total;
    res.gradient_norm = inner_res.eval.gradient.norm();
    res.converged = res.kl_violation <= config.kl_tol;
    res.restarts_used = 1;
    res.wall_time_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return res;
}

int resolve_thread_count(int requested) {
    int n = requested;
    if (n <= 0) n = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    if (const char *env = std::getenv("KLSCOPE_THREADS")) {
        try {
            const int cap = std::stoi(env);
            if (cap > 0) n = std::min(n, cap);
        } catch (const std::exception &) {
            throw Error(ErrorKind::Parse, std::string("KLSCOPE_THREADS is not an integer: ") + env);
        }
    }
    return std::max(1, n);
}

namespace {

bool better(const OptimizationResult &a, const OptimizationResult &b) {
    if (a.converged != b.converged) return a.converged;
    if (std::abs(a.final_loss - b.final_loss) > 1e-12) return a.final_loss < b.final_loss;
    return a.kl_violation < b.kl_violation;
}

bool nonnegative(LossKind kind) { return kind != LossKind::MaximizeLength; }

}  // namespace

OptimizationResult optimize(std::size_t n, std::size_t k, const OperatorSet &ops, const LossSpec &spec,
                            const OptimizerConfig &config) {
    spec.validate(ops.size());
    if (config.restarts < 1) throw Error(ErrorKind::Validation, "restarts must be positive");
    if (config.max_iters < 1) throw Error(ErrorKind::Validation, "max_iters must be positive");
    const Eigen::Index rows = Eigen::Index{1} << n;
    if (rows != ops.dim()) throw Error(ErrorKind::Dimension, "operator set does not act on n qubits");
    if (k < 1 || static_cast<Eigen::Index>(k) > rows) throw Error(ErrorKind::Domain, "code dimension out of range");

    const auto start = std::chrono::steady_clock::now();
    const std::size_t total = static_cast<std::size_t>(config.restarts);
    std::vector<std::optional<OptimizationResult>> slots(total);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    std::mutex err_mu;
    std::exception_ptr failure;

    auto run_one = [&](std::size_t idx) {
        constexpr int kReinit = 5;
        for (int attempt = 0; attempt < kReinit; ++attempt) {
            const std::uint64_t sub = idx + (static_cast<std::uint64_t>(attempt) << 32);
            try {
                OptimizationResult r = optimize_from(random_theta(rows, static_cast<Eigen::Index>(k), config.seed, sub),
                                                     ops, spec, config);
                r.restart_index = idx;
                return std::optional<OptimizationResult>(std::move(r));
            } catch (const Error &e) {
                if (e.kind() != ErrorKind::Conditioning) throw;
            }
        }
        return std::optional<OptimizationResult>();
    };

    auto worker = [&] {
        while (!stop.load()) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= total) return;
            try {
                slots[idx] = run_one(idx);
                if (slots[idx] && config.stop_loss >= 0.0 && nonnegative(spec.kind) && slots[idx]->converged &&
                    slots[idx]->final_loss <= config.stop_loss) {
                    stop.store(true);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!failure) failure = std::current_exception();
                stop.store(true);
            }
        }
    };

    const int threads = std::min<int>(resolve_thread_count(config.threads), static_cast<int>(total));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto &t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    OptimizationResult best;
    bool have = false;
    int used = 0;
    for (auto &slot : slots) {
        if (!slot) continue;
        ++used;
        if (!have || better(*slot, best)) {
            best = *slot;
            have = true;
        }
    }
    if (!have) throw Error(ErrorKind::Conditioning, "every restart produced a singular starting point");
    best.restarts_used = used;
    best.wall_time_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return best;
}

JnrResult jnr_feasibility(const std::vector<CMatrix> &operators, std::size_t k, const JnrConfig &config) {
    if (operators.empty()) throw Error(ErrorKind::DegenerateInput, "no operators given");
    DenseOperatorSet ops(operators);
    const Eigen::Index dim = ops.dim();
    if (k < 1 || static_cast<Eigen::Index>(k) > dim) throw Error(ErrorKind::Domain, "rank out of range");

    OptimizerConfig oc;
    oc.max_iters = config.max_iters;
    oc.grad_tol = 1e-15;
    oc.kl_tol = config.residual_tol * config.residual_tol;
    const LossSpec spec = LossSpec::kl_only();

    JnrResult out;
    for (int r = 0; r < config.restarts; ++r) {
        ++out.attempts;
        OptimizationResult res;
        try {
            res = optimize_from(random_theta(dim, static_cast<Eigen::Index>(k), config.seed, static_cast<std::uint64_t>(r)),
                                ops, spec, oc);
        } catch (const Error &e) {
            if (e.kind() != ErrorKind::Conditioning) throw;
            continue;
        }
        if (std::sqrt(res.kl_violation) > config.residual_tol) continue;
        ++out.feasible;
        std::vector<double> tuple = mean_diagonal_components(res.basis, ops);
        out.raw.push_back(tuple);
        const bool seen = std::any_of(out.points.begin(), out.points.end(), [&](const std::vector<double> &p) {
            for (std::size_t i = 0; i < p.size(); ++i) {
                if (std::abs(p[i] - tuple[i]) > config.dedupe_tol) return false;
            }
            return true;
        });
        if (!seen) out.points.push_back(std::move(tuple));
    }
    return out;
}

}  // namespace klscope
