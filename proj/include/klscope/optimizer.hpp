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

#ifndef KLSCOPE_OPTIMIZER_HPP
#define KLSCOPE_OPTIMIZER_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "klscope/codespace.hpp"
#include "klscope/pauli.hpp"

namespace klscope {

/// A list of Hermitian operators acting on a common space, applied to
/// column blocks. The KL machinery only needs `apply`.
class OperatorSet {
   public:
    virtual ~OperatorSet() = default;
    virtual std::size_t size() const = 0;
    virtual Eigen::Index dim() const = 0;
    virtual void apply(std::size_t alpha, const CMatrix &in, CMatrix &out) const = 0;
};

class PauliOperatorSet final : public OperatorSet {
   public:
    explicit PauliOperatorSet(ErrorBasis basis) : basis_(std::move(basis)) {}
    std::size_t size() const override { return basis_.size(); }
    Eigen::Index dim() const override { return Eigen::Index{1} << basis_.num_qubits(); }
    void apply(std::size_t alpha, const CMatrix &in, CMatrix &out) const override {
        apply_pauli(basis_[alpha], in, out);
    }
    const ErrorBasis &basis() const { return basis_; }

   private:
    ErrorBasis basis_;
};

class DenseOperatorSet final : public OperatorSet {
   public:
    /// Throws ErrorKind::Validation if an operator is not Hermitian within 1e-12.
    explicit DenseOperatorSet(std::vector<CMatrix> ops);
    std::size_t size() const override { return ops_.size(); }
    Eigen::Index dim() const override { return ops_.empty() ? 0 : ops_.front().rows(); }
    void apply(std::size_t alpha, const CMatrix &in, CMatrix &out) const override { out.noalias() = ops_[alpha] * in; }

   private:
    std::vector<CMatrix> ops_;
};

/// Polar map theta (theta^dag theta)^{-1/2} via the K x K Gram eigensystem.
/// Throws ErrorKind::Conditioning when the smallest singular value is below 1e-8.
CMatrix stiefel_map(const CMatrix &theta);

enum class LossKind { KlOnly, MinimizeLength, MaximizeLength, TargetLength, TargetVector };

const char *loss_kind_name(LossKind kind);
LossKind parse_loss_kind(const std::string &name);

/// kl_only:         L_KL
/// minimize_length: mu L_KL + |lambda|^2
/// maximize_length: mu L_KL - |lambda|^2
/// target_length:   mu L_KL + (|lambda|^2 - target^2)^2
/// target_vector:   mu L_KL + |lambda - target|^2
/// where lambda_alpha = K^-1 sum_i <psi_i|O_alpha|psi_i>.
struct LossSpec {
    LossKind kind = LossKind::KlOnly;
    double mu = 1000.0;
    std::optional<double> target_length;
    std::optional<std::vector<double>> target_vector;

    static LossSpec kl_only() { return {LossKind::KlOnly, 1.0, {}, {}}; }
    static LossSpec minimize(double mu = 1000.0) { return {LossKind::MinimizeLength, mu, {}, {}}; }
    static LossSpec maximize(double mu = 1000.0) { return {LossKind::MaximizeLength, mu, {}, {}}; }
    static LossSpec target(double length, double mu = 1000.0) { return {LossKind::TargetLength, mu, length, {}}; }
    static LossSpec vector(std::vector<double> v, double mu = 1000.0) {
        return {LossKind::TargetVector, mu, {}, std::move(v)};
    }

    /// Throws ErrorKind::MissingTarget / Validation.
    void validate(std::size_t num_ops) const;
};

struct LossParts {
    double total = 0.0;
    double kl = 0.0;         // L_KL
    double length_sq = 0.0;  // |lambda|^2
};

/// Evaluated loss and, optionally, its gradient with respect to (Re theta,
/// Im theta) packed as a complex matrix G: dL = Re tr(G^dag d theta).
/// `shifts`, when given, replaces the KL residual lambda_alpha - mean I by
/// lambda_alpha - mean I - shifts[alpha] in the penalty term (method of
/// multipliers); `parts.kl` always reports the unshifted L_KL.
struct Evaluation {
    LossParts parts;
    double penalty_total = 0.0;  // total with the shifted residual
    CMatrix gradient;
};

Evaluation evaluate(const CMatrix &theta, const OperatorSet &ops, const LossSpec &spec, bool with_gradient,
                    const std::vector<CMatrix> *shifts = nullptr);

double loss(const CMatrix &theta, const OperatorSet &ops, const LossSpec &spec);
CMatrix gradient(const CMatrix &theta, const OperatorSet &ops, const LossSpec &spec);

/// Mean-diagonal signature components of the polar image of theta.
std::vector<double> mean_diagonal_components(const CMatrix &theta, const OperatorSet &ops);

struct OptimizerConfig {
    std::uint64_t seed = 1;
    int restarts = 50;
    int max_iters = 3000;          // L-BFGS iterations per inner solve
    int max_outer = 40;            // multiplier updates
    int lbfgs_memory = 12;
    /// Warm-start solves at mu * factor before the full-weight solve.
    std::vector<double> mu_continuation{1e-6, 1e-5, 1e-4, 1e-3, 1e-2, 1e-1};
    double kl_tol = kDefaultKlTolerance;
    double grad_tol = 1e-7;
    /// Stop launching restarts once a restart's loss falls to this value
    /// (only for losses bounded below by zero). Negative disables.
    double stop_loss = 1e-14;
    /// Worker threads for restarts; 0 reads KLSCOPE_THREADS or the hardware count.
    int threads = 1;
};

struct OptimizationResult {
    CMatrix basis;  // isometry, 2^n x K
    double kl_violation = 0.0;
    double lambda_star = 0.0;
    double final_loss = 0.0;
    double gradient_norm = 0.0;
    int iterations = 0;
    int restarts_used = 0;
    bool converged = false;
    std::int64_t wall_time_ms = 0;
    std::uint64_t restart_index = 0;
    /// Best-so-far loss after each iteration of the winning restart.
    std::vector<double> loss_trace;
};

/// One restart from `theta0`: L-BFGS with Armijo backtracking on the penalty
/// loss, followed by multiplier updates on the KL residual until the
/// violation is below kl_tol.
OptimizationResult optimize_from(const CMatrix &theta0, const OperatorSet &ops, const LossSpec &spec,
                                 const OptimizerConfig &config);

/// Complex Gaussian starting point for restart `index` of `seed`.
CMatrix random_theta(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed, std::uint64_t index);

/// Best of `config.restarts` independent restarts.
OptimizationResult optimize(std::size_t n, std::size_t k, const OperatorSet &ops, const LossSpec &spec,
                            const OptimizerConfig &config);

int resolve_thread_count(int requested);

struct JnrConfig {
    std::uint64_t seed = 7;
    int restarts = 200;
    int max_iters = 4000;
    double residual_tol = 1e-9;
    double dedupe_tol = 1e-6;
};

struct JnrResult {
    /// Distinct tuples (lambda_1..lambda_m) found with residual <= tol.
    std::vector<std::vector<double>> points;
    /// One entry per successful restart, before deduplication.
    std::vector<std::vector<double>> raw;
    int attempts = 0;
    int feasible = 0;
};

/// Multi-start search for rank-K projectors with P A_i P = lambda_i P.
JnrResult jnr_feasibility(const std::vector<CMatrix> &operators, std::size_t k, const JnrConfig &config);

}  // namespace klscope

#endif
