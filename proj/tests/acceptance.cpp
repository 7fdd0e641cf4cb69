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

// Acceptance checks, one PASS/FAIL line per criterion.
// Usage: klscope_acceptance [criterion ...]   (default: all)

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "klscope/codespace.hpp"
#include "klscope/enumerators.hpp"
#include "klscope/families.hpp"
#include "klscope/optimizer.hpp"
#include "klscope/stabilizer.hpp"
#include "klscope/sweep.hpp"

using namespace klscope;

namespace {

const double kSqrt7 = std::sqrt(7.0);

// Tracks the worst value of each quantity against its bound.
class Check {
   public:
    void le(const std::string &what, double value, double bound) {
        if (!(value <= bound)) fail(what, value, "<=", bound);
        worst(what, value);
    }
    void ge(const std::string &what, double value, double bound) {
        if (!(value >= bound)) fail(what, value, ">=", bound);
        worst(what, value);
    }
    void truth(const std::string &what, bool ok) {
        if (!ok) {
            ok_ = false;
            if (failures_.size() < 5) failures_.push_back(what);
        }
    }
    bool ok() const { return ok_; }
    std::string summary() const {
        std::ostringstream s;
        s.precision(3);
        if (!failures_.empty()) {
            s << "first failures: ";
            for (std::size_t i = 0; i < failures_.size(); ++i) s << (i ? "; " : "") << failures_[i];
            return s.str();
        }
        bool first = true;
        for (const auto &[k, v] : extremes_) {
            s << (first ? "" : ", ") << k << "=" << v;
            first = false;
        }
        return s.str();
    }

   private:
    void fail(const std::string &what, double value, const char *op, double bound) {
        ok_ = false;
        if (failures_.size() < 5) {
            std::ostringstream s;
            s.precision(6);
            s << what << " = " << value << " (need " << op << " " << bound << ")";
            failures_.push_back(s.str());
        }
    }
    void worst(const std::string &what, double value) {
        // summary keys are the text before the first '['
        const std::string key = what.substr(0, what.find('['));
        for (auto &[k, v] : extremes_) {
            if (k == key) {
                v = std::abs(value) > std::abs(v) ? value : v;
                return;
            }
        }
        extremes_.emplace_back(key, value);
    }

    bool ok_ = true;
    std::vector<std::string> failures_;
    std::vector<std::pair<std::string, double>> extremes_;
};

std::string idx(const std::string &base, double x) {
    std::ostringstream s;
    s << base << "[" << x << "]";
    return s.str();
}

double lambda_of(const CodeSubspace &c) { return lambda_star(signature_vector(c, enumerate_error_basis(c.num_qubits(), 3))); }

// 1. named codes
void named_codes(Check &c) {
    const auto b6 = enumerate_error_basis(6, 3);
    const auto b7 = enumerate_error_basis(7, 3);
    c.le("steane_lambda", lambda_star(signature_vector(codespace_from_stabilizer(builtin_code("steane")), b7)), 1e-9);
    const auto shaw = signature_vector(codespace_from_stabilizer(builtin_code("shaw623")), b6);
    c.le("shaw_lambda_err", std::abs(lambda_star(shaw) - 1.0), 1e-9);
    const auto z4z6 = PauliString::from_string("IIIZIZ");
    c.le("shaw_z4z6_err", std::abs(shaw.value(z4z6) - 1.0), 1e-9);
    double others = 0.0;
    for (std::size_t a = 0; a < shaw.words.size(); ++a)
        if (!(shaw.words[a] == z4z6)) others = std::max(others, std::abs(shaw.components[a]));
    c.le("shaw_other_components", others, 1e-9);
    for (PermVariant v : {PermVariant::Plus, PermVariant::Minus}) {
        c.le(idx("perm_lambda_err", v == PermVariant::Plus ? 1 : -1),
             std::abs(lambda_star(signature_vector(perm_code_723(v), b7)) - kSqrt7), 1e-9);
    }
}

// 2. ((6,2,3)) family
void family_623(Check &c) {
    const auto basis = enumerate_error_basis(6, 3);
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const OrthoFrame f = random_frame_623(seed);
        const CodeSubspace code = code_623(f);
        c.le(idx("frame_kl", static_cast<double>(seed)), kl_violation(code, basis), 1e-10);
        const double l2 = signature_vector(code, basis).norm_sq();
        double formula = 0.5;
        for (int i = 0; i < 5; ++i) formula += 8.0 * std::pow(f.e(i), 4);
        c.le(idx("frame_lambda_sq_err", static_cast<double>(seed)), std::abs(l2 - formula), 1e-9);
    }
    const double pi = std::acos(-1.0);
    double lo = 1e9, hi = -1e9;
    for (int i = 0; i < 20; ++i) {
        const double t = pi * i / 19.0;
        const CodeSubspace code = code_623(single_param_frame_623(t));
        c.le(idx("theta_kl", t), kl_violation(code, basis), 1e-10);
        const double l2 = signature_vector(code, basis).norm_sq();
        const double s = std::sin(t), co = std::cos(t);
        c.le(idx("theta_lambda_sq_err", t), std::abs(l2 - (0.5 + (std::pow(s, 4) / 4 + std::pow(co, 4)) / 2)), 1e-9);
        lo = std::min(lo, l2);
        hi = std::max(hi, l2);
    }
    const double at_min = signature_vector(code_623(single_param_frame_623(theta_min_623())), basis).norm_sq();
    c.le("endpoint_0.6_err", std::abs(std::min(lo, at_min) - 0.6), 1e-9);
    c.le("endpoint_1.0_err", std::abs(hi - 1.0), 1e-9);
}

// 3. ((7,2,3)) cyclic family
void cyclic_723(Check &c) {
    const auto basis = enumerate_error_basis(7, 3);
    for (double l : {0.0, 0.4, 1.0, 2.0, kSqrt7}) {
        for (int b1 : {-1, 1})
            for (int b3 : {-1, 1}) {
                const CodeSubspace code = cyclic_code_723(cyclic_coeffs_from_lambda(l, b1, b3));
                c.le(idx("kl", l), kl_violation(code, basis), 1e-10);
                c.le(idx("lambda_err", l), std::abs(lambda_star(signature_vector(code, basis)) - l), 1e-8);
            }
    }
    const auto s = cyclic_coeffs_from_lambda(0.0, -1, -1);
    c.le("steane_c0_err", std::abs(s.c[0] - 1.0 / std::sqrt(8.0)), 1e-12);
    c.le("steane_c2_err", std::abs(s.c[2] - std::sqrt(7.0 / 8.0)), 1e-12);
    c.le("steane_rest", std::abs(s.c[1]) + std::abs(s.c[3]) + std::abs(s.c[4]), 1e-12);
    for (int b1 : {-1, 1})
        for (int b3 : {-1, 1})
            c.le("perm_c0_err", std::abs(cyclic_coeffs_from_lambda(kSqrt7, b1, b3).c[0] - std::sqrt(15.0) / 8.0), 1e-12);
}

double max_coeff_diff(const WeightEnumerator &a, const WeightEnumerator &b) {
    double m = 0.0;
    for (std::size_t j = 0; j < a.A.size(); ++j) {
        m = std::max(m, std::abs(a.A[j] - b.A[j]));
        m = std::max(m, std::abs(a.B[j] - b.B[j]));
    }
    return m;
}

// 4. enumerators
void enumerators(Check &c) {
    std::vector<CodeSubspace> built;
    for (double l : {0.0, 1.0, kSqrt7}) {
        for (int b1 : {-1, 1}) {
            const CodeSubspace code = cyclic_code_723(cyclic_coeffs_from_lambda(l, b1, -1));
            c.le(idx("closed_723_err", l), max_coeff_diff(weight_enumerators(code), closed_form_723(l)), 1e-8);
            built.push_back(code);
        }
    }
    for (double t : {0.0, 0.4, theta_min_623()}) {
        const CodeSubspace code = code_623(single_param_frame_623(t));
        c.le(idx("closed_623_err", t), max_coeff_diff(weight_enumerators(code), closed_form_623(t)), 1e-8);
        built.push_back(code);
    }
    built.push_back(codespace_from_stabilizer(builtin_code("steane")));
    built.push_back(codespace_from_stabilizer(builtin_code("shaw623")));
    built.push_back(perm_code_723(PermVariant::Plus));
    built.push_back(perm_code_723(PermVariant::Minus));
    for (std::uint64_t s = 1; s <= 3; ++s) built.push_back(code_623(random_frame_623(s)));
    for (const auto &code : built) {
        const double l = lambda_of(code);
        const auto we = weight_enumerators(code);
        c.le("A1_plus_A2_err", std::abs(we.A[1] + we.A[2] - l * l), 1e-8);
    }
}

OptimizerConfig extremes_config() {
    OptimizerConfig cfg;
    cfg.restarts = 50;
    cfg.threads = 0;
    return cfg;
}

// 5. optimizer extremes
void extremes(Check &c) {
    const PauliOperatorSet ops6(enumerate_error_basis(6, 3));
    const PauliOperatorSet ops7(enumerate_error_basis(7, 3));
    const auto lo = optimize(6, 2, ops6, LossSpec::minimize(1000.0), extremes_config());
    c.le("min623_lambda_sq", lo.lambda_star * lo.lambda_star, 0.601);
    c.le("min623_kl", lo.kl_violation, 1e-10);
    const auto hi = optimize(6, 2, ops6, LossSpec::maximize(1000.0), extremes_config());
    c.ge("max623_lambda_sq", hi.lambda_star * hi.lambda_star, 0.999);
    c.le("max623_kl", hi.kl_violation, 1e-10);
    const auto hi7 = optimize(7, 2, ops7, LossSpec::maximize(1000.0), extremes_config());
    c.ge("max723_lambda_sq", hi7.lambda_star * hi7.lambda_star, 6.9);
    c.le("max723_kl", hi7.kl_violation, 1e-10);
}

// 6. sweep transition
void sweep_transition(Check &c) {
    SweepConfig cfg;
    cfg.grid = sweep_grid(0.5, 1.1, 0.02);
    cfg.mu = 1000.0;
    cfg.optimizer.restarts = 50;
    const char *path = "sweep_623.csv";
    std::ofstream out(path);
    out << SweepResult::kHeader << '\n';
    cfg.on_row = [&](const SweepRow &row) {
        write_sweep_row(out, row);
        out.flush();
    };
    const auto r = sweep(cfg);
    for (const auto &row : r.rows) {
        const double t = row.target_lambda_sq;
        if (t >= 0.6 - 1e-9 && t <= 1.0 + 1e-9) {
            c.le(idx("inside_loss", t), row.final_loss, 1e-8);
        } else if (t < 0.55 - 1e-9 || t > 1.05 + 1e-9) {
            c.ge(idx("outside_loss", t), row.final_loss, 1e-3);
        }
    }
    c.truth("csv rows", r.rows.size() == 31);
}

// 7. disconnected joint numerical range
void jnr(Check &c) {
    std::vector<CMatrix> ops;
    for (const char *w : {"XI", "XZ", "YI", "YZ", "ZI"}) ops.push_back(dense_matrix(PauliString::from_string(w)));
    JnrConfig cfg;
    cfg.restarts = 200;
    const auto r = jnr_feasibility(ops, 2, cfg);
    c.truth("all 200 starts feasible", r.feasible == 200 && r.raw.size() == 200);
    bool plus = false, minus = false;
    for (const auto &t : r.raw) {
        for (int i = 0; i < 4; ++i) c.le("lambda_1..4", std::abs(t[static_cast<std::size_t>(i)]), 1e-8);
        c.le("abs_lambda5_err", std::abs(std::abs(t[4]) - 1.0), 1e-8);
        plus |= t[4] > 0;
        minus |= t[4] < 0;
    }
    c.truth("both signs of lambda_5", plus && minus);
}

// 8. invariance suites
void invariances(Check &c) {
    std::mt19937_64 rng(8);
    const std::vector<CodeSubspace> codes = {codespace_from_stabilizer(builtin_code("steane")),
                                             codespace_from_stabilizer(builtin_code("shaw623")),
                                             perm_code_723(PermVariant::Plus), perm_code_723(PermVariant::Minus),
                                             code_623(single_param_frame_623(0.4)),
                                             cyclic_code_723(cyclic_coeffs_from_lambda(1.0, -1, -1))};
    for (const auto &code : codes) {
        const auto basis = enumerate_error_basis(code.num_qubits(), 3);
        const double l = lambda_star(signature_vector(code, basis));
        for (int t = 0; t < 100; ++t) {
            std::vector<Eigen::Matrix2cd> us;
            for (std::size_t q = 0; q < code.num_qubits(); ++q) us.push_back(random_unitary_2x2(rng));
            const CodeSubspace moved = apply_local_unitary(code, us);
            c.le("lu_drift", std::abs(lambda_star(signature_vector(moved, basis)) - l), 1e-9);
        }
    }

    // purity chains: one-body Bloch length and two-body correlation sums
    const char *names[3] = {"X", "Y", "Z"};
    for (const auto &code : codes) {
        const std::size_t n = code.num_qubits();
        const CVector psi = code.codeword(0);
        std::vector<double> one(n);
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (const char *p : names) {
                std::string w(n, 'I');
                w[i] = p[0];
                const CVector v = dense_matrix(PauliString::from_string(w)) * psi;
                s += std::pow(psi.dot(v).real(), 2);
            }
            one[i] = s;
            const std::size_t q[] = {i};
            c.le("purity_chain_1", std::abs(s - (2.0 * purity(reduced_density_matrix(psi, n, q)) - 1.0)), 1e-10);
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                double s = 0.0;
                for (const char *p : names)
                    for (const char *r : names) {
                        std::string w(n, 'I');
                        w[i] = p[0];
                        w[j] = r[0];
                        const CVector v = dense_matrix(PauliString::from_string(w)) * psi;
                        s += std::pow(psi.dot(v).real(), 2);
                    }
                const std::size_t q[] = {i, j};
                const double pur = purity(reduced_density_matrix(psi, n, q));
                c.le("purity_chain_2", std::abs(s - (4.0 * pur - 1.0 - one[i] - one[j])), 1e-10);
            }
    }

    // gradient against central differences
    const PauliOperatorSet ops(enumerate_error_basis(6, 3));
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (std::uint64_t t = 0; t < 20; ++t) {
        const CMatrix theta = random_theta(64, 2, 808, t);
        const CMatrix dir = random_theta(64, 2, 809, t);
        LossSpec spec;
        switch (t % 4) {
            case 0: spec = LossSpec::kl_only(); break;
            case 1: spec = LossSpec::minimize(1000.0); break;
            case 2: spec = LossSpec::maximize(1000.0); break;
            default: spec = LossSpec::target(0.6 + 0.4 * u(rng), 1000.0);
        }
        const double h = 1e-5;
        const double fd = (loss(theta + h * dir, ops, spec) - loss(theta - h * dir, ops, spec)) / (2 * h);
        const double an = (gradient(theta, ops, spec).conjugate().cwiseProduct(dir)).sum().real();
        c.le("gradient_rel_err", std::abs(an - fd) / std::max(std::abs(fd), 1e-3), 1e-6);
    }

    for (double l : {0.0, 0.4, 1.0, 2.0, kSqrt7})
        for (int b1 : {-1, 1})
            for (int b3 : {-1, 1}) {
                const auto r = appendix_b_residuals(cyclic_coeffs_from_lambda(l, b1, b3));
                c.le("cyclic_equation_residual", std::max(r.max_equation_residual(), std::abs(r.quartic)), 1e-11);
            }

    const OrthoFrame frame = random_frame_623(77);
    std::uniform_real_distribution<double> ang(-3.14159, 3.14159);
    for (int g = 1; g <= 6; ++g)
        for (int t = 0; t < 5; ++t) {
            const auto rep = so4_check(frame, static_cast<So4Generator>(g), ang(rng));
            c.le("so4_deviation", std::max(rep.projector_deviation, rep.codeword_deviation), 1e-10);
        }

    const auto h6 = hamiltonian_ground_check(HamiltonianKind::H623);
    const auto h7 = hamiltonian_ground_check(HamiltonianKind::H723);
    c.truth("H623 degeneracy 16", h6.degeneracy == 16);
    c.truth("H723 degeneracy 8", h7.degeneracy == 8);
    c.le("ground_containment", std::max(h6.containment_deviation, h7.containment_deviation), 1e-9);
}

// 9. stabilizer integrality
void integrality(Check &c) {
    for (const char *name : {"steane", "shaw623"}) {
        const StabilizerCode s = builtin_code(name);
        const CodeSubspace code = codespace_from_stabilizer(s);
        const auto sig = signature_vector(code, enumerate_error_basis(code.num_qubits(), 3));
        for (double v : sig.components) {
            const double a = std::abs(v);
            c.le(std::string("component_offset[") + name + "]", std::min(a, std::abs(a - 1.0)), 1e-10);
        }
        const double l2 = sig.norm_sq();
        c.le(std::string("lambda_sq_offset[") + name + "]", std::abs(l2 - std::round(l2)), 1e-9);
    }
}

struct Criterion {
    int id;
    const char *title;
    std::function<void(Check &)> run;
};

}  // namespace

int main(int argc, char **argv) {
    const std::vector<Criterion> all = {
        {1, "named-code signature lengths", named_codes},
        {2, "((6,2,3)) family exactness", family_623},
        {3, "((7,2,3)) cyclic family", cyclic_723},
        {4, "weight enumerator identities", enumerators},
        {5, "optimization extremes", extremes},
        {6, "((6,2,3)) sweep transition", sweep_transition},
        {7, "disconnected rank-2 numerical range", jnr},
        {8, "invariance suites", invariances},
        {9, "stabilizer integrality", integrality},
    };
    std::set<int> wanted;
    for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));

    int failed = 0;
    for (const auto &cr : all) {
        if (!wanted.empty() && !wanted.count(cr.id)) continue;
        Check check;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            cr.run(check);
        } catch (const std::exception &e) {
            check.truth(std::string("exception: ") + e.what(), false);
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failed += !check.ok();
        std::printf("criterion %d %s: %s (%.1f s) %s\n", cr.id, check.ok() ? "PASS" : "FAIL", cr.title, secs,
                    check.summary().c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
