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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "klscope/code_io.hpp"
#include "klscope/codespace.hpp"
#include "klscope/detail/random_unitary.hpp"
#include "klscope/enumerators.hpp"
#include "klscope/families.hpp"
#include "klscope/optimizer.hpp"
#include "klscope/stabilizer.hpp"
#include "klscope/sweep.hpp"

namespace {

using namespace klscope;
using nlohmann::json;

void emit(const std::string &text, const std::string &path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::Parse, "cannot open " + path + " for writing");
    out << text;
}

int sign_of(char c) {
    if (c == '+') return +1;
    if (c == '-') return -1;
    throw Error(ErrorKind::Parse, std::string("branch sign must be + or -, got '") + c + "'");
}

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

bool only_signs(const std::string &s) {
    return !s.empty() && s.find_first_not_of("+-") == std::string::npos;
}

// "--branch -- -" and "--branch - +" would otherwise collide with option parsing.
std::vector<std::string> normalize_args(int argc, char **argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--branch") {
            std::vector<std::string> toks;
            while (i + 1 < argc && toks.size() < 2 && only_signs(argv[i + 1])) toks.emplace_back(argv[++i]);
            std::string signs;
            if (toks.size() == 1) signs = toks[0];
            for (const auto &t : toks) {
                if (toks.size() == 2) signs += t.front();
            }
            args.push_back("--branch=" + signs);
            continue;
        }
        args.push_back(std::move(a));
    }
    return args;
}

json optimization_json(const OptimizationResult &r, std::size_t n) {
    json j;
    j["format"] = "klscope.optimize.v1";
    j["code"] = code_to_json(CodeSubspace::from_isometry(n, r.basis, 1e-9));
    j["kl_violation"] = r.kl_violation;
    j["lambda_star"] = r.lambda_star;
    j["final_loss"] = r.final_loss;
    j["iterations"] = r.iterations;
    j["restarts_used"] = r.restarts_used;
    j["converged"] = r.converged;
    j["wall_time_ms"] = r.wall_time_ms;
    return j;
}

json verify_report(const CodeSubspace &code, std::size_t d, std::uint64_t seed) {
    const ErrorBasis basis = enumerate_error_basis(code.num_qubits(), d);
    const KLTensor t = kl_tensor(code, basis);
    json j;
    j["format"] = "klscope.verify.v1";
    j["n"] = code.num_qubits();
    j["K"] = code.dim();
    j["d"] = d;
    j["kl_violation"] = t.violation();
    const bool is_code = t.violation() <= kDefaultKlTolerance;
    j["is_code"] = is_code;
    if (!is_code) return j;

    const SignatureVector sig = signature_vector(code, basis);
    const double ls = lambda_star(sig);
    j["lambda_star"] = ls;
    j["lambda_star_sq"] = ls * ls;
    json nz = json::object();
    for (std::size_t a = 0; a < sig.words.size(); ++a) {
        if (std::abs(sig.components[a]) > 1e-10) nz[sig.words[a].str()] = sig.components[a];
    }
    j["nonzero_components"] = nz;

    if (code.num_qubits() <= kEnumeratorQubitLimit && d == 3) {
        const WeightEnumerator we = weight_enumerators(code);
        const double a12 = lambda_star_sq_from_enumerator(we);
        j["enumerator"] = {{"A", we.A}, {"B", we.B}, {"A1_plus_A2", a12}, {"deviation", std::abs(a12 - ls * ls)}};
    }

    std::mt19937_64 rng(seed);
    std::vector<Eigen::Matrix2cd> us;
    for (std::size_t q = 0; q < code.num_qubits(); ++q) us.push_back(random_unitary_2x2(rng));
    const CodeSubspace rotated = apply_local_unitary(code, us);
    const double lr = lambda_star(signature_vector(rotated, basis));
    j["local_unitary"] = {{"seed", seed}, {"lambda_star", lr}, {"drift", std::abs(lr - ls)}};
    return j;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"klscope: Knill-Laflamme signature tools for small quantum codes"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "klscope 0.1.0");

    // sweep
    auto *sw = app.add_subcommand("sweep", "Scan target lambda*^2 values with the target_length loss");
    std::size_t sw_n = 6, sw_k = 2, sw_d = 3;
    double sw_from = 0.5, sw_to = 1.1, sw_step = 0.02, sw_mu = 1000.0;
    int sw_restarts = 50, sw_iters = 3000, sw_threads = 0;
    std::uint64_t sw_seed = 1;
    std::string sw_out, sw_resume;
    sw->add_option("--n", sw_n, "Qubits")->check(CLI::Range(1, 12));
    sw->add_option("--K", sw_k, "Code dimension")->check(CLI::PositiveNumber);
    sw->add_option("--d", sw_d, "Distance")->check(CLI::Range(2, 13));
    sw->add_option("--from", sw_from, "First target lambda*^2");
    sw->add_option("--to", sw_to, "Last target lambda*^2");
    sw->add_option("--step", sw_step, "Grid step")->check(CLI::PositiveNumber);
    sw->add_option("--mu", sw_mu, "Penalty weight")->check(CLI::PositiveNumber);
    sw->add_option("--restarts", sw_restarts, "Restarts per grid point")->check(CLI::PositiveNumber);
    sw->add_option("--max-iters", sw_iters, "Iterations per inner solve")->check(CLI::PositiveNumber);
    sw->add_option("--seed", sw_seed, "Master seed");
    sw->add_option("--threads", sw_threads, "Worker threads (0 = auto, capped by KLSCOPE_THREADS)");
    sw->add_option("--out", sw_out, "CSV output path (stdout if omitted)");
    sw->add_option("--resume", sw_resume, "Existing CSV whose rows are kept")->check(CLI::ExistingFile);

    // optimize
    auto *op = app.add_subcommand("optimize", "Run the multi-restart optimizer from a JSON config");
    std::string op_config, op_out;
    int op_threads = 0;
    op->add_option("--config", op_config, "Config JSON")->required()->check(CLI::ExistingFile);
    op->add_option("--out", op_out, "Result JSON path (stdout if omitted)");
    op->add_option("--threads", op_threads, "Worker threads (0 = auto)");

    // construct
    auto *co = app.add_subcommand("construct", "Build a named code or family member as code JSON");
    co->require_subcommand(1);
    co->fallthrough();
    std::string co_out;
    co->add_option("--out", co_out, "Code JSON path (stdout if omitted)");
    auto *f623 = co->add_subcommand("family623", "((6,2,3)) orthogonal-frame family");
    double f623_theta = 0.0;
    std::string f623_e;
    auto *theta_opt = f623->add_option("--theta", f623_theta, "Single-parameter angle");
    f623->add_option("--e-vector", f623_e, "Five comma-separated frame entries e")->excludes(theta_opt);
    auto *f723 = co->add_subcommand("family723", "((7,2,3)) cyclic family");
    double f723_l = 0.0;
    std::string f723_branch = "--";
    f723->add_option("--lambda-star", f723_l, "Signature length in [0, sqrt 7]")->required();
    f723->add_option("--branch", f723_branch, "Signs of the c1 and c3 roots, e.g. -- or -+");
    auto *perm = co->add_subcommand("permcode", "Permutation-invariant ((7,2,3)) code");
    std::string perm_variant = "plus";
    perm->add_option("--variant", perm_variant, "plus or minus");
    auto *stab = co->add_subcommand("stabilizer", "Stabilizer code from a builtin name or generator file");
    std::string stab_name, stab_file;
    auto *name_opt = stab->add_option("--name", stab_name, "steane or shaw623");
    stab->add_option("--generators", stab_file, "Generator file")->check(CLI::ExistingFile)->excludes(name_opt);

    // verify
    auto *ve = app.add_subcommand("verify", "Report KL violation, lambda*, enumerator and LU checks");
    std::string ve_code, ve_out;
    std::size_t ve_d = 3;
    std::uint64_t ve_seed = 1;
    ve->add_option("--code", ve_code, "Code JSON")->required()->check(CLI::ExistingFile);
    ve->add_option("--d", ve_d, "Distance")->check(CLI::Range(2, 13));
    ve->add_option("--seed", ve_seed, "Seed for the local-unitary spot test");
    ve->add_option("--out", ve_out, "Report path (stdout if omitted)");

    // enumerate
    auto *en = app.add_subcommand("enumerate", "Weight enumerators of a code as CSV");
    std::string en_code, en_out;
    bool en_poly = false;
    en->add_option("--code", en_code, "Code JSON")->required()->check(CLI::ExistingFile);
    en->add_option("--out", en_out, "CSV path (stdout if omitted)");
    en->add_flag("--polynomial", en_poly, "Print A(z) and B(z) instead of CSV");

    // jnr
    auto *jn = app.add_subcommand("jnr", "Rank-K joint numerical range search over Pauli observables");
    std::string jn_ops, jn_out;
    std::size_t jn_k = 1;
    JnrConfig jn_cfg;
    jn->add_option("--ops", jn_ops, "Comma-separated Pauli words")->required();
    jn->add_option("--K", jn_k, "Projector rank")->check(CLI::PositiveNumber);
    jn->add_option("--restarts", jn_cfg.restarts, "Random starts")->check(CLI::PositiveNumber);
    jn->add_option("--seed", jn_cfg.seed, "Seed");
    jn->add_option("--out", jn_out, "CSV path (stdout if omitted)");

    std::vector<std::string> args = normalize_args(argc, argv);
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError &e) {
        return app.exit(e);
    }

    try {
        if (*sw) {
            SweepConfig cfg;
            cfg.n = sw_n;
            cfg.k = sw_k;
            cfg.d = sw_d;
            cfg.grid = sweep_grid(sw_from, sw_to, sw_step);
            cfg.mu = sw_mu;
            cfg.optimizer.restarts = sw_restarts;
            cfg.optimizer.max_iters = sw_iters;
            cfg.optimizer.seed = sw_seed;
            cfg.threads = sw_threads;
            if (!sw_resume.empty()) {
                std::ifstream in(sw_resume);
                cfg.resume = SweepResult::from_csv(in).rows;
                if (sw_out.empty()) sw_out = sw_resume;
            }
            std::ofstream file;
            std::ostream *out = &std::cout;
            if (!sw_out.empty() && sw_out != "-") {
                file.open(sw_out);
                if (!file) throw Error(ErrorKind::Parse, "cannot open " + sw_out + " for writing");
                out = &file;
            }
            *out << SweepResult::kHeader << '\n' << std::flush;
            cfg.on_row = [&](const SweepRow &row) {
                write_sweep_row(*out, row);
                out->flush();
                if (!row.converged) {
                    std::cerr << "warning: target " << row.target_lambda_sq << " did not reach a feasible code\n";
                }
            };
            sweep(cfg);
        } else if (*op) {
            std::ifstream in(op_config);
            json c;
            try {
                in >> c;
            } catch (const json::exception &e) {
                throw Error(ErrorKind::Parse, std::string("invalid config JSON: ") + e.what());
            }
            const auto n = c.at("n").get<std::size_t>();
            const auto k = c.value("K", std::size_t{2});
            const auto d = c.value("d", std::size_t{3});
            LossSpec spec;
            spec.kind = parse_loss_kind(c.value("mode", std::string("kl_only")));
            spec.mu = c.value("mu", 1000.0);
            if (c.contains("lambda_target")) spec.target_length = c.at("lambda_target").get<double>();
            if (c.contains("lambda_vector")) spec.target_vector = c.at("lambda_vector").get<std::vector<double>>();
            OptimizerConfig oc;
            oc.restarts = c.value("restarts", oc.restarts);
            oc.max_iters = c.value("max_iters", oc.max_iters);
            oc.seed = c.value("seed", oc.seed);
            oc.kl_tol = c.value("kl_tol", oc.kl_tol);
            oc.threads = op_threads;
            const PauliOperatorSet ops(enumerate_error_basis(n, d));
            const OptimizationResult r = optimize(n, k, ops, spec, oc);
            json j = optimization_json(r, n);
            j["config"] = c;
            emit(j.dump(1) + "\n", op_out);
        } else if (*co) {
            CodeSubspace code = [&]() -> CodeSubspace {
                if (*f623) {
                    if (!f623_e.empty()) {
                        const auto parts = split(f623_e, ',');
                        if (parts.size() != 5) throw Error(ErrorKind::Parse, "--e-vector needs five entries");
                        Vec5 e;
                        for (int i = 0; i < 5; ++i) e(i) = std::stod(parts[static_cast<std::size_t>(i)]);
                        return code_623(frame_from_e(e));
                    }
                    return code_623(single_param_frame_623(f623_theta));
                }
                if (*f723) {
                    if (f723_branch.size() != 2) throw Error(ErrorKind::Parse, "--branch needs two signs, e.g. -+");
                    return cyclic_code_723(
                        cyclic_coeffs_from_lambda(f723_l, sign_of(f723_branch[0]), sign_of(f723_branch[1])));
                }
                if (*perm) {
                    if (perm_variant == "plus" || perm_variant == "+") return perm_code_723(PermVariant::Plus);
                    if (perm_variant == "minus" || perm_variant == "-") return perm_code_723(PermVariant::Minus);
                    throw Error(ErrorKind::UnknownName, "unknown variant '" + perm_variant + "'");
                }
                if (!stab_file.empty()) return codespace_from_stabilizer(read_generator_file(stab_file));
                if (stab_name.empty()) throw Error(ErrorKind::Validation, "give --name or --generators");
                return codespace_from_stabilizer(builtin_code(stab_name));
            }();
            emit(code_to_json(code).dump(1) + "\n", co_out);
        } else if (*ve) {
            emit(verify_report(read_code_file(ve_code), ve_d, ve_seed).dump(1) + "\n", ve_out);
        } else if (*en) {
            const WeightEnumerator we = weight_enumerators(read_code_file(en_code));
            emit(en_poly ? we.polynomial('A') + "\n" + we.polynomial('B') + "\n" : we.to_csv(), en_out);
        } else if (*jn) {
            const auto words = split(jn_ops, ',');
            std::vector<CMatrix> mats;
            for (const auto &w : words) mats.push_back(dense_matrix(PauliString::from_string(w)));
            const JnrResult r = jnr_feasibility(mats, jn_k, jn_cfg);
            std::ostringstream os;
            os << std::setprecision(17);
            for (std::size_t i = 0; i < words.size(); ++i) os << (i ? "," : "") << words[i];
            os << '\n';
            for (const auto &p : r.points) {
                for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
                os << '\n';
            }
            emit(os.str(), jn_out);
            std::cerr << r.feasible << " of " << r.attempts << " starts feasible, " << r.points.size()
                      << " distinct tuples\n";
        }
    } catch (const Error &e) {
        std::cerr << "error (" << error_kind_name(e.kind()) << "): " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
