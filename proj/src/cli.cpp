// Copyright 2026 The tnbe Authors
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

#include "tnbe/cli.hpp"

#include <CLI11.hpp>

#include <ostream>

#include "tnbe/io.hpp"
#include "tnbe/qubo.hpp"
#include "tnbe/random.hpp"
#include "tnbe/report.hpp"
#include "tnbe/sweep.hpp"
#include "tnbe/verify.hpp"

namespace tnbe {

namespace {

DenseLimit dense_limit(int qubits) { return qubits > 0 ? DenseLimit::from_qubits(qubits) : DenseLimit::from_env(); }

int code_for(const Error &e) {
    switch (e.code()) {
    case ErrorCode::too_large: return exit_code::too_large;
    default: return exit_code::failed;
    }
}

void emit(const std::string &path, const std::string &text, std::ostream &out) {
    if (path.empty() || path == "-") out << text;
    else write_text_file(path, text);
}

struct CompileArgs {
    std::string network, output, pad = "identity";
    std::vector<int> order;
};

int cmd_compile(const CompileArgs &a, std::ostream &out, std::ostream &err) {
    const TensorNetwork tn = read_network(a.network);
    SweepOptions opts;
    opts.policy = parse_pad_policy(a.pad);
    if (!a.order.empty()) opts.order = a.order;
    const CompilationResult r = graph_sweep(tn, opts);
    emit(a.output, dump_result(r), out);
    if (r.status == CompileStatus::zero_operator) {
        err << "zero operator: site " << *r.zero_vertex << " has beta = 0, so gamma = 0\n";
        return exit_code::zero_operator;
    }
    return exit_code::ok;
}

struct VerifyArgs {
    std::string network, result, output;
    double tol = 1e-10;
    int dense_qubits = 0;
};

int cmd_verify(const VerifyArgs &a, std::ostream &out, std::ostream &err) {
    const TensorNetwork tn = read_network(a.network);
    const CompilationResult r = read_result(a.result);
    const VerificationReport rep = verify_block_encoding(tn, r, a.tol, dense_limit(a.dense_qubits));
    emit(a.output, verification_to_json(rep).dump(2) + "\n", out);
    err << (rep.pass ? "pass" : "FAIL") << ": block error " << rep.block_error << " (tolerance " << a.tol << ")\n";
    return rep.pass ? exit_code::ok : exit_code::failed;
}

struct QuboArgs {
    std::string qubo, output, plan, method = "sweep", order = "natural";
    int dense_qubits = 0;
};

int cmd_qubo(const QuboArgs &a, std::ostream &out, std::ostream &err) {
    const Qubo q = read_qubo(a.qubo);
    const std::vector<int> order = suggest_order(q, parse_order_heuristic(a.order));
    const SlotPlan plan = slot_requirement(q, order);
    TensorNetwork tn;
    if (a.method == "sweep") {
        tn = register_sweep_mpo(q, order);
    } else if (a.method == "sum") {
        tn = tensor_sum_mpo(q);
    } else if (a.method == "graph") {
        const int qubits = a.dense_qubits > 0 ? a.dense_qubits : 12;
        tn = tensor_graph(q, std::nullopt, qubits);
    } else {
        throw Error(ErrorCode::invalid, "unknown method '" + a.method + "' (expected sweep|sum|graph)");
    }
    emit(a.output, dump_network(tn), out);
    if (!a.plan.empty()) write_text_file(a.plan, slot_plan_to_json(plan).dump(2) + "\n");
    err << "method " << a.method << ", order " << a.order << ", slots s = " << plan.s << ", sites " << q.n << "\n";
    return exit_code::ok;
}

struct ReportArgs {
    std::string result, network, json_out;
    int dense_qubits = 0;
};

int cmd_report(const ReportArgs &a, std::ostream &out, std::ostream &) {
    const CompilationResult r = read_result(a.result);
    std::optional<TensorNetwork> tn;
    if (!a.network.empty()) tn = read_network(a.network);
    const ResourceReport rep = resource_report(r, tn ? &*tn : nullptr, dense_limit(a.dense_qubits));
    if (a.json_out == "-") {
        out << report_to_json(rep).dump(2) << "\n";
        return exit_code::ok;
    }
    out << format_report(rep);
    if (!a.json_out.empty()) write_text_file(a.json_out, report_to_json(rep).dump(2) + "\n");
    return exit_code::ok;
}

struct RandomArgs {
    std::string output, shape = "chain";
    std::uint64_t seed = 0;
    int sites = 3, max_dim = 2, d = 2;
};

int cmd_random(const RandomArgs &a, std::ostream &out, std::ostream &) {
    Rng rng(a.seed);
    TensorNetwork tn;
    if (a.shape == "chain") {
        std::uniform_int_distribution<int> dim(1, a.max_dim);
        std::vector<int> dims;
        for (int i = 0; i + 1 < a.sites; ++i) dims.push_back(dim(rng));
        tn = random_chain(dims, a.d, rng);
    } else if (a.shape == "tree") {
        tn = random_tree(a.sites, a.max_dim, a.d, rng);
    } else {
        throw Error(ErrorCode::invalid, "unknown shape '" + a.shape + "' (expected chain|tree)");
    }
    emit(a.output, dump_network(tn), out);
    return exit_code::ok;
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Tensor network to unitary circuit compiler with dense checks."};
    app.name("tnbe");
    app.require_subcommand(1);

    CompileArgs ca;
    auto *compile = app.add_subcommand("compile", "compile a network file into a result document");
    compile->add_option("network", ca.network, "network file")->required();
    compile->add_option("-o,--output", ca.output, "result file (stdout when omitted)");
    compile->add_option("--pad", ca.pad, "pad policy")->check(CLI::IsMember({"identity", "symmetry"}));
    compile->add_option("--sweep-order", ca.order, "processing order, e.g. 2,1,3 (greedy when omitted)")
        ->delimiter(',');

    VerifyArgs va;
    auto *verify = app.add_subcommand("verify", "check a result against the dense contraction");
    verify->add_option("network", va.network, "network file")->required();
    verify->add_option("result", va.result, "result file")->required();
    verify->add_option("-o,--output", va.output, "verification report (stdout when omitted)");
    verify->add_option("--tol", va.tol, "spectral-norm tolerance");
    verify->add_option("--dense-limit", va.dense_qubits, "dense limit in physical qubits");

    QuboArgs qa;
    auto *qubo = app.add_subcommand("qubo", "build a network from a QUBO file");
    qubo->add_option("qubo", qa.qubo, "QUBO file")->required();
    qubo->add_option("-o,--output", qa.output, "network file (stdout when omitted)");
    qubo->add_option("--method", qa.method, "construction")->check(CLI::IsMember({"sweep", "sum", "graph"}));
    qubo->add_option("--order", qa.order, "site order")->check(CLI::IsMember({"natural", "min_degree", "min_fill"}));
    qubo->add_option("--plan", qa.plan, "also write the slot plan here");
    qubo->add_option("--dense-limit", qa.dense_qubits, "maximum coupling degree for --method graph");

    ReportArgs ra;
    auto *report = app.add_subcommand("report", "resource report for a result");
    report->add_option("result", ra.result, "result file")->required();
    report->add_option("--network", ra.network, "network file, for the success-probability bound");
    report->add_option("--json", ra.json_out, "machine-readable report file ('-' for stdout)");
    report->add_option("--dense-limit", ra.dense_qubits, "dense limit in physical qubits");

    RandomArgs rda;
    auto *random = app.add_subcommand("random", "write a random network");
    random->add_option("-o,--output", rda.output, "network file (stdout when omitted)");
    random->add_option("--seed", rda.seed, "generator seed");
    random->add_option("--sites", rda.sites, "number of sites")->check(CLI::Range(1, 64));
    random->add_option("--max-dim", rda.max_dim, "largest bond dimension")->check(CLI::Range(1, 64));
    random->add_option("--shape", rda.shape, "chain or tree")->check(CLI::IsMember({"chain", "tree"}));
    random->add_option("--d", rda.d, "physical dimension")->check(CLI::Range(2, 16));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_code::ok : exit_code::failed;
    }

    try {
        if (*compile) return cmd_compile(ca, out, err);
        if (*verify) return cmd_verify(va, out, err);
        if (*qubo) return cmd_qubo(qa, out, err);
        if (*report) return cmd_report(ra, out, err);
        if (*random) return cmd_random(rda, out, err);
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return code_for(e);
    }
    return exit_code::failed;
}

} // namespace tnbe
