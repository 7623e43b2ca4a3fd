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


// End-to-end acceptance run. One line per criterion; nonzero exit if any
// criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>

#include "oracles.hpp"
#include "support.hpp"
#include "tnbe/io.hpp"
#include "tnbe/qubo.hpp"
#include "tnbe/random.hpp"
#include "tnbe/sweep.hpp"
#include "tnbe/unitary_svd.hpp"
#include "tnbe/verify.hpp"

#ifndef TNBE_BINARY
#error "TNBE_BINARY must name the command-line tool"
#endif

using namespace tnbe;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string stats;
};

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", x);
    return buf;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<int> random_dims(int count, Rng &rng) {
    std::uniform_int_distribution<int> dim(1, 4);
    std::vector<int> dims(count);
    for (auto &x : dims) x = dim(rng);
    return dims;
}

Vector random_state(std::size_t dim, Rng &rng) {
    std::normal_distribution<double> g;
    Vector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v(i) = cplx(g(rng), g(rng));
    return v.normalized();
}

// 1. Gamma B against the dense contraction.
Outcome block_encoding() {
    const auto t0 = Clock::now();
    Rng rng(1001);
    std::uniform_int_distribution<int> sites(2, 4);
    std::vector<TensorNetwork> nets;
    for (int i = 0; i < 100; ++i) nets.push_back(random_chain(random_dims(sites(rng) - 1, rng), 2, rng));
    int non_chain = 0;
    for (int i = 0; i < 3; ++i, ++non_chain)
        nets.push_back(random_network(4, {{0, 1}, {0, 2}, {0, 3}}, random_dims(3, rng), 2, rng));
    for (int i = 0; i < 7; ++i, ++non_chain) nets.push_back(random_tree(4 + i % 2, 3, 2, rng));

    double worst = 0.0;
    int failures = 0, non_power = 0;
    for (const auto &tn : nets) {
        for (const auto &e : tn.edges) non_power += !is_power_of(e.dim, 2);
        const auto rep = verify_block_encoding(tn, graph_sweep(tn));
        worst = std::max(worst, rep.block_error);
        failures += !rep.pass;
    }
    const double secs = seconds_since(t0);
    Outcome o;
    o.pass = failures == 0 && worst <= 1e-10 && secs <= 60.0;
    o.stats = std::to_string(nets.size()) + " networks (" + std::to_string(non_chain) + " non-chain, " +
              std::to_string(non_power) + " non-power bonds), max error " + sci(worst) + ", " + sci(secs) + " s";
    return o;
}

// 2. Per-site dilation on random unfolded matrices.
Outcome per_site() {
    Rng rng(1002);
    std::uniform_int_distribution<int> side(1, 8);
    double worst_unitary = 0.0, worst_block = 0.0;
    int tall = 0, wide = 0, square = 0, deficient = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int m = side(rng), n = side(rng);
        Matrix a = random_matrix(m, n, rng);
        if (trial % 4 == 0 && std::min(m, n) > 1) {
            // Rank one less than full.
            const int r = std::min(m, n) - 1;
            a = random_matrix(m, r, rng) * random_matrix(r, n, rng);
            ++deficient;
        }
        (m > n ? tall : m < n ? wide : square)++;
        const auto f = unitary_svd(a);
        const auto q = assemble_site_unitary(f);
        for (const Matrix *w : {&f.vh_op.matrix, &f.core_op.matrix, &f.u_op.matrix, &q.matrix})
            worst_unitary = std::max(worst_unitary, unitarity_error(*w));
        Matrix target = Matrix::Zero(f.core.k, n);
        target.topRows(m) = a;
        const Matrix got = f.beta * flag_block(q, f.core.k).leftCols(n);
        worst_block = std::max(worst_block, oracle::max_abs(got - target) / std::max(1.0, f.beta));
    }
    Outcome o;
    o.pass = worst_unitary <= 1e-12 && worst_block <= 1e-12;
    o.stats = "1000 matrices (" + std::to_string(tall) + " tall, " + std::to_string(wide) + " wide, " +
              std::to_string(square) + " square, " + std::to_string(deficient) + " rank-deficient), unitarity " +
              sci(worst_unitary) + ", block " + sci(worst_block);
    return o;
}

// 3. Every processing order of one network gives the same Gamma B.
Outcome order_invariance() {
    Rng rng(1003);
    const auto tn = random_network(4, {{0, 1}, {1, 2}, {2, 3}, {1, 3}}, {2, 3, 2, 2}, 2, rng);
    std::vector<int> order{0, 1, 2, 3};
    Matrix first;
    double worst = 0.0;
    int count = 0;
    do {
        SweepOptions opts;
        opts.order = order;
        const auto r = graph_sweep(tn, opts);
        const Matrix gb = r.gamma * encoded_block(r).matrix;
        if (count++ == 0) first = gb;
        worst = std::max(worst, spectral_norm(gb - first));
    } while (std::next_permutation(order.begin(), order.end()));
    const double vs_oracle = spectral_norm(first - contract_dense(tn).matrix);
    Outcome o;
    o.pass = worst <= 1e-10 && vs_oracle <= 1e-10;
    o.stats = std::to_string(count) + " orders, max spread " + sci(worst) + ", vs contraction " + sci(vs_oracle);
    return o;
}

// 4. Product of per-site blocks against the projected product.
Outcome chaining() {
    Rng rng(1004);
    std::uniform_int_distribution<int> sites(2, 3), dim(1, 3);
    double worst = 0.0;
    int failures = 0;
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<int> dims(sites(rng) - 1);
        for (auto &x : dims) x = dim(rng);
        const auto tn = random_chain(dims, 2, rng);
        const auto rep = verify_chaining(tn, graph_sweep(tn));
        worst = std::max(worst, rep.error);
        failures += !rep.pass;
    }
    Outcome o;
    o.pass = failures == 0 && worst <= 1e-10;
    o.stats = "50 compilations, max error " + sci(worst);
    return o;
}

// Adds a perturbation of spectral norm eps (in the sweep unfolding) to a site.
void perturb_site(TensorNetwork &tn, const SiteRecord &rec, double eps, Rng &rng) {
    SiteTensor &site = *std::find_if(tn.vertices.begin(), tn.vertices.end(),
                                     [&](const SiteTensor &s) { return s.id == rec.vertex; });
    const auto unf = make_unfolding(site, rec.in_edges);
    const Matrix a = unfold_site(site, unf).matrix;
    Matrix e = random_matrix(static_cast<int>(a.rows()), static_cast<int>(a.cols()), rng);
    e *= eps / spectral_norm(e);
    site.data = fold_site(a + e, site, unf);
}

// 5. Perturbation bound.
Outcome error_locality() {
    Rng rng(1005);
    std::uniform_int_distribution<int> sites(2, 3), dim(1, 4);
    std::uniform_real_distribution<double> frac(0.0, 0.1);
    int held = 0;
    double tightest = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<int> dims(sites(rng) - 1);
        for (auto &x : dims) x = dim(rng);
        const auto tn = random_chain(dims, 2, rng);
        const auto r = graph_sweep(tn);
        TensorNetwork noisy = tn;
        std::vector<double> betas, eps;
        for (const auto &rec : r.sites) {
            const double e = trial % 10 == 0 ? 0.0 : frac(rng) * rec.beta;
            perturb_site(noisy, rec, e, rng);
            betas.push_back(rec.beta);
            eps.push_back(e);
        }
        const double measured = spectral_norm(contract_dense(noisy).matrix - contract_dense(tn).matrix);
        const double bound = error_bound(betas, eps).exact;
        // Rounding in the two contractions is the only slack allowed.
        if (measured <= bound + 1e-13) ++held;
        if (bound > 0.0) tightest = std::max(tightest, measured / bound);
    }
    Outcome o;
    o.pass = held == 1000;
    o.stats = std::to_string(held) + "/1000 trials within the bound, max measured/bound " + sci(tightest);
    return o;
}

// 6. Post-selected norm against ||(H / Gamma) psi||^2.
Outcome success() {
    Rng rng(1006);
    std::uniform_int_distribution<int> sites(1, 3), dim(1, 3);
    double worst = 0.0;
    int above = 0;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<int> dims(sites(rng) - 1);
        for (auto &x : dims) x = dim(rng);
        const auto tn = random_chain(dims, 2, rng);
        const auto r = graph_sweep(tn);
        const Matrix h = contract_dense(tn).matrix;
        const Vector psi = random_state(h.cols(), rng);
        const double got = simulate_postselection(r, psi);
        const double want = (h * psi).squaredNorm() / (r.gamma * r.gamma);
        const double bound = std::pow(spectral_norm(h) / r.gamma, 2);
        worst = std::max(worst, std::abs(got - want));
        above += got > bound + 1e-10;
    }
    Outcome o;
    o.pass = worst <= 1e-10 && above == 0;
    o.stats = "100 pairs, max deviation " + sci(worst) + ", above bound " + std::to_string(above);
    return o;
}

double qubo_error(const Matrix &h, const Qubo &q) {
    const auto want = oracle::ising_diagonal(q);
    Matrix d = Matrix::Zero(want.size(), want.size());
    for (std::size_t i = 0; i < want.size(); ++i) d(i, i) = want[i];
    return oracle::max_abs(h - d);
}

// 7. The three QUBO constructions, slot count and compiled register sweep.
Outcome qubo() {
    Rng rng(1007);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Qubo> cases;
    // Every coupling graph on up to 4 sites, random coefficients.
    for (int n = 1; n <= 4; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
        for (unsigned mask = 0; mask < (1U << pairs.size()); ++mask) {
            Qubo q(n);
            q.c_const = u(rng);
            for (auto &l : q.linear) l = u(rng);
            for (std::size_t b = 0; b < pairs.size(); ++b)
                if (mask >> b & 1U) q.add_coupling(pairs[b].first, pairs[b].second, u(rng));
            cases.push_back(q);
        }
    }
    const std::size_t exhaustive = cases.size();
    std::uniform_int_distribution<int> size(5, 8);
    std::uniform_real_distribution<double> density(0.1, 0.6);
    for (int i = 0; i < 30; ++i) {
        const int n = size(rng);
        std::bernoulli_distribution coin(density(rng));
        Qubo q(n);
        q.c_const = u(rng);
        for (auto &l : q.linear) l = u(rng);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (coin(rng)) q.add_coupling(a, b, u(rng));
        cases.push_back(q);
    }

    double worst = 0.0, worst_block = 0.0;
    int bond_mismatch = 0, verify_fail = 0, verified = 0;
    for (const auto &q : cases) {
        const auto order = suggest_order(q, OrderHeuristic::min_fill);
        const auto sweep = register_sweep_mpo(q, order);
        worst = std::max(worst, qubo_error(contract_dense(sweep).matrix, q));
        worst = std::max(worst, qubo_error(contract_dense(tensor_sum_mpo(q)).matrix, q));
        worst = std::max(worst, qubo_error(contract_dense(tensor_graph(q)).matrix, q));
        const int s = slot_requirement(q, order).s;
        for (const auto &e : sweep.edges) bond_mismatch += e.dim != s + 2;
        const auto rep = verify_block_encoding(sweep, graph_sweep(sweep), 1e-10, DenseLimit::from_qubits(24));
        worst_block = std::max(worst_block, rep.block_error);
        verify_fail += !rep.pass;
        ++verified;
    }
    Outcome o;
    o.pass = worst <= 1e-12 && bond_mismatch == 0 && verify_fail == 0;
    o.stats = std::to_string(exhaustive) + " exhaustive + " + std::to_string(cases.size() - exhaustive) +
              " random, max error " + sci(worst) + ", bond mismatches " + std::to_string(bond_mismatch) + ", " +
              std::to_string(verified) + " compiled, max block error " + sci(worst_block);
    return o;
}

// 8. Greedy choice and peak width against brute force.
Outcome greedy() {
    Rng rng(1008);
    std::uniform_int_distribution<int> size(1, 8);
    std::uniform_real_distribution<double> density(0.2, 0.6);
    int steps = 0, step_mismatch = 0, peak_mismatch = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto tn = random_graph(size(rng), density(rng), 2, 2, rng);
        const auto prepared = prepare_network(tn);
        const auto ids = prepared.vertex_ids();
        std::set<int> processed, remaining(ids.begin(), ids.end());
        std::vector<int> order;
        while (!remaining.empty()) {
            const int v = next_vertex(processed, remaining, prepared);
            step_mismatch += v != oracle::brute_next_vertex(prepared, processed, remaining);
            ++steps;
            order.push_back(v);
            processed.insert(v);
            remaining.erase(v);
        }
        const auto r = graph_sweep(tn);
        step_mismatch += r.order != order;
        peak_mismatch += peak_coupling(r) != oracle::brute_peak(prepared, r.order);
    }
    Outcome o;
    o.pass = step_mismatch == 0 && peak_mismatch == 0;
    o.stats = "100 graphs, " + std::to_string(steps) + " choices, mismatches " + std::to_string(step_mismatch) +
              ", peak mismatches " + std::to_string(peak_mismatch);
    return o;
}

int run_tool(const std::vector<std::string> &args, const fs::path &log) {
    std::string cmd = "\"" TNBE_BINARY "\"";
    for (const auto &a : args) cmd += " \"" + a + "\"";
    cmd += " > \"" + log.string() + "\" 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

fs::path scratch() {
    const auto dir = fs::temp_directory_path() / ("tnbe_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir;
}

// 9. A zero site through the command line.
Outcome degenerate() {
    const auto dir = scratch();
    Rng rng(1009);
    auto tn = random_chain({2, 2}, 2, rng);
    std::fill(tn.vertices[1].data.begin(), tn.vertices[1].data.end(), cplx(0.0));
    write_text_file((dir / "zero.json").string(), dump_network(tn));
    const int code = run_tool({"compile", (dir / "zero.json").string(), "-o", (dir / "zero.out.json").string()},
                              dir / "zero.log");
    const auto doc = read_json_file((dir / "zero.out.json").string());
    const bool said = slurp(dir / "zero.log").find("zero operator") != std::string::npos;
    Outcome o;
    o.pass = code == 2 && doc["status"] == "zero_operator" && doc["gamma"] == 0.0 && said;
    o.stats = "exit " + std::to_string(code) + ", status " + doc["status"].get<std::string>() + ", gamma " +
              sci(doc["gamma"].get<double>());
    return o;
}

// 10. Two compile runs, same bytes.
Outcome determinism() {
    const auto dir = scratch();
    Rng rng(1010);
    std::vector<TensorNetwork> nets{random_tree(5, 3, 2, rng), random_chain({3, 4, 2}, 2, rng)};
    Qubo q(4);
    q.linear = {0.5, -1.0, 0.25, 2.0};
    q.add_coupling(0, 2, 1.5);
    q.add_coupling(1, 3, -0.75);
    nets.push_back(register_sweep_mpo(q, {0, 1, 2, 3}));
    int same = 0;
    for (std::size_t i = 0; i < nets.size(); ++i) {
        const auto in = (dir / ("det" + std::to_string(i) + ".json")).string();
        write_text_file(in, dump_network(nets[i]));
        const auto a = dir / ("det" + std::to_string(i) + ".a.json");
        const auto b = dir / ("det" + std::to_string(i) + ".b.json");
        const int ca = run_tool({"compile", in, "-o", a.string()}, dir / "det.log");
        const int cb = run_tool({"compile", in, "-o", b.string()}, dir / "det.log");
        same += ca == 0 && cb == 0 && slurp(a) == slurp(b) && !slurp(a).empty();
    }
    Outcome o;
    o.pass = same == static_cast<int>(nets.size());
    o.stats = std::to_string(same) + "/" + std::to_string(nets.size()) + " inputs byte-identical";
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"block encoding", block_encoding},   {"per-site dilation", per_site},
        {"order invariance", order_invariance}, {"chaining", chaining},
        {"error locality", error_locality},   {"success probability", success},
        {"qubo exactness", qubo},             {"greedy oracle", greedy},
        {"degenerate path", degenerate},      {"determinism", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o.pass = false;
            o.stats = std::string("exception: ") + e.what();
        }
        failed += !o.pass;
        std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << i + 1 << " " << criteria[i].first << ": " << o.stats
                  << std::endl;
    }
    fs::remove_all(fs::temp_directory_path() / ("tnbe_acceptance_" + std::to_string(::getpid())));
    return failed == 0 ? 0 : 1;
}
