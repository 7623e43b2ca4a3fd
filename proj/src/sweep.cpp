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

#include "tnbe/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace tnbe {

namespace {

constexpr double kTieTolerance = 1e-9;

double log_base(int value, int d) { return std::log(static_cast<double>(value)) / std::log(static_cast<double>(d)); }

} // namespace

std::string to_string(RegisterKind kind) {
    switch (kind) {
    case RegisterKind::physical: return "physical";
    case RegisterKind::bond: return "bond";
    case RegisterKind::flag: return "flag";
    case RegisterKind::pad: return "pad";
    case RegisterKind::boundary: return "boundary";
    }
    return "physical";
}

RegisterKind parse_register_kind(const std::string &name) {
    for (auto k : {RegisterKind::physical, RegisterKind::bond, RegisterKind::flag, RegisterKind::pad,
                   RegisterKind::boundary})
        if (to_string(k) == name) return k;
    throw Error(ErrorCode::parse, "unknown register kind '" + name + "'");
}

std::string to_string(OpRole role) {
    switch (role) {
    case OpRole::vh: return "vh";
    case OpRole::core: return "core";
    case OpRole::u: return "u";
    case OpRole::merged: return "merged";
    }
    return "merged";
}

OpRole parse_op_role(const std::string &name) {
    for (auto r : {OpRole::vh, OpRole::core, OpRole::u, OpRole::merged})
        if (to_string(r) == name) return r;
    throw Error(ErrorCode::parse, "unknown op role '" + name + "'");
}

std::size_t RegisterLayout::total_dim() const {
    std::size_t t = 1;
    for (const auto &r : registers) t *= static_cast<std::size_t>(r.dim);
    return t;
}

std::size_t RegisterLayout::physical_dim() const {
    std::size_t t = 1;
    for (const auto &r : registers)
        if (r.kind == RegisterKind::physical) t *= static_cast<std::size_t>(r.dim);
    return t;
}

int RegisterLayout::physical_of(int vertex) const {
    for (const auto &r : registers)
        if (r.kind == RegisterKind::physical && r.vertex == vertex) return r.id;
    throw Error(ErrorCode::invalid, "layout has no physical register for vertex " + std::to_string(vertex));
}

int RegisterLayout::bond_of(int edge) const {
    for (const auto &r : registers)
        if (r.kind == RegisterKind::bond && r.edge == edge) return r.id;
    throw Error(ErrorCode::invalid, "layout has no register for edge " + std::to_string(edge));
}

int RegisterLayout::flag_of(int vertex) const {
    for (const auto &r : registers)
        if (r.kind == RegisterKind::flag && r.vertex == vertex) return r.id;
    return -1;
}

std::vector<double> CompilationResult::betas() const {
    std::vector<double> b;
    for (const auto &s : sites) b.push_back(s.beta);
    return b;
}

const SiteRecord &CompilationResult::site(int vertex) const {
    for (const auto &s : sites)
        if (s.vertex == vertex) return s;
    throw Error(ErrorCode::invalid, "no site record for vertex " + std::to_string(vertex));
}

// ---------------------------------------------------------------------------
// Ordering

int next_vertex(const std::set<int> &processed, const std::set<int> &remaining, const TensorNetwork &tn) {
    if (remaining.empty()) throw Error(ErrorCode::invalid, "next_vertex: no remaining vertices");
    int best = -1;
    double best_delta = 0.0;
    std::size_t best_degree = 0;
    for (int v : remaining) {
        const auto edges = tn.incident_edges(v);
        double delta = 0.0;
        for (int eid : edges) {
            const Edge &e = tn.edge(eid);
            const int w = *e.other(v);
            const double size = log_base(e.dim, tn.d);
            if (remaining.count(w)) delta += size;
            else if (processed.count(w)) delta -= size;
        }
        const std::size_t degree = edges.size();
        const bool better = best < 0 || delta < best_delta - kTieTolerance ||
                            (std::abs(delta - best_delta) <= kTieTolerance && degree < best_degree);
        // `remaining` iterates by ascending id, so equal candidates keep the lowest id.
        if (better) {
            best = v;
            best_delta = delta;
            best_degree = degree;
        }
    }
    return best;
}

std::vector<int> greedy_order(const TensorNetwork &tn) {
    std::set<int> processed;
    const auto ids = tn.vertex_ids();
    std::set<int> remaining(ids.begin(), ids.end());
    std::vector<int> order;
    while (!remaining.empty()) {
        const int v = next_vertex(processed, remaining, tn);
        order.push_back(v);
        processed.insert(v);
        remaining.erase(v);
    }
    return order;
}

// ---------------------------------------------------------------------------
// Layout

TensorNetwork prepare_network(const TensorNetwork &tn) {
    const ValidationReport report = validate_network(tn);
    if (!report.ok()) throw Error(ErrorCode::invalid, report.summary());
    for (const auto &e : tn.edges)
        if (e.cyclic)
            throw Error(ErrorCode::unsupported,
                        "unsupported topology: edge " + std::to_string(e.id) + " is a cyclic (traced) bond");
    return pad_bonds_to_power(absorb_boundaries(tn), tn.d);
}

RegisterLayout layout_registers(const TensorNetwork &tn, const std::vector<int> &order,
                                const std::vector<bool> &needs_flag) {
    RegisterLayout layout;
    auto add = [&](Register r) {
        r.id = static_cast<int>(layout.registers.size());
        layout.registers.push_back(std::move(r));
    };
    for (int v : tn.vertex_ids()) add(Register{0, "P" + std::to_string(v), RegisterKind::physical, tn.d, false, v, -1});

    std::vector<const Edge *> bonds;
    for (const auto &e : tn.edges)
        if (!e.external() && !e.cyclic) bonds.push_back(&e);
    std::sort(bonds.begin(), bonds.end(), [](const Edge *a, const Edge *b) { return a->id < b->id; });
    for (const Edge *e : bonds) add(Register{0, "X" + std::to_string(e->id), RegisterKind::bond, e->dim, true, -1, e->id});

    for (std::size_t i = 0; i < order.size(); ++i) {
        if (!needs_flag.empty() && !needs_flag[i]) continue;
        add(Register{0, "F" + std::to_string(order[i]), RegisterKind::flag, 2, true, order[i], -1});
    }
    return layout;
}

// ---------------------------------------------------------------------------
// Sweep

namespace {

struct Wiring {
    int chi_in = 1, chi_out = 1, d = 2;
    int m = 0, n = 0, total = 0;

    // Local basis of [out bonds, in bonds, P]: t = xout * n + xin * d + phys.
    int out_embed(int kappa) const {
        const int b = kappa / m, i = kappa % m;
        return (i / d) * n + b * d + i % d;
    }
};

/// Core op on [flag, out bonds, in bonds, P]: the flag rotation on the input
/// embedding followed by the transfer to the output embedding.
Matrix wired_core(const DilatedCore &core, const Wiring &w) {
    const int t = w.total;
    const int k = core.k;
    std::vector<int> target(t, -1);
    std::vector<bool> hit(t, false);
    for (int kappa = 0; kappa < k; ++kappa) {
        target[kappa] = w.out_embed(kappa);
        hit[target[kappa]] = true;
    }
    int next_free = 0;
    for (int src = k; src < t; ++src) {
        while (hit[next_free]) ++next_free;
        target[src] = next_free++;
    }

    Matrix c = Matrix::Zero(2 * t, 2 * t);
    for (int src = 0; src < t; ++src) {
        const int dst = target[src];
        if (src < k) {
            const double s = core.s_k[src];
            const double dd = std::sqrt(std::max(0.0, 1.0 - s * s));
            c(dst, src) = s;
            c(dst, t + src) = dd;
            c(t + dst, src) = dd;
            c(t + dst, t + src) = -s;
        } else {
            c(dst, src) = 1.0;
            c(t + dst, t + src) = 1.0;
        }
    }
    return c;
}

/// u . transfer . vh on [out bonds, in bonds, P] for a trivial core.
Matrix wired_merged(const SiteFactors &f, const Wiring &w) {
    const int t = w.total;
    const int k = f.core.k;
    Matrix vh = Matrix::Zero(t, t), u = Matrix::Zero(t, t), pi = Matrix::Zero(t, t);
    for (int xo = 0; xo < w.chi_out; ++xo)
        for (int j = 0; j < w.n; ++j)
            for (int j2 = 0; j2 < w.n; ++j2) vh(xo * w.n + j2, xo * w.n + j) = f.svd.vh(j2, j);
    for (int xi = 0; xi < w.chi_in; ++xi)
        for (int xo = 0; xo < w.chi_out; ++xo)
            for (int ph = 0; ph < w.d; ++ph)
                for (int xo2 = 0; xo2 < w.chi_out; ++xo2)
                    for (int ph2 = 0; ph2 < w.d; ++ph2)
                        u(xo2 * w.n + xi * w.d + ph2, xo * w.n + xi * w.d + ph) = f.svd.u(xo2 * w.d + ph2, xo * w.d + ph);

    std::vector<bool> hit(t, false);
    for (int kappa = 0; kappa < k; ++kappa) {
        const int dst = w.out_embed(kappa);
        pi(dst, kappa) = 1.0;
        hit[dst] = true;
    }
    int next_free = 0;
    for (int src = k; src < t; ++src) {
        while (hit[next_free]) ++next_free;
        pi(next_free++, src) = 1.0;
    }
    return u * pi * vh;
}

} // namespace

CompilationResult graph_sweep(const TensorNetwork &input, const SweepOptions &opts) {
    const TensorNetwork tn = prepare_network(input);

    CompilationResult result;
    result.d = tn.d;
    result.policy = opts.policy;

    if (opts.order) {
        std::vector<int> sorted = *opts.order;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != tn.vertex_ids())
            throw Error(ErrorCode::invalid, "sweep order must list every vertex exactly once");
        result.order = *opts.order;
    } else {
        result.order = greedy_order(tn);
    }

    std::set<int> processed;
    std::vector<bool> needs_flag;
    struct Pending {
        int vertex;
        SiteFactors factors;
        Wiring wiring;
    };
    std::vector<Pending> pending;

    for (int v : result.order) {
        const SiteTensor &site = tn.vertex(v);
        SiteRecord rec;
        rec.vertex = v;
        Wiring w;
        w.d = tn.d;
        for (int eid : tn.incident_edges(v)) {
            const Edge &e = tn.edge(eid);
            if (processed.count(*e.other(v))) {
                rec.in_edges.push_back(eid);
                w.chi_in *= e.dim;
            } else {
                rec.out_edges.push_back(eid);
                w.chi_out *= e.dim;
            }
        }
        w.m = w.chi_out * w.d;
        w.n = w.chi_in * w.d;
        w.total = w.chi_out * w.n;

        SiteFactors f = unitary_svd(site, make_unfolding(site, rec.in_edges), opts.policy);
        rec.beta = f.beta;
        rec.condition = f.condition;
        rec.singular_values = f.svd.s;
        rec.m = w.m;
        rec.n = w.n;
        if (f.degenerate) {
            result.sites.push_back(std::move(rec));
            result.status = CompileStatus::zero_operator;
            result.zero_vertex = v;
            result.gamma = 0.0;
            result.layout = layout_registers(tn, result.order, std::vector<bool>(result.order.size(), false));
            return result;
        }
        rec.k = f.core.k;
        rec.p = f.core.p;
        rec.q = f.core.q;
        rec.drop = f.core.drop;
        rec.trivial = f.core.trivial;
        rec.s_k = f.core.s_k;
        rec.angles = f.core.angles;
        result.gamma *= f.beta;
        needs_flag.push_back(!f.core.trivial);
        result.sites.push_back(std::move(rec));
        pending.push_back(Pending{v, std::move(f), w});
        processed.insert(v);
    }

    result.layout = layout_registers(tn, result.order, needs_flag);
    const RegisterLayout &layout = result.layout;

    for (std::size_t i = 0; i < pending.size(); ++i) {
        const auto &[v, f, w] = pending[i];
        const SiteRecord &rec = result.sites[i];
        std::vector<int> out_regs, in_regs;
        for (int e : rec.out_edges) out_regs.push_back(layout.bond_of(e));
        for (int e : rec.in_edges) in_regs.push_back(layout.bond_of(e));
        const int phys = layout.physical_of(v);

        std::vector<int> touched = out_regs;
        touched.insert(touched.end(), in_regs.begin(), in_regs.end());
        touched.push_back(phys);

        if (rec.trivial) {
            result.ops.push_back(Op{OpRole::merged, v, touched, wired_merged(f, w)});
            continue;
        }
        std::vector<int> vh_regs = in_regs;
        vh_regs.push_back(phys);
        std::vector<int> u_regs = out_regs;
        u_regs.push_back(phys);
        std::vector<int> core_regs{layout.flag_of(v)};
        core_regs.insert(core_regs.end(), touched.begin(), touched.end());

        result.ops.push_back(Op{OpRole::vh, v, vh_regs, f.svd.vh});
        result.ops.push_back(Op{OpRole::core, v, core_regs, wired_core(f.core, w)});
        result.ops.push_back(Op{OpRole::u, v, u_regs, f.svd.u});
    }
    return result;
}

int peak_coupling(const CompilationResult &result) {
    std::map<int, int> dims;
    for (const auto &r : result.layout.registers)
        if (r.kind == RegisterKind::bond) dims[r.edge] = r.dim;
    std::set<int> active;
    double peak = 0.0;
    for (const auto &s : result.sites) {
        for (int e : s.in_edges) active.erase(e);
        for (int e : s.out_edges) active.insert(e);
        double width = 0.0;
        for (int e : active) width += log_base(dims.at(e), result.d);
        peak = std::max(peak, width);
    }
    return static_cast<int>(std::ceil(peak - kTieTolerance));
}

} // namespace tnbe
