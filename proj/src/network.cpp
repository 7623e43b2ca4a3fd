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

#include "tnbe/network.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

#include "tensor_ops.hpp"

namespace tnbe {

using detail::DenseTensor;

DenseLimit DenseLimit::from_env() {
    if (const char *env = std::getenv("TNBE_DENSE_LIMIT")) {
        char *end = nullptr;
        const long q = std::strtol(env, &end, 10);
        if (end != env && q > 0 && q < 40) return from_qubits(static_cast<int>(q));
    }
    return DenseLimit{};
}

// ---------------------------------------------------------------------------
// Accessors

std::vector<int> SiteTensor::shape() const {
    std::vector<int> s;
    s.reserve(legs.size());
    for (const auto &l : legs) s.push_back(l.dim);
    return s;
}

std::size_t SiteTensor::expected_size() const { return detail::element_count(shape()); }

int SiteTensor::axis_of(LegKind kind) const {
    for (std::size_t i = 0; i < legs.size(); ++i)
        if (legs[i].kind == kind) return static_cast<int>(i);
    return -1;
}

std::vector<int> SiteTensor::axes_of_edge(int edge) const {
    std::vector<int> axes;
    for (std::size_t i = 0; i < legs.size(); ++i)
        if (legs[i].kind == LegKind::bond && legs[i].edge == edge) axes.push_back(static_cast<int>(i));
    return axes;
}

std::optional<int> Edge::other(int vertex) const {
    if (!v) return std::nullopt;
    return u == vertex ? *v : u;
}

const SiteTensor &TensorNetwork::vertex(int id) const {
    for (const auto &s : vertices)
        if (s.id == id) return s;
    throw Error(ErrorCode::invalid, "unknown vertex " + std::to_string(id));
}

const Edge &TensorNetwork::edge(int id) const {
    for (const auto &e : edges)
        if (e.id == id) return e;
    throw Error(ErrorCode::invalid, "unknown edge " + std::to_string(id));
}

bool TensorNetwork::has_vertex(int id) const {
    return std::any_of(vertices.begin(), vertices.end(), [&](const SiteTensor &s) { return s.id == id; });
}

bool TensorNetwork::has_edge(int id) const {
    return std::any_of(edges.begin(), edges.end(), [&](const Edge &e) { return e.id == id; });
}

std::vector<int> TensorNetwork::vertex_ids() const {
    std::vector<int> ids;
    ids.reserve(vertices.size());
    for (const auto &s : vertices) ids.push_back(s.id);
    std::sort(ids.begin(), ids.end());
    return ids;
}

std::vector<int> TensorNetwork::incident_edges(int vertex) const {
    std::vector<int> ids;
    for (const auto &e : edges)
        if (!e.external() && e.touches(vertex)) ids.push_back(e.id);
    std::sort(ids.begin(), ids.end());
    return ids;
}

bool ValidationReport::has(const std::string &kind) const {
    return std::any_of(violations.begin(), violations.end(), [&](const Violation &v) { return v.kind == kind; });
}

std::string ValidationReport::summary() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < violations.size(); ++i) {
        if (i) os << "; ";
        os << violations[i].kind << ": " << violations[i].message;
    }
    return os.str();
}

int next_power(int value, int d) {
    int p = 1;
    while (p < value) p *= d;
    return p;
}

bool is_power_of(int value, int d) { return value >= 1 && next_power(value, d) == value; }

// ---------------------------------------------------------------------------
// Validation

ValidationReport validate_network(const TensorNetwork &tn, const ValidateOptions &opts) {
    ValidationReport report;
    auto add = [&](std::string kind, std::string msg) {
        report.violations.push_back(Violation{std::move(kind), std::move(msg)});
    };

    if (tn.d < 2) add("dim mismatch", "physical dimension d must be >= 2");

    std::set<int> vertex_ids;
    for (const auto &s : tn.vertices)
        if (!vertex_ids.insert(s.id).second) add("duplicate id", "vertex " + std::to_string(s.id) + " appears twice");

    std::map<int, const Edge *> edges_by_id;
    for (const auto &e : tn.edges)
        if (!edges_by_id.emplace(e.id, &e).second) add("duplicate id", "edge " + std::to_string(e.id) + " appears twice");

    // Edge-level checks.
    std::map<std::pair<int, int>, std::vector<const Edge *>> pairs;
    for (const auto &e : tn.edges) {
        const std::string name = "edge " + std::to_string(e.id);
        if (e.dim < 1) add("dim mismatch", name + " has bond dimension < 1");
        if (!vertex_ids.count(e.u) || (e.v && !vertex_ids.count(*e.v))) {
            add("dangling edge", name + " references a missing vertex");
            continue;
        }
        if (e.external()) {
            if (e.cyclic) add("bad edge", name + " is external and cannot be cyclic");
            continue;
        }
        if (e.u == *e.v && !e.cyclic) add("self-loop", name + " is a self-loop but not marked cyclic");
        pairs[{std::min(e.u, *e.v), std::max(e.u, *e.v)}].push_back(&e);
        if (opts.require_power_bonds && !is_power_of(e.dim, tn.d))
            add("non-power bond", name + " has dimension " + std::to_string(e.dim) + ", not a power of d");
    }
    for (const auto &[pair, list] : pairs) {
        const auto plain = std::count_if(list.begin(), list.end(), [](const Edge *e) { return !e->cyclic; });
        if (plain > 1)
            add("multi-edge", "vertices " + std::to_string(pair.first) + " and " + std::to_string(pair.second) +
                                  " share " + std::to_string(plain) + " edges");
    }
    for (const auto &e : tn.edges)
        if (e.external() && opts.require_power_bonds && !is_power_of(e.dim, tn.d))
            add("non-power bond", "edge " + std::to_string(e.id) + " has dimension " + std::to_string(e.dim) +
                                      ", not a power of d");

    // Site-level checks.
    for (const auto &s : tn.vertices) {
        const std::string name = "vertex " + std::to_string(s.id);
        int n_in = 0, n_out = 0;
        std::map<int, int> bond_count;
        for (const auto &leg : s.legs) {
            if (leg.dim < 1) add("dim mismatch", name + " has a leg of dimension < 1");
            switch (leg.kind) {
            case LegKind::phys_in:
                ++n_in;
                if (leg.dim != tn.d) add("dim mismatch", name + " phys_in has dim " + std::to_string(leg.dim));
                break;
            case LegKind::phys_out:
                ++n_out;
                if (leg.dim != tn.d) add("dim mismatch", name + " phys_out has dim " + std::to_string(leg.dim));
                break;
            case LegKind::bond: {
                ++bond_count[leg.edge];
                auto it = edges_by_id.find(leg.edge);
                if (it == edges_by_id.end()) {
                    add("dangling edge", name + " references missing edge " + std::to_string(leg.edge));
                } else {
                    if (!it->second->touches(s.id))
                        add("dangling edge", name + " holds edge " + std::to_string(leg.edge) + " that does not touch it");
                    if (it->second->dim != leg.dim)
                        add("dim mismatch", name + " leg on edge " + std::to_string(leg.edge) + " has dim " +
                                                std::to_string(leg.dim) + ", edge says " +
                                                std::to_string(it->second->dim));
                }
                break;
            }
            }
        }
        if (n_in != 1 || n_out != 1)
            add("bad legs", name + " needs exactly one phys_in and one phys_out leg");
        if (s.data.size() != s.expected_size())
            add("dim mismatch", name + " holds " + std::to_string(s.data.size()) + " elements, legs imply " +
                                    std::to_string(s.expected_size()));
        for (const auto &[edge, count] : bond_count) {
            auto it = edges_by_id.find(edge);
            if (it == edges_by_id.end()) continue;
            const int expected = (it->second->v && *it->second->v == it->second->u) ? 2 : 1;
            if (count != expected)
                add("bad legs", name + " has " + std::to_string(count) + " legs on edge " + std::to_string(edge));
        }
    }

    // Every edge end must be held by its vertex.
    for (const auto &e : tn.edges) {
        if (!vertex_ids.count(e.u) || (e.v && !vertex_ids.count(*e.v))) continue;
        auto holds = [&](int vid) {
            for (const auto &s : tn.vertices)
                if (s.id == vid) return !s.axes_of_edge(e.id).empty();
            return false;
        };
        if (!holds(e.u) || (e.v && !holds(*e.v)))
            add("dangling edge", "edge " + std::to_string(e.id) + " is not held by both endpoints");
    }

    for (const auto &[eid, vec] : tn.boundary) {
        auto it = edges_by_id.find(eid);
        if (it == edges_by_id.end() || !it->second->external()) {
            add("bad boundary", "boundary given for edge " + std::to_string(eid) + " which is not external");
            continue;
        }
        if (static_cast<int>(vec.size()) != it->second->dim) {
            add("bad boundary", "boundary for edge " + std::to_string(eid) + " has length " +
                                    std::to_string(vec.size()));
            continue;
        }
        double norm2 = 0.0;
        for (const auto &c : vec) norm2 += std::norm(c);
        if (std::abs(std::sqrt(norm2) - 1.0) > 1e-10)
            add("bad boundary", "boundary for edge " + std::to_string(eid) + " is not unit norm");
    }
    return report;
}

// ---------------------------------------------------------------------------
// Unfolding

Unfolding make_unfolding(const SiteTensor &site, const std::vector<int> &input_edges) {
    std::vector<std::pair<int, int>> in_bonds, out_bonds; // (edge, axis)
    for (std::size_t i = 0; i < site.legs.size(); ++i) {
        const auto &leg = site.legs[i];
        if (leg.kind != LegKind::bond) continue;
        const bool is_in = std::find(input_edges.begin(), input_edges.end(), leg.edge) != input_edges.end();
        (is_in ? in_bonds : out_bonds).emplace_back(leg.edge, static_cast<int>(i));
    }
    std::sort(in_bonds.begin(), in_bonds.end());
    std::sort(out_bonds.begin(), out_bonds.end());

    Unfolding u;
    for (const auto &b : out_bonds) u.out_axes.push_back(b.second);
    u.out_axes.push_back(site.axis_of(LegKind::phys_out));
    for (const auto &b : in_bonds) u.in_axes.push_back(b.second);
    u.in_axes.push_back(site.axis_of(LegKind::phys_in));
    return u;
}

namespace {

void check_partition(const SiteTensor &site, const Unfolding &unfolding) {
    std::vector<int> all = unfolding.out_axes;
    all.insert(all.end(), unfolding.in_axes.begin(), unfolding.in_axes.end());
    std::sort(all.begin(), all.end());
    std::vector<int> expected(site.legs.size());
    std::iota(expected.begin(), expected.end(), 0);
    if (all != expected) throw Error(ErrorCode::invalid, "bad unfolding");
    if (site.data.size() != site.expected_size())
        throw Error(ErrorCode::invalid, "bad unfolding: tensor size does not match legs");
}

} // namespace

DenseOperator unfold_site(const SiteTensor &site, const Unfolding &unfolding) {
    check_partition(site, unfolding);
    std::vector<int> perm = unfolding.out_axes;
    perm.insert(perm.end(), unfolding.in_axes.begin(), unfolding.in_axes.end());
    const DenseTensor permuted = detail::permute(DenseTensor{site.shape(), site.data}, perm);

    DenseOperator op;
    std::size_t m = 1, n = 1;
    for (int a : unfolding.out_axes) {
        op.rows.push_back(RegisterDim{a, site.legs[a].dim});
        m *= site.legs[a].dim;
    }
    for (int a : unfolding.in_axes) {
        op.cols.push_back(RegisterDim{a, site.legs[a].dim});
        n *= site.legs[a].dim;
    }
    op.matrix = Eigen::Map<const Matrix>(permuted.data.data(), static_cast<Eigen::Index>(m),
                                         static_cast<Eigen::Index>(n));
    return op;
}

std::vector<cplx> fold_site(const Matrix &matrix, const SiteTensor &site, const Unfolding &unfolding) {
    check_partition(site, unfolding);
    std::vector<int> perm = unfolding.out_axes;
    perm.insert(perm.end(), unfolding.in_axes.begin(), unfolding.in_axes.end());
    std::vector<int> dims;
    for (int a : perm) dims.push_back(site.legs[a].dim);
    if (static_cast<std::size_t>(matrix.size()) != detail::element_count(dims))
        throw Error(ErrorCode::invalid, "bad unfolding: matrix size does not match legs");

    DenseTensor t{dims, std::vector<cplx>(matrix.data(), matrix.data() + matrix.size())};
    std::vector<int> inverse(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) inverse[perm[i]] = static_cast<int>(i);
    return detail::permute(t, inverse).data;
}

// ---------------------------------------------------------------------------
// Padding and boundary absorption

TensorNetwork pad_bonds_to_power(const TensorNetwork &tn, int d) {
    TensorNetwork out = tn;
    for (auto &e : out.edges) {
        const int target = next_power(e.dim, d);
        if (target == e.dim) continue;
        for (auto &s : out.vertices) {
            for (int axis : s.axes_of_edge(e.id)) {
                DenseTensor t = detail::pad_axis(DenseTensor{s.shape(), s.data}, axis, target);
                s.data = std::move(t.data);
                s.legs[axis].dim = target;
            }
        }
        if (auto it = out.boundary.find(e.id); it != out.boundary.end()) it->second.resize(target, cplx{0.0, 0.0});
        e.dim = target;
    }
    return out;
}

TensorNetwork absorb_boundaries(const TensorNetwork &tn) {
    TensorNetwork out = tn;
    std::vector<Edge> kept;
    for (const auto &e : tn.edges) {
        if (!e.external()) {
            kept.push_back(e);
            continue;
        }
        std::vector<cplx> vec(e.dim, cplx{0.0, 0.0});
        if (auto it = tn.boundary.find(e.id); it != tn.boundary.end())
            vec = it->second;
        else
            vec[0] = 1.0;
        for (auto &s : out.vertices) {
            const auto axes = s.axes_of_edge(e.id);
            if (axes.empty()) continue;
            DenseTensor t = detail::contract_axis(DenseTensor{s.shape(), s.data}, axes.front(), vec);
            s.data = std::move(t.data);
            s.legs.erase(s.legs.begin() + axes.front());
        }
    }
    out.edges = std::move(kept);
    out.boundary.clear();
    return out;
}

// ---------------------------------------------------------------------------
// Dense contraction

DenseOperator contract_dense(const TensorNetwork &input, const DenseLimit &limit) {
    const auto ids = input.vertex_ids();
    std::size_t phys = 1;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        phys *= static_cast<std::size_t>(input.d);
        if (phys > limit.max_dim)
            throw Error(ErrorCode::too_large, "oracle too large: d^|V| exceeds the dense limit of " +
                                                  std::to_string(limit.max_dim));
    }
    const TensorNetwork tn = absorb_boundaries(input);
    const std::size_t cap = std::max<std::size_t>(limit.max_dim * limit.max_dim, std::size_t{1} << 24);

    // Leg labels: phys_out of the i-th vertex -> 2i, phys_in -> 2i+1, bond e -> -(e+1).
    auto bond_label = [](int e) { return -(e + 1); };

    DenseTensor acc{{}, {cplx{1.0, 0.0}}};
    std::vector<int> acc_labels;

    for (std::size_t vi = 0; vi < ids.size(); ++vi) {
        const SiteTensor &site = tn.vertex(ids[vi]);
        DenseTensor t{site.shape(), site.data};
        std::vector<int> labels;
        for (const auto &leg : site.legs) {
            if (leg.kind == LegKind::phys_out) labels.push_back(static_cast<int>(2 * vi));
            else if (leg.kind == LegKind::phys_in) labels.push_back(static_cast<int>(2 * vi + 1));
            else labels.push_back(bond_label(leg.edge));
        }
        // Self-loops close on the site itself.
        for (bool traced = true; traced;) {
            traced = false;
            for (std::size_t a = 0; a < labels.size() && !traced; ++a)
                for (std::size_t b = a + 1; b < labels.size() && !traced; ++b)
                    if (labels[a] < 0 && labels[a] == labels[b]) {
                        t = detail::trace_axes(t, static_cast<int>(a), static_cast<int>(b));
                        labels.erase(labels.begin() + b);
                        labels.erase(labels.begin() + a);
                        traced = true;
                    }
        }

        std::vector<int> a_axes, b_axes;
        for (std::size_t b = 0; b < labels.size(); ++b) {
            if (labels[b] >= 0) continue;
            auto it = std::find(acc_labels.begin(), acc_labels.end(), labels[b]);
            if (it != acc_labels.end()) {
                a_axes.push_back(static_cast<int>(it - acc_labels.begin()));
                b_axes.push_back(static_cast<int>(b));
            }
        }
        std::vector<int> new_labels;
        for (std::size_t a = 0; a < acc_labels.size(); ++a)
            if (std::find(a_axes.begin(), a_axes.end(), static_cast<int>(a)) == a_axes.end())
                new_labels.push_back(acc_labels[a]);
        for (std::size_t b = 0; b < labels.size(); ++b)
            if (std::find(b_axes.begin(), b_axes.end(), static_cast<int>(b)) == b_axes.end())
                new_labels.push_back(labels[b]);

        std::size_t result_size = 1;
        for (std::size_t a = 0; a < acc.dims.size(); ++a)
            if (std::find(a_axes.begin(), a_axes.end(), static_cast<int>(a)) == a_axes.end()) result_size *= acc.dims[a];
        for (std::size_t b = 0; b < t.dims.size(); ++b)
            if (std::find(b_axes.begin(), b_axes.end(), static_cast<int>(b)) == b_axes.end()) result_size *= t.dims[b];
        if (result_size > cap) throw Error(ErrorCode::too_large, "oracle too large: intermediate tensor");

        acc = detail::tensordot(acc, a_axes, t, b_axes);
        acc_labels = std::move(new_labels);
    }

    // Remaining labels must all be physical; order outputs then inputs.
    std::vector<int> perm;
    for (std::size_t vi = 0; vi < ids.size(); ++vi)
        perm.push_back(static_cast<int>(std::find(acc_labels.begin(), acc_labels.end(), static_cast<int>(2 * vi)) -
                                        acc_labels.begin()));
    for (std::size_t vi = 0; vi < ids.size(); ++vi)
        perm.push_back(static_cast<int>(
            std::find(acc_labels.begin(), acc_labels.end(), static_cast<int>(2 * vi + 1)) - acc_labels.begin()));
    if (perm.size() != acc_labels.size())
        throw Error(ErrorCode::invalid, "contraction left open bonds; is the network valid?");
    acc = detail::permute(acc, perm);

    DenseOperator h;
    for (int id : ids) h.rows.push_back(RegisterDim{id, tn.d});
    for (int id : ids) h.cols.push_back(RegisterDim{id, tn.d});
    h.matrix = Eigen::Map<const Matrix>(acc.data.data(), static_cast<Eigen::Index>(phys),
                                        static_cast<Eigen::Index>(phys));
    return h;
}

} // namespace tnbe
