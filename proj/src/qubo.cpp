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

#include "tnbe/qubo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <tuple>

namespace tnbe {

namespace {

double spin(int bit) { return bit ? -1.0 : 1.0; }

double alpha_of(const Qubo &q, int i, int j) {
    auto it = q.quadratic.find({std::min(i, j), std::max(i, j)});
    return it == q.quadratic.end() ? 0.0 : it->second;
}

void check_order(const Qubo &q, const std::vector<int> &order) {
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> expected(q.n);
    std::iota(expected.begin(), expected.end(), 0);
    if (sorted != expected) throw Error(ErrorCode::invalid, "order must be a permutation of the QUBO sites");
}

} // namespace

void Qubo::add_coupling(int i, int j, double alpha) {
    if (i == j) throw Error(ErrorCode::invalid, "self-coupling on site " + std::to_string(i));
    if (i < 0 || j < 0 || i >= n || j >= n) throw Error(ErrorCode::invalid, "coupling index out of range");
    quadratic[{std::min(i, j), std::max(i, j)}] += alpha;
}

std::vector<std::pair<int, int>> Qubo::couplings() const {
    std::vector<std::pair<int, int>> out;
    for (const auto &[key, a] : quadratic)
        if (a != 0.0) out.push_back(key);
    return out;
}

std::vector<int> Qubo::neighbours(int site) const {
    std::vector<int> out;
    for (const auto &[i, j] : couplings()) {
        if (i == site) out.push_back(j);
        if (j == site) out.push_back(i);
    }
    std::sort(out.begin(), out.end());
    return out;
}

void Qubo::check() const {
    if (n < 1) throw Error(ErrorCode::invalid, "QUBO needs at least one site");
    if (static_cast<int>(linear.size()) != n) throw Error(ErrorCode::invalid, "linear terms must have length n");
    for (const auto &[key, a] : quadratic) {
        const auto [i, j] = key;
        if (!(0 <= i && i < j && j < n)) throw Error(ErrorCode::invalid, "couplings must satisfy 0 <= i < j < n");
    }
}

Qubo qubo_from_binary(const std::vector<std::vector<double>> &mat, double offset) {
    const int n = static_cast<int>(mat.size());
    Qubo q(n);
    q.c_const = offset;
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(mat[i].size()) != n) throw Error(ErrorCode::invalid, "QUBO matrix must be square");
        for (int j = 0; j < n; ++j) {
            const double v = mat[i][j];
            if (v == 0.0) continue;
            if (i == j) {
                // x = (1 - Z) / 2
                q.c_const += v / 2;
                q.linear[i] -= v / 2;
            } else {
                // x_i x_j = (1 - Z_i - Z_j + Z_i Z_j) / 4
                q.c_const += v / 4;
                q.linear[i] -= v / 4;
                q.linear[j] -= v / 4;
                q.add_coupling(i, j, v / 4);
            }
        }
    }
    return q;
}

DenseOperator qubo_dense(const Qubo &q, const DenseLimit &limit) {
    q.check();
    if (q.n >= 63 || (std::size_t{1} << q.n) > limit.max_dim)
        throw Error(ErrorCode::too_large, "QUBO of " + std::to_string(q.n) + " sites exceeds the dense limit");
    const std::size_t dim = std::size_t{1} << q.n;
    const auto pairs = q.couplings();
    DenseOperator out;
    out.matrix = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t x = 0; x < dim; ++x) {
        auto bit = [&](int site) { return static_cast<int>((x >> (q.n - 1 - site)) & 1U); };
        double value = q.c_const;
        for (int i = 0; i < q.n; ++i) value += q.linear[i] * spin(bit(i));
        for (const auto &[i, j] : pairs) value += q.quadratic.at({i, j}) * spin(bit(i)) * spin(bit(j));
        out.matrix(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(x)) = value;
    }
    for (int i = 0; i < q.n; ++i) out.rows.push_back(RegisterDim{i, 2});
    out.cols = out.rows;
    return out;
}

SlotPlan slot_requirement(const Qubo &q, const std::vector<int> &order) {
    check_order(q, order);
    std::vector<int> position(q.n);
    for (int t = 0; t < q.n; ++t) position[order[t]] = t;
    // Position of the last partner processed after each site, or -1.
    std::vector<int> last(q.n, -1);
    for (const auto &[i, j] : q.couplings()) {
        const int early = position[i] < position[j] ? i : j;
        const int late = early == i ? j : i;
        last[early] = std::max(last[early], position[late]);
    }

    SlotPlan plan;
    plan.order = order;
    plan.slot.assign(q.n, -1);
    std::vector<int> occupant; // slot -> site, -1 when free
    int used = 0;
    for (int t = 0; t < q.n; ++t) {
        for (auto &site : occupant)
            if (site >= 0 && last[site] == t) {
                site = -1;
                --used;
            }
        const int v = order[t];
        if (last[v] > t) {
            auto it = std::find(occupant.begin(), occupant.end(), -1);
            if (it == occupant.end()) it = occupant.insert(occupant.end(), -1);
            *it = v;
            plan.slot[v] = static_cast<int>(it - occupant.begin());
            ++used;
        }
        plan.width.push_back(used);
        plan.s = std::max(plan.s, used);
    }
    return plan;
}

TensorNetwork register_sweep_mpo(const Qubo &q, const std::vector<int> &order) {
    q.check();
    const SlotPlan plan = slot_requirement(q, order);
    const int n = q.n;
    const int dim = plan.s + 2;
    const int pending = dim - 1;

    std::vector<int> position(n);
    for (int t = 0; t < n; ++t) position[order[t]] = t;
    std::vector<int> last(n, -1);
    for (const auto &[i, j] : q.couplings()) {
        const int early = position[i] < position[j] ? i : j;
        const int late = early == i ? j : i;
        last[early] = std::max(last[early], position[late]);
    }

    TensorNetwork tn;
    tn.d = 2;
    const int left_edge = n - 1, right_edge = n;
    for (int t = 0; t + 1 < n; ++t) tn.edges.push_back(Edge{t, order[t], order[t + 1], dim, false});
    tn.edges.push_back(Edge{left_edge, order.front(), std::nullopt, dim, false});
    tn.edges.push_back(Edge{right_edge, order.back(), std::nullopt, dim, false});

    // Occupied slots when arriving at each position.
    std::vector<int> occupant(std::max(plan.s, 1), -1);
    for (int t = 0; t < n; ++t) {
        const int v = order[t];
        // w[l][r] as the diagonal (value at z=0, value at z=1).
        std::vector<std::vector<std::pair<double, double>>> w(dim, std::vector<std::pair<double, double>>(dim, {0.0, 0.0}));
        const std::pair<double, double> id{1.0, 1.0}, z{1.0, -1.0};
        auto scaled = [](std::pair<double, double> p, double a) { return std::make_pair(p.first * a, p.second * a); };

        if (t == 0) {
            w[0][0] = {q.c_const + q.linear[v], q.c_const - q.linear[v]};
            w[0][pending] = id;
            if (plan.slot[v] >= 0) w[0][1 + plan.slot[v]] = z;
        } else {
            w[0][0] = id;
            w[pending][pending] = id;
            w[pending][0] = scaled(z, q.linear[v]);
            for (int k = 0; k < static_cast<int>(occupant.size()); ++k) {
                const int i = occupant[k];
                if (i < 0) continue;
                w[1 + k][0] = scaled(z, alpha_of(q, i, v));
                if (last[i] != t) w[1 + k][1 + k] = id;
            }
            if (plan.slot[v] >= 0) w[pending][1 + plan.slot[v]] = z;
        }
        for (auto &site : occupant)
            if (site >= 0 && last[site] == t) site = -1;
        if (plan.slot[v] >= 0) occupant[plan.slot[v]] = v;

        SiteTensor s;
        s.id = v;
        const int l_edge = t == 0 ? left_edge : t - 1;
        const int r_edge = t == n - 1 ? right_edge : t;
        s.legs = {Leg::phys_out(2), Leg::phys_in(2), Leg::bond(l_edge, dim), Leg::bond(r_edge, dim)};
        s.data.assign(s.expected_size(), cplx{0.0, 0.0});
        for (int zb = 0; zb < 2; ++zb)
            for (int l = 0; l < dim; ++l)
                for (int r = 0; r < dim; ++r)
                    s.data[((zb * 2 + zb) * dim + l) * dim + r] = zb ? w[l][r].second : w[l][r].first;
        tn.vertices.push_back(std::move(s));
    }
    std::sort(tn.vertices.begin(), tn.vertices.end(), [](const SiteTensor &a, const SiteTensor &b) { return a.id < b.id; });
    return tn;
}

namespace {

struct Term {
    double coeff;
    std::vector<int> sites; ///< sites carrying Z
};

std::vector<Term> sum_terms(const Qubo &q) {
    std::vector<Term> terms;
    if (q.c_const != 0.0) terms.push_back(Term{q.c_const, {}});
    for (int i = 0; i < q.n; ++i)
        if (q.linear[i] != 0.0) terms.push_back(Term{q.linear[i], {i}});
    for (const auto &[i, j] : q.couplings()) terms.push_back(Term{q.quadratic.at({i, j}), {i, j}});
    return terms;
}

} // namespace

int tensor_sum_terms(const Qubo &q) { return static_cast<int>(sum_terms(q).size()); }

TensorNetwork tensor_sum_mpo(const Qubo &q) {
    q.check();
    const auto terms = sum_terms(q);
    const int l = static_cast<int>(terms.size());
    if (l == 0) throw Error(ErrorCode::empty_operator, "empty operator: the QUBO has no nonzero terms");
    const int n = q.n;

    TensorNetwork tn;
    tn.d = 2;
    for (int t = 0; t + 1 < n; ++t) tn.edges.push_back(Edge{t, t, t + 1, l, false});
    const int closing = n - 1;
    tn.edges.push_back(Edge{closing, n - 1, 0, l, true});

    for (int t = 0; t < n; ++t) {
        SiteTensor s;
        s.id = t;
        const int l_edge = t == 0 ? closing : t - 1;
        const int r_edge = t == n - 1 ? closing : t;
        s.legs = {Leg::phys_out(2), Leg::phys_in(2), Leg::bond(l_edge, l), Leg::bond(r_edge, l)};
        s.data.assign(s.expected_size(), cplx{0.0, 0.0});
        for (int a = 0; a < l; ++a) {
            const bool has_z = std::find(terms[a].sites.begin(), terms[a].sites.end(), t) != terms[a].sites.end();
            const double scale = t == 0 ? terms[a].coeff : 1.0;
            for (int zb = 0; zb < 2; ++zb)
                s.data[((zb * 2 + zb) * l + a) * l + a] = scale * (has_z ? spin(zb) : 1.0);
        }
        tn.vertices.push_back(std::move(s));
    }
    return tn;
}

TensorNetwork tensor_graph(const Qubo &q, const std::optional<std::vector<double>> &split, int max_degree) {
    q.check();
    const int n = q.n;
    std::vector<double> constants(n, q.c_const / n);
    if (split) {
        if (static_cast<int>(split->size()) != n) throw Error(ErrorCode::invalid, "constant split must have length n");
        const double total = std::accumulate(split->begin(), split->end(), 0.0);
        if (std::abs(total - q.c_const) > 1e-12 * std::max(1.0, std::abs(q.c_const)))
            throw Error(ErrorCode::invalid, "constant split must sum to c_const");
        constants = *split;
    }
    for (int t = 0; t < n; ++t)
        if (static_cast<int>(q.neighbours(t).size()) > max_degree)
            throw Error(ErrorCode::too_large, "graph degree too large: site " + std::to_string(t) + " has " +
                                                  std::to_string(q.neighbours(t).size()) + " couplings");

    // Edge kinds per site pair, in lexicographic pair order.
    std::set<std::pair<int, int>> coupled;
    for (const auto &c : q.couplings()) coupled.insert(c);
    std::set<std::pair<int, int>> pairs = coupled;
    for (int t = 0; t + 1 < n; ++t) pairs.insert({t, t + 1});

    struct EdgeInfo {
        int id, i, j;
        bool selector, coupling;
        int dim() const { return (selector ? 2 : 1) * (coupling ? 2 : 1); }
    };
    std::vector<EdgeInfo> infos;
    TensorNetwork tn;
    tn.d = 2;
    for (const auto &[i, j] : pairs) {
        EdgeInfo e{static_cast<int>(infos.size()), i, j, j == i + 1, coupled.count({i, j}) > 0};
        infos.push_back(e);
        tn.edges.push_back(Edge{e.id, i, j, e.dim(), false});
    }

    for (int t = 0; t < n; ++t) {
        std::vector<const EdgeInfo *> inc;
        for (const auto &e : infos)
            if (e.i == t || e.j == t) inc.push_back(&e);

        SiteTensor s;
        s.id = t;
        s.legs = {Leg::phys_out(2), Leg::phys_in(2)};
        std::vector<int> dims;
        for (const auto *e : inc) {
            s.legs.push_back(Leg::bond(e->id, e->dim()));
            dims.push_back(e->dim());
        }
        s.data.assign(s.expected_size(), cplx{0.0, 0.0});
        const std::size_t bond_space = s.expected_size() / 4;

        std::vector<int> idx(inc.size(), 0);
        for (std::size_t flat = 0; flat < bond_space; ++flat) {
            std::size_t rest = flat;
            for (int a = static_cast<int>(inc.size()) - 1; a >= 0; --a) {
                idx[a] = static_cast<int>(rest % dims[a]);
                rest /= dims[a];
            }
            for (int zb = 0; zb < 2; ++zb) {
                bool allowed = true;
                double h = constants[t] + q.linear[t] * spin(zb);
                int sel_in = -1, sel_out = -1;
                for (std::size_t a = 0; a < inc.size(); ++a) {
                    const EdgeInfo &e = *inc[a];
                    const int sel = e.coupling ? idx[a] / 2 : idx[a];
                    const int bit = e.selector ? idx[a] % 2 : idx[a];
                    if (e.selector) (e.i == t ? sel_out : sel_in) = sel;
                    if (!e.coupling) continue;
                    if (e.i == t) allowed = allowed && bit == zb;
                    else h += q.quadratic.at({e.i, e.j}) * spin(zb) * spin(bit);
                }
                if (!allowed) continue;
                double value;
                if (n == 1) value = h;
                else if (t == 0) value = sel_out == 0 ? 1.0 : h;
                else if (t == n - 1) value = sel_in == 0 ? h : 1.0;
                else if (sel_in == 0) value = sel_out == 0 ? 1.0 : h;
                else value = sel_out == 1 ? 1.0 : 0.0;
                s.data[(zb * 2 + zb) * bond_space + flat] = value;
            }
        }
        tn.vertices.push_back(std::move(s));
    }
    return tn;
}

OrderHeuristic parse_order_heuristic(const std::string &name) {
    if (name == "natural") return OrderHeuristic::natural;
    if (name == "min_degree") return OrderHeuristic::min_degree;
    if (name == "min_fill") return OrderHeuristic::min_fill;
    throw Error(ErrorCode::invalid, "unknown order heuristic '" + name + "' (expected natural|min_degree|min_fill)");
}

std::string to_string(OrderHeuristic h) {
    switch (h) {
    case OrderHeuristic::natural: return "natural";
    case OrderHeuristic::min_degree: return "min_degree";
    case OrderHeuristic::min_fill: return "min_fill";
    }
    return "natural";
}

std::vector<int> suggest_order(const Qubo &q, OrderHeuristic heuristic) {
    q.check();
    std::vector<int> order;
    if (heuristic == OrderHeuristic::natural) {
        order.resize(q.n);
        std::iota(order.begin(), order.end(), 0);
        return order;
    }
    std::vector<std::set<int>> adj(q.n);
    for (const auto &[i, j] : q.couplings()) {
        adj[i].insert(j);
        adj[j].insert(i);
    }
    std::vector<std::size_t> original(q.n);
    for (int v = 0; v < q.n; ++v) original[v] = adj[v].size();

    auto fill_in = [&](int v) {
        std::size_t missing = 0;
        for (auto a = adj[v].begin(); a != adj[v].end(); ++a)
            for (auto b = std::next(a); b != adj[v].end(); ++b)
                if (!adj[*a].count(*b)) ++missing;
        return missing;
    };

    std::set<int> remaining;
    for (int v = 0; v < q.n; ++v) remaining.insert(v);
    while (!remaining.empty()) {
        int best = -1;
        std::tuple<std::size_t, std::size_t, int> best_key{};
        for (int v : remaining) {
            const auto key = heuristic == OrderHeuristic::min_degree
                                 ? std::make_tuple(adj[v].size(), original[v], v)
                                 : std::make_tuple(fill_in(v), adj[v].size(), v);
            if (best < 0 || key < best_key) {
                best = v;
                best_key = key;
            }
        }
        for (int a : adj[best])
            for (int b : adj[best])
                if (a != b) adj[a].insert(b);
        for (int a : adj[best]) adj[a].erase(best);
        adj[best].clear();
        remaining.erase(best);
        order.push_back(best);
    }
    return order;
}

} // namespace tnbe
