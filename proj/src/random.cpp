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

#include "tnbe/random.hpp"

#include <cmath>

namespace tnbe {

namespace {

cplx gaussian(Rng &rng) {
    std::normal_distribution<double> normal;
    const double re = normal(rng);
    const double im = normal(rng);
    return {re, im};
}

} // namespace

TensorNetwork random_network(int n, const std::vector<std::pair<int, int>> &pairs, const std::vector<int> &dims,
                             int d, Rng &rng) {
    if (pairs.size() != dims.size()) throw Error(ErrorCode::invalid, "random_network: one dim per edge");
    TensorNetwork tn;
    tn.d = d;
    for (int v = 0; v < n; ++v) {
        SiteTensor s;
        s.id = v;
        s.legs = {Leg::phys_out(d), Leg::phys_in(d)};
        tn.vertices.push_back(std::move(s));
    }
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto [u, v] = pairs[i];
        const int id = static_cast<int>(i);
        tn.edges.push_back(Edge{id, u, v, dims[i], false});
        tn.vertices[u].legs.push_back(Leg::bond(id, dims[i]));
        tn.vertices[v].legs.push_back(Leg::bond(id, dims[i]));
    }
    for (auto &s : tn.vertices) {
        s.data.resize(s.expected_size());
        double norm = 0.0;
        for (auto &x : s.data) {
            x = gaussian(rng);
            norm += std::norm(x);
        }
        // Unit Frobenius norm keeps gamma, and so the absolute error scale, near 1.
        for (auto &x : s.data) x /= std::sqrt(norm);
    }
    return tn;
}

TensorNetwork random_chain(const std::vector<int> &dims, int d, Rng &rng) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < static_cast<int>(dims.size()); ++i) pairs.emplace_back(i, i + 1);
    return random_network(static_cast<int>(dims.size()) + 1, pairs, dims, d, rng);
}

TensorNetwork random_tree(int n, int max_dim, int d, Rng &rng) {
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> dims;
    std::uniform_int_distribution<int> dim(1, max_dim);
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> parent(0, v - 1);
        pairs.emplace_back(parent(rng), v);
        dims.push_back(dim(rng));
    }
    return random_network(n, pairs, dims, d, rng);
}

TensorNetwork random_graph(int n, double density, int max_dim, int d, Rng &rng) {
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> dims;
    std::bernoulli_distribution keep(density);
    std::uniform_int_distribution<int> dim(1, max_dim);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (keep(rng)) {
                pairs.emplace_back(u, v);
                dims.push_back(dim(rng));
            }
    return random_network(n, pairs, dims, d, rng);
}

Matrix random_matrix(int rows, int cols, Rng &rng) {
    Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = gaussian(rng);
    return m;
}

} // namespace tnbe
