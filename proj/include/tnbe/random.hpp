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

// Seeded random networks for experiments and tests.

#ifndef TNBE_RANDOM_HPP
#define TNBE_RANDOM_HPP

#include <random>
#include <utility>
#include <vector>

#include "tnbe/network.hpp"

namespace tnbe {

using Rng = std::mt19937_64;

/// Vertices 0..n-1, one internal edge per pair (ids in list order), every
/// site a complex Gaussian tensor scaled to unit Frobenius norm.
TensorNetwork random_network(int n, const std::vector<std::pair<int, int>> &pairs, const std::vector<int> &dims,
                             int d, Rng &rng);

/// Path 0-1-...-(n-1) with dims[i] on edge (i, i+1).
TensorNetwork random_chain(const std::vector<int> &dims, int d, Rng &rng);

/// Random labelled tree on n vertices with bond dims drawn from [1, max_dim].
TensorNetwork random_tree(int n, int max_dim, int d, Rng &rng);

/// Random connected or disconnected simple graph: each pair is an edge with
/// probability `density`.
TensorNetwork random_graph(int n, double density, int max_dim, int d, Rng &rng);

Matrix random_matrix(int rows, int cols, Rng &rng);

} // namespace tnbe

#endif // TNBE_RANDOM_HPP
