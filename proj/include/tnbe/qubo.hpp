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

// Ising operators c I + sum l_i Z_i + sum alpha_ij Z_i Z_j and the three
// network constructions for them.

#ifndef TNBE_QUBO_HPP
#define TNBE_QUBO_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tnbe/network.hpp"
#include "tnbe/types.hpp"

namespace tnbe {

struct Qubo {
    int n = 0;
    double c_const = 0.0;
    std::vector<double> linear;                      ///< length n
    std::map<std::pair<int, int>, double> quadratic; ///< keys i < j

    explicit Qubo(int sites = 0) : n(sites), linear(sites, 0.0) {}

    /// Adds alpha to the (i, j) coupling; the pair is stored as (min, max).
    void add_coupling(int i, int j, double alpha);
    /// Nonzero couplings only.
    std::vector<std::pair<int, int>> couplings() const;
    /// Neighbours of `site` through nonzero couplings, ascending.
    std::vector<int> neighbours(int site) const;
    void check() const;
};

/// Binary form x^T Q x + offset with x = (1 - Z) / 2. Both triangles of Q
/// are read; the diagonal is the linear binary part.
Qubo qubo_from_binary(const std::vector<std::vector<double>> &q, double offset = 0.0);

/// Diagonal 2^n x 2^n matrix; site 0 is the most significant bit.
DenseOperator qubo_dense(const Qubo &q, const DenseLimit &limit = {});

struct SlotPlan {
    std::vector<int> order;
    int s = 0;
    std::vector<int> slot;  ///< per site; -1 when never stored
    std::vector<int> width; ///< occupied slots after each step of the order
};

/// Sites are stored in a slot while a later partner (in `order`) is pending.
/// A slot is freed at the site of the last partner, before that site is
/// stored; free slots are reused lowest index first.
SlotPlan slot_requirement(const Qubo &q, const std::vector<int> &order);

/// Chain MPO along `order` with bond dimension s + 2. Bond index 0 is the
/// finished sum, 1..s the slots and s + 1 the pending identity. Both
/// boundaries are external edges left at |0>. Vertex ids are site indices.
TensorNetwork register_sweep_mpo(const Qubo &q, const std::vector<int> &order);

/// One block-diagonal site per qubit over the L nonzero Pauli strings
/// (constant, then linear by site, then couplings in lexicographic order),
/// closed by a cyclic edge from site n-1 back to site 0.
TensorNetwork tensor_sum_mpo(const Qubo &q);

/// Number of nonzero strings used by tensor_sum_mpo.
int tensor_sum_terms(const Qubo &q);

/// One vertex per site and one dim-2 bond per coupling carrying the earlier
/// site's Z value; alpha Z Z is absorbed at the later site. A dim-2 selector
/// chain along the site order picks the one site whose local sum enters each
/// product term; where it meets a coupling bond the two share one dim-4 edge
/// (index selector * 2 + bit). `split` defaults to c / n per site.
TensorNetwork tensor_graph(const Qubo &q, const std::optional<std::vector<double>> &split = std::nullopt,
                           int max_degree = 12);

enum class OrderHeuristic { natural, min_degree, min_fill };

OrderHeuristic parse_order_heuristic(const std::string &name);
std::string to_string(OrderHeuristic h);

std::vector<int> suggest_order(const Qubo &q, OrderHeuristic heuristic);

} // namespace tnbe

#endif // TNBE_QUBO_HPP
