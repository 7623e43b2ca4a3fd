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

#ifndef TNBE_NETWORK_HPP
#define TNBE_NETWORK_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tnbe/types.hpp"

namespace tnbe {

enum class LegKind { phys_in, phys_out, bond };

struct Leg {
    LegKind kind = LegKind::bond;
    int dim = 1;
    int edge = -1; ///< only meaningful for bond legs

    static Leg phys_in(int d) { return Leg{LegKind::phys_in, d, -1}; }
    static Leg phys_out(int d) { return Leg{LegKind::phys_out, d, -1}; }
    static Leg bond(int edge, int dim) { return Leg{LegKind::bond, dim, edge}; }

    friend bool operator==(const Leg &, const Leg &) = default;
};

/// One vertex of the network. `data` is row-major with one axis per leg, in
/// leg order.
struct SiteTensor {
    int id = 0;
    std::vector<Leg> legs;
    std::vector<cplx> data;

    std::vector<int> shape() const;
    std::size_t expected_size() const;
    int axis_of(LegKind kind) const;
    /// Axes of the bond legs on `edge` (two for a self-loop).
    std::vector<int> axes_of_edge(int edge) const;
};

/// An undirected bond. An edge without `v` is external: one end sits on `u`,
/// the other is closed by a boundary vector.
struct Edge {
    int id = 0;
    int u = 0;
    std::optional<int> v;
    int dim = 1;
    bool cyclic = false; ///< closes a trace; contracted by the oracle only

    bool external() const { return !v.has_value(); }
    bool touches(int vertex) const { return u == vertex || (v && *v == vertex); }
    /// The endpoint opposite `vertex`, or nullopt for an external edge.
    std::optional<int> other(int vertex) const;
};

/// Graph of site tensors. Treated as an immutable value once built.
struct TensorNetwork {
    int d = 2;
    std::vector<SiteTensor> vertices;
    std::vector<Edge> edges;
    /// Boundary vector per external edge id. Missing entries mean |0>.
    std::map<int, std::vector<cplx>> boundary;

    const SiteTensor &vertex(int id) const;
    const Edge &edge(int id) const;
    bool has_vertex(int id) const;
    bool has_edge(int id) const;
    /// Vertex ids in ascending order; this is the physical register order.
    std::vector<int> vertex_ids() const;
    /// Internal (two-ended) edges incident to `vertex`, ascending by id.
    std::vector<int> incident_edges(int vertex) const;
};

struct Violation {
    std::string kind; ///< "multi-edge", "dangling edge", "dim mismatch", ...
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    bool has(const std::string &kind) const;
    std::string summary() const;
};

struct ValidateOptions {
    /// Also flag bond dimensions that are not a power of d.
    bool require_power_bonds = false;
};

ValidationReport validate_network(const TensorNetwork &tn, const ValidateOptions &opts = {});

/// Partition of a site's axes into the row bundle and the column bundle.
/// Within each bundle the first axis is the most significant.
struct Unfolding {
    std::vector<int> out_axes;
    std::vector<int> in_axes;
};

/// Row bundle: bonds not in `input_edges` ascending by edge id, then phys_out.
/// Column bundle: bonds in `input_edges` ascending by edge id, then phys_in.
Unfolding make_unfolding(const SiteTensor &site, const std::vector<int> &input_edges);

/// The m x n matrix obtained by permuting axes to (out_axes, in_axes).
/// Row/column descriptors carry (axis, dim). Throws Error("bad unfolding").
DenseOperator unfold_site(const SiteTensor &site, const Unfolding &unfolding);

/// Inverse of unfold_site: rebuilds tensor data in leg order.
std::vector<cplx> fold_site(const Matrix &matrix, const SiteTensor &site, const Unfolding &unfolding);

/// Dense contraction H = <boundary| (x)_v A^(v) over all internal bonds.
/// Rows are the phys_out indices, columns the phys_in indices, both in
/// ascending vertex id order. Cyclic edges are summed like any other bond.
DenseOperator contract_dense(const TensorNetwork &tn, const DenseLimit &limit = {});

/// Raises every bond to the next power of d by zero padding.
TensorNetwork pad_bonds_to_power(const TensorNetwork &tn, int d);

/// Contracts every external edge with its boundary vector and removes it.
TensorNetwork absorb_boundaries(const TensorNetwork &tn);

/// Smallest power of d that is >= value.
int next_power(int value, int d);
bool is_power_of(int value, int d);

} // namespace tnbe

#endif // TNBE_NETWORK_HPP
