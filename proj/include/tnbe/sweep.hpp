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

#ifndef TNBE_SWEEP_HPP
#define TNBE_SWEEP_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tnbe/network.hpp"
#include "tnbe/types.hpp"
#include "tnbe/unitary_svd.hpp"

namespace tnbe {

enum class RegisterKind { physical, bond, flag, pad, boundary };

std::string to_string(RegisterKind kind);
RegisterKind parse_register_kind(const std::string &name);

struct Register {
    int id = 0; ///< position in the layout
    std::string name;
    RegisterKind kind = RegisterKind::physical;
    int dim = 1;
    bool postselect = false; ///< projected onto |0> at the end
    int vertex = -1;         ///< owning vertex (physical, flag)
    int edge = -1;           ///< bond registers only
};

/// Global register order; the first register is the most significant.
struct RegisterLayout {
    std::vector<Register> registers;

    std::size_t total_dim() const;
    std::size_t physical_dim() const;
    int physical_of(int vertex) const;
    int bond_of(int edge) const;
    int flag_of(int vertex) const; ///< -1 when the site has no flag
};

enum class OpRole { vh, core, u, merged };

std::string to_string(OpRole role);
OpRole parse_op_role(const std::string &name);

/// A unitary on the listed registers (first listed is most significant).
struct Op {
    OpRole role = OpRole::merged;
    int vertex = 0;
    std::vector<int> registers;
    Matrix matrix;
};

struct SiteRecord {
    int vertex = 0;
    std::vector<int> in_edges;  ///< bonds to already processed neighbours
    std::vector<int> out_edges; ///< bonds to later neighbours
    int m = 0, n = 0, k = 0, p = 1, q = 1;
    bool drop = false;
    bool trivial = false;
    double beta = 0.0;
    double condition = 0.0;
    std::vector<double> singular_values;
    std::vector<double> s_k;
    std::vector<AngleCount> angles;
};

enum class CompileStatus { ok, zero_operator };

struct CompilationResult {
    CompileStatus status = CompileStatus::ok;
    int d = 2;
    PadPolicy policy = PadPolicy::identity;
    double gamma = 1.0;
    std::optional<int> zero_vertex; ///< first site found with beta = 0
    std::vector<int> order;
    RegisterLayout layout;
    std::vector<Op> ops; ///< execution order
    std::vector<SiteRecord> sites; ///< processing order

    std::vector<double> betas() const;
    const SiteRecord &site(int vertex) const;
};

struct SweepOptions {
    PadPolicy policy = PadPolicy::identity;
    /// Processing order; the greedy oracle is used when absent.
    std::optional<std::vector<int>> order;
};

/// Greedy choice: smallest net change in active bond size, then smallest
/// degree, then lowest id. Only internal edges contribute.
int next_vertex(const std::set<int> &processed, const std::set<int> &remaining, const TensorNetwork &tn);

/// The full greedy order from an empty processed set.
std::vector<int> greedy_order(const TensorNetwork &tn);

/// Validates, rejects cyclic edges, absorbs boundary vectors and pads bonds
/// to powers of d. This is the network the compiler actually encodes.
TensorNetwork prepare_network(const TensorNetwork &tn);

/// physical by vertex id, bonds by edge id, then one flag per site that
/// needs one, in processing order. `needs_flag` defaults to every site.
RegisterLayout layout_registers(const TensorNetwork &tn, const std::vector<int> &order,
                                const std::vector<bool> &needs_flag = {});

CompilationResult graph_sweep(const TensorNetwork &tn, const SweepOptions &opts = {});

/// Max over sweep steps of the summed log_d of active bond dims, rounded up.
int peak_coupling(const CompilationResult &result);

} // namespace tnbe

#endif // TNBE_SWEEP_HPP
