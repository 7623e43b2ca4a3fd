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

// Dense checks for compiled operator sequences.

#ifndef TNBE_VERIFY_HPP
#define TNBE_VERIFY_HPP

#include <vector>

#include "tnbe/network.hpp"
#include "tnbe/sweep.hpp"
#include "tnbe/types.hpp"

namespace tnbe {

/// Largest singular value. Dense SVD up to 512 on a side, power iteration above.
double spectral_norm(const Matrix &m);

/// Product of all ops (first op applied first) on the full layout space.
/// Register order follows the layout. Throws too_large past `limit`.
DenseOperator compose_global(const CompilationResult &result, const DenseLimit &limit = {});

/// (<0|_anc) U (|0>_anc) restricted to the physical registers.
DenseOperator project_encoded_block(const DenseOperator &u_global, const RegisterLayout &layout);

struct SimulationOptions {
    /// Project each ancilla onto |0> right after its last use instead of at
    /// the end. Both give the same block; the early form keeps states small.
    bool early_projection = true;
    DenseLimit limit = {};
};

/// The encoded block B computed by simulating the op sequence without ever
/// forming the global unitary.
DenseOperator encoded_block(const CompilationResult &result, const SimulationOptions &opts = {});

struct VerificationReport {
    double block_error = 0.0; ///< ||gamma B - H||_2
    std::vector<double> unitarity_errors;
    double gamma = 0.0;
    double tolerance = 1e-10;
    bool pass = false;
};

VerificationReport verify_block_encoding(const TensorNetwork &tn, const CompilationResult &result,
                                         double tol = 1e-10, const DenseLimit &limit = {});

struct SuccessProbability {
    double probability = 0.0; ///< ||B psi||^2
    double bound = 0.0;       ///< ||B||_2^2 = ||H||^2 / gamma^2
};

SuccessProbability success_probability(const Matrix &block, const Vector &psi);

/// ||P_0 W (psi (x) |0>)||^2 from a full state-vector run with every ancilla
/// projected only at the end.
double simulate_postselection(const CompilationResult &result, const Vector &psi, const DenseLimit &limit = {});

struct ErrorBound {
    double exact = 0.0;       ///< gamma (prod(1 + eps/beta) - 1)
    double first_order = 0.0; ///< gamma sum(eps/beta)
};

ErrorBound error_bound(const std::vector<double> &betas, const std::vector<double> &epsilons);

/// Flag-|0> block of one site's ops, as an m x n matrix over
/// (out bonds, P) x (in bonds, P). Equals A / beta for a correct compilation.
Matrix site_block(const CompilationResult &result, int vertex);

struct ChainingReport {
    double error = 0.0;
    bool pass = false;
};

/// Contracts the per-site blocks over the network and compares the result
/// with the globally projected block of the composed sequence.
ChainingReport verify_chaining(const TensorNetwork &tn, const CompilationResult &result, double tol = 1e-10,
                               const DenseLimit &limit = {});

} // namespace tnbe

#endif // TNBE_VERIFY_HPP
