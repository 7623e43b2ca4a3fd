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

// Per-site factory: SVD, normalization, square padding / dimension dropping
// and the flag dilation of the singular core into an exact unitary.

#ifndef TNBE_UNITARY_SVD_HPP
#define TNBE_UNITARY_SVD_HPP

#include <string>
#include <vector>

#include "tnbe/network.hpp"
#include "tnbe/types.hpp"

namespace tnbe {

/// Full SVD A = U diag(s) Vh with s non-increasing. Phase convention: the
/// first nonzero component of every column of U (and of every column of V
/// outside the singular range) is real and nonnegative.
struct SvdFactors {
    Matrix u;           ///< m x m unitary
    std::vector<double> s; ///< min(m, n) values
    Matrix vh;          ///< n x n unitary (V^dagger)
    double beta = 0.0;  ///< spectral norm of A
};

SvdFactors svd_factors(const Matrix &a);

struct NormalizedCore {
    double beta = 0.0;
    std::vector<double> scaled; ///< s / beta, first entry exactly 1
    bool degenerate = false;    ///< beta == 0: the site is the zero operator
};

NormalizedCore normalize_core(const std::vector<double> &s);

enum class PadPolicy { identity, symmetry };

PadPolicy parse_pad_policy(const std::string &name);
std::string to_string(PadPolicy policy);

/// A rotation angle on the flag together with how many core levels use it.
struct AngleCount {
    double theta = 0.0;
    int count = 0;
};

/// The 2k x 2k flag dilation [[S_k, D_k], [D_k, -S_k]]; flag is the most
/// significant index. The core space is read as (q x m) on the output side
/// and (p x n) on the input side, pad factor most significant.
struct DilatedCore {
    Matrix c;
    int m = 0, n = 0, k = 0, p = 1, q = 1;
    std::vector<double> s_k;
    std::vector<AngleCount> angles; ///< distinct arccos(s_k), ascending
    bool drop = false;              ///< n > m: extra levels forced to zero
    bool trivial = false;           ///< every s_k is 1: C is the identity
};

/// Values within this distance of 1 count as exactly 1 for the fast path.
inline constexpr double kTrivialTolerance = 1e-12;

DilatedCore pad_and_form_core(const std::vector<double> &scaled, int m, int n, PadPolicy policy);

/// Register ids used by the standalone SiteFactors views.
namespace site_reg {
inline constexpr int flag = 0;
inline constexpr int core = 1;
inline constexpr int pad_in = 2;
inline constexpr int in = 3;
inline constexpr int pad_out = 4;
inline constexpr int out = 5;
} // namespace site_reg

struct SiteFactors {
    DenseOperator vh_op;   ///< I_p (x) V^dagger on (pad_in, in)
    DenseOperator core_op; ///< C on (flag, core)
    DenseOperator u_op;    ///< I_q (x) U on (pad_out, out)
    DilatedCore core;
    SvdFactors svd;
    double beta = 0.0;
    bool degenerate = false;
    double condition = 0.0; ///< s_max / s_min; +inf when rank deficient
};

/// Runs the whole per-site pipeline on an already unfolded matrix.
SiteFactors unitary_svd(const Matrix &a, PadPolicy policy = PadPolicy::identity);

/// Unfolds `site` first, then as above.
SiteFactors unitary_svd(const SiteTensor &site, const Unfolding &unfolding,
                        PadPolicy policy = PadPolicy::identity);

/// Q = (I (x) U) C (I (x) V^dagger) on (flag, core).
DenseOperator assemble_site_unitary(const SiteFactors &f);

/// The flag-|0> block of Q: its k x k top-left corner.
Matrix flag_block(const DenseOperator &q, int k);

/// Frobenius norm of W^dagger W - I (an upper bound on the spectral error).
double unitarity_error(const Matrix &w);

} // namespace tnbe

#endif // TNBE_UNITARY_SVD_HPP
