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

#include "tnbe/unitary_svd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/SVD>

namespace tnbe {

namespace {

constexpr double kPhaseThreshold = 1e-12;

cplx unit_phase(cplx z) { return z / std::abs(z); }

/// I_count (x) block.
Matrix identity_kron(int count, const Matrix &block) {
    const Eigen::Index b = block.rows();
    Matrix out = Matrix::Zero(count * b, count * block.cols());
    for (int i = 0; i < count; ++i) out.block(i * b, i * block.cols(), b, block.cols()) = block;
    return out;
}

} // namespace

SvdFactors svd_factors(const Matrix &a) {
    const Eigen::MatrixXcd colmajor = a;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(colmajor, Eigen::ComputeFullU | Eigen::ComputeFullV);

    SvdFactors f;
    f.u = svd.matrixU();
    f.vh = svd.matrixV().adjoint();
    const auto &sv = svd.singularValues();
    f.s.assign(sv.data(), sv.data() + sv.size());
    const std::size_t r = f.s.size();

    for (Eigen::Index j = 0; j < f.u.cols(); ++j) {
        for (Eigen::Index i = 0; i < f.u.rows(); ++i) {
            if (std::abs(f.u(i, j)) <= kPhaseThreshold) continue;
            const cplx ph = unit_phase(f.u(i, j));
            f.u.col(j) *= std::conj(ph);
            if (static_cast<std::size_t>(j) < r) f.vh.row(j) *= ph;
            break;
        }
    }
    for (Eigen::Index j = static_cast<Eigen::Index>(r); j < f.vh.rows(); ++j) {
        for (Eigen::Index i = 0; i < f.vh.cols(); ++i) {
            if (std::abs(f.vh(j, i)) <= kPhaseThreshold) continue;
            f.vh.row(j) *= std::conj(unit_phase(f.vh(j, i)));
            break;
        }
    }
    f.beta = f.s.empty() ? 0.0 : f.s.front();
    return f;
}

NormalizedCore normalize_core(const std::vector<double> &s) {
    NormalizedCore out;
    if (s.empty()) throw Error(ErrorCode::invalid, "normalize_core: no singular values");
    out.beta = *std::max_element(s.begin(), s.end());
    if (!(out.beta > 0.0)) {
        out.beta = 0.0;
        out.degenerate = true;
        return out;
    }
    out.scaled.reserve(s.size());
    for (double v : s) out.scaled.push_back(v / out.beta);
    return out;
}

PadPolicy parse_pad_policy(const std::string &name) {
    if (name == "identity") return PadPolicy::identity;
    if (name == "symmetry") return PadPolicy::symmetry;
    throw Error(ErrorCode::invalid, "unknown pad policy '" + name + "' (expected identity|symmetry)");
}

std::string to_string(PadPolicy policy) { return policy == PadPolicy::identity ? "identity" : "symmetry"; }

DilatedCore pad_and_form_core(const std::vector<double> &scaled, int m, int n, PadPolicy policy) {
    if (m < 1 || n < 1) throw Error(ErrorCode::invalid, "pad_and_form_core: dimensions must be >= 1");
    const int r = std::min(m, n);
    if (static_cast<int>(scaled.size()) != r)
        throw Error(ErrorCode::invalid, "pad_and_form_core: expected min(m, n) singular values");
    for (double v : scaled)
        if (!(v >= 0.0 && v <= 1.0 + 1e-12)) throw Error(ErrorCode::invalid, "unnormalized core");

    DilatedCore core;
    core.m = m;
    core.n = n;
    core.k = std::lcm(m, n);
    core.p = core.k / n;
    core.q = core.k / m;
    core.drop = n > m;

    core.s_k.resize(core.k);
    for (int i = 0; i < core.k; ++i) {
        if (i < r) core.s_k[i] = std::min(scaled[i], 1.0);
        else if (core.drop) core.s_k[i] = 0.0;
        else if (policy == PadPolicy::identity) core.s_k[i] = 1.0;
        else core.s_k[i] = std::min(scaled[i % r], 1.0);
    }

    core.trivial = std::all_of(core.s_k.begin(), core.s_k.end(),
                               [](double v) { return std::abs(1.0 - v) <= kTrivialTolerance; });

    std::vector<double> thetas;
    thetas.reserve(core.k);
    for (double v : core.s_k) thetas.push_back(std::acos(std::clamp(v, 0.0, 1.0)));
    std::sort(thetas.begin(), thetas.end());
    for (double t : thetas) {
        if (!core.angles.empty() && std::abs(t - core.angles.back().theta) <= 1e-12) ++core.angles.back().count;
        else core.angles.push_back(AngleCount{t, 1});
    }

    const int k = core.k;
    if (core.trivial) {
        core.c = Matrix::Identity(2 * k, 2 * k);
        return core;
    }
    core.c = Matrix::Zero(2 * k, 2 * k);
    for (int i = 0; i < k; ++i) {
        const double s = core.s_k[i];
        const double d = std::sqrt(std::max(0.0, 1.0 - s * s));
        core.c(i, i) = s;
        core.c(i, k + i) = d;
        core.c(k + i, i) = d;
        core.c(k + i, k + i) = -s;
    }
    return core;
}

SiteFactors unitary_svd(const Matrix &a, PadPolicy policy) {
    if (a.rows() < 1 || a.cols() < 1) throw Error(ErrorCode::invalid, "unitary_svd: empty matrix");
    const int m = static_cast<int>(a.rows());
    const int n = static_cast<int>(a.cols());

    SiteFactors f;
    f.svd = svd_factors(a);
    const NormalizedCore nc = normalize_core(f.svd.s);
    f.beta = nc.beta;
    f.degenerate = nc.degenerate;
    if (f.degenerate) {
        f.condition = std::numeric_limits<double>::infinity();
        return f;
    }
    const double smin = f.svd.s.back();
    f.condition = smin > 0.0 ? f.svd.s.front() / smin : std::numeric_limits<double>::infinity();

    f.core = pad_and_form_core(nc.scaled, m, n, policy);
    const int k = f.core.k;

    f.vh_op.matrix = identity_kron(f.core.p, f.svd.vh);
    f.vh_op.rows = f.vh_op.cols = {RegisterDim{site_reg::pad_in, f.core.p}, RegisterDim{site_reg::in, n}};
    f.u_op.matrix = identity_kron(f.core.q, f.svd.u);
    f.u_op.rows = f.u_op.cols = {RegisterDim{site_reg::pad_out, f.core.q}, RegisterDim{site_reg::out, m}};
    f.core_op.matrix = f.core.c;
    f.core_op.rows = f.core_op.cols = {RegisterDim{site_reg::flag, 2}, RegisterDim{site_reg::core, k}};
    return f;
}

SiteFactors unitary_svd(const SiteTensor &site, const Unfolding &unfolding, PadPolicy policy) {
    return unitary_svd(unfold_site(site, unfolding).matrix, policy);
}

DenseOperator assemble_site_unitary(const SiteFactors &f) {
    if (f.degenerate) throw Error(ErrorCode::invalid, "assemble_site_unitary: zero operator has no dilation");
    const int k = f.core.k;
    if (f.vh_op.matrix.rows() != k || f.u_op.matrix.rows() != k || f.core_op.matrix.rows() != 2 * k)
        throw Error(ErrorCode::invalid, "assemble_site_unitary: shape mismatch");
    DenseOperator q;
    q.matrix = identity_kron(2, f.u_op.matrix) * f.core_op.matrix * identity_kron(2, f.vh_op.matrix);
    q.rows = q.cols = {RegisterDim{site_reg::flag, 2}, RegisterDim{site_reg::core, k}};
    return q;
}

Matrix flag_block(const DenseOperator &q, int k) { return q.matrix.topLeftCorner(k, k); }

double unitarity_error(const Matrix &w) {
    const Matrix g = w.adjoint() * w;
    return (g - Matrix::Identity(g.rows(), g.cols())).norm();
}

} // namespace tnbe
