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

#include "tnbe/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <set>

#include <Eigen/SVD>
#include <Eigen/SparseCore>

#include "tensor_ops.hpp"

namespace tnbe {

using detail::DenseTensor;

namespace {

std::size_t element_cap(const DenseLimit &limit) {
    return std::max<std::size_t>(limit.max_dim * limit.max_dim, std::size_t{1} << 24);
}

// Axis labels: register r -> r (its current value), the input copy of a
// register r -> -(r + 1).
int input_label(int reg) { return -(reg + 1); }

/// A tensor over live registers plus optional input-copy axes. Ops act on
/// register axes only.
class Simulator {
  public:
    explicit Simulator(std::size_t cap) : cap_(cap) { state_.data = {cplx{1.0, 0.0}}; }

    Simulator(std::vector<int> regs, std::vector<int> dims, std::vector<cplx> data, std::size_t cap)
        : cap_(cap), labels_(std::move(regs)) {
        state_.dims = std::move(dims);
        state_.data = std::move(data);
    }

    bool live(int reg) const { return position(reg) >= 0; }

    /// Appends a register in |0>.
    void add_zero(int reg, int dim) {
        grow(dim);
        std::vector<cplx> next(state_.data.size() * dim, cplx{0.0, 0.0});
        for (std::size_t i = 0; i < state_.data.size(); ++i) next[i * dim] = state_.data[i];
        state_.data = std::move(next);
        state_.dims.push_back(dim);
        labels_.push_back(reg);
    }

    /// Appends a register together with an input-copy axis in the identity.
    void add_identity(int reg, int dim) {
        grow(static_cast<std::size_t>(dim) * dim);
        std::vector<cplx> next(state_.data.size() * dim * dim, cplx{0.0, 0.0});
        for (std::size_t i = 0; i < state_.data.size(); ++i)
            for (int a = 0; a < dim; ++a) next[(i * dim + a) * dim + a] = state_.data[i];
        state_.data = std::move(next);
        state_.dims.push_back(dim);
        state_.dims.push_back(dim);
        labels_.push_back(reg);
        labels_.push_back(input_label(reg));
    }

    /// Projects an axis onto |0> and removes it.
    void project(int label) {
        const int pos = position(label);
        if (pos < 0) return;
        std::vector<cplx> e0(state_.dims[pos], cplx{0.0, 0.0});
        e0[0] = 1.0;
        state_ = detail::contract_axis(state_, pos, e0);
        labels_.erase(labels_.begin() + pos);
    }

    void apply(const std::vector<int> &regs, const Matrix &m) {
        std::vector<int> perm;
        std::size_t dim = 1;
        for (int r : regs) {
            const int pos = position(r);
            if (pos < 0) throw Error(ErrorCode::invalid, "simulator: register " + std::to_string(r) + " is not live");
            perm.push_back(pos);
            dim *= state_.dims[pos];
        }
        if (static_cast<std::size_t>(m.rows()) != dim || m.rows() != m.cols())
            throw Error(ErrorCode::invalid, "simulator: op shape does not match its registers");
        for (int i = 0; i < static_cast<int>(labels_.size()); ++i)
            if (std::find(perm.begin(), perm.end(), i) == perm.end()) perm.push_back(i);

        DenseTensor t = detail::permute(state_, perm);
        const auto rows = static_cast<Eigen::Index>(dim);
        const auto cols = static_cast<Eigen::Index>(t.data.size() / dim);
        Eigen::Map<Matrix> x(t.data.data(), rows, cols);
        const Eigen::Index nnz = (m.array() != cplx{0.0, 0.0}).count();
        if (rows >= 16 && nnz * 4 < m.size()) {
            const Eigen::SparseMatrix<cplx, Eigen::RowMajor> sm = m.sparseView();
            Matrix y = sm * x;
            x = y;
        } else {
            Matrix y = m * x;
            x = y;
        }

        std::vector<int> inverse(perm.size());
        for (std::size_t i = 0; i < perm.size(); ++i) inverse[perm[i]] = static_cast<int>(i);
        state_ = detail::permute(t, inverse);
    }

    /// Reorders to `order` (labels) and returns the raw data.
    std::vector<cplx> take(const std::vector<int> &order) const {
        std::vector<int> perm;
        for (int l : order) perm.push_back(position(l));
        if (perm.size() != labels_.size()) throw Error(ErrorCode::invalid, "simulator: unexpected live axes");
        return detail::permute(state_, perm).data;
    }

    const std::vector<int> &labels() const { return labels_; }

  private:
    int position(int label) const {
        auto it = std::find(labels_.begin(), labels_.end(), label);
        return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
    }

    void grow(std::size_t factor) {
        if (state_.data.size() * factor > cap_)
            throw Error(ErrorCode::too_large, "simulation exceeds the dense limit");
    }

    std::size_t cap_;
    DenseTensor state_;
    std::vector<int> labels_;
};

/// Index of the last op touching each register, or -1.
std::vector<int> last_use(const CompilationResult &result) {
    std::vector<int> last(result.layout.registers.size(), -1);
    for (std::size_t i = 0; i < result.ops.size(); ++i)
        for (int r : result.ops[i].registers) last.at(r) = static_cast<int>(i);
    return last;
}

Matrix to_matrix(const std::vector<cplx> &data, std::size_t rows, std::size_t cols) {
    return Eigen::Map<const Matrix>(data.data(), static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
}

void require_ok(const CompilationResult &result) {
    if (result.status != CompileStatus::ok)
        throw Error(ErrorCode::invalid, "zero operator: the compilation has no encoded block");
}

} // namespace

double spectral_norm(const Matrix &m) {
    if (m.size() == 0) return 0.0;
    if (std::max(m.rows(), m.cols()) <= 512) {
        const Eigen::MatrixXcd cm = m;
        Eigen::BDCSVD<Eigen::MatrixXcd> svd(cm);
        return svd.singularValues()(0);
    }
    std::mt19937_64 rng(0x5eed);
    std::normal_distribution<double> normal;
    Vector v(m.cols());
    for (auto &x : v) x = cplx{normal(rng), normal(rng)};
    v.normalize();
    double sigma = 0.0;
    for (int it = 0; it < 2000; ++it) {
        Vector w = m.adjoint() * (m * v);
        const double norm = w.norm();
        if (norm == 0.0) return 0.0;
        v = w / norm;
        const double next = std::sqrt(norm);
        if (std::abs(next - sigma) <= 1e-15 * next) return next;
        sigma = next;
    }
    return sigma;
}

DenseOperator compose_global(const CompilationResult &result, const DenseLimit &limit) {
    const auto &regs = result.layout.registers;
    const std::size_t total = result.layout.total_dim();
    if (total > limit.max_dim)
        throw Error(ErrorCode::too_large, "compose_global: register space of dimension " + std::to_string(total) +
                                              " exceeds the dense limit");
    Simulator sim(element_cap(limit));
    for (const auto &r : regs) sim.add_identity(r.id, r.dim);
    for (const auto &op : result.ops) sim.apply(op.registers, op.matrix);

    std::vector<int> order;
    for (const auto &r : regs) order.push_back(r.id);
    for (const auto &r : regs) order.push_back(input_label(r.id));
    DenseOperator u;
    u.matrix = to_matrix(sim.take(order), total, total);
    for (const auto &r : regs) u.rows.push_back(RegisterDim{r.id, r.dim});
    u.cols = u.rows;
    return u;
}

DenseOperator project_encoded_block(const DenseOperator &u_global, const RegisterLayout &layout) {
    const auto &regs = layout.registers;
    const std::size_t total = layout.total_dim();
    if (static_cast<std::size_t>(u_global.matrix.rows()) != total || u_global.matrix.rows() != u_global.matrix.cols())
        throw Error(ErrorCode::invalid, "project_encoded_block: operator does not match the layout");

    // Global index of each physical basis state with every ancilla at |0>.
    std::vector<std::size_t> index{0};
    for (const auto &r : regs) {
        std::vector<std::size_t> next;
        const int range = r.postselect ? 1 : r.dim;
        for (std::size_t base : index)
            for (int a = 0; a < range; ++a) next.push_back(base * r.dim + a);
        index = std::move(next);
    }

    DenseOperator b;
    b.matrix.resize(static_cast<Eigen::Index>(index.size()), static_cast<Eigen::Index>(index.size()));
    for (std::size_t i = 0; i < index.size(); ++i)
        for (std::size_t j = 0; j < index.size(); ++j)
            b.matrix(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                u_global.matrix(static_cast<Eigen::Index>(index[i]), static_cast<Eigen::Index>(index[j]));
    for (const auto &r : regs)
        if (!r.postselect) b.rows.push_back(RegisterDim{r.id, r.dim});
    b.cols = b.rows;
    return b;
}

DenseOperator encoded_block(const CompilationResult &result, const SimulationOptions &opts) {
    require_ok(result);
    const auto &regs = result.layout.registers;
    const auto last = last_use(result);
    Simulator sim(element_cap(opts.limit));

    for (std::size_t i = 0; i < result.ops.size(); ++i) {
        const Op &op = result.ops[i];
        for (int r : op.registers) {
            if (sim.live(r)) continue;
            if (regs[r].postselect) sim.add_zero(r, regs[r].dim);
            else sim.add_identity(r, regs[r].dim);
        }
        sim.apply(op.registers, op.matrix);
        if (!opts.early_projection) continue;
        for (int r : op.registers)
            if (regs[r].postselect && last[r] == static_cast<int>(i)) sim.project(r);
    }
    for (const auto &r : regs) {
        if (r.postselect) sim.project(r.id);
        else if (!sim.live(r.id)) sim.add_identity(r.id, r.dim);
    }

    std::vector<int> order;
    DenseOperator b;
    for (const auto &r : regs)
        if (!r.postselect) {
            order.push_back(r.id);
            b.rows.push_back(RegisterDim{r.id, r.dim});
        }
    for (const auto &r : regs)
        if (!r.postselect) order.push_back(input_label(r.id));
    b.cols = b.rows;
    const std::size_t dim = product_of_dims(b.rows);
    b.matrix = to_matrix(sim.take(order), dim, dim);
    return b;
}

VerificationReport verify_block_encoding(const TensorNetwork &tn, const CompilationResult &result, double tol,
                                         const DenseLimit &limit) {
    VerificationReport report;
    report.tolerance = tol;
    report.gamma = result.gamma;
    const DenseOperator h = contract_dense(tn, limit);
    if (result.status != CompileStatus::ok) {
        report.block_error = spectral_norm(h.matrix);
        report.pass = report.block_error <= tol;
        return report;
    }
    SimulationOptions sim_opts;
    sim_opts.limit = limit;
    const DenseOperator b = encoded_block(result, sim_opts);
    if (b.matrix.rows() != h.matrix.rows()) {
        report.block_error = std::numeric_limits<double>::infinity();
        return report;
    }
    report.block_error = spectral_norm(result.gamma * b.matrix - h.matrix);
    bool unitary = true;
    for (const auto &op : result.ops) {
        report.unitarity_errors.push_back(unitarity_error(op.matrix));
        unitary = unitary && report.unitarity_errors.back() <= tol;
    }
    report.pass = report.block_error <= tol && unitary;
    return report;
}

SuccessProbability success_probability(const Matrix &block, const Vector &psi) {
    if (psi.size() != block.cols()) throw Error(ErrorCode::invalid, "success_probability: state has the wrong size");
    if (std::abs(psi.norm() - 1.0) > 1e-10) throw Error(ErrorCode::invalid, "success_probability: state is not normalized");
    SuccessProbability out;
    out.probability = (block * psi).squaredNorm();
    const double norm = spectral_norm(block);
    out.bound = norm * norm;
    return out;
}

double simulate_postselection(const CompilationResult &result, const Vector &psi, const DenseLimit &limit) {
    require_ok(result);
    const auto &regs = result.layout.registers;
    std::vector<int> phys, dims;
    for (const auto &r : regs)
        if (!r.postselect) {
            phys.push_back(r.id);
            dims.push_back(r.dim);
        }
    if (static_cast<std::size_t>(psi.size()) != result.layout.physical_dim())
        throw Error(ErrorCode::invalid, "simulate_postselection: state has the wrong size");
    if (std::abs(psi.norm() - 1.0) > 1e-10)
        throw Error(ErrorCode::invalid, "simulate_postselection: state is not normalized");

    Simulator sim(phys, dims, std::vector<cplx>(psi.data(), psi.data() + psi.size()), element_cap(limit));
    for (const auto &op : result.ops) {
        for (int r : op.registers)
            if (!sim.live(r)) sim.add_zero(r, regs[r].dim);
        sim.apply(op.registers, op.matrix);
    }
    for (const auto &r : regs)
        if (r.postselect) sim.project(r.id);
    const auto amplitudes = sim.take(phys);
    double p = 0.0;
    for (const auto &a : amplitudes) p += std::norm(a);
    return p;
}

ErrorBound error_bound(const std::vector<double> &betas, const std::vector<double> &epsilons) {
    if (betas.size() != epsilons.size()) throw Error(ErrorCode::invalid, "error_bound: length mismatch");
    double gamma = 1.0, product = 1.0, sum = 0.0;
    for (std::size_t i = 0; i < betas.size(); ++i) {
        if (!(betas[i] > 0.0)) throw Error(ErrorCode::invalid, "error_bound: every beta must be positive");
        if (epsilons[i] < 0.0) throw Error(ErrorCode::invalid, "error_bound: epsilons must be nonnegative");
        gamma *= betas[i];
        product *= 1.0 + epsilons[i] / betas[i];
        sum += epsilons[i] / betas[i];
    }
    return ErrorBound{gamma * (product - 1.0), gamma * sum};
}

Matrix site_block(const CompilationResult &result, int vertex) {
    require_ok(result);
    const SiteRecord &rec = result.site(vertex);
    const auto &regs = result.layout.registers;
    std::set<int> local;
    for (const auto &op : result.ops)
        if (op.vertex == vertex) local.insert(op.registers.begin(), op.registers.end());

    Simulator sim(std::size_t{1} << 26);
    for (int r : local) sim.add_identity(r, regs[r].dim);
    for (const auto &op : result.ops)
        if (op.vertex == vertex) sim.apply(op.registers, op.matrix);

    const int flag = result.layout.flag_of(vertex);
    if (flag >= 0) {
        sim.project(flag);
        sim.project(input_label(flag));
    }
    std::vector<int> order;
    for (int e : rec.in_edges) sim.project(result.layout.bond_of(e));
    for (int e : rec.out_edges) sim.project(input_label(result.layout.bond_of(e)));
    for (int e : rec.out_edges) order.push_back(result.layout.bond_of(e));
    order.push_back(result.layout.physical_of(vertex));
    for (int e : rec.in_edges) order.push_back(input_label(result.layout.bond_of(e)));
    order.push_back(input_label(result.layout.physical_of(vertex)));
    return to_matrix(sim.take(order), rec.m, rec.n);
}

ChainingReport verify_chaining(const TensorNetwork &tn, const CompilationResult &result, double tol,
                               const DenseLimit &limit) {
    require_ok(result);
    TensorNetwork blocks = prepare_network(tn);
    for (auto &site : blocks.vertices) {
        const SiteRecord &rec = result.site(site.id);
        site.data = fold_site(site_block(result, site.id), site, make_unfolding(site, rec.in_edges));
    }
    const DenseOperator product = contract_dense(blocks, limit);

    Matrix global;
    if (result.layout.total_dim() <= limit.max_dim) {
        global = project_encoded_block(compose_global(result, limit), result.layout).matrix;
    } else {
        SimulationOptions opts;
        opts.early_projection = false;
        opts.limit = limit;
        global = encoded_block(result, opts).matrix;
    }
    ChainingReport report;
    report.error = spectral_norm(product.matrix - global);
    report.pass = report.error <= tol;
    return report;
}

} // namespace tnbe
