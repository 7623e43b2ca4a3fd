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

#include "tensor_ops.hpp"

#include <algorithm>
#include <numeric>

namespace tnbe::detail {

std::vector<std::size_t> row_major_strides(const std::vector<int> &dims) {
    std::vector<std::size_t> strides(dims.size(), 1);
    for (int i = static_cast<int>(dims.size()) - 2; i >= 0; --i)
        strides[i] = strides[i + 1] * static_cast<std::size_t>(dims[i + 1]);
    return strides;
}

std::size_t element_count(const std::vector<int> &dims) {
    std::size_t n = 1;
    for (int d : dims) n *= static_cast<std::size_t>(d);
    return n;
}

DenseTensor permute(const DenseTensor &t, const std::vector<int> &perm) {
    const std::size_t rank = t.dims.size();
    DenseTensor out;
    out.dims.resize(rank);
    for (std::size_t i = 0; i < rank; ++i) out.dims[i] = t.dims[perm[i]];
    out.data.resize(t.data.size());
    if (t.data.empty()) return out;

    const auto in_strides = row_major_strides(t.dims);
    std::vector<std::size_t> step(rank);
    for (std::size_t i = 0; i < rank; ++i) step[i] = in_strides[perm[i]];

    std::vector<int> idx(rank, 0);
    std::size_t src = 0;
    for (std::size_t dst = 0; dst < out.data.size(); ++dst) {
        out.data[dst] = t.data[src];
        for (int ax = static_cast<int>(rank) - 1; ax >= 0; --ax) {
            if (++idx[ax] < out.dims[ax]) {
                src += step[ax];
                break;
            }
            src -= step[ax] * static_cast<std::size_t>(out.dims[ax] - 1);
            idx[ax] = 0;
        }
    }
    return out;
}

DenseTensor pad_axis(const DenseTensor &t, int axis, int new_dim) {
    DenseTensor out;
    out.dims = t.dims;
    out.dims[axis] = new_dim;
    out.data.assign(element_count(out.dims), cplx{0.0, 0.0});

    std::size_t outer = 1, inner = 1;
    for (int i = 0; i < axis; ++i) outer *= t.dims[i];
    for (std::size_t i = axis + 1; i < t.dims.size(); ++i) inner *= t.dims[i];
    const std::size_t old_dim = t.dims[axis];
    for (std::size_t o = 0; o < outer; ++o)
        for (std::size_t a = 0; a < old_dim; ++a)
            std::copy_n(t.data.begin() + (o * old_dim + a) * inner, inner,
                        out.data.begin() + (o * new_dim + a) * inner);
    return out;
}

DenseTensor contract_axis(const DenseTensor &t, int axis, const std::vector<cplx> &vec) {
    DenseTensor out;
    out.dims = t.dims;
    out.dims.erase(out.dims.begin() + axis);
    out.data.assign(element_count(out.dims), cplx{0.0, 0.0});

    std::size_t outer = 1, inner = 1;
    for (int i = 0; i < axis; ++i) outer *= t.dims[i];
    for (std::size_t i = axis + 1; i < t.dims.size(); ++i) inner *= t.dims[i];
    const std::size_t dim = t.dims[axis];
    for (std::size_t o = 0; o < outer; ++o)
        for (std::size_t a = 0; a < dim; ++a) {
            const cplx w = vec[a];
            if (w == cplx{0.0, 0.0}) continue;
            const cplx *src = t.data.data() + (o * dim + a) * inner;
            cplx *dst = out.data.data() + o * inner;
            for (std::size_t i = 0; i < inner; ++i) dst[i] += w * src[i];
        }
    return out;
}

DenseTensor trace_axes(const DenseTensor &t, int a, int b) {
    if (a > b) std::swap(a, b);
    // Move the pair to the end, then sum the diagonal.
    std::vector<int> perm;
    for (int i = 0; i < static_cast<int>(t.dims.size()); ++i)
        if (i != a && i != b) perm.push_back(i);
    perm.push_back(a);
    perm.push_back(b);
    const DenseTensor p = permute(t, perm);

    DenseTensor out;
    out.dims.assign(p.dims.begin(), p.dims.end() - 2);
    out.data.assign(element_count(out.dims), cplx{0.0, 0.0});
    const std::size_t dim = t.dims[a];
    for (std::size_t o = 0; o < out.data.size(); ++o)
        for (std::size_t x = 0; x < dim; ++x) out.data[o] += p.data[(o * dim + x) * dim + x];
    return out;
}

DenseTensor tensordot(const DenseTensor &a, const std::vector<int> &a_axes, const DenseTensor &b,
                      const std::vector<int> &b_axes) {
    auto free_axes = [](std::size_t rank, const std::vector<int> &used) {
        std::vector<int> free;
        for (int i = 0; i < static_cast<int>(rank); ++i)
            if (std::find(used.begin(), used.end(), i) == used.end()) free.push_back(i);
        return free;
    };
    const auto a_free = free_axes(a.dims.size(), a_axes);
    const auto b_free = free_axes(b.dims.size(), b_axes);

    std::vector<int> a_perm = a_free;
    a_perm.insert(a_perm.end(), a_axes.begin(), a_axes.end());
    std::vector<int> b_perm = b_axes;
    b_perm.insert(b_perm.end(), b_free.begin(), b_free.end());

    const DenseTensor ap = permute(a, a_perm);
    const DenseTensor bp = permute(b, b_perm);

    std::size_t rows = 1, inner = 1, cols = 1;
    for (int i : a_free) rows *= a.dims[i];
    for (int i : a_axes) inner *= a.dims[i];
    for (int i : b_free) cols *= b.dims[i];

    using Map = Eigen::Map<const Matrix>;
    const Map am(ap.data.data(), static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(inner));
    const Map bm(bp.data.data(), static_cast<Eigen::Index>(inner), static_cast<Eigen::Index>(cols));

    DenseTensor out;
    for (int i : a_free) out.dims.push_back(a.dims[i]);
    for (int i : b_free) out.dims.push_back(b.dims[i]);
    out.data.resize(rows * cols);
    Eigen::Map<Matrix> om(out.data.data(), static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    om.noalias() = am * bm;
    return out;
}

} // namespace tnbe::detail
