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

// Small row-major dense tensor helpers shared by the library sources.

#ifndef TNBE_SRC_TENSOR_OPS_HPP
#define TNBE_SRC_TENSOR_OPS_HPP

#include <vector>

#include "tnbe/types.hpp"

namespace tnbe::detail {

struct DenseTensor {
    std::vector<int> dims;
    std::vector<cplx> data;
};

std::vector<std::size_t> row_major_strides(const std::vector<int> &dims);
std::size_t element_count(const std::vector<int> &dims);

/// Axis i of the result is axis perm[i] of the input.
DenseTensor permute(const DenseTensor &t, const std::vector<int> &perm);

/// Zero-pads `axis` up to `new_dim`.
DenseTensor pad_axis(const DenseTensor &t, int axis, int new_dim);

/// Contracts `axis` against a vector and removes it.
DenseTensor contract_axis(const DenseTensor &t, int axis, const std::vector<cplx> &vec);

/// Sums the diagonal of two equally sized axes and removes both.
DenseTensor trace_axes(const DenseTensor &t, int a, int b);

/// Contracts `a` axes a_axes against `b` axes b_axes (pairwise). Result axes
/// are the remaining axes of `a` followed by the remaining axes of `b`.
DenseTensor tensordot(const DenseTensor &a, const std::vector<int> &a_axes, const DenseTensor &b,
                      const std::vector<int> &b_axes);

} // namespace tnbe::detail

#endif // TNBE_SRC_TENSOR_OPS_HPP
