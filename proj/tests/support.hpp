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

// Small network builders shared by the test binaries.

#ifndef TNBE_TESTS_SUPPORT_HPP
#define TNBE_TESTS_SUPPORT_HPP

#include <unistd.h>

#include <filesystem>
#include <string>
#include <vector>

#include "tnbe/network.hpp"

namespace support {

using tnbe::cplx;
using tnbe::Matrix;

/// One site, no bonds, holding `m` (rows = phys_out).
inline tnbe::TensorNetwork single_site(const Matrix &m, int id = 0) {
    tnbe::TensorNetwork tn;
    tn.d = static_cast<int>(m.rows());
    tnbe::SiteTensor s;
    s.id = id;
    s.legs = {tnbe::Leg::phys_out(tn.d), tnbe::Leg::phys_in(tn.d)};
    s.data.assign(m.data(), m.data() + m.size());
    tn.vertices.push_back(s);
    return tn;
}

/// Chain of n identity sites with bond dimension 1.
inline tnbe::TensorNetwork identity_mpo(int n, int d = 2) {
    tnbe::TensorNetwork tn;
    tn.d = d;
    for (int v = 0; v < n; ++v) {
        tnbe::SiteTensor s;
        s.id = v;
        s.legs = {tnbe::Leg::phys_out(d), tnbe::Leg::phys_in(d)};
        if (v > 0) s.legs.push_back(tnbe::Leg::bond(v - 1, 1));
        if (v + 1 < n) s.legs.push_back(tnbe::Leg::bond(v, 1));
        s.data.assign(d * d, cplx{0.0, 0.0});
        for (int a = 0; a < d; ++a) s.data[a * d + a] = 1.0;
        tn.vertices.push_back(s);
        if (v + 1 < n) tn.edges.push_back(tnbe::Edge{v, v, v + 1, 1, false});
    }
    return tn;
}

inline Matrix pauli_x() {
    Matrix m(2, 2);
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}

inline Matrix pauli_z() {
    Matrix m(2, 2);
    m << 1.0, 0.0, 0.0, -1.0;
    return m;
}

inline Matrix diag2(double a, double b) {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

inline Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

/// A fresh directory under the system temp dir.
inline std::filesystem::path temp_dir(const std::string &tag) {
    static int counter = 0;
    auto dir = std::filesystem::temp_directory_path() /
               ("tnbe_" + tag + "_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::filesystem::create_directories(dir);
    return dir;
}

} // namespace support

#endif // TNBE_TESTS_SUPPORT_HPP
