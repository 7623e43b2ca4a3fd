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

#ifndef TNBE_TYPES_HPP
#define TNBE_TYPES_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace tnbe {

using cplx = std::complex<double>;
using Matrix = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::Matrix<cplx, Eigen::Dynamic, 1>;
using RealVector = Eigen::VectorXd;

/// Broad failure classes. The CLI maps these onto exit codes.
enum class ErrorCode {
    invalid,        ///< malformed or inconsistent input
    unsupported,    ///< valid input the compiler cannot handle (cyclic bonds)
    too_large,      ///< exceeds a configured dense limit
    empty_operator, ///< nothing to encode
    parse,          ///< file could not be read or parsed
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

/// Size cap for anything materialized densely. The default of 2^12 per side
/// keeps desk-scale verification tractable.
struct DenseLimit {
    std::size_t max_dim = std::size_t{1} << 12;

    static DenseLimit from_qubits(int qubits) { return DenseLimit{std::size_t{1} << qubits}; }
    /// Reads TNBE_DENSE_LIMIT (in qubits) when set, else the default.
    static DenseLimit from_env();
};

/// A register (or tensor leg) descriptor: identifier and dimension.
struct RegisterDim {
    int id = 0;
    int dim = 1;

    friend bool operator==(const RegisterDim &, const RegisterDim &) = default;
};

/// Dense matrix together with the ordered register spaces it maps between.
/// The first register of each side is the most significant.
struct DenseOperator {
    Matrix matrix;
    std::vector<RegisterDim> rows;
    std::vector<RegisterDim> cols;
};

inline std::size_t product_of_dims(const std::vector<RegisterDim> &regs) {
    std::size_t p = 1;
    for (const auto &r : regs) p *= static_cast<std::size_t>(r.dim);
    return p;
}

} // namespace tnbe

#endif // TNBE_TYPES_HPP
