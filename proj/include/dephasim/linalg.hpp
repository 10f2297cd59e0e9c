// Copyright 2026 The dephasim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense complex matrix kernel used by every other module.
//
// Eigen supplies the storage and elementary arithmetic; this header adds the
// small set of free functions the simulator needs (Kronecker products, Schur
// products, Frobenius distances) plus an in-repo Hermitian eigensolver
// (cyclic complex Jacobi) so the spectrum route is independent of Eigen's
// decompositions. All functions are pure: values may be freely shared or
// sent between threads.

#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace dephasim {

// Hard cap on matrix dimension (12 qubits). Dense O(d^3) sweeps stay
// tractable up to here and no supported workload is larger.
inline constexpr Eigen::Index kMaxDim = Eigen::Index{1} << 12;

using Complex = std::complex<double>;

template <typename Scalar>
using Dense = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Matrix = Dense<Complex>;
using RealMatrix = Dense<double>;

// Thrown for shape violations (non-square input, mismatched dimensions,
// results beyond kMaxDim).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown when a numerical contract is violated (non-Hermitian input to the
// eigensolver, failure to converge).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require_square(const char* op, Eigen::Index rows,
                           Eigen::Index cols) {
  if (rows != cols) {
    throw DimensionError(std::string(op) + ": matrix must be square, got " +
                         std::to_string(rows) + "x" + std::to_string(cols));
  }
}

inline void require_same_dim(const char* op, Eigen::Index a, Eigen::Index b) {
  if (a != b) {
    throw DimensionError(std::string(op) + ": dimension mismatch (" +
                         std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

}  // namespace detail

// Kronecker product of two square matrices.
// out[(i*db + k), (j*db + l)] = a(i, j) * b(k, l).
template <typename DerivedA, typename DerivedB>
Dense<typename DerivedA::Scalar> kron(const Eigen::MatrixBase<DerivedA>& a,
                                      const Eigen::MatrixBase<DerivedB>& b) {
  static_assert(std::is_same_v<typename DerivedA::Scalar,
                               typename DerivedB::Scalar>,
                "kron: operands must share a scalar type");
  detail::require_square("kron", a.rows(), a.cols());
  detail::require_square("kron", b.rows(), b.cols());
  const Eigen::Index da = a.rows();
  const Eigen::Index db = b.rows();
  if (da > kMaxDim / db) {
    throw DimensionError("kron: result dimension " + std::to_string(da) + "*" +
                         std::to_string(db) + " exceeds cap " +
                         std::to_string(kMaxDim));
  }
  Dense<typename DerivedA::Scalar> out(da * db, da * db);
  for (Eigen::Index i = 0; i < da; ++i) {
    for (Eigen::Index j = 0; j < da; ++j) {
      out.block(i * db, j * db, db, db) = a(i, j) * b.derived();
    }
  }
  return out;
}

// Matrix product of two square matrices of equal dimension.
template <typename DerivedA, typename DerivedB>
Dense<typename DerivedA::Scalar> matmul(const Eigen::MatrixBase<DerivedA>& a,
                                        const Eigen::MatrixBase<DerivedB>& b) {
  detail::require_square("matmul", a.rows(), a.cols());
  detail::require_square("matmul", b.rows(), b.cols());
  detail::require_same_dim("matmul", a.rows(), b.rows());
  return a.derived() * b.derived();
}

// Conjugate transpose.
template <typename Derived>
Dense<typename Derived::Scalar> adjoint(const Eigen::MatrixBase<Derived>& a) {
  return a.adjoint();
}

// Trace of a square matrix.
template <typename Derived>
typename Derived::Scalar trace(const Eigen::MatrixBase<Derived>& a) {
  detail::require_square("trace", a.rows(), a.cols());
  return a.trace();
}

// Element-wise (Schur) product; requires equal dimensions.
template <typename DerivedA, typename DerivedB>
Dense<typename DerivedA::Scalar> schur(const Eigen::MatrixBase<DerivedA>& a,
                                       const Eigen::MatrixBase<DerivedB>& b) {
  detail::require_same_dim("schur", a.rows(), b.rows());
  detail::require_same_dim("schur", a.cols(), b.cols());
  return a.derived().cwiseProduct(b.derived());
}

// Frobenius norm of (a - b); requires equal dimensions.
template <typename DerivedA, typename DerivedB>
double frobenius_distance(const Eigen::MatrixBase<DerivedA>& a,
                          const Eigen::MatrixBase<DerivedB>& b) {
  detail::require_same_dim("frobenius_distance", a.rows(), b.rows());
  detail::require_same_dim("frobenius_distance", a.cols(), b.cols());
  return (a.derived() - b.derived()).norm();
}

// Eigenvalues of a Hermitian matrix, sorted in descending order.
//
// The input must be Hermitian within `herm_tol`
// (max_ij |a(i,j) - conj(a(j,i))| <= herm_tol). Uses cyclic complex Jacobi
// rotations until the off-diagonal Frobenius norm falls to 1e-13 (scaled by
// the matrix norm when that norm exceeds 1); throws NumericalError if the
// input is not Hermitian or the sweep budget is exhausted.
std::vector<double> hermitian_eigenvalues(const Matrix& a,
                                          double herm_tol = 1e-9);

}  // namespace dephasim
