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

#include "dephasim/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace dephasim {

namespace {

// Squared Frobenius norm of the off-diagonal part.
double offdiag_squared(const Matrix& m) {
  const Eigen::Index d = m.rows();
  double sum = 0.0;
  for (Eigen::Index p = 0; p < d; ++p) {
    for (Eigen::Index q = p + 1; q < d; ++q) {
      sum += std::norm(m(p, q)) + std::norm(m(q, p));
    }
  }
  return sum;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const Matrix& a, double herm_tol) {
  detail::require_square("hermitian_eigenvalues", a.rows(), a.cols());
  const Eigen::Index d = a.rows();

  double herm_dev = 0.0;
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = i; j < d; ++j) {
      herm_dev = std::max(herm_dev, std::abs(a(i, j) - std::conj(a(j, i))));
    }
  }
  if (!(herm_dev <= herm_tol)) {
    throw NumericalError(
        "hermitian_eigenvalues: input is not Hermitian (deviation " +
        std::to_string(herm_dev) + " > tol " + std::to_string(herm_tol) + ")");
  }

  // Symmetrize once so the rounding-level skew allowed by herm_tol cannot
  // bias the rotations, then run cyclic Jacobi sweeps.
  Matrix m = 0.5 * (a + Matrix(a.adjoint()));
  if (d == 1) return {m(0, 0).real()};

  const double stop = 1e-13 * std::max(1.0, m.norm());
  const double skip = stop / static_cast<double>(d * d);
  constexpr int kMaxSweeps = 64;

  bool converged = std::sqrt(offdiag_squared(m)) <= stop;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    for (Eigen::Index p = 0; p < d; ++p) {
      for (Eigen::Index q = p + 1; q < d; ++q) {
        const Complex apq = m(p, q);
        const double absb = std::abs(apq);
        if (absb <= skip) continue;

        // Zero m(p,q) with the unitary G = P*R, where P = diag(1, e^{-i phi})
        // strips the phase of m(p,q) and R is the real Jacobi rotation for
        // the resulting symmetric 2x2 block.
        const Complex ph = apq / absb;  // e^{i phi}
        const double app = m(p, p).real();
        const double aqq = m(q, q).real();
        const double tau = (aqq - app) / (2.0 * absb);
        const double tsign = tau >= 0.0 ? 1.0 : -1.0;
        const double t =
            tsign / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // Rutishauser form of the rotated diagonal: cheaper and free of the
        // cancellation the explicit c/s products would introduce.
        const double app_new = app - t * absb;
        const double aqq_new = aqq + t * absb;

        // Columns: M <- M * G.
        const Eigen::VectorXcd colp = m.col(p);
        const Eigen::VectorXcd colq = m.col(q);
        m.col(p) = c * colp - (s * std::conj(ph)) * colq;
        m.col(q) = s * colp + (c * std::conj(ph)) * colq;
        // Rows: M <- G^dagger * M.
        const Eigen::RowVectorXcd rowp = m.row(p);
        const Eigen::RowVectorXcd rowq = m.row(q);
        m.row(p) = c * rowp - (s * ph) * rowq;
        m.row(q) = s * rowp + (c * ph) * rowq;

        m(p, q) = Complex(0.0, 0.0);
        m(q, p) = Complex(0.0, 0.0);
        m(p, p) = Complex(app_new, 0.0);
        m(q, q) = Complex(aqq_new, 0.0);
      }
    }
    converged = std::sqrt(offdiag_squared(m)) <= stop;
  }
  if (!converged) {
    throw NumericalError(
        "hermitian_eigenvalues: Jacobi sweeps did not converge");
  }

  std::vector<double> eigs(static_cast<std::size_t>(d));
  for (Eigen::Index i = 0; i < d; ++i) {
    eigs[static_cast<std::size_t>(i)] = m(i, i).real();
  }
  std::sort(eigs.begin(), eigs.end(), std::greater<double>());
  return eigs;
}

}  // namespace dephasim
