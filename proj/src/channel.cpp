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

#include "dephasim/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dephasim {

namespace {

int qubit_count_for_dim(const char* op, Eigen::Index d) {
  if (d < 1 || (d & (d - 1)) != 0) {
    throw DimensionError(std::string(op) + ": dimension " + std::to_string(d) +
                         " is not a power of two");
  }
  int n = 0;
  while ((Eigen::Index{1} << n) < d) ++n;
  return n;
}

void require_density(const char* op, const Matrix& rho) {
  detail::require_square(op, rho.rows(), rho.cols());
  const double herm_dev = (rho - Matrix(rho.adjoint())).cwiseAbs().maxCoeff();
  if (!(herm_dev <= 1e-9)) {
    throw std::invalid_argument(std::string(op) +
                                ": state is not Hermitian (deviation " +
                                std::to_string(herm_dev) + ")");
  }
  const double tr_dev = std::abs(rho.trace() - Complex(1.0, 0.0));
  if (!(tr_dev <= 1e-9)) {
    throw std::invalid_argument(std::string(op) +
                                ": state trace deviates from 1 by " +
                                std::to_string(tr_dev));
  }
}

// Table of collective eigenvalues: s[e][b] for every environment and basis
// index.
std::vector<std::vector<int>> eigenvalue_table(const Partition& partition) {
  const int n = partition.n_qubits();
  const int d = 1 << n;
  std::vector<std::vector<int>> s(static_cast<std::size_t>(partition.n_envs),
                                  std::vector<int>(static_cast<std::size_t>(d)));
  for (int e = 0; e < partition.n_envs; ++e) {
    for (int b = 0; b < d; ++b) {
      s[static_cast<std::size_t>(e)][static_cast<std::size_t>(b)] =
          collective_eigenvalue(partition, e, b);
    }
  }
  return s;
}

}  // namespace

void validate(const DephasingChannel& channel) {
  validate(channel.partition);
  if (channel.betas.size() !=
      static_cast<std::size_t>(channel.partition.n_envs)) {
    throw std::invalid_argument(
        "DephasingChannel: need one beta per environment");
  }
  for (double b : channel.betas) {
    if (!(std::isfinite(b) && b >= 0.0)) {
      throw std::invalid_argument(
          "DephasingChannel: betas must be finite and >= 0");
    }
  }
  if (!(std::isfinite(channel.lambda) && channel.lambda >= 0.0)) {
    throw std::invalid_argument(
        "DephasingChannel: lambda must be finite and >= 0");
  }
}

Matrix hadamard_transform(const Matrix& rho) {
  detail::require_square("hadamard_transform", rho.rows(), rho.cols());
  const Eigen::Index d = rho.rows();
  qubit_count_for_dim("hadamard_transform", d);

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Matrix m = rho;
  // Fast Walsh-Hadamard butterflies; one orthogonal stage per qubit, applied
  // to the row index (H rho) and then the column index (... H).
  for (Eigen::Index len = 1; len < d; len <<= 1) {
    for (Eigen::Index base = 0; base < d; base += 2 * len) {
      for (Eigen::Index i = base; i < base + len; ++i) {
        const Eigen::RowVectorXcd x = m.row(i);
        const Eigen::RowVectorXcd y = m.row(i + len);
        m.row(i) = (x + y) * inv_sqrt2;
        m.row(i + len) = (x - y) * inv_sqrt2;
      }
    }
  }
  for (Eigen::Index len = 1; len < d; len <<= 1) {
    for (Eigen::Index base = 0; base < d; base += 2 * len) {
      for (Eigen::Index i = base; i < base + len; ++i) {
        const Eigen::VectorXcd x = m.col(i);
        const Eigen::VectorXcd y = m.col(i + len);
        m.col(i) = (x + y) * inv_sqrt2;
        m.col(i + len) = (x - y) * inv_sqrt2;
      }
    }
  }
  return m;
}

Matrix decay_matrix(const DephasingChannel& channel, int n_qubits) {
  validate(channel);
  if (n_qubits != channel.partition.n_qubits()) {
    throw DimensionError("decay_matrix: partition covers " +
                         std::to_string(channel.partition.n_qubits()) +
                         " qubits, not " + std::to_string(n_qubits));
  }
  const int d = 1 << n_qubits;
  const auto s = eigenvalue_table(channel.partition);
  const double l2 = channel.lambda * channel.lambda;

  Matrix f(d, d);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      double exponent = 0.0;
      for (int e = 0; e < channel.partition.n_envs; ++e) {
        const double gap = static_cast<double>(
            s[static_cast<std::size_t>(e)][static_cast<std::size_t>(r)] -
            s[static_cast<std::size_t>(e)][static_cast<std::size_t>(c)]);
        exponent +=
            channel.betas[static_cast<std::size_t>(e)] * gap * gap / 2.0;
      }
      f(r, c) = Complex(std::exp(-l2 * exponent), 0.0);
    }
  }
  return f;
}

Matrix asymptotic_decay_matrix(const Partition& partition, int n_qubits) {
  validate(partition);
  if (n_qubits != partition.n_qubits()) {
    throw DimensionError("asymptotic_decay_matrix: partition covers " +
                         std::to_string(partition.n_qubits()) +
                         " qubits, not " + std::to_string(n_qubits));
  }
  const int d = 1 << n_qubits;
  const auto s = eigenvalue_table(partition);

  Matrix f(d, d);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      bool equal = true;
      for (int e = 0; e < partition.n_envs && equal; ++e) {
        equal = s[static_cast<std::size_t>(e)][static_cast<std::size_t>(r)] ==
                s[static_cast<std::size_t>(e)][static_cast<std::size_t>(c)];
      }
      f(r, c) = Complex(equal ? 1.0 : 0.0, 0.0);
    }
  }
  return f;
}

Matrix apply_channel(const DephasingChannel& channel, const Matrix& rho) {
  validate(channel);
  require_density("apply_channel", rho);
  const int n = qubit_count_for_dim("apply_channel", rho.rows());
  if (n != channel.partition.n_qubits()) {
    throw DimensionError("apply_channel: partition covers " +
                         std::to_string(channel.partition.n_qubits()) +
                         " qubits, but the state has " + std::to_string(n));
  }
  // All variances zero is the identity map; return the input untouched so
  // that t = 0 reproduces rho exactly rather than up to transform rounding.
  if (std::all_of(channel.betas.begin(), channel.betas.end(),
                  [](double b) { return b == 0.0; })) {
    return rho;
  }
  const Matrix f = decay_matrix(channel, n);
  return hadamard_transform(schur(hadamard_transform(rho), f));
}

Matrix evolve(const Matrix& rho0, const Partition& partition,
              const NoiseParams& noise, double t) {
  require_density("evolve", rho0);
  validate(noise);
  const double b = beta(noise, t);  // validates t >= 0
  DephasingChannel channel{partition,
                           std::vector<double>(
                               static_cast<std::size_t>(partition.n_envs), b),
                           noise.lambda};
  return apply_channel(channel, rho0);
}

std::vector<Matrix> evolve_series(const Matrix& rho0,
                                  const Partition& partition,
                                  const NoiseParams& noise,
                                  const std::vector<double>& t_grid) {
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (!(std::isfinite(t_grid[i]) && t_grid[i] >= 0.0)) {
      throw std::invalid_argument("evolve_series: grid times must be >= 0");
    }
    if (i > 0 && !(t_grid[i] >= t_grid[i - 1])) {
      throw std::invalid_argument("evolve_series: grid must be ascending");
    }
  }
  std::vector<Matrix> out;
  out.reserve(t_grid.size());
  for (double t : t_grid) {
    out.push_back(evolve(rho0, partition, noise, t));
  }
  return out;
}

Matrix asymptotic(const Matrix& rho0, const Partition& partition) {
  require_density("asymptotic", rho0);
  validate(partition);
  const int n = qubit_count_for_dim("asymptotic", rho0.rows());
  const Matrix f = asymptotic_decay_matrix(partition, n);
  return hadamard_transform(schur(hadamard_transform(rho0), f));
}

}  // namespace dephasim
