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

// Exact Gaussian-averaged dephasing channel.
//
// Each qubit is rotated about sigma_x by the integrated noise phase of its
// environment; averaging over the zero-mean Gaussian phases is exact and
// diagonal in the collective sigma_x eigenbasis:
//
//   rho(t) = H ( F o (H rho0 H) ) H,     H = Hadamard^(x)n,  o = Schur product
//   F[r,c] = prod_e exp( -lambda^2 * beta_e * (s_e(r) - s_e(c))^2 / 2 )
//
// with s_e the collective eigenvalue of environment e. The quadratic gap
// dependence is the characteristic function of a Gaussian phase: an element
// whose eigenvalue gap is n picks up <exp(+/- i n lambda phi)>
// = exp(-lambda^2 n^2 beta / 2).

#pragma once

#include <vector>

#include "dephasim/linalg.hpp"
#include "dephasim/model.hpp"

namespace dephasim {

// A fully specified channel application: one phase variance per environment.
// All betas zero is the identity map; beta -> infinity kills every element
// whose collective eigenvalues differ (see asymptotic()).
struct DephasingChannel {
  Partition partition;
  std::vector<double> betas;  // one per environment, each >= 0
  double lambda = 1.0;
};

// Throws std::invalid_argument on inconsistent sizes or negative entries.
void validate(const DephasingChannel& channel);

// Conjugation by H^(x)n with H = (1/sqrt 2)[[1,1],[1,-1]]; involutive.
// Throws DimensionError unless dim is a power of two.
Matrix hadamard_transform(const Matrix& rho);

// The element-wise decay kernel F described above; symmetric, unit diagonal,
// and positive semidefinite (a Gaussian kernel in the integer coordinates
// s_e). Real-valued, returned in the common complex type.
Matrix decay_matrix(const DephasingChannel& channel, int n_qubits);

// beta -> infinity limit of decay_matrix: the indicator of
// s_e(r) == s_e(c) for every environment e.
Matrix asymptotic_decay_matrix(const Partition& partition, int n_qubits);

// Applies the channel to a density matrix: H (F o (H rho H)) H.
// Validates rho (Hermitian and unit trace within 1e-9).
Matrix apply_channel(const DephasingChannel& channel, const Matrix& rho);

// Evolution to time t: every environment accumulates the same phase variance
// beta(noise, t); coupling lambda is taken from noise. Preserves trace,
// positivity, and Hermiticity; independent of noise.epsilon.
Matrix evolve(const Matrix& rho0, const Partition& partition,
              const NoiseParams& noise, double t);

// evolve() at each grid point; the grid must be ascending and nonnegative.
std::vector<Matrix> evolve_series(const Matrix& rho0,
                                  const Partition& partition,
                                  const NoiseParams& noise,
                                  const std::vector<double>& t_grid);

// The t -> infinity fixed point: evolve with the indicator kernel. Applying
// any channel of the same partition afterwards changes nothing.
Matrix asymptotic(const Matrix& rho0, const Partition& partition);

}  // namespace dephasim
