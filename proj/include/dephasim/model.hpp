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

// Domain parameters: Ornstein-Uhlenbeck noise, qubit->environment
// partitions, the accumulated phase variance beta(t), and initial states.
//
// Conventions fixed project-wide:
//   * Qubit 0 is the MOST significant bit of a computational basis index.
//   * The OU field Delta(t) is stationary with autocorrelation
//     K(tau) = (g/2) * exp(-g|tau|); the integrated phase
//     phi(t) = int_0^t Delta ds is a zero-mean Gaussian with variance
//     beta(g, t) = (1/g) * (g t + exp(-g t) - 1).

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dephasim/linalg.hpp"

namespace dephasim {

// Parameters of the classical dephasing noise acting on each qubit.
//   g       inverse autocorrelation time of the OU field, > 0
//   lambda  system-environment coupling, >= 0
//   epsilon qubit energy; contributes only a global phase, so every
//           observable must be independent of it (asserted in tests)
struct NoiseParams {
  double g = 1.0;
  double lambda = 1.0;
  double epsilon = 0.0;
};

// Throws std::invalid_argument unless g > 0 and lambda >= 0 (both finite).
void validate(const NoiseParams& noise);

// Assignment of each qubit to one classical environment. Environment ids
// are 0-based and contiguous: {0 .. n_envs-1}, each used at least once.
// Qubits sharing an id see the same noise phase realization.
struct Partition {
  std::vector<int> assignments;  // one environment id per qubit
  int n_envs = 0;

  int n_qubits() const { return static_cast<int>(assignments.size()); }

  // Named four-qubit presets (case-insensitive):
  //   cse [0,0,0,0]  one common environment
  //   bse [0,0,1,1]  two environments of two qubits
  //   tse [0,1,2,2]  three environments
  //   ise [0,1,2,3]  one environment per qubit
  static Partition preset(std::string_view name);

  // Accepts a preset name or an explicit assignment list such as "0,1,2,2".
  static Partition parse(std::string_view text);
};

// Throws std::invalid_argument unless ids are contiguous from 0, every id is
// used, and n_envs matches.
void validate(const Partition& partition);

// Initial state (1-p) * I/d + p * |GHZ><GHZ| on n_qubits qubits.
struct InitialState {
  int n_qubits = 4;
  double p = 1.0;  // GHZ mixing weight in [0, 1]
};

// Accumulated phase variance of the integrated OU field:
//   beta(g, t) = (1/g) * (g t + exp(-g t) - 1),
// evaluated through expm1 and, for g*t < 1e-6, through the series
// g t^2/2 - g^2 t^3/6 to avoid cancellation. Throws for t < 0.
double beta(const NoiseParams& noise, double t);

// Rank-1 projector onto (|0...0> + |1...1>)/sqrt(2); dimension 2^n_qubits.
// Exactly four entries are nonzero (the corners), each 1/2.
// Requires 2 <= n_qubits <= 12.
Matrix ghz_density(int n_qubits);

// (1-p) * I/d + p * ghz_density(n_qubits). Requires p in [0, 1].
Matrix initial_density(const InitialState& state);

// Collective sigma_x eigenvalue of environment `env` at basis index `b`:
//   s_e(b) = sum over qubits q assigned to env of (1 - 2 * bit_q(b)),
// where bit_q is read with qubit 0 as the most significant bit. Throws
// std::out_of_range for env or b outside their ranges.
int collective_eigenvalue(const Partition& partition, int env, int basis_index);

}  // namespace dephasim
