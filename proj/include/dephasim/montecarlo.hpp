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

// Stochastic oracle for the analytic channel: sample noise-phase
// realizations, conjugate the state by the corresponding unitaries, and
// average. Entirely independent of the spectral channel implementation, so
// agreement between the two is meaningful evidence.
//
// Reproducibility contract: results for a given seed are bit-identical
// across runs, platforms, and worker counts. This is achieved with
//   * a portable in-repo generator (splitmix64 streams + Box-Muller) whose
//     sequence is fully specified, unlike std::normal_distribution;
//   * one independent substream per sample index, derived from (seed, index);
//   * a fixed pairwise reduction tree over sample blocks, so the summation
//     order never depends on thread scheduling.
// The environment variable DEPHASIM_THREADS (positive integer) caps the
// worker count; hardware concurrency is the default.

#pragma once

#include <cstdint>
#include <vector>

#include "dephasim/linalg.hpp"
#include "dephasim/model.hpp"

namespace dephasim {

enum class Scheme {
  direct_phase,  // draw phi ~ Normal(0, beta(g, t)) directly
  ou_path        // integrate an exactly discretized OU path
};

struct TrajectoryConfig {
  std::int64_t samples = 10000;  // M >= 1
  std::uint64_t seed = 0;
  double dt = 1e-3;  // path step for Scheme::ou_path
  Scheme scheme = Scheme::direct_phase;
};

// Deterministic, portable PRNG: a splitmix64 stream feeding Box-Muller.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  // Independent substream for one sample: the seed and index are mixed
  // through the splitmix64 finalizer twice, decorrelating neighbors.
  static Rng substream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next_u64();
  double uniform();   // in (0, 1]
  double gaussian();  // standard normal via Box-Muller (second value cached)

 private:
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// One draw of the accumulated noise phase: Normal(0, beta_value).
// Throws std::invalid_argument for beta_value < 0.
double sample_phase_direct(Rng& rng, double beta_value);

// Simulates a stationary OU field with the exact one-step update
//   Delta_{k+1} = alpha Delta_k + sqrt((g/2)(1 - alpha^2)) eta_k,
//   alpha = exp(-g h),  Delta_0 ~ Normal(0, g/2),
// on a uniform grid of step h = t/ceil(t/dt) <= dt, and returns the
// trapezoid estimate of phi = int_0^t Delta ds. Requires t > 0 and
// 0 < dt <= t.
double ou_path_phase(Rng& rng, const NoiseParams& noise, double t, double dt);

// Tensor product over qubits of exp(-i lambda phi_e sigma_x)
// = cos(lambda phi_e) I - i sin(lambda phi_e) sigma_x, with phi_e the phase
// of the qubit's environment. phases.size() must equal n_envs.
Matrix unitary_for_phases(const std::vector<double>& phases,
                          const Partition& partition, double lambda,
                          int n_qubits);

struct McResult {
  Matrix estimate;        // average of U rho0 U^dagger, Hermitized
  double standard_error;  // Frobenius norm of element-wise std / sqrt(M)
};

// Monte Carlo average of U rho0 U^dagger over config.samples independent
// phase tuples (one phase per environment). Scheme::direct_phase draws each
// phase with variance beta(noise, t); Scheme::ou_path integrates one OU path
// per environment.
McResult mc_evolve(const Matrix& rho0, const Partition& partition,
                   const NoiseParams& noise, double t,
                   const TrajectoryConfig& config);

}  // namespace dephasim
