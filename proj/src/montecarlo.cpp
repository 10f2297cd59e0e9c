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

#include "dephasim/montecarlo.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>

namespace dephasim {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// splitmix64 output finalizer.
std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

void require_density(const char* op, const Matrix& rho) {
  detail::require_square(op, rho.rows(), rho.cols());
  const double herm_dev = (rho - Matrix(rho.adjoint())).cwiseAbs().maxCoeff();
  if (!(herm_dev <= 1e-9)) {
    throw std::invalid_argument(std::string(op) + ": state is not Hermitian");
  }
  if (!(std::abs(rho.trace() - Complex(1.0, 0.0)) <= 1e-9)) {
    throw std::invalid_argument(std::string(op) + ": state trace is not 1");
  }
}

// Worker cap: DEPHASIM_THREADS if set to a positive integer, otherwise the
// hardware concurrency. Invalid values are ignored.
std::int64_t worker_limit() {
  std::int64_t limit =
      static_cast<std::int64_t>(std::thread::hardware_concurrency());
  if (limit < 1) limit = 1;
  if (const char* env = std::getenv("DEPHASIM_THREADS")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && parsed > 0) {
      limit = static_cast<std::int64_t>(parsed);
    }
  }
  return limit;
}

}  // namespace

Rng Rng::substream(std::uint64_t seed, std::uint64_t index) {
  return Rng(mix64(seed + kGolden * (index + 1)) ^ mix64(index + kGolden));
}

std::uint64_t Rng::next_u64() {
  state_ += kGolden;
  return mix64(state_);
}

double Rng::uniform() {
  // 53-bit mantissa, shifted into (0, 1] so log(uniform()) is always finite.
  return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
}

double Rng::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(a);
  has_spare_ = true;
  return r * std::cos(a);
}

double sample_phase_direct(Rng& rng, double beta_value) {
  if (!(std::isfinite(beta_value) && beta_value >= 0.0)) {
    throw std::invalid_argument(
        "sample_phase_direct: variance must be finite and >= 0");
  }
  return std::sqrt(beta_value) * rng.gaussian();
}

double ou_path_phase(Rng& rng, const NoiseParams& noise, double t, double dt) {
  validate(noise);
  if (!(std::isfinite(t) && t > 0.0)) {
    throw std::invalid_argument("ou_path_phase: t must be > 0");
  }
  if (!(std::isfinite(dt) && dt > 0.0 && dt <= t)) {
    throw std::invalid_argument("ou_path_phase: need 0 < dt <= t");
  }
  const auto steps = static_cast<std::int64_t>(std::ceil(t / dt - 1e-12));
  const double h = t / static_cast<double>(steps);
  const double alpha = std::exp(-noise.g * h);
  const double stationary_sd = std::sqrt(noise.g / 2.0);
  const double kick = stationary_sd * std::sqrt(1.0 - alpha * alpha);

  double delta = stationary_sd * rng.gaussian();
  double phi = 0.0;
  for (std::int64_t k = 0; k < steps; ++k) {
    const double next = alpha * delta + kick * rng.gaussian();
    phi += 0.5 * (delta + next) * h;
    delta = next;
  }
  return phi;
}

Matrix unitary_for_phases(const std::vector<double>& phases,
                          const Partition& partition, double lambda,
                          int n_qubits) {
  validate(partition);
  if (n_qubits != partition.n_qubits()) {
    throw DimensionError("unitary_for_phases: partition covers " +
                         std::to_string(partition.n_qubits()) +
                         " qubits, not " + std::to_string(n_qubits));
  }
  if (phases.size() != static_cast<std::size_t>(partition.n_envs)) {
    throw std::invalid_argument(
        "unitary_for_phases: need one phase per environment");
  }
  Matrix u = Matrix::Identity(1, 1);
  for (int q = 0; q < n_qubits; ++q) {
    const double theta =
        lambda *
        phases[static_cast<std::size_t>(
            partition.assignments[static_cast<std::size_t>(q)])];
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    Matrix uq(2, 2);
    uq << Complex(c, 0.0), Complex(0.0, -s),  //
        Complex(0.0, -s), Complex(c, 0.0);
    u = kron(u, uq);  // qubit 0 becomes the most significant factor
  }
  return u;
}

McResult mc_evolve(const Matrix& rho0, const Partition& partition,
                   const NoiseParams& noise, double t,
                   const TrajectoryConfig& config) {
  require_density("mc_evolve", rho0);
  validate(partition);
  validate(noise);
  if (config.samples < 1) {
    throw std::invalid_argument("mc_evolve: need at least one sample");
  }
  const Eigen::Index d = rho0.rows();
  const int n_qubits = partition.n_qubits();
  if (d != (Eigen::Index{1} << n_qubits)) {
    throw DimensionError("mc_evolve: state dimension does not match qubits");
  }
  const double beta_t = beta(noise, t);
  const std::int64_t m = config.samples;

  // One U rho0 U^dagger term for sample index i.
  const auto sample_term = [&](std::int64_t i) {
    Rng rng = Rng::substream(config.seed, static_cast<std::uint64_t>(i));
    std::vector<double> phases(static_cast<std::size_t>(partition.n_envs));
    for (double& phi : phases) {
      phi = config.scheme == Scheme::direct_phase
                ? sample_phase_direct(rng, beta_t)
                : ou_path_phase(rng, noise, t, config.dt);
    }
    const Matrix u =
        unitary_for_phases(phases, partition, noise.lambda, n_qubits);
    return Matrix(u * rho0 * u.adjoint());
  };

  // Fixed-shape reduction: samples are grouped into blocks of kBlock
  // consecutive indices, each block is summed in index order, and block
  // partials are folded with a pairwise tree over the block index. Workers
  // only decide *who* computes a block, never the summation order, so the
  // result is bit-identical for any worker count.
  constexpr std::int64_t kBlock = 256;
  const std::int64_t num_blocks = (m + kBlock - 1) / kBlock;
  std::vector<Matrix> block_sum(static_cast<std::size_t>(num_blocks));
  std::vector<RealMatrix> block_sq(static_cast<std::size_t>(num_blocks));

  const auto run_block = [&](std::int64_t b) {
    Matrix sum = Matrix::Zero(d, d);
    RealMatrix sq = RealMatrix::Zero(d, d);
    const std::int64_t hi = std::min(m, (b + 1) * kBlock);
    for (std::int64_t i = b * kBlock; i < hi; ++i) {
      const Matrix term = sample_term(i);
      sum += term;
      sq += term.cwiseAbs2();
    }
    block_sum[static_cast<std::size_t>(b)] = std::move(sum);
    block_sq[static_cast<std::size_t>(b)] = sq;
  };

  const std::int64_t workers = std::min(worker_limit(), num_blocks);
  if (workers <= 1) {
    for (std::int64_t b = 0; b < num_blocks; ++b) run_block(b);
  } else {
    std::atomic<std::int64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (std::int64_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::int64_t b = next.fetch_add(1); b < num_blocks;
             b = next.fetch_add(1)) {
          run_block(b);
        }
      });
    }
    for (std::thread& th : pool) th.join();
  }

  for (std::int64_t step = 1; step < num_blocks; step *= 2) {
    for (std::int64_t i = 0; i + step < num_blocks; i += 2 * step) {
      block_sum[static_cast<std::size_t>(i)] +=
          block_sum[static_cast<std::size_t>(i + step)];
      block_sq[static_cast<std::size_t>(i)] +=
          block_sq[static_cast<std::size_t>(i + step)];
    }
  }

  const Matrix mean = block_sum[0] / static_cast<double>(m);
  McResult result;
  result.estimate = 0.5 * (mean + Matrix(mean.adjoint()));
  if (m > 1) {
    const RealMatrix var =
        ((block_sq[0] - static_cast<double>(m) * mean.cwiseAbs2()) /
         static_cast<double>(m - 1))
            .cwiseMax(0.0);
    result.standard_error =
        std::sqrt(var.sum() / static_cast<double>(m));
  } else {
    result.standard_error = 0.0;
  }
  return result;
}

}  // namespace dephasim
