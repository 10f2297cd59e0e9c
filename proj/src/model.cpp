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

#include "dephasim/model.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace dephasim {

namespace {

std::string lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace

void validate(const NoiseParams& noise) {
  if (!(std::isfinite(noise.g) && noise.g > 0.0)) {
    throw std::invalid_argument("NoiseParams: g must be finite and > 0");
  }
  if (!(std::isfinite(noise.lambda) && noise.lambda >= 0.0)) {
    throw std::invalid_argument("NoiseParams: lambda must be finite and >= 0");
  }
  if (!std::isfinite(noise.epsilon)) {
    throw std::invalid_argument("NoiseParams: epsilon must be finite");
  }
}

Partition Partition::preset(std::string_view name) {
  const std::string key = lower(name);
  if (key == "cse") return Partition{{0, 0, 0, 0}, 1};
  if (key == "bse") return Partition{{0, 0, 1, 1}, 2};
  if (key == "tse") return Partition{{0, 1, 2, 2}, 3};
  if (key == "ise") return Partition{{0, 1, 2, 3}, 4};
  throw std::invalid_argument("Partition: unknown preset '" +
                              std::string(name) +
                              "' (expected cse, bse, tse, or ise)");
}

Partition Partition::parse(std::string_view text) {
  const std::string key = lower(text);
  if (key == "cse" || key == "bse" || key == "tse" || key == "ise") {
    return preset(key);
  }

  Partition partition;
  std::size_t pos = 0;
  const std::string body(text);
  while (pos <= body.size()) {
    const std::size_t comma = std::min(body.find(',', pos), body.size());
    const std::string token = body.substr(pos, comma - pos);
    std::size_t used = 0;
    int id = 0;
    try {
      id = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("Partition: cannot parse '" +
                                  std::string(text) + "'");
    }
    if (used != token.size()) {
      throw std::invalid_argument("Partition: bad token '" + token + "' in '" +
                                  std::string(text) + "'");
    }
    partition.assignments.push_back(id);
    pos = comma + 1;
    if (comma == body.size()) break;
  }
  partition.n_envs =
      partition.assignments.empty()
          ? 0
          : 1 + *std::max_element(partition.assignments.begin(),
                                  partition.assignments.end());
  validate(partition);
  return partition;
}

void validate(const Partition& partition) {
  if (partition.assignments.empty()) {
    throw std::invalid_argument("Partition: no qubits");
  }
  if (partition.n_envs < 1) {
    throw std::invalid_argument("Partition: n_envs must be >= 1");
  }
  std::vector<bool> used(static_cast<std::size_t>(partition.n_envs), false);
  for (int id : partition.assignments) {
    if (id < 0 || id >= partition.n_envs) {
      throw std::invalid_argument(
          "Partition: environment ids must lie in {0.." +
          std::to_string(partition.n_envs - 1) + "}");
    }
    used[static_cast<std::size_t>(id)] = true;
  }
  if (std::find(used.begin(), used.end(), false) != used.end()) {
    throw std::invalid_argument(
        "Partition: every environment id up to n_envs-1 must be used");
  }
}

double beta(const NoiseParams& noise, double t) {
  validate(noise);
  if (!(std::isfinite(t) && t >= 0.0)) {
    throw std::invalid_argument("beta: t must be finite and >= 0");
  }
  const double x = noise.g * t;
  if (x < 1e-6) {
    // Leading series of (x + e^{-x} - 1)/g; avoids cancellation for tiny x.
    return noise.g * t * t / 2.0 - noise.g * noise.g * t * t * t / 6.0;
  }
  // x + e^{-x} - 1 computed as x + expm1(-x), exact to rounding.
  return (x + std::expm1(-x)) / noise.g;
}

Matrix ghz_density(int n_qubits) {
  if (n_qubits < 2 || n_qubits > 12) {
    throw std::invalid_argument("ghz_density: n_qubits must be in [2, 12]");
  }
  const Eigen::Index d = Eigen::Index{1} << n_qubits;
  Matrix rho = Matrix::Zero(d, d);
  rho(0, 0) = 0.5;
  rho(0, d - 1) = 0.5;
  rho(d - 1, 0) = 0.5;
  rho(d - 1, d - 1) = 0.5;
  return rho;
}

Matrix initial_density(const InitialState& state) {
  if (!(std::isfinite(state.p) && state.p >= 0.0 && state.p <= 1.0)) {
    throw std::invalid_argument("initial_density: p must lie in [0, 1]");
  }
  Matrix rho = ghz_density(state.n_qubits);  // validates n_qubits
  const Eigen::Index d = rho.rows();
  rho *= state.p;
  rho += Matrix::Identity(d, d) * ((1.0 - state.p) / static_cast<double>(d));
  return rho;
}

int collective_eigenvalue(const Partition& partition, int env,
                          int basis_index) {
  validate(partition);
  if (env < 0 || env >= partition.n_envs) {
    throw std::out_of_range("collective_eigenvalue: env out of range");
  }
  const int n = partition.n_qubits();
  if (basis_index < 0 || basis_index >= (1 << n)) {
    throw std::out_of_range("collective_eigenvalue: basis index out of range");
  }
  int s = 0;
  for (int q = 0; q < n; ++q) {
    if (partition.assignments[static_cast<std::size_t>(q)] != env) continue;
    const int bit = (basis_index >> (n - 1 - q)) & 1;  // qubit 0 = MSB
    s += 1 - 2 * bit;
  }
  return s;
}

}  // namespace dephasim
