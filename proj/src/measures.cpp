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

#include "dephasim/measures.hpp"

#include <cmath>
#include <stdexcept>

namespace dephasim {

double entanglement_witness(const Matrix& rho, const Matrix& rho0) {
  detail::require_square("entanglement_witness", rho.rows(), rho.cols());
  detail::require_same_dim("entanglement_witness", rho.rows(), rho0.rows());
  detail::require_same_dim("entanglement_witness", rho.cols(), rho0.cols());
  return (rho0 * rho).trace().real() - 0.5;
}

double purity(const Matrix& rho) {
  detail::require_square("purity", rho.rows(), rho.cols());
  return (rho * rho).trace().real();
}

double shannon_entropy(const Matrix& rho, EntropyBase base) {
  const std::vector<double> eigs = hermitian_eigenvalues(rho);
  double h = 0.0;
  for (double lam : eigs) {
    if (lam < -1e-10) {
      throw NumericalError(
          "shannon_entropy: eigenvalue " + std::to_string(lam) +
          " is too negative for a density matrix");
    }
    if (lam <= 0.0) continue;  // clamp [-1e-10, 0) to 0; 0 log 0 = 0
    h -= lam * std::log(lam);
  }
  if (base == EntropyBase::two) h /= std::log(2.0);
  return h;
}

SaturationReport saturation(const std::vector<double>& times,
                            const std::vector<double>& values,
                            double asymptote, double rel_threshold) {
  if (times.empty() || times.size() != values.size()) {
    throw std::invalid_argument(
        "saturation: need equal-length, non-empty times and values");
  }
  if (!(rel_threshold > 0.0 && rel_threshold < 1.0)) {
    throw std::invalid_argument("saturation: threshold must lie in (0, 1)");
  }
  SaturationReport report;
  report.level = asymptote;
  report.rel_threshold = rel_threshold;
  const double band = rel_threshold * std::abs(values.front() - asymptote);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (std::abs(values[i] - asymptote) <= band) {
      report.saturation_time = times[i];
      return report;
    }
  }
  report.beyond_grid = true;
  report.saturation_time = times.back();
  return report;
}

MeasureSeries measure_series(const Matrix& rho0, const Partition& partition,
                             const NoiseParams& noise,
                             const std::vector<double>& t_grid,
                             EntropyBase base) {
  const std::vector<Matrix> states =
      evolve_series(rho0, partition, noise, t_grid);
  MeasureSeries series;
  series.times = t_grid;
  series.ew.reserve(states.size());
  series.purity.reserve(states.size());
  series.entropy.reserve(states.size());
  for (const Matrix& rho : states) {
    series.ew.push_back(entanglement_witness(rho, rho0));
    series.purity.push_back(purity(rho));
    series.entropy.push_back(shannon_entropy(rho, base));
  }
  return series;
}

}  // namespace dephasim
