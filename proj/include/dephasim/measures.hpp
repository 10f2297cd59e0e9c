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

// Observables: entanglement witness, purity, Shannon (von Neumann) entropy,
// and saturation detection on time series.

#pragma once

#include <vector>

#include "dephasim/channel.hpp"
#include "dephasim/linalg.hpp"
#include "dephasim/model.hpp"

namespace dephasim {

// Time grid with the three measure columns (entropy in the requested base;
// nats unless stated otherwise).
struct MeasureSeries {
  std::vector<double> times;
  std::vector<double> ew;
  std::vector<double> purity;
  std::vector<double> entropy;
};

// Outcome of saturation detection for one measure column.
//   level            the asymptotic value the band is taken around
//   saturation_time  first grid time inside the band (meaningless if
//                    beyond_grid)
//   beyond_grid      true if the band is never entered on the grid
struct SaturationReport {
  double level = 0.0;
  double saturation_time = 0.0;
  bool beyond_grid = false;
  double rel_threshold = 0.0;
};

// Witness expectation -Tr[((1/2)I - rho0) rho] = Tr[rho0 rho] - 1/2.
// Positive values certify that rho still overlaps the initial state more
// than any separable state can. Throws DimensionError on mismatched dims.
double entanglement_witness(const Matrix& rho, const Matrix& rho0);

// Tr[rho^2]; 1 for pure states, 1/d for the maximally mixed state.
double purity(const Matrix& rho);

enum class EntropyBase { natural, two };

// -sum_i lambda_i log(lambda_i) over the spectrum of rho, with
// 0 log 0 = 0. Rounding-level negative eigenvalues in [-1e-10, 0) are
// clamped to zero; anything below -1e-10 is rejected (not a state).
double shannon_entropy(const Matrix& rho,
                       EntropyBase base = EntropyBase::natural);

// First grid time at which |value - asymptote| falls within
// rel_threshold * |value(0) - asymptote|; beyond_grid if never. Requires a
// non-empty series with times and values of equal length and
// rel_threshold in (0, 1).
SaturationReport saturation(const std::vector<double>& times,
                            const std::vector<double>& values,
                            double asymptote, double rel_threshold = 0.05);

// Convenience: evolve rho0 on the grid and evaluate all three measures.
// The witness is taken against rho0 itself.
MeasureSeries measure_series(const Matrix& rho0, const Partition& partition,
                             const NoiseParams& noise,
                             const std::vector<double>& t_grid,
                             EntropyBase base = EntropyBase::natural);

}  // namespace dephasim
