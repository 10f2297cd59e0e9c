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

// Named reproduction scenarios for the four-qubit GHZ benchmark, saturation
// tables with embedded reference readings, and CSV emission.

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "dephasim/measures.hpp"

namespace dephasim {

// Uniform grid of `steps` points covering [0, t_max] (a single point grid is
// just {0}). Throws std::invalid_argument for steps < 1 or t_max < 0.
std::vector<double> time_grid(double t_max, int steps);

// A named sweep: one or more partitions crossed with one or more g values on
// a common time grid.
struct Scenario {
  std::string name;
  std::vector<std::string> partitions;  // preset names
  std::vector<double> g_values;
  double lambda = 1.0;
  double p = 1.0;
  double t_max = 0.0;
  int steps = 1;
};

// Built-in scenarios:
//   fig2..fig5   cse/bse/tse/ise at g = 1, 400 points on [0, 2]
//   fig6..fig9   cse/bse/tse/ise at g in {1e-2, 1e-1, 10}, 400 points on
//                [0, 10]
//   fig10        all four partitions at g in {1e-4, 5e-3}, 1200 points on
//                [0, 120]
std::vector<std::string> scenario_names();
Scenario scenario_by_name(std::string_view name);  // throws on unknown name

// One computed curve of a scenario.
struct SeriesRun {
  std::string partition;
  double g = 0.0;
  MeasureSeries series;
  std::vector<double> beta;  // beta(g, t) per grid point (same for all envs)
};

// Deterministic evaluation of every (partition, g) pair of the scenario.
std::vector<SeriesRun> run_scenario(const Scenario& scenario,
                                    EntropyBase base = EntropyBase::natural);

// One saturation-table row: asymptotic levels (computed from the exact
// beta -> infinity channel), saturation times at the configured relative
// threshold, and the phase variance at the end of the grid.
struct TableRow {
  std::string config;
  double g = 0.0;
  double t_max = 0.0;
  double ew_level = 0.0;
  double p_level = 0.0;
  double h_level = 0.0;
  SaturationReport ew_sat;
  SaturationReport p_sat;
  SaturationReport h_sat;
  double beta_end = 0.0;
};

// Published reference readings for the same rows. Levels are printed to two
// decimals in the source tables and saturation times are read off figures,
// so these are comparison data only, never inputs to any computation.
// Saturation times beyond the grid are stored as +infinity.
struct ReferenceRow {
  const char* config;
  double g;
  double ew_level, ew_st;
  double p_level, p_st;
  double h_level, h_st;
};

// Table presets: "table1".."table4" (cse/bse/tse/ise, g in {1e-2, 1e-1, 10},
// grid of 400 points on [0, 10]) and "comparative" (all four configs,
// g in {1e-4, 5e-3}, 1200 points on [0, 120]).
std::vector<std::string> table_presets();
std::vector<TableRow> reproduce_tables(std::string_view preset,
                                       double rel_threshold = 0.05);
std::vector<ReferenceRow> reference_rows(std::string_view preset);

// CSV: `t,ew,purity,entropy_nats[,beta_env0,...]`, 12 significant digits,
// '.' decimal separator, '\n' newlines. beta_columns may be empty; when the
// entropy base is two the entropy header is `entropy_bits`.
void write_series_csv(std::ostream& out, const MeasureSeries& series,
                      const std::vector<std::vector<double>>& beta_columns = {},
                      EntropyBase base = EntropyBase::natural);

// Parsed form of a series CSV, for round-tripping.
struct ParsedSeries {
  MeasureSeries series;
  std::vector<std::vector<double>> beta_columns;
};
ParsedSeries parse_series_csv(std::istream& in);

// CSV: `config,g,ew_level,ew_st,p_level,p_st,h_level,h_st,beta_end`, with the
// sentinel `>tmax` for saturation times not reached on the grid.
void write_table_csv(std::ostream& out, const std::vector<TableRow>& rows);

// Writes content to path via a temporary file in the same directory followed
// by an atomic rename. Throws std::runtime_error with path context on I/O
// failure.
void write_file_atomic(const std::string& path, const std::string& content);

// 12-significant-digit decimal formatting used by every CSV cell.
std::string format_sig(double value);

}  // namespace dephasim
