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

#include "dephasim/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace dephasim {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

const std::vector<std::string> kFigPartitions = {"cse", "bse", "tse", "ise"};

// Published saturation readings for the [0, 10] tables. Levels carry two
// decimals; times are figure readings; +inf marks "not reached on the grid".
const ReferenceRow kTable1[] = {
    {"cse", 1e-2, 0.09, 10.0, 0.60, 9.0, 0.73, 9.0},
    {"cse", 1e-1, 0.09, 4.5, 0.60, 3.0, 0.73, 3.0},
    {"cse", 10.0, 0.09, 1.5, 0.60, 1.3, 0.73, 0.8},
};
const ReferenceRow kTable2[] = {
    {"bse", 1e-2, -0.20, kInf, 0.32, kInf, 1.35, kInf},
    {"bse", 1e-1, -0.20, 7.0, 0.32, 5.0, 1.35, 5.0},
    {"bse", 10.0, -0.20, 3.0, 0.32, 2.3, 1.35, 1.3},
};
const ReferenceRow kTable3[] = {
    {"tse", 1e-2, -0.30, kInf, 0.18, kInf, 1.73, kInf},
    {"tse", 1e-1, -0.30, 7.0, 0.18, 4.5, 1.73, 4.5},
    {"tse", 10.0, -0.30, 3.0, 0.18, 1.8, 1.73, 1.8},
};
const ReferenceRow kTable4[] = {
    {"ise", 1e-2, -0.37, kInf, 0.13, kInf, 2.10, kInf},
    {"ise", 1e-1, -0.37, 6.7, 0.13, 4.5, 2.10, 4.5},
    {"ise", 10.0, -0.37, 2.5, 0.13, 1.8, 2.10, 1.3},
};
// Published readings for the [0, 120] comparative table.
const ReferenceRow kComparative[] = {
    {"cse", 1e-4, 0.09, 110.0, 0.60, 90.0, 0.73, 90.0},
    {"cse", 5e-3, 0.09, 17.0, 0.60, 16.0, 0.73, 16.0},
    {"bse", 1e-4, -0.20, kInf, 0.32, 120.0, 1.35, 120.0},
    {"bse", 5e-3, -0.20, 30.0, 0.32, 20.0, 1.35, 20.0},
    {"tse", 1e-4, -0.30, 120.0, 0.18, 117.0, 1.73, 117.0},
    {"tse", 5e-3, -0.30, 25.0, 0.18, 20.0, 1.73, 18.0},
    {"ise", 1e-4, -0.37, 110.0, 0.13, 120.0, 2.10, 120.0},
    {"ise", 5e-3, -0.37, 17.0, 0.13, 23.0, 2.10, 20.0},
};

struct TableSpec {
  std::vector<std::string> configs;
  std::vector<double> g_values;
  double t_max;
  int steps;
  const ReferenceRow* reference;
  std::size_t reference_count;
};

TableSpec table_spec(std::string_view preset) {
  if (preset == "table1")
    return {{"cse"}, {1e-2, 1e-1, 10.0}, 10.0, 400, kTable1, 3};
  if (preset == "table2")
    return {{"bse"}, {1e-2, 1e-1, 10.0}, 10.0, 400, kTable2, 3};
  if (preset == "table3")
    return {{"tse"}, {1e-2, 1e-1, 10.0}, 10.0, 400, kTable3, 3};
  if (preset == "table4")
    return {{"ise"}, {1e-2, 1e-1, 10.0}, 10.0, 400, kTable4, 3};
  if (preset == "comparative")
    return {{"cse", "bse", "tse", "ise"},
            {1e-4, 5e-3},
            120.0,
            1200,
            kComparative,
            8};
  throw std::invalid_argument("unknown table preset '" + std::string(preset) +
                              "' (expected table1..table4 or comparative)");
}

}  // namespace

std::vector<double> time_grid(double t_max, int steps) {
  if (steps < 1) {
    throw std::invalid_argument("time_grid: steps must be >= 1");
  }
  if (!(std::isfinite(t_max) && t_max >= 0.0)) {
    throw std::invalid_argument("time_grid: t_max must be finite and >= 0");
  }
  if (steps == 1) return {0.0};
  std::vector<double> grid(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    grid[static_cast<std::size_t>(i)] =
        t_max * static_cast<double>(i) / static_cast<double>(steps - 1);
  }
  return grid;
}

std::vector<std::string> scenario_names() {
  return {"fig2", "fig3", "fig4", "fig5", "fig6",
          "fig7", "fig8", "fig9", "fig10"};
}

Scenario scenario_by_name(std::string_view name) {
  Scenario s;
  s.name = std::string(name);
  if (name == "fig2" || name == "fig3" || name == "fig4" || name == "fig5") {
    const std::size_t idx = static_cast<std::size_t>(name[3] - '2');
    s.partitions = {kFigPartitions[idx]};
    s.g_values = {1.0};
    s.t_max = 2.0;
    s.steps = 400;
    return s;
  }
  if (name == "fig6" || name == "fig7" || name == "fig8" || name == "fig9") {
    const std::size_t idx = static_cast<std::size_t>(name[3] - '6');
    s.partitions = {kFigPartitions[idx]};
    s.g_values = {1e-2, 1e-1, 10.0};
    s.t_max = 10.0;
    s.steps = 400;
    return s;
  }
  if (name == "fig10") {
    s.partitions = kFigPartitions;
    s.g_values = {1e-4, 5e-3};
    s.t_max = 120.0;
    s.steps = 1200;
    return s;
  }
  throw std::invalid_argument("unknown scenario '" + std::string(name) + "'");
}

std::vector<SeriesRun> run_scenario(const Scenario& scenario,
                                    EntropyBase base) {
  const std::vector<double> grid = time_grid(scenario.t_max, scenario.steps);
  std::vector<SeriesRun> runs;
  for (const std::string& part_name : scenario.partitions) {
    const Partition partition = Partition::parse(part_name);
    const Matrix rho0 =
        initial_density({partition.n_qubits(), scenario.p});
    for (double g : scenario.g_values) {
      NoiseParams noise{g, scenario.lambda, 0.0};
      SeriesRun run;
      run.partition = part_name;
      run.g = g;
      run.series = measure_series(rho0, partition, noise, grid, base);
      run.beta.reserve(grid.size());
      for (double t : grid) run.beta.push_back(beta(noise, t));
      runs.push_back(std::move(run));
    }
  }
  return runs;
}

std::vector<std::string> table_presets() {
  return {"table1", "table2", "table3", "table4", "comparative"};
}

std::vector<TableRow> reproduce_tables(std::string_view preset,
                                       double rel_threshold) {
  const TableSpec spec = table_spec(preset);
  const std::vector<double> grid = time_grid(spec.t_max, spec.steps);
  std::vector<TableRow> rows;
  for (const std::string& config : spec.configs) {
    const Partition partition = Partition::parse(config);
    const Matrix rho0 = initial_density({partition.n_qubits(), 1.0});
    const Matrix limit = asymptotic(rho0, partition);
    const double ew_level = entanglement_witness(limit, rho0);
    const double p_level = purity(limit);
    const double h_level = shannon_entropy(limit);
    for (double g : spec.g_values) {
      NoiseParams noise{g, 1.0, 0.0};
      const MeasureSeries series =
          measure_series(rho0, partition, noise, grid);
      TableRow row;
      row.config = config;
      row.g = g;
      row.t_max = spec.t_max;
      row.ew_level = ew_level;
      row.p_level = p_level;
      row.h_level = h_level;
      row.ew_sat = saturation(grid, series.ew, ew_level, rel_threshold);
      row.p_sat = saturation(grid, series.purity, p_level, rel_threshold);
      row.h_sat = saturation(grid, series.entropy, h_level, rel_threshold);
      row.beta_end = beta(noise, spec.t_max);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<ReferenceRow> reference_rows(std::string_view preset) {
  const TableSpec spec = table_spec(preset);
  return {spec.reference, spec.reference + spec.reference_count};
}

std::string format_sig(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

void write_series_csv(std::ostream& out, const MeasureSeries& series,
                      const std::vector<std::vector<double>>& beta_columns,
                      EntropyBase base) {
  const std::size_t n = series.times.size();
  if (series.ew.size() != n || series.purity.size() != n ||
      series.entropy.size() != n) {
    throw std::invalid_argument("write_series_csv: ragged series");
  }
  for (const auto& col : beta_columns) {
    if (col.size() != n) {
      throw std::invalid_argument("write_series_csv: ragged beta column");
    }
  }
  out << "t,ew,purity,"
      << (base == EntropyBase::natural ? "entropy_nats" : "entropy_bits");
  for (std::size_t e = 0; e < beta_columns.size(); ++e) {
    out << ",beta_env" << e;
  }
  out << "\n";
  for (std::size_t i = 0; i < n; ++i) {
    out << format_sig(series.times[i]) << ',' << format_sig(series.ew[i])
        << ',' << format_sig(series.purity[i]) << ','
        << format_sig(series.entropy[i]);
    for (const auto& col : beta_columns) {
      out << ',' << format_sig(col[i]);
    }
    out << "\n";
  }
}

ParsedSeries parse_series_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error("parse_series_csv: missing header");
  }
  std::vector<std::string> headers;
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) headers.push_back(cell);
  }
  if (headers.size() < 4 || headers[0] != "t" || headers[1] != "ew" ||
      headers[2] != "purity" ||
      (headers[3] != "entropy_nats" && headers[3] != "entropy_bits")) {
    throw std::runtime_error("parse_series_csv: unexpected header '" + line +
                             "'");
  }
  ParsedSeries parsed;
  parsed.beta_columns.resize(headers.size() - 4);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    std::vector<double> cells;
    while (std::getline(ss, cell, ',')) cells.push_back(std::stod(cell));
    if (cells.size() != headers.size()) {
      throw std::runtime_error("parse_series_csv: ragged row '" + line + "'");
    }
    parsed.series.times.push_back(cells[0]);
    parsed.series.ew.push_back(cells[1]);
    parsed.series.purity.push_back(cells[2]);
    parsed.series.entropy.push_back(cells[3]);
    for (std::size_t e = 4; e < cells.size(); ++e) {
      parsed.beta_columns[e - 4].push_back(cells[e]);
    }
  }
  return parsed;
}

void write_table_csv(std::ostream& out, const std::vector<TableRow>& rows) {
  const auto st_cell = [](const SaturationReport& report) {
    return report.beyond_grid ? std::string(">tmax")
                              : format_sig(report.saturation_time);
  };
  out << "config,g,ew_level,ew_st,p_level,p_st,h_level,h_st,beta_end\n";
  for (const TableRow& row : rows) {
    out << row.config << ',' << format_sig(row.g) << ','
        << format_sig(row.ew_level) << ',' << st_cell(row.ew_sat) << ','
        << format_sig(row.p_level) << ',' << st_cell(row.p_sat) << ','
        << format_sig(row.h_level) << ',' << st_cell(row.h_sat) << ','
        << format_sig(row.beta_end) << "\n";
  }
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot open temporary file '" + tmp.string() +
                               "' for '" + path + "'");
    }
    out << content;
    out.flush();
    if (!out) {
      throw std::runtime_error("write failed for '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw std::runtime_error("cannot move temporary file into place for '" +
                             path + "'");
  }
}

}  // namespace dephasim
