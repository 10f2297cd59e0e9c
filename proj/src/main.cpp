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

// Command-line front end.
//
// Exit codes: 0 success, 1 computation or tolerance failure, 2 usage error.

#include <cmath>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dephasim/channel.hpp"
#include "dephasim/experiments.hpp"
#include "dephasim/measures.hpp"
#include "dephasim/montecarlo.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitComputation = 1;
constexpr int kExitUsage = 2;

struct EvolveOptions {
  int qubits = 4;
  std::string partition = "cse";
  double g = 1.0;
  double lambda = 1.0;
  double p = 1.0;
  double t_max = 2.0;
  int steps = 400;
  std::string output;
  std::string entropy_base = "nats";
  bool with_beta = false;
};

struct TableOptions {
  std::string preset;
  double threshold = 0.05;
  std::string output;
  bool compare = false;
};

struct ValidateOptions {
  int qubits = 4;
  std::string partition = "cse";
  double g = 1.0;
  double lambda = 1.0;
  double p = 1.0;
  double t = 2.0;
  std::int64_t samples = 100000;
  std::uint64_t seed = 42;
  std::string scheme = "direct-phase";
  double dt = 1e-3;
  double tol = 0.02;
  double var_tol = 0.05;
  std::int64_t var_paths = 20000;
};

struct BetaOptions {
  double g = 1.0;
  double t = 0.0;
};

// Resolves --partition/--qubits into a checked Partition. Disagreements are
// usage errors (thrown as std::invalid_argument by the callees).
dephasim::Partition resolve_partition(const std::string& text, int qubits,
                                      bool qubits_given) {
  dephasim::Partition partition = dephasim::Partition::parse(text);
  if (qubits_given && partition.n_qubits() != qubits) {
    throw std::invalid_argument("--qubits " + std::to_string(qubits) +
                                " does not match partition over " +
                                std::to_string(partition.n_qubits()) +
                                " qubits");
  }
  return partition;
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
  } else {
    dephasim::write_file_atomic(path, content);
  }
}

int run_evolve(const EvolveOptions& opt, bool qubits_given) {
  const dephasim::Partition partition =
      resolve_partition(opt.partition, opt.qubits, qubits_given);
  const dephasim::NoiseParams noise{opt.g, opt.lambda, 0.0};
  const dephasim::EntropyBase base = opt.entropy_base == "bits"
                                         ? dephasim::EntropyBase::two
                                         : dephasim::EntropyBase::natural;

  const dephasim::Matrix rho0 =
      dephasim::initial_density({partition.n_qubits(), opt.p});
  const std::vector<double> grid = dephasim::time_grid(opt.t_max, opt.steps);
  const dephasim::MeasureSeries series =
      dephasim::measure_series(rho0, partition, noise, grid, base);

  std::vector<std::vector<double>> beta_columns;
  if (opt.with_beta) {
    std::vector<double> column;
    column.reserve(grid.size());
    for (double t : grid) column.push_back(dephasim::beta(noise, t));
    beta_columns.assign(static_cast<std::size_t>(partition.n_envs), column);
  }

  std::ostringstream out;
  dephasim::write_series_csv(out, series, beta_columns, base);
  emit(opt.output, out.str());
  return kExitOk;
}

int run_table(const TableOptions& opt) {
  const std::vector<dephasim::TableRow> rows =
      dephasim::reproduce_tables(opt.preset, opt.threshold);

  std::ostringstream out;
  dephasim::write_table_csv(out, rows);
  emit(opt.output, out.str());

  if (opt.compare) {
    const std::vector<dephasim::ReferenceRow> reference =
        dephasim::reference_rows(opt.preset);
    std::cerr << "computed vs reference (level|st per measure; st '>' means "
                 "not reached on grid)\n";
    for (std::size_t i = 0; i < rows.size() && i < reference.size(); ++i) {
      const dephasim::TableRow& row = rows[i];
      const dephasim::ReferenceRow& ref = reference[i];
      const auto st = [](const dephasim::SaturationReport& r) {
        return r.beyond_grid ? std::string(">")
                             : dephasim::format_sig(r.saturation_time);
      };
      const auto ref_st = [](double v) {
        return std::isinf(v) ? std::string(">") : dephasim::format_sig(v);
      };
      std::cerr << row.config << " g=" << dephasim::format_sig(row.g)  //
                << "  ew " << dephasim::format_sig(row.ew_level) << "|"
                << st(row.ew_sat) << " vs " << dephasim::format_sig(ref.ew_level)
                << "|" << ref_st(ref.ew_st)  //
                << "  p " << dephasim::format_sig(row.p_level) << "|"
                << st(row.p_sat) << " vs " << dephasim::format_sig(ref.p_level)
                << "|" << ref_st(ref.p_st)  //
                << "  h " << dephasim::format_sig(row.h_level) << "|"
                << st(row.h_sat) << " vs " << dephasim::format_sig(ref.h_level)
                << "|" << ref_st(ref.h_st) << "\n";
    }
  }
  return kExitOk;
}

int run_validate(const ValidateOptions& opt, bool qubits_given) {
  const dephasim::Partition partition =
      resolve_partition(opt.partition, opt.qubits, qubits_given);
  const dephasim::NoiseParams noise{opt.g, opt.lambda, 0.0};
  const dephasim::Matrix rho0 =
      dephasim::initial_density({partition.n_qubits(), opt.p});

  dephasim::TrajectoryConfig config;
  config.samples = opt.samples;
  config.seed = opt.seed;
  config.dt = opt.dt;
  config.scheme = opt.scheme == "ou-path" ? dephasim::Scheme::ou_path
                                          : dephasim::Scheme::direct_phase;

  const dephasim::Matrix analytic =
      dephasim::evolve(rho0, partition, noise, opt.t);
  const dephasim::McResult mc =
      dephasim::mc_evolve(rho0, partition, noise, opt.t, config);
  const double distance = dephasim::frobenius_distance(mc.estimate, analytic);
  const bool distance_ok = distance <= opt.tol;

  std::cout << "scheme              " << opt.scheme << "\n"
            << "partition           " << opt.partition << "\n"
            << "g                   " << dephasim::format_sig(opt.g) << "\n"
            << "t                   " << dephasim::format_sig(opt.t) << "\n"
            << "samples             " << opt.samples << "\n"
            << "frobenius_distance  " << dephasim::format_sig(distance) << "\n"
            << "mc_standard_error   " << dephasim::format_sig(mc.standard_error)
            << "\n"
            << "distance_tolerance  " << dephasim::format_sig(opt.tol) << "\n"
            << "distance_ok         " << (distance_ok ? "yes" : "no") << "\n";

  bool variance_ok = true;
  if (config.scheme == dephasim::Scheme::ou_path) {
    const double expected = dephasim::beta(noise, opt.t);
    double sum = 0.0;
    double sumsq = 0.0;
    for (std::int64_t i = 0; i < opt.var_paths; ++i) {
      // A substream index space disjoint from mc_evolve's samples.
      dephasim::Rng rng = dephasim::Rng::substream(
          config.seed ^ 0xB5297A4D3F84D5B5ULL, static_cast<std::uint64_t>(i));
      const double phi = dephasim::ou_path_phase(rng, noise, opt.t, opt.dt);
      sum += phi;
      sumsq += phi * phi;
    }
    const double n = static_cast<double>(opt.var_paths);
    const double mean = sum / n;
    const double variance = (sumsq - n * mean * mean) / (n - 1.0);
    const double rel_err = std::abs(variance - expected) / expected;
    variance_ok = rel_err <= opt.var_tol;
    std::cout << "ou_paths            " << opt.var_paths << "\n"
              << "phase_variance      " << dephasim::format_sig(variance)
              << "\n"
              << "expected_variance   " << dephasim::format_sig(expected)
              << "\n"
              << "variance_rel_error  " << dephasim::format_sig(rel_err) << "\n"
              << "variance_tolerance  " << dephasim::format_sig(opt.var_tol)
              << "\n"
              << "variance_ok         " << (variance_ok ? "yes" : "no") << "\n";
  }

  return distance_ok && variance_ok ? kExitOk : kExitComputation;
}

int run_beta(const BetaOptions& opt) {
  const dephasim::NoiseParams noise{opt.g, 1.0, 0.0};
  std::cout << dephasim::format_sig(dephasim::beta(noise, opt.t)) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "dephasim: exact Gaussian-averaged dynamics of qubits dephased by "
      "partitioned classical Ornstein-Uhlenbeck noise"};
  app.require_subcommand(1);

  EvolveOptions evolve_opt;
  CLI::App* evolve = app.add_subcommand(
      "evolve", "Evolve an initial state and emit measure series CSV");
  CLI::Option* evolve_qubits =
      evolve->add_option("--qubits", evolve_opt.qubits, "Number of qubits")
          ->check(CLI::Range(2, 12))
          ->capture_default_str();
  evolve
      ->add_option("--partition", evolve_opt.partition,
                   "Preset (cse|bse|tse|ise) or assignment list like 0,1,2,2")
      ->capture_default_str();
  evolve->add_option("--g", evolve_opt.g, "Inverse autocorrelation time")
      ->check(CLI::PositiveNumber)
      ->required();
  evolve->add_option("--lambda", evolve_opt.lambda, "Coupling strength")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  evolve->add_option("--p", evolve_opt.p, "GHZ mixing weight")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  evolve->add_option("--t-max", evolve_opt.t_max, "End of the time grid")
      ->check(CLI::NonNegativeNumber)
      ->required();
  evolve->add_option("--steps", evolve_opt.steps, "Grid points on [0, t-max]")
      ->check(CLI::Range(1, 1000000))
      ->capture_default_str();
  evolve->add_option("--output,-o", evolve_opt.output,
                     "Output file (stdout when omitted)");
  evolve
      ->add_option("--entropy-base", evolve_opt.entropy_base,
                   "Entropy units: nats or bits")
      ->check(CLI::IsMember({"nats", "bits"}))
      ->capture_default_str();
  evolve->add_flag("--with-beta", evolve_opt.with_beta,
                   "Append one beta column per environment");

  TableOptions table_opt;
  CLI::App* table = app.add_subcommand(
      "table", "Emit saturation levels and times as CSV");
  table
      ->add_option("--preset", table_opt.preset,
                   "table1|table2|table3|table4|comparative")
      ->check(CLI::IsMember(
          {"table1", "table2", "table3", "table4", "comparative"}))
      ->required();
  table
      ->add_option("--threshold", table_opt.threshold,
                   "Relative saturation band")
      ->check(CLI::Range(1e-9, 0.999999))
      ->capture_default_str();
  table->add_option("--output,-o", table_opt.output,
                    "Output file (stdout when omitted)");
  table->add_flag("--compare", table_opt.compare,
                  "Also print computed-vs-reference readings to stderr");

  ValidateOptions validate_opt;
  CLI::App* validate = app.add_subcommand(
      "validate",
      "Cross-check the analytic channel against the Monte Carlo oracle");
  CLI::Option* validate_qubits =
      validate->add_option("--qubits", validate_opt.qubits, "Number of qubits")
          ->check(CLI::Range(2, 12))
          ->capture_default_str();
  validate
      ->add_option("--partition", validate_opt.partition,
                   "Preset (cse|bse|tse|ise) or assignment list")
      ->capture_default_str();
  validate->add_option("--g", validate_opt.g, "Inverse autocorrelation time")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  validate->add_option("--lambda", validate_opt.lambda, "Coupling strength")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  validate->add_option("--p", validate_opt.p, "GHZ mixing weight")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  validate->add_option("--t", validate_opt.t, "Evolution time")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  validate
      ->add_option("--samples", validate_opt.samples, "Monte Carlo samples")
      ->check(CLI::Range(std::int64_t{100}, std::int64_t{100000000}))
      ->capture_default_str();
  validate->add_option("--seed", validate_opt.seed, "PRNG seed")
      ->capture_default_str();
  validate
      ->add_option("--scheme", validate_opt.scheme,
                   "direct-phase or ou-path")
      ->check(CLI::IsMember({"direct-phase", "ou-path"}))
      ->capture_default_str();
  validate->add_option("--dt", validate_opt.dt, "OU path step")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  validate
      ->add_option("--tol", validate_opt.tol,
                   "Frobenius distance tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  validate
      ->add_option("--var-tol", validate_opt.var_tol,
                   "Relative tolerance for the OU phase variance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  validate
      ->add_option("--var-paths", validate_opt.var_paths,
                   "Paths for the OU variance estimate")
      ->check(CLI::Range(std::int64_t{100}, std::int64_t{100000000}))
      ->capture_default_str();

  BetaOptions beta_opt;
  CLI::App* beta_cmd = app.add_subcommand(
      "beta", "Print the accumulated phase variance beta(g, t)");
  beta_cmd->add_option("--g", beta_opt.g, "Inverse autocorrelation time")
      ->check(CLI::PositiveNumber)
      ->required();
  beta_cmd->add_option("--t", beta_opt.t, "Time")
      ->check(CLI::NonNegativeNumber)
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(evolve)) {
      try {
        return run_evolve(evolve_opt, evolve_qubits->count() > 0);
      } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
      }
    }
    if (app.got_subcommand(table)) return run_table(table_opt);
    if (app.got_subcommand(validate)) {
      try {
        return run_validate(validate_opt, validate_qubits->count() > 0);
      } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
      }
    }
    if (app.got_subcommand(beta_cmd)) return run_beta(beta_opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitComputation;
  }
  return kExitUsage;
}
