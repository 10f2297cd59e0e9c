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

// Acceptance harness: one pass/fail verdict per numbered criterion, each
// printed with the measured values and the pinned tolerance. Criteria are
// selected with --criteria (comma list of numbers and ranges, e.g. "1-8" or
// "9"); the exit status is nonzero iff any selected criterion fails.
//
// Criterion 9 compares computed saturation times against readings taken off
// published figures. The computed common-environment purity saturation times
// sit well outside the +/-30% band around those readings; the criterion is
// asserted as stated and is expected to fail. The remaining saturation-time
// entries are reported for comparison without a hard assertion.

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <set>
#include <string>
#include <vector>

#include "dephasim/channel.hpp"
#include "dephasim/experiments.hpp"
#include "dephasim/linalg.hpp"
#include "dephasim/measures.hpp"
#include "dephasim/model.hpp"
#include "dephasim/montecarlo.hpp"
#include "test_util.hpp"

namespace {

using dephasim::Complex;
using dephasim::Matrix;
using dephasim::NoiseParams;
using dephasim::Partition;

std::string fmt(const char* format, ...) {
  va_list args;
  va_start(args, format);
  char buf[768];
  std::vsnprintf(buf, sizeof buf, format, args);
  va_end(args);
  return std::string(buf);
}

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      details.push_back("VIOLATION: " + what);
    }
  }
  void note(const std::string& what) { details.push_back(what); }
};

const char* kPresets[] = {"cse", "bse", "tse", "ise"};

double entropy_of_spectrum(const std::vector<double>& spectrum) {
  double h = 0.0;
  for (double x : spectrum) {
    if (x > 0.0) h -= x * std::log(x);
  }
  return h;
}

// ---------------------------------------------------------------------------
// 1. Asymptotic saturation levels for the four partition presets.
// ---------------------------------------------------------------------------
Outcome criterion_levels() {
  Outcome out;
  const Matrix ghz = dephasim::ghz_density(4);

  // Exact levels follow from the beta -> infinity channel: the surviving
  // X-basis blocks have entries 1/8 on the collective-eigenvalue classes,
  // giving the spectra below.
  struct Row {
    const char* name;
    double ew, p;
    std::vector<double> spectrum;
    double pub_ew, pub_p, pub_h;  // two-decimal published levels
  };
  const std::vector<Row> rows = {
      {"cse", 3.0 / 32.0, 19.0 / 32.0, {0.75, 0.125, 0.125}, 0.09, 0.60, 0.73},
      {"bse", -3.0 / 16.0, 5.0 / 16.0, {0.5, 0.125, 0.125, 0.125, 0.125},
       -0.20, 0.32, 1.35},
      {"tse", -5.0 / 16.0, 3.0 / 16.0,
       {0.25, 0.25, 0.125, 0.125, 0.125, 0.125}, -0.30, 0.18, 1.73},
      {"ise", -3.0 / 8.0, 1.0 / 8.0,
       {0.125, 0.125, 0.125, 0.125, 0.125, 0.125, 0.125, 0.125}, -0.37, 0.13,
       2.10},
  };

  for (const Row& row : rows) {
    const Matrix rho_inf =
        dephasim::asymptotic(ghz, Partition::preset(row.name));
    const double ew = dephasim::entanglement_witness(rho_inf, ghz);
    const double p = dephasim::purity(rho_inf);
    const double h = dephasim::shannon_entropy(rho_inf);
    const double h_exact = entropy_of_spectrum(row.spectrum);

    out.note(fmt("%s: EW % .12f  P %.12f  H %.12f  (exact % .12f / %.12f / "
                 "%.12f)",
                 row.name, ew, p, h, row.ew, row.p, h_exact));
    out.require(std::abs(ew - row.ew) <= 1e-10,
                fmt("%s witness level vs exact: |%.12e| > 1e-10", row.name,
                    ew - row.ew));
    out.require(std::abs(p - row.p) <= 1e-10,
                fmt("%s purity level vs exact: |%.12e| > 1e-10", row.name,
                    p - row.p));
    out.require(std::abs(h - h_exact) <= 1e-10,
                fmt("%s entropy level vs exact: |%.12e| > 1e-10", row.name,
                    h - h_exact));
    out.require(std::abs(ew - row.pub_ew) <= 0.05 &&
                    std::abs(p - row.pub_p) <= 0.05 &&
                    std::abs(h - row.pub_h) <= 0.05,
                fmt("%s level vs published two-decimal reading beyond 0.05 "
                    "(EW %.3f/% .2f, P %.3f/%.2f, H %.3f/%.2f)",
                    row.name, ew, row.pub_ew, p, row.pub_p, h, row.pub_h));
  }
  out.note(
      "published levels are two-decimal roundings; the largest gap is the "
      "bipartite entropy (1.386294 vs 1.35, gap 0.036, inside the 0.05 band)");
  return out;
}

// ---------------------------------------------------------------------------
// 2. Closed-form regression for the common environment.
// ---------------------------------------------------------------------------
Outcome criterion_closed_forms() {
  Outcome out;
  const Matrix ghz = dephasim::ghz_density(4);
  const Partition cse = Partition::preset("cse");
  const double g_values[] = {0.01, 0.05, 0.1, 0.5, 1.0,
                             2.0,  5.0,  10.0, 50.0, 100.0};
  const double t_values[] = {0.1, 0.5, 1.0, 2.0, 5.0};

  double max_dev = 0.0;
  double max_alt_dev = 0.0;  // alternative corner-exponent reading
  int pairs = 0;
  for (double g : g_values) {
    for (double t : t_values) {
      const NoiseParams noise{g, 1.0, 0.0};
      const double b = dephasim::beta(noise, t);
      const Matrix rho = dephasim::evolve(ghz, cse, noise, t);
      const double ew = dephasim::entanglement_witness(rho, ghz);
      const double p = dephasim::purity(rho);

      // Collective eigenvalue gaps on the GHZ support are 0, 4, 8; the
      // witness collects exp(-gap^2 beta / 2) and the purity its square.
      const double ew_exact =
          (3.0 + std::exp(-32.0 * b) + 12.0 * std::exp(-8.0 * b)) / 32.0;
      const double p_exact =
          (19.0 + std::exp(-64.0 * b) + 12.0 * std::exp(-16.0 * b)) / 32.0;
      // A halved corner exponent (exp(-16 beta) / exp(-32 beta)) is the only
      // other reading consistent with the published shorthand; track how far
      // it sits from the computed dynamics.
      const double ew_alt =
          (3.0 + std::exp(-16.0 * b) + 12.0 * std::exp(-8.0 * b)) / 32.0;
      const double p_alt =
          (19.0 + std::exp(-32.0 * b) + 12.0 * std::exp(-16.0 * b)) / 32.0;

      max_dev = std::max({max_dev, std::abs(ew - ew_exact),
                          std::abs(p - p_exact)});
      max_alt_dev = std::max({max_alt_dev, std::abs(ew - ew_alt),
                              std::abs(p - p_alt)});
      ++pairs;
      out.require(std::abs(ew - ew_exact) <= 1e-12,
                  fmt("EW closed form at g=%g t=%g: dev %.3e > 1e-12", g, t,
                      ew - ew_exact));
      out.require(std::abs(p - p_exact) <= 1e-12,
                  fmt("purity closed form at g=%g t=%g: dev %.3e > 1e-12", g,
                      t, p - p_exact));
    }
  }
  out.note(fmt("%d (g,t) pairs; max |channel - closed form| = %.3e "
               "(tolerance 1e-12)",
               pairs, max_dev));
  out.note(fmt("alternative corner-decay reading deviates by up to %.3e, "
               "ruling it out; the Gaussian kernel fixes exponents "
               "8*beta and 32*beta on the witness",
               max_alt_dev));
  return out;
}

// ---------------------------------------------------------------------------
// 3. Phase variance beta(g, t): published exact values and an independent
//    quadrature oracle.
// ---------------------------------------------------------------------------
Outcome criterion_beta() {
  Outcome out;

  // Published long-horizon values, given in exact form in the source tables.
  const double ref1 = -9880.0 + 10000.0 * std::exp(-3.0 / 250.0);  // g=1e-4
  const double ref2 = -80.0 + 200.0 * std::exp(-3.0 / 5.0);        // g=5e-3
  const double b1 = dephasim::beta(NoiseParams{1e-4, 1.0, 0.0}, 120.0);
  const double b2 = dephasim::beta(NoiseParams{5e-3, 1.0, 0.0}, 120.0);
  out.note(fmt("beta(1e-4, 120) = %.12f, published -9880+10000 e^{-3/250} = "
               "%.12f, dev %.3e",
               b1, ref1, b1 - ref1));
  out.note(fmt("beta(5e-3, 120) = %.12f, published -80+200 e^{-3/5} = %.12f, "
               "dev %.3e",
               b2, ref2, b2 - ref2));
  out.require(std::abs(b1 - ref1) <= 1e-6, "beta(1e-4, 120) beyond 1e-6");
  out.require(std::abs(b2 - ref2) <= 1e-6, "beta(5e-3, 120) beyond 1e-6");

  // Quadrature oracle: composite 2-D trapezoid of the autocorrelation kernel.
  const double q1 = dephasim_test::beta_quadrature(1e-4, 120.0);
  const double q2 = dephasim_test::beta_quadrature(5e-3, 120.0);
  out.require(std::abs(b1 - q1) <= 1e-6,
              fmt("quadrature dev at (1e-4, 120): %.3e", b1 - q1));
  out.require(std::abs(b2 - q2) <= 1e-6,
              fmt("quadrature dev at (5e-3, 120): %.3e", b2 - q2));

  dephasim::Rng rng(7);
  double max_dev = 0.0;
  for (int k = 0; k < 10; ++k) {
    const double g = 0.05 + 1.95 * rng.uniform();
    const double t = 0.1 + 7.9 * rng.uniform();
    const double b = dephasim::beta(NoiseParams{g, 1.0, 0.0}, t);
    const double q = dephasim_test::beta_quadrature(g, t);
    max_dev = std::max(max_dev, std::abs(b - q));
    out.require(std::abs(b - q) <= 1e-6,
                fmt("quadrature dev %.3e > 1e-6 at g=%.4f t=%.4f", b - q, g,
                    t));
  }
  out.note(fmt("10 random (g,t) pairs vs quadrature: max dev %.3e "
               "(tolerance 1e-6)",
               max_dev));
  return out;
}

// ---------------------------------------------------------------------------
// 4. Direct-phase Monte Carlo oracle agreement.
// ---------------------------------------------------------------------------
Outcome criterion_monte_carlo() {
  Outcome out;
  const Matrix ghz = dephasim::ghz_density(4);
  const NoiseParams noise{1.0, 1.0, 0.0};
  const double t = 2.0;

  dephasim::TrajectoryConfig config;
  config.samples = 100000;
  config.seed = 42;
  config.scheme = dephasim::Scheme::direct_phase;

  for (const char* name : kPresets) {
    const Partition part = Partition::preset(name);
    const Matrix exact = dephasim::evolve(ghz, part, noise, t);
    const dephasim::McResult mc =
        dephasim::mc_evolve(ghz, part, noise, t, config);
    const double dist = dephasim::frobenius_distance(mc.estimate, exact);
    out.note(fmt("%s: Frobenius distance %.5f (standard error %.5f), bound "
                 "0.02",
                 name, dist, mc.standard_error));
    out.require(dist <= 0.02,
                fmt("%s Monte Carlo distance %.5f > 0.02", name, dist));
  }
  return out;
}

// ---------------------------------------------------------------------------
// 5. Path-integral variance of the exactly discretized OU process.
// ---------------------------------------------------------------------------
Outcome criterion_ou_variance() {
  Outcome out;
  const int paths = 20000;
  const struct {
    double g, t;
  } cases[] = {{1.0, 2.0}, {10.0, 1.0}, {0.1, 10.0}};

  for (const auto& c : cases) {
    const double dt = std::min(1e-3, 0.01 / c.g);
    const NoiseParams noise{c.g, 1.0, 0.0};
    const double expected = dephasim::beta(noise, c.t);

    double sum = 0.0, sum_sq = 0.0;
    for (int i = 0; i < paths; ++i) {
      dephasim::Rng rng = dephasim::Rng::substream(20260825u, i);
      const double phi = dephasim::ou_path_phase(rng, noise, c.t, dt);
      sum += phi;
      sum_sq += phi * phi;
    }
    const double mean = sum / paths;
    const double var = (sum_sq - paths * mean * mean) / (paths - 1);
    const double rel = std::abs(var / expected - 1.0);
    out.note(fmt("g=%g t=%g dt=%g: Var[phi] = %.6f vs beta = %.6f "
                 "(rel dev %.4f, tolerance 0.05)",
                 c.g, c.t, dt, var, expected, rel));
    out.require(rel <= 0.05, fmt("variance at g=%g t=%g off by %.4f > 5%%",
                                 c.g, c.t, rel));
  }
  return out;
}

// ---------------------------------------------------------------------------
// 6. Monotonicity of all three measures and decay ordering in g.
// ---------------------------------------------------------------------------
Outcome criterion_monotonicity() {
  Outcome out;
  const Matrix ghz = dephasim::ghz_density(4);
  const std::vector<double> g_values = {1e-2, 1e-1, 1.0, 10.0};
  const std::vector<double> grid = dephasim::time_grid(10.0, 400);

  double worst = 0.0;
  long long violations = 0;
  for (const char* name : kPresets) {
    const Partition part = Partition::preset(name);
    std::vector<dephasim::MeasureSeries> by_g;
    for (double g : g_values) {
      by_g.push_back(dephasim::measure_series(ghz, part,
                                              NoiseParams{g, 1.0, 0.0}, grid));
    }
    for (std::size_t gi = 0; gi < by_g.size(); ++gi) {
      const dephasim::MeasureSeries& s = by_g[gi];
      for (std::size_t i = 1; i < s.times.size(); ++i) {
        const double dew = s.ew[i] - s.ew[i - 1];
        const double dp = s.purity[i] - s.purity[i - 1];
        const double dh = s.entropy[i - 1] - s.entropy[i];
        for (double d : {dew, dp, dh}) {
          if (d > 1e-12) {
            ++violations;
            worst = std::max(worst, d);
          }
        }
      }
      // Larger g dephases faster: purity ordered pointwise across g.
      if (gi > 0) {
        for (std::size_t i = 0; i < grid.size(); ++i) {
          const double d = by_g[gi].purity[i] - by_g[gi - 1].purity[i];
          if (d > 1e-12) {
            ++violations;
            worst = std::max(worst, d);
          }
        }
      }
    }
  }
  out.note(fmt("4 presets x 4 g values on 400-point grids: %lld violations "
               "beyond 1e-12 (worst %.3e)",
               violations, worst));
  out.require(violations == 0, "monotonicity / g-ordering violated");
  return out;
}

// ---------------------------------------------------------------------------
// 7. Entropy ordering across partitions on the long-horizon grids.
// ---------------------------------------------------------------------------
Outcome criterion_ordering() {
  Outcome out;
  const std::vector<dephasim::SeriesRun> runs =
      dephasim::run_scenario(dephasim::scenario_by_name("fig10"));
  // Runs are partition-major over {cse,bse,tse,ise} x {1e-4, 5e-3}.
  const int n_g = 2;
  double worst = 0.0;
  long long violations = 0;
  for (int gi = 0; gi < n_g; ++gi) {
    for (int pi = 0; pi + 1 < 4; ++pi) {
      const dephasim::MeasureSeries& lo = runs[pi * n_g + gi].series;
      const dephasim::MeasureSeries& hi = runs[(pi + 1) * n_g + gi].series;
      for (std::size_t i = 0; i < lo.times.size(); ++i) {
        const double d = lo.entropy[i] - hi.entropy[i];
        if (d > 1e-10) {
          ++violations;
          worst = std::max(worst, d);
        }
      }
    }
  }
  out.note(fmt("H_cse <= H_bse <= H_tse <= H_ise pointwise at g in "
               "{1e-4, 5e-3} on 1200-point grids over [0, 120]: %lld "
               "violations beyond 1e-10 (worst %.3e)",
               violations, worst));
  out.require(violations == 0, "entropy ordering violated");
  return out;
}

// ---------------------------------------------------------------------------
// 8. Channel property suite on randomized density matrices.
// ---------------------------------------------------------------------------
Outcome criterion_properties() {
  Outcome out;
  const int n_states = 100;
  const Matrix identity16 = Matrix::Identity(16, 16) / 16.0;

  double worst_trace = 0.0, worst_psd = 0.0, worst_unital = 0.0;
  double worst_semigroup = 0.0, worst_factor = 0.0, worst_eps = 0.0;
  double worst_involution = 0.0;

  for (int k = 0; k < n_states; ++k) {
    dephasim::Rng rng = dephasim::Rng::substream(99u, k);
    const Matrix rho = dephasim_test::random_density(rng, 16);
    const Partition part = Partition::preset(kPresets[k % 4]);
    const double g = 0.05 * std::pow(100.0, rng.uniform());  // [0.05, 5]
    const double t1 = 5.0 * rng.uniform();
    const double t2 = 5.0 * rng.uniform();
    const NoiseParams noise{g, 1.0, 0.0};

    // Trace preservation and positivity.
    const Matrix evolved = dephasim::evolve(rho, part, noise, t1);
    worst_trace =
        std::max(worst_trace, std::abs(evolved.trace().real() - 1.0));
    const std::vector<double> spectrum =
        dephasim::hermitian_eigenvalues(evolved);
    worst_psd = std::max(worst_psd, -spectrum.back());

    // Unitality.
    worst_unital = std::max(
        worst_unital, dephasim::frobenius_distance(
                          dephasim::evolve(identity16, part, noise, t1),
                          identity16));

    // Semigroup in the per-environment variances (distinct per environment).
    const int n_envs = part.n_envs;
    std::vector<double> beta1(n_envs), beta2(n_envs), beta12(n_envs);
    for (int e = 0; e < n_envs; ++e) {
      beta1[e] = dephasim::beta(noise, t1) * (1.0 + 0.1 * e);
      beta2[e] = dephasim::beta(noise, t2) * (1.0 + 0.05 * e);
      beta12[e] = beta1[e] + beta2[e];
    }
    const Matrix two_step = dephasim::apply_channel(
        dephasim::DephasingChannel{part, beta2, 1.0},
        dephasim::apply_channel(dephasim::DephasingChannel{part, beta1, 1.0},
                                rho));
    const Matrix one_step = dephasim::apply_channel(
        dephasim::DephasingChannel{part, beta12, 1.0}, rho);
    worst_semigroup = std::max(
        worst_semigroup, dephasim::frobenius_distance(two_step, one_step));

    // Independent-environment channel factorizes into single-qubit channels.
    const Partition ise = Partition::preset("ise");
    const Matrix joint = dephasim::evolve(rho, ise, noise, t1);
    const double b = dephasim::beta(noise, t1);
    Matrix factored = rho;
    for (int q = 0; q < 4; ++q) {
      Matrix h2(2, 2);
      const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
      h2 << inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2;
      Matrix padded = Matrix::Identity(1, 1);
      for (int j = 0; j < 4; ++j) {
        padded = dephasim::kron(padded, j == q ? h2
                                               : Matrix(Matrix::Identity(2, 2)));
      }
      factored = padded * factored * padded;
      const double decay = std::exp(-2.0 * b);  // eigenvalue gap 2, lambda 1
      for (int r = 0; r < 16; ++r) {
        for (int c = 0; c < 16; ++c) {
          const bool differ = (((r >> (3 - q)) ^ (c >> (3 - q))) & 1) != 0;
          if (differ) factored(r, c) *= decay;
        }
      }
      factored = padded * factored * padded;
    }
    worst_factor =
        std::max(worst_factor, dephasim::frobenius_distance(joint, factored));

    // The epsilon offset never enters the averaged dynamics.
    for (double eps : {1.0, 5.0}) {
      worst_eps = std::max(
          worst_eps,
          dephasim::frobenius_distance(
              dephasim::evolve(rho, part, NoiseParams{g, 1.0, eps}, t1),
              evolved));
    }

    // Hadamard conjugation is involutive.
    worst_involution = std::max(
        worst_involution,
        dephasim::frobenius_distance(
            dephasim::hadamard_transform(dephasim::hadamard_transform(rho)),
            rho));
  }

  out.note(fmt("%d random density matrices (mixtures of random pure states)",
               n_states));
  out.note(fmt("worst |trace - 1|        = %.3e (tolerance 1e-12)",
               worst_trace));
  out.note(fmt("worst negative eigenvalue = %.3e (tolerance 1e-10)",
               worst_psd));
  out.note(fmt("worst unitality drift     = %.3e (tolerance 1e-12)",
               worst_unital));
  out.note(fmt("worst semigroup gap       = %.3e (tolerance 1e-12)",
               worst_semigroup));
  out.note(fmt("worst factorization gap   = %.3e (tolerance 1e-12)",
               worst_factor));
  out.note(fmt("worst epsilon dependence  = %.3e (tolerance 1e-12)",
               worst_eps));
  out.note(fmt("worst involution drift    = %.3e (tolerance 1e-12)",
               worst_involution));

  out.require(worst_trace <= 1e-12, "trace preservation");
  out.require(worst_psd <= 1e-10, "positive semidefiniteness");
  out.require(worst_unital <= 1e-12, "unitality");
  out.require(worst_semigroup <= 1e-12, "variance semigroup");
  out.require(worst_factor <= 1e-12, "single-qubit factorization");
  out.require(worst_eps <= 1e-12, "epsilon invariance");
  out.require(worst_involution <= 1e-12, "Hadamard involution");
  return out;
}

// ---------------------------------------------------------------------------
// 9. Saturation times against readings taken off published figures.
// ---------------------------------------------------------------------------
Outcome criterion_saturation_times() {
  Outcome out;
  const Matrix ghz = dephasim::ghz_density(4);
  const Partition cse = Partition::preset("cse");
  const double p_level = dephasim::purity(dephasim::asymptotic(ghz, cse));
  const std::vector<double> grid = dephasim::time_grid(10.0, 400);

  const struct {
    double g, published;
  } cases[] = {{1e-2, 9.0}, {1e-1, 3.0}};

  for (const auto& c : cases) {
    const dephasim::MeasureSeries series = dephasim::measure_series(
        ghz, cse, NoiseParams{c.g, 1.0, 0.0}, grid);
    const dephasim::SaturationReport rep =
        dephasim::saturation(series.times, series.purity, p_level, 0.05);
    const double rel = rep.saturation_time / c.published - 1.0;
    out.note(fmt("cse purity, g=%g: computed saturation %.4f vs published "
                 "reading %.1f (%.1f%%; +/-30%% band)",
                 c.g, rep.saturation_time, c.published, 100.0 * rel));
    out.require(!rep.beyond_grid && std::abs(rel) <= 0.30,
                fmt("saturation time at g=%g outside the +/-30%% band around "
                    "the published reading",
                    c.g));
  }
  out.note(
      "the published times are readings off plotted curves; the computed "
      "5%-band crossings sit ~33% earlier, consistently across g, so the "
      "readings are not reproducible from the implemented dynamics at this "
      "threshold");

  // Comparison artifact: every remaining saturation-time entry, computed vs
  // published, with no hard assertion.
  auto st_text = [](const dephasim::SaturationReport& rep) {
    return rep.beyond_grid ? std::string(">grid")
                           : fmt("%.3f", rep.saturation_time);
  };
  auto ref_text = [](double st) {
    return std::isinf(st) ? std::string(">grid") : fmt("%.1f", st);
  };
  for (const std::string& preset : dephasim::table_presets()) {
    const std::vector<dephasim::TableRow> rows =
        dephasim::reproduce_tables(preset);
    const std::vector<dephasim::ReferenceRow> refs =
        dephasim::reference_rows(preset);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      out.note(fmt("%-11s %s g=%-6g EW %.7s/%s  P %.7s/%s  H %.7s/%s",
                   (preset + ":").c_str(), rows[i].config.c_str(), rows[i].g,
                   st_text(rows[i].ew_sat).c_str(),
                   ref_text(refs[i].ew_st).c_str(),
                   st_text(rows[i].p_sat).c_str(),
                   ref_text(refs[i].p_st).c_str(),
                   st_text(rows[i].h_sat).c_str(),
                   ref_text(refs[i].h_st).c_str()));
    }
  }
  return out;
}

struct Criterion {
  int id;
  const char* title;
  Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "asymptotic saturation levels (four presets)", criterion_levels},
    {2, "common-environment closed-form regression", criterion_closed_forms},
    {3, "phase variance vs published values and quadrature", criterion_beta},
    {4, "Monte Carlo oracle agreement", criterion_monte_carlo},
    {5, "OU path-integral variance", criterion_ou_variance},
    {6, "measure monotonicity and g-ordering", criterion_monotonicity},
    {7, "entropy ordering across partitions", criterion_ordering},
    {8, "channel property suite", criterion_properties},
    {9, "saturation times vs published figure readings",
     criterion_saturation_times},
};

bool parse_criteria(const std::string& spec, std::set<int>* selected) {
  std::size_t pos = 0;
  while (pos < spec.size()) {
    std::size_t comma = spec.find(',', pos);
    if (comma == std::string::npos) comma = spec.size();
    const std::string token = spec.substr(pos, comma - pos);
    pos = comma + 1;
    if (token.empty()) return false;
    const std::size_t dash = token.find('-');
    try {
      if (dash == std::string::npos) {
        selected->insert(std::stoi(token));
      } else {
        const int lo = std::stoi(token.substr(0, dash));
        const int hi = std::stoi(token.substr(dash + 1));
        if (lo > hi) return false;
        for (int i = lo; i <= hi; ++i) selected->insert(i);
      }
    } catch (const std::exception&) {
      return false;
    }
  }
  return !selected->empty();
}

}  // namespace

int main(int argc, char** argv) {
  std::string spec = "1-9";
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criteria") == 0 && i + 1 < argc) {
      spec = argv[++i];
    } else if (std::strcmp(argv[i], "--help") == 0) {
      std::printf("usage: %s [--criteria LIST]\n", argv[0]);
      std::printf("  LIST: comma-separated numbers or ranges, e.g. 1-8 or "
                  "1,3,9 (default 1-9)\n");
      return 0;
    } else {
      std::fprintf(stderr, "unknown argument: %s\n", argv[i]);
      return 2;
    }
  }

  std::set<int> selected;
  if (!parse_criteria(spec, &selected)) {
    std::fprintf(stderr, "bad --criteria value: %s\n", spec.c_str());
    return 2;
  }

  int failures = 0;
  int run_count = 0;
  for (const Criterion& criterion : kCriteria) {
    if (selected.count(criterion.id) == 0) continue;
    ++run_count;
    const Outcome outcome = criterion.run();
    for (const std::string& line : outcome.details) {
      std::printf("    %s\n", line.c_str());
    }
    std::printf("[%s] %d. %s\n", outcome.pass ? "PASS" : "FAIL", criterion.id,
                criterion.title);
    std::fflush(stdout);
    if (!outcome.pass) ++failures;
  }

  if (run_count == 0) {
    std::fprintf(stderr, "no known criteria selected (have 1-9)\n");
    return 2;
  }
  std::printf("acceptance: %d of %d selected criteria passed\n",
              run_count - failures, run_count);
  return failures == 0 ? 0 : 1;
}
