#include "skingame/commands.hpp"

#include <cmath>
#include <fstream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "skingame/analytics.hpp"
#include "skingame/distributions.hpp"
#include "skingame/estimation.hpp"
#include "skingame/payoff_engine.hpp"

namespace skingame::cli {

namespace {

std::uint64_t require_seed(const std::optional<std::uint64_t>& seed, const char* command) {
  if (!seed) fail(ErrorKind::kValidation, fmt::format("{}: --seed is required", command));
  return *seed;
}

std::optional<std::size_t> reference_index(std::span<const double> axis, double value) {
  for (std::size_t i = 0; i < axis.size(); ++i) {
    if (std::abs(axis[i] - value) < 1e-12) return i;
  }
  return std::nullopt;
}

bool near(double a, double b) { return std::abs(a - b) < 1e-12; }

// Published concealment figures for the families that have one.
std::optional<std::string> concealment_annotation(const Distribution& dist) {
  if (const auto* p = std::get_if<MirroredPareto>(&dist.family())) {
    if (near(p->alpha, 1.15)) return "reference: > 90%";
  }
  if (const auto* p = std::get_if<NegativeLognormal>(&dist.family())) {
    if (near(p->sigma, 1.0)) return "reference: 69%";
    if (near(p->sigma, 2.0)) return "reference: 84%";
  }
  return std::nullopt;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(ErrorKind::kIo, fmt::format("cannot open '{}' for writing", path));
  return f;
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kIo:
      return kExitIo;
    case ErrorKind::kNoBlowup:
      return kExitNoBlowup;
    case ErrorKind::kNoSurvivor:
      return kExitNoSurvivor;
    case ErrorKind::kValidation:
    case ErrorKind::kDegenerateSplit:
    case ErrorKind::kInfiniteMean:
    case ErrorKind::kInfeasibleFamily:
    case ErrorKind::kEmptySeries:
      return kExitValidation;
  }
  return kExitValidation;
}

int cmd_table1(const Table1Options& opts, std::ostream& out, std::ostream& log) {
  const MultiplierGrid grid = table1(opts.f_values, opts.r_values, opts.m_periods);
  write_grid(out, grid, opts.format);

  if (opts.m_periods != reference::kTableM) {
    fmt::print(log, "M={} differs from reference M={}, no reference check\n", opts.m_periods,
               reference::kTableM);
    return kExitOk;
  }
  std::size_t checked = 0;
  std::size_t failed = 0;
  for (std::size_t row = 0; row < grid.r_values.size(); ++row) {
    for (std::size_t col = 0; col < grid.f_values.size(); ++col) {
      const double value = grid.values[row][col];
      const auto ri = reference_index(reference::kTableR, grid.r_values[row]);
      const auto fi = reference_index(reference::kTableF, grid.f_values[col]);
      if (!ri || !fi) {
        fmt::print(log, "----  r={} F={} value={} (no reference)\n", grid.r_values[row],
                   grid.f_values[col], format_grid_cell(value));
        continue;
      }
      const double ref = reference::kTableValues[*ri][*fi];
      const double rel = std::abs(value / ref - 1.0);
      const bool ok = rel <= reference::kTableRelTol;
      ++checked;
      failed += ok ? 0 : 1;
      fmt::print(log, "{}  r={} F={} value={} reference={} rel_err={:.3e}\n",
                 ok ? "PASS" : "FAIL", grid.r_values[row], grid.f_values[col],
                 format_grid_cell(value), ref, rel);
    }
  }
  fmt::print(log, "{}/{} reference cells within {:g}% relative\n", checked - failed, checked,
             100.0 * reference::kTableRelTol);
  return failed == 0 ? kExitOk : kExitTolerance;
}

int cmd_split(const SplitOptions& opts, std::ostream& out, std::ostream& /*log*/) {
  const Distribution dist = parse_distribution(opts.dist);
  double k = 0.0;
  if (opts.k == "mean") {
    k = dist.mean();
  } else {
    std::size_t used = 0;
    try {
      k = std::stod(opts.k, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    require(!opts.k.empty() && used == opts.k.size(),
            fmt::format("--k must be a number or 'mean', got '{}'", opts.k));
  }
  const SplitMeasures s = split_at(dist, k);
  Report report;
  report.add("distribution", dist.describe())
      .add("k", k)
      .add("f_plus", s.f_plus)
      .add("f_minus", s.f_minus)
      .add("e_plus", s.e_plus)
      .add("e_minus", s.e_minus)
      .add("nu", s.nu)
      .add("m", s.m);
  report.write(out, opts.format);
  return kExitOk;
}

int cmd_simulate(const SimulateOptions& opts, std::ostream& out, std::ostream& log) {
  const std::uint64_t seed = require_seed(opts.seed, "simulate");
  const Distribution dist = parse_distribution(opts.dist);
  Contract contract{opts.gamma, opts.k, opts.m_periods, ConstantExposure{opts.q}};
  if (opts.r) contract.exposure = MultiplicativeExposure{opts.q, *opts.r};
  contract.validate();
  if (opts.blowup_path) {
    require(opts.r.has_value(), "--emit-blowup-path requires multiplicative exposure (--r)");
  }

  const EnsembleStats stats =
      simulate_ensemble(contract, dist, opts.n_paths, seed, EnsembleOptions{opts.threads});
  Report report;
  report.add("n_paths", static_cast<long long>(stats.n_paths))
      .add("mean_payoff", stats.mean_payoff)
      .add("stderr_payoff", stats.stderr_payoff)
      .add("blowup_fraction", stats.blowup_fraction)
      .add("mean_principal_pnl", stats.mean_principal_pnl);
  for (std::size_t i = 0; i < stats.tau_histogram.size(); ++i) {
    report.add(fmt::format("tau_{}", i + 1), static_cast<long long>(stats.tau_histogram[i]));
  }
  report.write(out, opts.format);

  try {
    const double closed = expected_payoff(contract, dist);
    const double exact = expected_path_payoff(contract, dist);
    fmt::print(log, "multiplier closed form gamma*E+*q*multiplier = {}\n", format_value(closed));
    fmt::print(log, "exact path expectation gamma*q*(E+-k)*sum F^i e^(ri) = {}\n",
               format_value(exact));
    if (stats.stderr_payoff > 0.0) {
      fmt::print(log, "z vs multiplier = {:.3f}, z vs exact = {:.3f}\n",
                 (stats.mean_payoff - closed) / stats.stderr_payoff,
                 (stats.mean_payoff - exact) / stats.stderr_payoff);
    }
  } catch (const Error& e) {
    fmt::print(log, "no closed-form comparison: {}\n", e.what());
  }

  if (opts.blowup_path) {
    const PathResult path = blowup_trajectory(contract, dist, seed, opts.blowup_attempts);
    std::ofstream f = open_output(*opts.blowup_path);
    f << "i,q,x,gross\n";
    for (std::size_t i = 0; i < path.returns.size(); ++i) {
      f << (i + 1) << ',' << format_value(path.exposures[i]) << ','
        << format_value(path.returns[i]) << ',' << format_value(path.gross[i]) << '\n';
    }
    if (!f) fail(ErrorKind::kIo, fmt::format("error writing '{}'", *opts.blowup_path));
    fmt::print(log, "blowup path: tau={} written to {}\n", path.tau_index, *opts.blowup_path);
  }
  return kExitOk;
}

int cmd_conceal(const ConcealOptions& opts, std::ostream& out, std::ostream& log) {
  require(opts.dist.has_value() != opts.series.has_value(),
          "conceal: give exactly one of --dist or --series");
  Report report;
  if (opts.series) {
    const ReturnSeries series = read_series_csv(*opts.series);
    const ConcealmentScore score = concealment_score(series);
    if (score.degenerate) fmt::print(log, "warning: constant series, score set to 0\n");
    report.add("source", series.label())
        .add("n", static_cast<long long>(series.size()))
        .add("concealment_score", score.score)
        .add("degenerate", std::string(score.degenerate ? "true" : "false"));
    report.write(out, opts.format);
    return kExitOk;
  }

  const Distribution dist = parse_distribution(*opts.dist);
  const double p = prob_above_mean(dist);
  report.add("distribution", dist.describe())
      .add("mean", dist.mean())
      .add("prob_above_mean", p)
      .add("annotation", concealment_annotation(dist).value_or(""));
  if (opts.mc_samples > 0) {
    const std::uint64_t seed = require_seed(opts.seed, "conceal --mc-samples");
    const std::vector<double> xs = sample(dist, opts.mc_samples, seed);
    const double m = dist.mean();
    std::size_t above = 0;
    for (const double x : xs) above += x > m ? 1 : 0;
    const double n = static_cast<double>(xs.size());
    const double frac = static_cast<double>(above) / n;
    const double se = std::sqrt(p * (1.0 - p) / n);
    report.add("mc_samples", static_cast<long long>(xs.size()))
        .add("mc_fraction_above_mean", frac)
        .add("mc_stderr", se)
        .add("mc_z", se > 0.0 ? (frac - p) / se : 0.0);
  }
  report.write(out, opts.format);
  return kExitOk;
}

int cmd_estimate(const EstimateOptions& opts, std::ostream& out, std::ostream& /*log*/) {
  const ReturnSeries series = read_series_csv(opts.series);
  const EmpiricalSplit s = empirical_split(series, opts.k);
  Report report;
  report.add("source", series.label())
      .add("n", static_cast<long long>(series.size()))
      .add("k", opts.k)
      .add("n_above", static_cast<long long>(s.n_above))
      .add("n_below", static_cast<long long>(s.n_below))
      .add("f_plus_hat", s.f_plus_hat)
      .add("f_minus_hat", s.f_minus_hat)
      .add("e_plus_hat", s.e_plus_hat)
      .add("e_minus_hat", s.e_minus_hat)
      .add("nu_hat", s.nu_hat)
      .add("mean_hat", s.mean_hat);
  report.write(out, opts.format);
  return kExitOk;
}

int cmd_sample(const SampleOptions& opts, std::ostream& out, std::ostream& /*log*/) {
  const std::uint64_t seed = require_seed(opts.seed, "sample");
  const Distribution dist = parse_distribution(opts.dist);
  write_series_csv(out, sample(dist, opts.n, seed));
  return kExitOk;
}

}  // namespace skingame::cli
