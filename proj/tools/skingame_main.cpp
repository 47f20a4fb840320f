// skingame: command-line front end for the payoff-asymmetry toolkit.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "skingame/commands.hpp"

namespace {

using skingame::OutputFormat;

const std::vector<std::string> kFormats{"csv", "json"};

struct Sink {
  std::string path;
  std::ostringstream buffer;

  // Output files appear only on success and are written in one piece.
  int flush(int code) {
    if (path.empty()) {
      std::cout << buffer.str();
      return code;
    }
    std::ofstream f(path, std::ios::binary);
    f << buffer.str();
    if (!f) {
      std::cerr << "error: cannot write '" << path << "'\n";
      return skingame::cli::kExitIo;
    }
    return code;
  }
};

void add_format(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember(kFormats))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = skingame::cli;
  CLI::App app{"Agent payoff asymmetry under skewed, fat-tailed returns"};
  app.require_subcommand(1);

  Sink sink;
  std::string format = "csv";

  cli::Table1Options t1;
  auto* table1 = app.add_subcommand("table1", "Multiplier sensitivity grid");
  table1->add_option("--m", t1.m_periods, "Incentive periods M")->capture_default_str();
  table1->add_option("--f", t1.f_values, "F+ values")->delimiter(',');
  table1->add_option("--r", t1.r_values, "Exposure growth rates")->delimiter(',');
  add_format(table1, format);
  table1->add_option("--out", sink.path, "Grid output file (default stdout)");

  cli::SplitOptions sp;
  auto* split = app.add_subcommand("split", "Upper/lower split measures at a hurdle");
  split->add_option("--dist", sp.dist, "family:p1,p2[,p3]")->required();
  split->add_option("--k", sp.k, "Hurdle value or 'mean'")->capture_default_str();
  add_format(split, format);
  split->add_option("--out", sink.path, "Output file (default stdout)");

  cli::SimulateOptions sim;
  std::uint64_t sim_seed = 0;
  double sim_r = 0.0;
  std::string blowup_path;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo ensemble of agent careers");
  simulate->add_option("--dist", sim.dist, "family:p1,p2[,p3]")->required();
  simulate->add_option("--gamma", sim.gamma, "Compensation rate")->capture_default_str();
  simulate->add_option("--k", sim.k, "Hurdle")->capture_default_str();
  simulate->add_option("--m", sim.m_periods, "Incentive periods M")->capture_default_str();
  simulate->add_option("--q", sim.q, "Base exposure")->capture_default_str();
  auto* r_opt = simulate->add_option("--r", sim_r, "Exposure growth rate (multiplicative)");
  simulate->add_option("--paths", sim.n_paths, "Number of paths")->capture_default_str();
  auto* sim_seed_opt = simulate->add_option("--seed", sim_seed, "Master seed");
  simulate->add_option("--threads", sim.threads, "Worker threads (0 = all cores)");
  add_format(simulate, format);
  simulate->add_option("--out", sink.path, "Summary output file (default stdout)");
  auto* blowup_opt = simulate->add_option("--emit-blowup-path", blowup_path,
                                          "Write one blowup trajectory (i,q,x,gross) here");
  simulate->add_option("--blowup-attempts", sim.blowup_attempts, "Rejection-sampling cap")
      ->capture_default_str();

  cli::ConcealOptions con;
  std::string con_dist;
  std::string con_series;
  std::uint64_t con_seed = 0;
  auto* conceal = app.add_subcommand("conceal", "Probability of exceeding the mean");
  auto* con_dist_opt = conceal->add_option("--dist", con_dist, "family:p1,p2[,p3]");
  auto* con_series_opt = conceal->add_option("--series", con_series, "Series CSV file");
  con_dist_opt->excludes(con_series_opt);
  conceal->add_option("--mc-samples", con.mc_samples, "Monte Carlo cross-check sample count");
  auto* con_seed_opt = conceal->add_option("--seed", con_seed, "Seed for --mc-samples");
  add_format(conceal, format);
  conceal->add_option("--out", sink.path, "Output file (default stdout)");

  cli::EstimateOptions est;
  auto* estimate = app.add_subcommand("estimate", "Empirical split of a return series");
  estimate->add_option("--series", est.series, "Series CSV file")->required();
  estimate->add_option("--k", est.k, "Hurdle")->capture_default_str();
  add_format(estimate, format);
  estimate->add_option("--out", sink.path, "Output file (default stdout)");

  cli::SampleOptions smp;
  std::uint64_t smp_seed = 0;
  auto* sample = app.add_subcommand("sample", "Write a seeded sample as a series CSV");
  sample->add_option("--dist", smp.dist, "family:p1,p2[,p3]")->required();
  sample->add_option("--n", smp.n, "Sample size")->capture_default_str();
  auto* smp_seed_opt = sample->add_option("--seed", smp_seed, "Seed");
  sample->add_option("--out", sink.path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitValidation;
  }

  try {
    const OutputFormat fmt = skingame::parse_format(format);
    int code = cli::kExitOk;
    if (table1->parsed()) {
      t1.format = fmt;
      code = cli::cmd_table1(t1, sink.buffer, std::cerr);
    } else if (split->parsed()) {
      sp.format = fmt;
      code = cli::cmd_split(sp, sink.buffer, std::cerr);
    } else if (simulate->parsed()) {
      sim.format = fmt;
      if (*sim_seed_opt) sim.seed = sim_seed;
      if (*r_opt) sim.r = sim_r;
      if (*blowup_opt) sim.blowup_path = blowup_path;
      code = cli::cmd_simulate(sim, sink.buffer, std::cerr);
    } else if (conceal->parsed()) {
      con.format = fmt;
      if (*con_dist_opt) con.dist = con_dist;
      if (*con_series_opt) con.series = con_series;
      if (*con_seed_opt) con.seed = con_seed;
      code = cli::cmd_conceal(con, sink.buffer, std::cerr);
    } else if (estimate->parsed()) {
      est.format = fmt;
      code = cli::cmd_estimate(est, sink.buffer, std::cerr);
    } else if (sample->parsed()) {
      if (*smp_seed_opt) smp.seed = smp_seed;
      code = cli::cmd_sample(smp, sink.buffer, std::cerr);
    }
    return sink.flush(code);
  } catch (const skingame::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::exit_code_for(e.kind());
  }
}
