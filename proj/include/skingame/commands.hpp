#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "skingame/error.hpp"
#include "skingame/report.hpp"

namespace skingame::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitTolerance = 3;
inline constexpr int kExitIo = 4;
inline constexpr int kExitNoBlowup = 5;
inline constexpr int kExitNoSurvivor = 6;

int exit_code_for(ErrorKind kind);

// Each command writes its machine-readable result to `out` and human-readable
// notes to `log`, and returns an exit code. Library errors propagate as Error.

struct Table1Options {
  int m_periods = 20;
  std::vector<double> f_values{0.6, 0.7, 0.8, 0.9};
  std::vector<double> r_values{0.0, 0.1, 0.2, 0.3};
  OutputFormat format = OutputFormat::kCsv;
};
int cmd_table1(const Table1Options& opts, std::ostream& out, std::ostream& log);

struct SplitOptions {
  std::string dist;
  std::string k = "0";  // a number or "mean"
  OutputFormat format = OutputFormat::kCsv;
};
int cmd_split(const SplitOptions& opts, std::ostream& out, std::ostream& log);

struct SimulateOptions {
  std::string dist;
  double gamma = 1.0;
  double k = 0.0;
  int m_periods = 20;
  double q = 1.0;
  std::optional<double> r;  // set selects multiplicative exposure q * e^(r i)
  std::size_t n_paths = 100000;
  std::optional<std::uint64_t> seed;
  unsigned threads = 0;
  OutputFormat format = OutputFormat::kCsv;
  std::optional<std::string> blowup_path;
  std::size_t blowup_attempts = 1'000'000;
};
int cmd_simulate(const SimulateOptions& opts, std::ostream& out, std::ostream& log);

struct ConcealOptions {
  std::optional<std::string> dist;
  std::optional<std::string> series;
  std::size_t mc_samples = 0;
  std::optional<std::uint64_t> seed;
  OutputFormat format = OutputFormat::kCsv;
};
int cmd_conceal(const ConcealOptions& opts, std::ostream& out, std::ostream& log);

struct EstimateOptions {
  std::string series;
  double k = 0.0;
  OutputFormat format = OutputFormat::kCsv;
};
int cmd_estimate(const EstimateOptions& opts, std::ostream& out, std::ostream& log);

struct SampleOptions {
  std::string dist;
  std::size_t n = 1000;
  std::optional<std::uint64_t> seed;
};
int cmd_sample(const SampleOptions& opts, std::ostream& out, std::ostream& log);

}  // namespace skingame::cli
