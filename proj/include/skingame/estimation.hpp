#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skingame/distributions.hpp"

namespace skingame {

// Observed per-period returns. Non-empty, all values finite.
class ReturnSeries {
 public:
  explicit ReturnSeries(std::vector<double> values, std::string label = {});

  const std::vector<double>& values() const noexcept { return values_; }
  const std::string& label() const noexcept { return label_; }
  std::size_t size() const noexcept { return values_.size(); }

 private:
  std::vector<double> values_;
  std::string label_;
};

// Plug-in split at k. Observations equal to k count as above.
struct EmpiricalSplit {
  double f_plus_hat = 0.0;
  double f_minus_hat = 0.0;
  std::optional<double> e_plus_hat;   // absent when n_above == 0
  std::optional<double> e_minus_hat;  // absent when n_below == 0
  std::optional<double> nu_hat;       // absent when n_above == 0
  std::size_t n_above = 0;
  std::size_t n_below = 0;
  double mean_hat = 0.0;
};

EmpiricalSplit empirical_split(const ReturnSeries& series, double k);

struct ConcealmentScore {
  double score = 0.0;
  // Set for a constant series; score is then 0.
  bool degenerate = false;
};

// Fraction of observations strictly above the sample mean. Needs >= 2 values.
ConcealmentScore concealment_score(const ReturnSeries& series);

struct SurvivorshipGap {
  double surviving_mean = 0.0;
  double true_mean = 0.0;
  double gap = 0.0;
  // Standard error of surviving_mean across surviving paths.
  double stderr_surviving = 0.0;
  std::size_t n_survivors = 0;
};

// Simulates n_paths M-period series (path j seeded by stream_seed(seed, j)) and
// compares the mean return of paths that never fell below k with E[X].
SurvivorshipGap survivorship_gap(const Distribution& dist, double k, int m_periods,
                                 std::size_t n_paths, std::uint64_t seed);

}  // namespace skingame
