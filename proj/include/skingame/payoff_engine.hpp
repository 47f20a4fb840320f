#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "skingame/distributions.hpp"

namespace skingame {

struct ConstantExposure {
  double q = 1.0;
};

// q_i = q0 * exp(r * i).
struct MultiplicativeExposure {
  double q0 = 1.0;
  double r = 0.0;
};

using Exposure = std::variant<ConstantExposure, MultiplicativeExposure>;

// Agent compensation scheme: gamma * sum q_i (x_i - k)^+ over periods
// strictly before the first return below k.
struct Contract {
  double gamma = 1.0;
  double k = 0.0;
  int m_periods = 1;
  Exposure exposure = ConstantExposure{};

  void validate() const;

  // Exposure in force for period i (1-based), fixed before x_i is drawn.
  double exposure_at(int i) const;

  // Growth rate of the exposure schedule; 0 for constant exposure.
  double growth_rate() const;
  double base_exposure() const;
};

struct PathResult {
  double payoff = 0.0;
  // First period with x_i < k, or m_periods + 1 when the path survives.
  int tau_index = 0;
  // Periods 1..min(tau_index, m_periods); the career ends at the failing period.
  std::vector<double> returns;
  std::vector<double> exposures;
  std::vector<double> gross;

  bool blew_up(int m_periods) const { return tau_index <= m_periods; }
};

struct EnsembleStats {
  std::size_t n_paths = 0;
  double mean_payoff = 0.0;
  double stderr_payoff = 0.0;
  // Entry i - 1 counts paths with tau_index == i, for i in [1, M + 1].
  std::vector<std::size_t> tau_histogram;
  double blowup_fraction = 0.0;
  double mean_principal_pnl = 0.0;

  bool operator==(const EnsembleStats&) const = default;
};

struct EnsembleOptions {
  // 0 selects std::thread::hardware_concurrency(). Results do not depend on it.
  unsigned threads = 0;
};

PathResult simulate_path(const Contract& contract, const Distribution& dist,
                         std::uint64_t seed);

// Path j is simulate_path(contract, dist, stream_seed(seed, j)).
EnsembleStats simulate_ensemble(const Contract& contract, const Distribution& dist,
                                std::size_t n_paths, std::uint64_t seed,
                                EnsembleOptions options = {});

// Rejection-samples paths (attempt j uses stream_seed(seed, j)) until one blows
// up within the horizon. Requires multiplicative exposure.
PathResult blowup_trajectory(const Contract& contract, const Distribution& dist,
                             std::uint64_t seed, std::size_t max_attempts = 1'000'000);

}  // namespace skingame
