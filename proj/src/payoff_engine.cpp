#include "skingame/payoff_engine.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include <fmt/format.h>

#include "skingame/error.hpp"
#include "skingame/rng.hpp"

namespace skingame {

void Contract::validate() const {
  require(std::isfinite(gamma) && gamma >= 0.0 && gamma <= 1.0,
          fmt::format("contract: gamma={} must be in [0,1]", gamma));
  require(std::isfinite(k), "contract: hurdle k must be finite");
  require(m_periods >= 1, fmt::format("contract: M={} must be >= 1", m_periods));
  if (const auto* c = std::get_if<ConstantExposure>(&exposure)) {
    require(std::isfinite(c->q) && c->q >= 1.0,
            fmt::format("contract: q={} must be >= 1", c->q));
  } else {
    const auto& m = std::get<MultiplicativeExposure>(exposure);
    require(std::isfinite(m.q0) && m.q0 >= 1.0,
            fmt::format("contract: q0={} must be >= 1", m.q0));
    require(std::isfinite(m.r) && m.r >= 0.0,
            fmt::format("contract: r={} must be >= 0", m.r));
  }
}

double Contract::exposure_at(int i) const {
  if (const auto* c = std::get_if<ConstantExposure>(&exposure)) return c->q;
  const auto& m = std::get<MultiplicativeExposure>(exposure);
  return m.q0 * std::exp(m.r * i);
}

double Contract::growth_rate() const {
  if (const auto* m = std::get_if<MultiplicativeExposure>(&exposure)) return m->r;
  return 0.0;
}

double Contract::base_exposure() const {
  if (const auto* c = std::get_if<ConstantExposure>(&exposure)) return c->q;
  return std::get<MultiplicativeExposure>(exposure).q0;
}

namespace {

struct PathSummary {
  double payoff;
  int tau_index;
  double gross_total;
};

// Shared by the recording and the aggregate-only paths so both consume the
// engine identically.
PathSummary run_path(const Contract& contract, const Distribution& dist,
                     std::uint64_t seed, PathResult* record) {
  Rng rng(seed);
  double accrued = 0.0;
  double gross_total = 0.0;
  int tau = contract.m_periods + 1;
  for (int i = 1; i <= contract.m_periods; ++i) {
    const double q = contract.exposure_at(i);
    const double x = dist.draw(rng);
    const double gross = q * x;
    gross_total += gross;
    if (record != nullptr) {
      record->returns.push_back(x);
      record->exposures.push_back(q);
      record->gross.push_back(gross);
    }
    if (x < contract.k) {
      tau = i;
      break;
    }
    accrued += q * (x - contract.k);
  }
  return {contract.gamma * accrued, tau, gross_total};
}

struct BlockStats {
  std::size_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;
  double gross_sum = 0.0;
  std::size_t blowups = 0;
  std::vector<std::size_t> histogram;
};

constexpr std::size_t kBlockSize = 1024;

BlockStats run_block(const Contract& contract, const Distribution& dist,
                     std::uint64_t seed, std::size_t begin, std::size_t end) {
  BlockStats s;
  s.histogram.assign(static_cast<std::size_t>(contract.m_periods) + 1, 0);
  for (std::size_t j = begin; j < end; ++j) {
    const PathSummary p = run_path(contract, dist, stream_seed(seed, j), nullptr);
    ++s.count;
    const double delta = p.payoff - s.mean;
    s.mean += delta / static_cast<double>(s.count);
    s.m2 += delta * (p.payoff - s.mean);
    s.gross_sum += p.gross_total;
    ++s.histogram[static_cast<std::size_t>(p.tau_index - 1)];
    if (p.tau_index <= contract.m_periods) ++s.blowups;
  }
  return s;
}

// Chan et al. pairwise merge of (count, mean, M2).
void merge_into(BlockStats& acc, const BlockStats& b) {
  if (b.count == 0) return;
  const double na = static_cast<double>(acc.count);
  const double nb = static_cast<double>(b.count);
  const double n = na + nb;
  const double delta = b.mean - acc.mean;
  acc.mean += delta * nb / n;
  acc.m2 += b.m2 + delta * delta * na * nb / n;
  acc.count += b.count;
  acc.gross_sum += b.gross_sum;
  acc.blowups += b.blowups;
  for (std::size_t i = 0; i < acc.histogram.size(); ++i) acc.histogram[i] += b.histogram[i];
}

}  // namespace

PathResult simulate_path(const Contract& contract, const Distribution& dist,
                         std::uint64_t seed) {
  contract.validate();
  PathResult result;
  result.returns.reserve(static_cast<std::size_t>(contract.m_periods));
  result.exposures.reserve(static_cast<std::size_t>(contract.m_periods));
  result.gross.reserve(static_cast<std::size_t>(contract.m_periods));
  const PathSummary s = run_path(contract, dist, seed, &result);
  result.payoff = s.payoff;
  result.tau_index = s.tau_index;
  return result;
}

EnsembleStats simulate_ensemble(const Contract& contract, const Distribution& dist,
                                std::size_t n_paths, std::uint64_t seed,
                                EnsembleOptions options) {
  contract.validate();
  require(n_paths >= 1, "ensemble: n_paths must be >= 1");

  const std::size_t n_blocks = (n_paths + kBlockSize - 1) / kBlockSize;
  unsigned threads = options.threads != 0 ? options.threads
                                          : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n_blocks));

  std::vector<BlockStats> blocks(n_blocks);
  auto worker = [&](unsigned t) {
    for (std::size_t b = t; b < n_blocks; b += threads) {
      const std::size_t begin = b * kBlockSize;
      blocks[b] = run_block(contract, dist, seed, begin,
                            std::min(n_paths, begin + kBlockSize));
    }
  };
  if (threads <= 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
  }

  BlockStats total;
  total.histogram.assign(static_cast<std::size_t>(contract.m_periods) + 1, 0);
  for (const auto& b : blocks) merge_into(total, b);

  EnsembleStats stats;
  stats.n_paths = total.count;
  stats.mean_payoff = total.mean;
  const double n = static_cast<double>(total.count);
  stats.stderr_payoff =
      total.count > 1 ? std::sqrt(total.m2 / (n - 1.0)) / std::sqrt(n) : 0.0;
  stats.tau_histogram = std::move(total.histogram);
  stats.blowup_fraction = static_cast<double>(total.blowups) / n;
  stats.mean_principal_pnl = total.gross_sum / n;
  return stats;
}

PathResult blowup_trajectory(const Contract& contract, const Distribution& dist,
                             std::uint64_t seed, std::size_t max_attempts) {
  contract.validate();
  require(std::holds_alternative<MultiplicativeExposure>(contract.exposure),
          "blowup trajectory requires multiplicative exposure");
  require(max_attempts >= 1, "blowup trajectory: attempt cap must be >= 1");
  for (std::size_t j = 0; j < max_attempts; ++j) {
    PathResult path = simulate_path(contract, dist, stream_seed(seed, j));
    if (path.blew_up(contract.m_periods)) return path;
  }
  fail(ErrorKind::kNoBlowup,
       fmt::format("no path blew up within M={} after {} attempts",
                   contract.m_periods, max_attempts));
}

}  // namespace skingame
