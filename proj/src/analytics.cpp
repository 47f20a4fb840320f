#include "skingame/analytics.hpp"

#include <cmath>

#include <fmt/format.h>

#include "skingame/error.hpp"

namespace skingame {

namespace {

void require_probability(double f_plus) {
  require(f_plus > 0.0 && f_plus < 1.0,
          fmt::format("F+={} must be in the open interval (0,1)", f_plus));
}

void require_horizon(int m_periods) {
  require(m_periods >= 1, fmt::format("M={} must be >= 1", m_periods));
}

constexpr double kPoleTolerance = 1e-2;

}  // namespace

RunLengthPmf run_length_pmf(double f_plus, int m_periods) {
  require_probability(f_plus);
  require_horizon(m_periods);
  RunLengthPmf pmf;
  pmf.stop.reserve(static_cast<std::size_t>(m_periods));
  double run = 1.0;  // F^(i-1)
  for (int i = 1; i <= m_periods; ++i) {
    pmf.stop.push_back(run * (1.0 - f_plus));
    run *= f_plus;
  }
  pmf.survival = run;
  return pmf;
}

double expected_stopping_sum(double f_plus, int m_periods, bool large_m_limit) {
  require_probability(f_plus);
  if (large_m_limit) return f_plus / (1.0 - f_plus);
  require_horizon(m_periods);
  // Derivative of the geometric series: sum_{j<M} j F^j = F (1 - M F^(M-1) + (M-1) F^M) / (1-F)^2.
  const double m = m_periods;
  const double tail = m * std::pow(f_plus, m - 1.0) - (m - 1.0) * std::pow(f_plus, m);
  return f_plus * (1.0 - tail) / (1.0 - f_plus);
}

double multiplier_direct(double f_plus, double r, int m_periods) {
  require_probability(f_plus);
  require(std::isfinite(r) && r >= 0.0, fmt::format("r={} must be >= 0", r));
  require_horizon(m_periods);
  double sum = 0.0;
  double run = 1.0;  // F^(i-1)
  for (int i = 1; i <= m_periods; ++i) {
    sum += (i - 1) * run * (1.0 - f_plus) * std::exp(r * i);
    run *= f_plus;
  }
  return sum;
}

double multiplier(double f_plus, double r, int m_periods) {
  require_probability(f_plus);
  require(std::isfinite(r) && r >= 0.0, fmt::format("r={} must be >= 0", r));
  require_horizon(m_periods);
  const double pole = f_plus * std::exp(r) - 1.0;
  if (std::abs(pole) < kPoleTolerance) return multiplier_direct(f_plus, r, m_periods);
  const double m = m_periods;
  const double f_m = std::pow(f_plus, m);
  const double inner =
      f_m * (m * std::exp((m + 1.0) * r) - f_plus * (m - 1.0) * std::exp((m + 2.0) * r)) -
      f_plus * std::exp(2.0 * r);
  return (f_plus - 1.0) * inner / (pole * pole);
}

MultiplierGrid table1(std::span<const double> f_values, std::span<const double> r_values,
                      int m_periods) {
  require(!f_values.empty() && !r_values.empty(), "table1: empty F or r list");
  MultiplierGrid grid;
  grid.f_values.assign(f_values.begin(), f_values.end());
  grid.r_values.assign(r_values.begin(), r_values.end());
  grid.m_periods = m_periods;
  for (const double r : r_values) {
    auto& row = grid.values.emplace_back();
    for (const double f : f_values) row.push_back(multiplier(f, r, m_periods));
  }
  return grid;
}

MultiplierGrid table1_default() {
  return table1(reference::kTableF, reference::kTableR, reference::kTableM);
}

double expected_payoff(double gamma, const Distribution& dist, double k, int m_periods,
                       const Exposure& exposure) {
  const Contract contract{gamma, k, m_periods, exposure};
  return expected_payoff(contract, dist);
}

double expected_payoff(const Contract& contract, const Distribution& dist) {
  contract.validate();
  const SplitMeasures s = split_at(dist, contract.k);
  return contract.gamma * s.e_plus * contract.base_exposure() *
         multiplier(s.f_plus, contract.growth_rate(), contract.m_periods);
}

double expected_path_payoff(const Contract& contract, const Distribution& dist) {
  contract.validate();
  const SplitMeasures s = split_at(dist, contract.k);
  const double ratio = s.f_plus * std::exp(contract.growth_rate());
  double sum = 0.0;
  double term = 1.0;
  for (int i = 1; i <= contract.m_periods; ++i) {
    term *= ratio;
    sum += term;
  }
  return contract.gamma * contract.base_exposure() * (s.e_plus - contract.k) * sum;
}

std::vector<SkewnessRow> skewness_preference_demo(double mean_m,
                                                  std::span<const double> nu_grid,
                                                  SkewnessDemoOptions options) {
  require(!nu_grid.empty(), "skewness demo: empty nu grid");
  require(std::isfinite(mean_m), "skewness demo: mean must be finite");
  require(options.up > 0.0, "skewness demo: up must be > 0 (above the hurdle k = 0)");
  if (!(mean_m < options.up)) {
    fail(ErrorKind::kInfeasibleFamily,
         fmt::format("mean {} must be below the upper atom {}", mean_m, options.up));
  }
  const Exposure exposure = options.r == 0.0
                                ? Exposure{ConstantExposure{1.0}}
                                : Exposure{MultiplicativeExposure{1.0, options.r}};
  std::vector<SkewnessRow> rows;
  rows.reserve(nu_grid.size());
  for (const double nu : nu_grid) {
    require(std::isfinite(nu) && nu > 0.0, fmt::format("nu={} must be > 0", nu));
    const double p_up = 1.0 / (1.0 + nu);
    const double down = (mean_m - p_up * options.up) / (1.0 - p_up);
    if (!(down < 0.0)) {
      fail(ErrorKind::kInfeasibleFamily,
           fmt::format("nu={} with mean {} needs down={} >= 0", nu, mean_m, down));
    }
    const Distribution dist = Distribution::two_point(p_up, options.up, down);
    rows.push_back({nu, p_up, down,
                    expected_payoff(options.gamma, dist, 0.0, options.m_periods, exposure),
                    dist.mean()});
  }
  return rows;
}

DigitalVanilla digital_vs_vanilla(const Distribution& dist, double k) {
  const SplitMeasures s = split_at(dist, k);
  return {s.f_plus, s.m};
}

}  // namespace skingame
