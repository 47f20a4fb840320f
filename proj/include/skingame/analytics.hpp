#pragma once

#include <span>
#include <vector>

#include "skingame/distributions.hpp"
#include "skingame/payoff_engine.hpp"

namespace skingame {

struct RunLengthPmf {
  // stop[i - 1] = P(first failure at period i) = F^(i-1) (1 - F).
  std::vector<double> stop;
  // P(no failure in M periods) = F^M.
  double survival = 0.0;
};

RunLengthPmf run_length_pmf(double f_plus, int m_periods);

// sum_{i=1}^M (i-1) F^(i-1) (1-F), or F/(1-F) when `large_m_limit`.
double expected_stopping_sum(double f_plus, int m_periods, bool large_m_limit = false);

// sum_{i=1}^M (i-1) F^(i-1) (1-F) e^(r i), evaluated in closed form. Falls back
// to the direct sum near the pole F e^r = 1.
double multiplier(double f_plus, double r, int m_periods);

// Term-by-term evaluation of the multiplier sum.
double multiplier_direct(double f_plus, double r, int m_periods);

struct MultiplierGrid {
  std::vector<double> f_values;
  std::vector<double> r_values;
  int m_periods = 20;
  // values[row][col] for r_values[row], f_values[col].
  std::vector<std::vector<double>> values;
};

MultiplierGrid table1(std::span<const double> f_values, std::span<const double> r_values,
                      int m_periods);

// Default axes and the published sixteen-cell reference grid at M = 20.
namespace reference {
inline constexpr int kTableM = 20;
inline constexpr double kTableF[] = {0.6, 0.7, 0.8, 0.9};
inline constexpr double kTableR[] = {0.0, 0.1, 0.2, 0.3};
inline constexpr double kTableValues[4][4] = {
    {1.5, 2.32, 3.72, 5.47},
    {2.57, 4.8, 10.07, 19.59},
    {4.93, 12.05, 34.55, 86.53},
    {11.09, 38.15, 147.57, 445.59},
};
inline constexpr double kTableRelTol = 0.01;
}  // namespace reference

MultiplierGrid table1_default();

// gamma * E+ * q * multiplier(F+, r, M) with the split taken at k.
// Throws kDegenerateSplit if the split at k is degenerate.
double expected_payoff(double gamma, const Distribution& dist, double k, int m_periods,
                       const Exposure& exposure);
double expected_payoff(const Contract& contract, const Distribution& dist);

// Exact expectation of simulate_path's payoff:
// gamma * q * (E+ - k) * sum_{i=1}^M F^i e^(r i).
double expected_path_payoff(const Contract& contract, const Distribution& dist);

struct SkewnessRow {
  double nu;
  double p_up;
  double down;
  double agent_payoff;
  double principal_mean;
};

struct SkewnessDemoOptions {
  double up = 1.0;
  double gamma = 1.0;
  int m_periods = 20;
  double r = 0.0;
};

// Two-point families with fixed mean `mean_m` and asymmetry nu at k = 0:
// p_up = 1 / (1 + nu), down solved from the mean. Throws kInfeasibleFamily when
// some nu forces down >= 0 or the mean is not below `up`.
std::vector<SkewnessRow> skewness_preference_demo(double mean_m,
                                                  std::span<const double> nu_grid,
                                                  SkewnessDemoOptions options = {});

struct DigitalVanilla {
  double digital;  // F+(k)
  double vanilla;  // E[X]
};

DigitalVanilla digital_vs_vanilla(const Distribution& dist, double k);

}  // namespace skingame
