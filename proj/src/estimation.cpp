#include "skingame/estimation.hpp"

#include <cmath>

#include <fmt/format.h>

#include "skingame/error.hpp"
#include "skingame/rng.hpp"

namespace skingame {

ReturnSeries::ReturnSeries(std::vector<double> values, std::string label)
    : values_(std::move(values)), label_(std::move(label)) {
  if (values_.empty()) fail(ErrorKind::kEmptySeries, "return series is empty");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    require(std::isfinite(values_[i]),
            fmt::format("return series: value {} at index {} is not finite", values_[i], i));
  }
}

EmpiricalSplit empirical_split(const ReturnSeries& series, double k) {
  require(std::isfinite(k), "hurdle k must be finite");
  double sum_above = 0.0;
  double sum_below = 0.0;
  EmpiricalSplit out;
  for (const double x : series.values()) {
    if (x < k) {
      ++out.n_below;
      sum_below += x;
    } else {
      ++out.n_above;
      sum_above += x;
    }
  }
  const double n = static_cast<double>(series.size());
  out.f_plus_hat = static_cast<double>(out.n_above) / n;
  out.f_minus_hat = static_cast<double>(out.n_below) / n;
  if (out.n_above > 0) {
    out.e_plus_hat = sum_above / static_cast<double>(out.n_above);
    out.nu_hat = out.f_minus_hat / out.f_plus_hat;
  }
  if (out.n_below > 0) out.e_minus_hat = sum_below / static_cast<double>(out.n_below);
  out.mean_hat = (sum_above + sum_below) / n;
  return out;
}

ConcealmentScore concealment_score(const ReturnSeries& series) {
  require(series.size() >= 2, "concealment score needs at least two observations");
  const auto& v = series.values();
  bool constant = true;
  double sum = 0.0;
  for (const double x : v) {
    sum += x;
    constant = constant && x == v.front();
  }
  if (constant) return {0.0, true};
  const double mean = sum / static_cast<double>(v.size());
  std::size_t above = 0;
  for (const double x : v) above += x > mean ? 1 : 0;
  return {static_cast<double>(above) / static_cast<double>(v.size()), false};
}

SurvivorshipGap survivorship_gap(const Distribution& dist, double k, int m_periods,
                                 std::size_t n_paths, std::uint64_t seed) {
  require(std::isfinite(k), "hurdle k must be finite");
  require(m_periods >= 1, "survivorship: M must be >= 1");
  require(n_paths >= 1, "survivorship: n_paths must be >= 1");
  // Welford over per-path mean returns of survivors.
  double mean = 0.0;
  double m2 = 0.0;
  std::size_t survivors = 0;
  for (std::size_t j = 0; j < n_paths; ++j) {
    Rng rng(stream_seed(seed, j));
    double path_sum = 0.0;
    bool survived = true;
    for (int i = 0; i < m_periods; ++i) {
      const double x = dist.draw(rng);
      if (x < k) {
        survived = false;
        break;
      }
      path_sum += x;
    }
    if (!survived) continue;
    ++survivors;
    const double path_mean = path_sum / m_periods;
    const double delta = path_mean - mean;
    mean += delta / static_cast<double>(survivors);
    m2 += delta * (path_mean - mean);
  }
  if (survivors == 0) {
    fail(ErrorKind::kNoSurvivor,
         fmt::format("no path out of {} avoided a return below k={} over M={}", n_paths, k,
                     m_periods));
  }
  SurvivorshipGap out;
  out.surviving_mean = mean;
  out.true_mean = dist.mean();
  out.gap = mean - out.true_mean;
  out.n_survivors = survivors;
  const double n = static_cast<double>(survivors);
  out.stderr_surviving = survivors > 1 ? std::sqrt(m2 / (n - 1.0) / n) : 0.0;
  return out;
}

}  // namespace skingame
