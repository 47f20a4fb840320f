#include "skingame/distributions.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <fmt/format.h>

#include "skingame/error.hpp"

namespace skingame {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double normal_pdf(double x) {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

// Location of the mirror: X = shift - Y.
double pareto_shift(const MirroredPareto& p) {
  return p.mirror == ParetoMirror::kReflected ? 2.0 * p.x_min : 0.0;
}

void validate(const Family& family) {
  std::visit(
      Overloaded{
          [](const MirroredPareto& p) {
            require(std::isfinite(p.x_min) && p.x_min > 0.0,
                    "pareto: x_min must be finite and > 0");
            require(std::isfinite(p.alpha), "pareto: alpha must be finite");
            if (!(p.alpha > 1.0)) {
              fail(ErrorKind::kInfiniteMean,
                   fmt::format("pareto: alpha={} <= 1 has no finite mean", p.alpha));
            }
          },
          [](const NegativeLognormal& p) {
            require(std::isfinite(p.mu), "neglognormal: mu must be finite");
            require(std::isfinite(p.sigma) && p.sigma > 0.0,
                    "neglognormal: sigma must be finite and > 0");
          },
          [](const Gaussian& p) {
            require(std::isfinite(p.mean), "gaussian: mean must be finite");
            require(std::isfinite(p.sd) && p.sd > 0.0,
                    "gaussian: sd must be finite and > 0");
          },
          [](const TwoPoint& p) {
            require(p.p_up > 0.0 && p.p_up < 1.0, "twopoint: p_up must be in (0,1)");
            require(std::isfinite(p.up) && std::isfinite(p.down),
                    "twopoint: atoms must be finite");
            require(p.down < p.up, "twopoint: down must be < up");
          },
      },
      family);
}

SplitMeasures finish(double f_plus, double f_minus, double e_plus,
                     double e_minus, double m, double k) {
  if (!(f_plus > 0.0) || !(f_minus > 0.0)) {
    fail(ErrorKind::kDegenerateSplit,
         fmt::format("hurdle k={} leaves one side of the split empty "
                     "(F+={}, F-={})",
                     k, f_plus, f_minus));
  }
  return SplitMeasures{f_plus, f_minus, e_plus, e_minus, f_minus / f_plus, m};
}

}  // namespace

double normal_cdf(double x) {
  return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double standard_normal(Rng& rng) {
  const double u1 = uniform_open(rng);
  const double u2 = uniform_open(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Distribution::Distribution(Family family) : family_(std::move(family)) {
  validate(family_);
}

Distribution Distribution::mirrored_pareto(double alpha, double x_min,
                                           ParetoMirror mirror) {
  return Distribution(MirroredPareto{alpha, x_min, mirror});
}

Distribution Distribution::negative_lognormal(double mu, double sigma) {
  return Distribution(NegativeLognormal{mu, sigma});
}

Distribution Distribution::gaussian(double mean, double sd) {
  return Distribution(Gaussian{mean, sd});
}

Distribution Distribution::two_point(double p_up, double up, double down) {
  return Distribution(TwoPoint{p_up, up, down});
}

double Distribution::mean() const {
  return std::visit(
      Overloaded{
          [](const MirroredPareto& p) {
            return pareto_shift(p) - p.alpha * p.x_min / (p.alpha - 1.0);
          },
          [](const NegativeLognormal& p) {
            return -std::exp(p.mu + 0.5 * p.sigma * p.sigma);
          },
          [](const Gaussian& p) { return p.mean; },
          [](const TwoPoint& p) { return p.p_up * p.up + (1.0 - p.p_up) * p.down; },
      },
      family_);
}

double Distribution::exceedance(double x) const {
  return std::visit(
      Overloaded{
          [x](const MirroredPareto& p) {
            const double c = pareto_shift(p) - x;
            if (c <= p.x_min) return 0.0;
            return -std::expm1(p.alpha * std::log(p.x_min / c));
          },
          [x](const NegativeLognormal& p) {
            if (x >= 0.0) return 0.0;
            return normal_cdf((std::log(-x) - p.mu) / p.sigma);
          },
          [x](const Gaussian& p) { return normal_cdf((p.mean - x) / p.sd); },
          [x](const TwoPoint& p) {
            if (x < p.down) return 1.0;
            if (x < p.up) return p.p_up;
            return 0.0;
          },
      },
      family_);
}

double Distribution::draw(Rng& rng) const {
  return std::visit(
      Overloaded{
          [&rng](const MirroredPareto& p) {
            const double y = p.x_min * std::pow(uniform_open(rng), -1.0 / p.alpha);
            return pareto_shift(p) - y;
          },
          [&rng](const NegativeLognormal& p) {
            return -std::exp(p.mu + p.sigma * standard_normal(rng));
          },
          [&rng](const Gaussian& p) { return p.mean + p.sd * standard_normal(rng); },
          [&rng](const TwoPoint& p) {
            return uniform_open(rng) < p.p_up ? p.up : p.down;
          },
      },
      family_);
}

std::string Distribution::describe() const {
  return std::visit(
      Overloaded{
          [](const MirroredPareto& p) {
            return fmt::format("{}:{},{}",
                               p.mirror == ParetoMirror::kReflected ? "pareto-reflected"
                                                                     : "pareto",
                               p.alpha, p.x_min);
          },
          [](const NegativeLognormal& p) {
            return fmt::format("neglognormal:{},{}", p.mu, p.sigma);
          },
          [](const Gaussian& p) { return fmt::format("gaussian:{},{}", p.mean, p.sd); },
          [](const TwoPoint& p) {
            return fmt::format("twopoint:{},{},{}", p.p_up, p.up, p.down);
          },
      },
      family_);
}

SplitMeasures split_at(const Distribution& dist, double k) {
  require(std::isfinite(k), "hurdle k must be finite");
  const double m = dist.mean();
  return std::visit(
      Overloaded{
          [&](const MirroredPareto& p) {
            // X >= k  <=>  Y <= c.
            const double shift = pareto_shift(p);
            const double c = shift - k;
            if (c <= p.x_min) return finish(0.0, 1.0, 0.0, 0.0, m, k);
            const double tail = std::pow(p.x_min / c, p.alpha);  // P(Y > c)
            const double body = -std::expm1(p.alpha * std::log(p.x_min / c));
            const double ratio = p.alpha / (p.alpha - 1.0);
            // E[Y; Y <= c] = ratio * (x_min - tail * c)
            const double e_plus = shift - ratio * (p.x_min - tail * c) / body;
            const double e_minus = shift - ratio * c;
            return finish(body, tail, e_plus, e_minus, m, k);
          },
          [&](const NegativeLognormal& p) {
            if (k >= 0.0) return finish(0.0, 1.0, 0.0, 0.0, m, k);
            const double d = (std::log(-k) - p.mu) / p.sigma;
            const double f_plus = normal_cdf(d);
            const double f_minus = normal_cdf(-d);
            const double scale = std::exp(p.mu + 0.5 * p.sigma * p.sigma);
            const double e_plus = -scale * normal_cdf(d - p.sigma) / f_plus;
            const double e_minus = -scale * normal_cdf(p.sigma - d) / f_minus;
            return finish(f_plus, f_minus, e_plus, e_minus, m, k);
          },
          [&](const Gaussian& p) {
            const double z = (k - p.mean) / p.sd;
            const double f_plus = normal_cdf(-z);
            const double f_minus = normal_cdf(z);
            const double density = normal_pdf(z);
            return finish(f_plus, f_minus, p.mean + p.sd * density / f_plus,
                          p.mean - p.sd * density / f_minus, m, k);
          },
          [&](const TwoPoint& p) {
            if (!(k > p.down && k < p.up)) {
              fail(ErrorKind::kDegenerateSplit,
                   fmt::format("hurdle k={} must lie strictly between the atoms "
                               "{} and {}",
                               k, p.down, p.up));
            }
            return finish(p.p_up, 1.0 - p.p_up, p.up, p.down, m, k);
          },
      },
      dist.family());
}

double asymmetry_nu(const Distribution& dist, double k) {
  return split_at(dist, k).nu;
}

double prob_above_mean(const Distribution& dist) {
  return std::visit(
      Overloaded{
          [](const MirroredPareto& p) {
            return -std::expm1(p.alpha * std::log((p.alpha - 1.0) / p.alpha));
          },
          [](const NegativeLognormal& p) {
            return 0.5 * std::erfc(-p.sigma / (2.0 * std::numbers::sqrt2));
          },
          [](const Gaussian&) { return 0.5; },
          [](const TwoPoint& p) { return p.p_up; },
      },
      dist.family());
}

std::vector<double> sample(const Distribution& dist, std::size_t n,
                           std::uint64_t seed) {
  require(n >= 1, "sample: n must be >= 1");
  Rng rng(seed);
  std::vector<double> out(n);
  for (auto& x : out) x = dist.draw(rng);
  return out;
}

namespace {

std::vector<double> parse_numbers(std::string_view text, std::string_view spec) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string token(
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                         : comma - pos));
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    require(!token.empty() && used == token.size(),
            fmt::format("distribution '{}': bad number '{}'", spec, token));
    values.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return values;
}

}  // namespace

Distribution parse_distribution(std::string_view spec) {
  const std::size_t colon = spec.find(':');
  require(colon != std::string_view::npos,
          fmt::format("distribution '{}': expected family:p1,p2[,p3]", spec));
  const std::string_view name = spec.substr(0, colon);
  const std::vector<double> v = parse_numbers(spec.substr(colon + 1), spec);
  auto arity = [&](std::size_t n) {
    require(v.size() == n, fmt::format("distribution '{}': {} expects {} parameters",
                                       spec, name, n));
  };
  if (name == "pareto" || name == "pareto-reflected") {
    arity(2);
    return Distribution::mirrored_pareto(
        v[0], v[1],
        name == "pareto" ? ParetoMirror::kNegated : ParetoMirror::kReflected);
  }
  if (name == "neglognormal" || name == "lognormal") {
    arity(2);
    return Distribution::negative_lognormal(v[0], v[1]);
  }
  if (name == "gaussian" || name == "normal") {
    arity(2);
    return Distribution::gaussian(v[0], v[1]);
  }
  if (name == "twopoint") {
    arity(3);
    return Distribution::two_point(v[0], v[1], v[2]);
  }
  fail(ErrorKind::kValidation, fmt::format("unknown distribution family '{}'", name));
}

}  // namespace skingame
