#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "skingame/rng.hpp"

namespace skingame {

// How the standard Pareto variable Y (support [x_min, inf)) is mirrored.
enum class ParetoMirror {
  kNegated,    // X = -Y, support (-inf, -x_min]
  kReflected,  // X = 2 x_min - Y, support (-inf, x_min]
};

struct MirroredPareto {
  double alpha;
  double x_min;
  ParetoMirror mirror = ParetoMirror::kNegated;
};

// X = -Y with Y ~ Lognormal(mu, sigma). Support (-inf, 0).
struct NegativeLognormal {
  double mu;
  double sigma;
};

struct Gaussian {
  double mean;
  double sd;
};

// X = up with probability p_up, down otherwise.
struct TwoPoint {
  double p_up;
  double up;
  double down;
};

using Family = std::variant<MirroredPareto, NegativeLognormal, Gaussian, TwoPoint>;

// Immutable, validated distribution value. Construct through the factories.
class Distribution {
 public:
  static Distribution mirrored_pareto(double alpha, double x_min,
                                      ParetoMirror mirror = ParetoMirror::kNegated);
  static Distribution negative_lognormal(double mu, double sigma);
  static Distribution gaussian(double mean, double sd);
  static Distribution two_point(double p_up, double up, double down);

  // Validates `family` and wraps it.
  explicit Distribution(Family family);

  const Family& family() const noexcept { return family_; }

  // E[X]. Throws kInfiniteMean for Pareto with alpha <= 1.
  double mean() const;

  // P(X > x).
  double exceedance(double x) const;

  // One draw. Consumes a fixed number of raw engine outputs per family.
  double draw(Rng& rng) const;

  std::string describe() const;

 private:
  Family family_;
};

// Hurdle-split summary at k: masses and conditional means of the upper
// ("x >= k") and lower ("x < k") parts.
struct SplitMeasures {
  double f_plus;
  double f_minus;
  double e_plus;
  double e_minus;
  double nu;
  double m;
};

// Closed-form split. Throws kDegenerateSplit when k leaves one side empty.
SplitMeasures split_at(const Distribution& dist, double k);

// F-(k) / F+(k).
double asymmetry_nu(const Distribution& dist, double k);

// P(X > E[X]).
double prob_above_mean(const Distribution& dist);

// n reproducible draws from a single stream seeded by `seed`.
std::vector<double> sample(const Distribution& dist, std::size_t n,
                           std::uint64_t seed);

// Parses "family:p1,p2[,p3]". Families: pareto, pareto-reflected,
// neglognormal (alias lognormal), gaussian (alias normal), twopoint.
Distribution parse_distribution(std::string_view spec);

// Standard normal CDF via erfc.
double normal_cdf(double x);

}  // namespace skingame
