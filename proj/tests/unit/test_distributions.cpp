#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "skingame/distributions.hpp"
#include "testing.hpp"

namespace skingame {
namespace {

using testing::family_grid;
using testing::throws_kind;

constexpr std::uint64_t kSeed = 20140101;

TEST(SplitAt, GaussianIsSymmetricAtItsMean) {
  const auto s = split_at(Distribution::gaussian(0.0, 1.0), 0.0);
  EXPECT_DOUBLE_EQ(s.f_plus, 0.5);
  EXPECT_DOUBLE_EQ(s.f_minus, 0.5);
  EXPECT_DOUBLE_EQ(s.nu, 1.0);
  EXPECT_NEAR(s.e_plus, std::sqrt(2.0 / M_PI), 1e-15);
  EXPECT_NEAR(s.e_minus, -std::sqrt(2.0 / M_PI), 1e-15);
}

TEST(SplitAt, TwoPointIsAtomArithmetic) {
  const auto s = split_at(Distribution::two_point(0.9, 1.0, -5.0), 0.0);
  EXPECT_EQ(s.f_plus, 0.9);
  EXPECT_EQ(s.e_plus, 1.0);
  EXPECT_DOUBLE_EQ(s.f_minus, 0.1);
  EXPECT_EQ(s.e_minus, -5.0);
  EXPECT_NEAR(s.m, 0.4, 1e-15);
  EXPECT_NEAR(s.nu, 1.0 / 9.0, 1e-15);
}

TEST(SplitAt, NegativeLognormalAtItsMean) {
  const auto d = Distribution::negative_lognormal(0.0, 1.0);
  EXPECT_NEAR(d.mean(), -std::exp(0.5), 1e-15);
  const auto s = split_at(d, d.mean());
  EXPECT_NEAR(s.f_plus, 0.6915, 5e-5);
  // Phi(1/2)
  EXPECT_NEAR(s.f_plus, 0.6914624612740131, 1e-13);
}

TEST(SplitAt, MirroredParetoClosedForm) {
  // Y on [1, inf) with density 2/y^3; X = -Y, k = -2.
  const auto s = split_at(Distribution::mirrored_pareto(2.0, 1.0), -2.0);
  EXPECT_NEAR(s.f_plus, 0.75, 1e-15);
  EXPECT_NEAR(s.f_minus, 0.25, 1e-15);
  EXPECT_NEAR(s.e_plus, -4.0 / 3.0, 1e-14);
  EXPECT_NEAR(s.e_minus, -4.0, 1e-14);
  EXPECT_NEAR(s.m, -2.0, 1e-15);
}

TEST(SplitAt, ReflectedParetoSharesShapeWithShiftedSupport) {
  const auto negated = split_at(Distribution::mirrored_pareto(2.0, 1.0), -2.0);
  const auto reflected =
      split_at(Distribution::mirrored_pareto(2.0, 1.0, ParetoMirror::kReflected), 0.0);
  EXPECT_NEAR(reflected.f_plus, negated.f_plus, 1e-15);
  EXPECT_NEAR(reflected.e_plus, negated.e_plus + 2.0, 1e-14);
  EXPECT_NEAR(reflected.e_minus, negated.e_minus + 2.0, 1e-14);
  EXPECT_NEAR(reflected.m, 0.0, 1e-15);
}

TEST(SplitAt, HurdleOutsideSupportIsDegenerate) {
  EXPECT_TRUE(throws_kind([] { split_at(Distribution::two_point(0.5, 1.0, -1.0), 2.0); },
                          ErrorKind::kDegenerateSplit));
  EXPECT_TRUE(throws_kind([] { split_at(Distribution::two_point(0.5, 1.0, -1.0), -1.0); },
                          ErrorKind::kDegenerateSplit));
  EXPECT_TRUE(throws_kind([] { split_at(Distribution::two_point(0.5, 1.0, -1.0), 1.0); },
                          ErrorKind::kDegenerateSplit));
  EXPECT_TRUE(throws_kind([] { split_at(Distribution::negative_lognormal(0.0, 1.0), 0.0); },
                          ErrorKind::kDegenerateSplit));
  EXPECT_TRUE(throws_kind([] { split_at(Distribution::mirrored_pareto(2.0, 1.0), -0.5); },
                          ErrorKind::kDegenerateSplit));
  EXPECT_TRUE(throws_kind([] { split_at(Distribution::gaussian(0.0, 1.0), 60.0); },
                          ErrorKind::kDegenerateSplit));
}

TEST(AsymmetryNu, Examples) {
  EXPECT_DOUBLE_EQ(asymmetry_nu(Distribution::gaussian(0.0, 1.0), 0.0), 1.0);
  EXPECT_NEAR(asymmetry_nu(Distribution::two_point(0.9, 1.0, -5.0), 0.0), 0.1111111111111111,
              1e-15);
  EXPECT_NEAR(asymmetry_nu(Distribution::mirrored_pareto(2.0, 1.0), -2.0), 1.0 / 3.0, 1e-14);
}

// Independent oracle: inverse-CDF draws of Y from its own generator.
TEST(AsymmetryNu, MirroredParetoAgreesWithMonteCarlo) {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  constexpr int kN = 10'000'000;
  int above = 0;
  for (int i = 0; i < kN; ++i) {
    const double y = std::pow(1.0 - unif(gen), -1.0 / 2.0);
    above += (-y >= -2.0) ? 1 : 0;
  }
  const double f = static_cast<double>(above) / kN;
  const double se = std::sqrt(0.75 * 0.25 / kN);
  EXPECT_NEAR(f, 0.75, 4.0 * se);
  // nu = (1-f)/f; delta method SE.
  EXPECT_NEAR((1.0 - f) / f, asymmetry_nu(Distribution::mirrored_pareto(2.0, 1.0), -2.0),
              4.0 * se / (f * f));
}

TEST(ProbAboveMean, ClosedForms) {
  EXPECT_EQ(prob_above_mean(Distribution::gaussian(3.0, 7.0)), 0.5);
  EXPECT_NEAR(prob_above_mean(Distribution::negative_lognormal(0.0, 2.0)), 0.8413, 5e-5);
  EXPECT_NEAR(prob_above_mean(Distribution::negative_lognormal(0.0, 2.0)),
              0.84134474606854295, 1e-14);
  EXPECT_NEAR(prob_above_mean(Distribution::mirrored_pareto(1.15, 1.0)), 0.90390463703451067,
              1e-14);
  EXPECT_NEAR(prob_above_mean(Distribution::mirrored_pareto(1.15, 1.0)), 0.9038, 1e-3);
  EXPECT_EQ(prob_above_mean(Distribution::two_point(0.9, 1.0, -20.0)), 0.9);
}

TEST(ProbAboveMean, AgreesWithExceedanceAtTheMean) {
  for (const auto& c : family_grid()) {
    if (std::holds_alternative<TwoPoint>(c.dist.family())) continue;
    EXPECT_NEAR(prob_above_mean(c.dist), c.dist.exceedance(c.dist.mean()), 1e-12)
        << c.dist.describe();
  }
}

TEST(ProbAboveMean, InfiniteMeanIsRejected) {
  EXPECT_TRUE(throws_kind([] { Distribution::mirrored_pareto(1.0, 1.0); },
                          ErrorKind::kInfiniteMean));
  EXPECT_TRUE(throws_kind([] { Distribution::mirrored_pareto(0.8, 1.0); },
                          ErrorKind::kInfiniteMean));
}

TEST(ProbAboveMean, FatterParetoTailConcealsMore) {
  double previous = 1.0;
  for (double alpha = 1.01; alpha <= 10.0; alpha += 0.01) {
    const double p = prob_above_mean(Distribution::mirrored_pareto(alpha, 1.0));
    EXPECT_LT(p, previous) << "alpha=" << alpha;
    EXPECT_GT(p, 0.5);
    previous = p;
  }
}

TEST(Distribution, RejectsInvalidParameters) {
  const auto bad = ErrorKind::kValidation;
  EXPECT_TRUE(throws_kind([] { Distribution::gaussian(0.0, 0.0); }, bad));
  EXPECT_TRUE(throws_kind([] { Distribution::negative_lognormal(0.0, -1.0); }, bad));
  EXPECT_TRUE(throws_kind([] { Distribution::mirrored_pareto(2.0, 0.0); }, bad));
  EXPECT_TRUE(throws_kind([] { Distribution::two_point(1.0, 1.0, 0.0); }, bad));
  EXPECT_TRUE(throws_kind([] { Distribution::two_point(0.5, 1.0, 1.0); }, bad));
  EXPECT_TRUE(throws_kind([] { Distribution::gaussian(NAN, 1.0); }, bad));
}

TEST(Sample, IsDeterministicPerSeed) {
  for (const auto& c : family_grid()) {
    EXPECT_EQ(sample(c.dist, 1000, kSeed), sample(c.dist, 1000, kSeed));
    EXPECT_NE(sample(c.dist, 1000, kSeed), sample(c.dist, 1000, kSeed + 1));
  }
  EXPECT_TRUE(throws_kind([] { sample(Distribution::gaussian(0, 1), 0, 1); },
                          ErrorKind::kValidation));
}

TEST(Sample, TwoPointMean) {
  const auto xs = sample(Distribution::two_point(0.9, 1.0, -5.0), 1'000'000, kSeed);
  double sum = 0.0;
  for (const double x : xs) {
    ASSERT_TRUE(x == 1.0 || x == -5.0);
    sum += x;
  }
  EXPECT_NEAR(sum / xs.size(), 0.4, 0.01);
}

TEST(Sample, ParetoFractionAboveMean) {
  const auto d = Distribution::mirrored_pareto(1.15, 1.0);
  const auto xs = sample(d, 1'000'000, kSeed);
  std::size_t above = 0;
  for (const double x : xs) {
    ASSERT_LE(x, -1.0);
    above += x > d.mean() ? 1 : 0;
  }
  EXPECT_NEAR(static_cast<double>(above) / xs.size(), 0.9039, 0.001);
}

TEST(SplitProperties, MassesSumToOneAndConserveTheMean) {
  for (const auto& c : family_grid()) {
    for (const double k : c.hurdles) {
      const auto s = split_at(c.dist, k);
      EXPECT_NEAR(s.f_plus + s.f_minus, 1.0, 1e-12) << c.dist.describe() << " k=" << k;
      EXPECT_NEAR(s.f_plus * s.e_plus + s.f_minus * s.e_minus, c.dist.mean(),
                  1e-9 * std::max(1.0, std::abs(c.dist.mean())))
          << c.dist.describe() << " k=" << k;
      EXPECT_LE(s.e_minus, k);
      EXPECT_GE(s.e_plus, k);
      EXPECT_DOUBLE_EQ(s.nu, s.f_minus / s.f_plus);
    }
  }
}

TEST(SplitProperties, TwoPointConservationIsExact) {
  const auto d = Distribution::two_point(0.37, 2.5, -7.25);
  const auto s = split_at(d, 0.0);
  EXPECT_EQ(s.f_plus + s.f_minus, 1.0);
  EXPECT_EQ(s.f_plus * s.e_plus + s.f_minus * s.e_minus, d.mean());
}

TEST(SplitProperties, LowerMassIsMonotoneInTheHurdle) {
  for (const auto& c : family_grid()) {
    for (std::size_t i = 1; i < c.hurdles.size(); ++i) {
      const auto lo = split_at(c.dist, c.hurdles[i - 1]);
      const auto hi = split_at(c.dist, c.hurdles[i]);
      EXPECT_LE(lo.f_minus, hi.f_minus) << c.dist.describe();
      EXPECT_LE(lo.nu, hi.nu) << c.dist.describe();
    }
  }
}

// Finite-variance members only, so the conditional-mean SE is meaningful.
TEST(SplitProperties, AgreesWithMonteCarloWithinFourStandardErrors) {
  const std::vector<std::pair<Distribution, double>> cases = {
      {Distribution::mirrored_pareto(3.0, 1.0), -1.5},
      {Distribution::mirrored_pareto(4.0, 0.5, ParetoMirror::kReflected), 0.0},
      {Distribution::negative_lognormal(0.0, 1.0), -1.0},
      {Distribution::gaussian(1.0, 2.0), 0.0},
      {Distribution::two_point(0.9, 1.0, -5.0), 0.0},
  };
  constexpr std::size_t kN = 1'000'000;
  for (const auto& [dist, k] : cases) {
    const auto s = split_at(dist, k);
    const auto xs = sample(dist, kN, kSeed);
    double n_up = 0, sum_up = 0, sq_up = 0, n_dn = 0, sum_dn = 0, sq_dn = 0;
    for (const double x : xs) {
      if (x >= k) {
        ++n_up, sum_up += x, sq_up += x * x;
      } else {
        ++n_dn, sum_dn += x, sq_dn += x * x;
      }
    }
    const double f = n_up / kN;
    EXPECT_NEAR(f, s.f_plus, 4.0 * std::sqrt(s.f_plus * s.f_minus / kN)) << dist.describe();
    const double mu_up = sum_up / n_up;
    const double mu_dn = sum_dn / n_dn;
    const double sd_up = std::sqrt(std::max(0.0, sq_up / n_up - mu_up * mu_up));
    const double sd_dn = std::sqrt(std::max(0.0, sq_dn / n_dn - mu_dn * mu_dn));
    EXPECT_NEAR(mu_up, s.e_plus, 4.0 * sd_up / std::sqrt(n_up) + 1e-15) << dist.describe();
    EXPECT_NEAR(mu_dn, s.e_minus, 4.0 * sd_dn / std::sqrt(n_dn) + 1e-15) << dist.describe();
  }
}

// P(X > m) for X = -Y equals P(Y < -m); Y drawn from the standard library's
// lognormal, independent of the library sampler.
TEST(SplitProperties, NegativeLognormalMirrorSymmetry) {
  constexpr int kN = 1'000'000;
  for (const double sigma : {0.5, 1.0, 2.0}) {
    const auto d = Distribution::negative_lognormal(0.3, sigma);
    const double m = d.mean();
    std::mt19937_64 gen(99);
    std::lognormal_distribution<double> positive(0.3, sigma);
    int below = 0;
    for (int i = 0; i < kN; ++i) below += positive(gen) < -m ? 1 : 0;
    const auto xs = sample(d, kN, kSeed);
    int above = 0;
    for (const double x : xs) above += x > m ? 1 : 0;
    const double p = prob_above_mean(d);
    const double se = std::sqrt(p * (1 - p) / kN);
    EXPECT_NEAR(static_cast<double>(below) / kN, p, 4 * se);
    EXPECT_NEAR(static_cast<double>(above) / kN, p, 4 * se);
    EXPECT_NEAR(static_cast<double>(above - below) / kN, 0.0, 4 * std::sqrt(2.0) * se);
  }
}

TEST(ParseDistribution, Families) {
  EXPECT_EQ(parse_distribution("gaussian:0,1").describe(), "gaussian:0,1");
  EXPECT_EQ(parse_distribution("normal:2.5,0.5").describe(), "gaussian:2.5,0.5");
  EXPECT_EQ(parse_distribution("twopoint:0.9,1,-5").describe(), "twopoint:0.9,1,-5");
  EXPECT_EQ(parse_distribution("pareto:1.15,1").describe(), "pareto:1.15,1");
  EXPECT_EQ(parse_distribution("pareto-reflected:3,2").describe(), "pareto-reflected:3,2");
  EXPECT_EQ(parse_distribution("lognormal:0,2").describe(), "neglognormal:0,2");
}

TEST(ParseDistribution, Errors) {
  const auto bad = ErrorKind::kValidation;
  EXPECT_TRUE(throws_kind([] { parse_distribution("gaussian"); }, bad));
  EXPECT_TRUE(throws_kind([] { parse_distribution("cauchy:0,1"); }, bad));
  EXPECT_TRUE(throws_kind([] { parse_distribution("gaussian:0"); }, bad));
  EXPECT_TRUE(throws_kind([] { parse_distribution("gaussian:0,x"); }, bad));
  EXPECT_TRUE(throws_kind([] { parse_distribution("gaussian:0,1,"); }, bad));
  EXPECT_TRUE(throws_kind([] { parse_distribution("pareto:0.9,1"); },
                          ErrorKind::kInfiniteMean));
}

}  // namespace
}  // namespace skingame
