#include <gtest/gtest.h>

#include <cmath>

#include "lacunary/lacunary.hpp"
#include "oracles.hpp"

using namespace lacunary;

TEST(Theorem4, Examples) {
  EXPECT_EQ(theorem4_exact({1}, Rational(1, 2)).total, Rational(1, 4));
  EXPECT_EQ(theorem4_exact({1, 2}, Rational(1, 3)).total, Rational(4, 9));
  EXPECT_EQ(theorem4_exact({3, 5, 7}, Rational(2, 5)).total, Rational(18, 25));
  EXPECT_NEAR(oracle::monte_carlo_theorem4({3, 5, 7}, 0.4, 1000, 1), 0.72, 1e-3);
}

TEST(Theorem4, EveryCrossTermVanishes) {
  for (long k = -63; k <= 63; ++k) {
    if (k == 0) continue;
    for (const Rational& z : {Rational(1, 7), Rational(1, 3), Rational(1, 2), Rational(5, 6)})
      ASSERT_EQ(theorem4_cross_term(k, z), 0) << k << " " << z;
  }
  const auto r = theorem4_exact({2, 9, 17, 40, 64}, Rational(3, 11));
  EXPECT_EQ(r.cross.size(), 20u);
  for (const auto& c : r.cross) EXPECT_EQ(c.value, 0);
  EXPECT_EQ(r.total, Rational(3, 11) * Rational(8, 11) * 5);
}

TEST(Theorem4, ArcAutocorrelationIntegratesToZSquared) {
  for (const Rational& z : {Rational(1, 5), Rational(1, 2), Rational(3, 4)}) {
    EXPECT_EQ(arc_autocorrelation(z, Rational(0)), z);
    EXPECT_EQ(arc_autocorrelation(z, Rational(1, 2)), std::max(Rational(0), Rational(2 * z - 1)));
  }
}

TEST(Theorem4, InputErrors) {
  EXPECT_THROW(theorem4_exact({1, 2}, Rational(0)), std::domain_error);
  EXPECT_THROW(theorem4_exact({1, 2}, Rational(1)), std::domain_error);
  EXPECT_THROW(theorem4_exact({1, 1}, Rational(1, 2)), std::invalid_argument);
  EXPECT_THROW(theorem4_exact({1, 2, 3, 4, 5, 6, 7, 8, 9}, Rational(1, 2)), std::length_error);
  EXPECT_THROW(theorem4_exact({65}, Rational(1, 2)), std::length_error);
}

TEST(Theorem4Pointwise, FailsForIndividualA) {
  EXPECT_EQ(theorem4_pointwise({1, 2}, Rational(1, 3), Rational(0)), Rational(5, 9));
  EXPECT_NE(theorem4_pointwise({1, 2}, Rational(1, 3), Rational(0)), Rational(4, 9));
  // For z = 1/2 the pair {1, 2} happens to give 1/2 for every a.
  for (int i = 0; i < 16; ++i) EXPECT_EQ(theorem4_pointwise({1, 2}, Rational(1, 2), make_rational(i, 16)), Rational(1, 2));
}

TEST(Theorem4Pointwise, SingleFrequencyHasNoCrossTerm) {
  for (const Rational& z : {Rational(1, 5), Rational(2, 3)})
    for (const Rational& a : {Rational(0), Rational(3, 7), Rational(9, 10)})
      EXPECT_EQ(theorem4_pointwise({1}, z, a), z * (1 - z));
}

TEST(Theorem4Pointwise, AverageOverARecoversIdentity) {
  const int grid = 240;
  Rational sum = 0;
  for (int i = 0; i < grid; ++i) sum += theorem4_pointwise({1, 2}, Rational(1, 3), make_rational(i, grid));
  EXPECT_EQ(Rational(sum / grid), Rational(4, 9));
  Rational sum2 = 0;
  for (int i = 0; i < 60; ++i) sum2 += theorem4_pointwise({2, 3, 5}, Rational(1, 4), make_rational(i, 60));
  EXPECT_NEAR(Rational(sum2 / 60).get_d(), Rational(Rational(3, 16) * 3).get_d(), 1e-2);
}

TEST(Koksma, Example) {
  const auto f = StepFunction::centered_indicator(Rational(0), Rational(1, 2));
  const auto r = koksma_check(f, ExactPointSet({Rational(1, 4)}));
  EXPECT_EQ(r.lhs, Rational(1, 2));
  EXPECT_EQ(r.rhs, Rational(3, 2));
  EXPECT_TRUE(r.holds);
}

TEST(Koksma, MidpointsShrink) {
  const auto f = BVFunctionSpec::parse("cos:3");
  std::vector<double> pts;
  for (int k = 1; k <= 1000; ++k) pts.push_back((2 * k - 1) / 2000.0);
  const auto r = koksma_check(f, FloatPointSet(pts));
  EXPECT_TRUE(r.holds);
  EXPECT_LT(r.lhs, 1e-12);
  EXPECT_LT(r.rhs, 0.01);
}

TEST(Koksma, RandomExactSuite) {
  CounterRng rng(31);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto f = oracle::random_step(rng, rng.below(21));
    const auto ps = oracle::random_point_set(rng, 1 + rng.below(200), 1 + rng.below(300));
    ASSERT_TRUE(koksma_check(f, ps).holds) << trial;
  }
}

TEST(SymmetricKoksma, Examples) {
  const auto f = BVFunctionSpec::parse("cos:1");
  const auto r = symmetric_koksma_check(f, FloatPointSet({0.25, 0.75}));
  EXPECT_NEAR(r.lhs, 0, 1e-15);
  EXPECT_TRUE(r.holds);
  EXPECT_THROW(symmetric_koksma_check(BVFunctionSpec::parse("sin:1"), FloatPointSet({0.1})), std::invalid_argument);
  EXPECT_THROW(symmetric_koksma_check(StepFunction::centered_indicator(Rational(0), Rational(1, 3)),
                                      ExactPointSet({Rational(1, 2)})),
               std::invalid_argument);
}

TEST(SymmetricKoksma, RandomExactSuite) {
  CounterRng rng(37);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto f = oracle::random_symmetric_step(rng, rng.below(21));
    const auto ps = oracle::random_point_set(rng, 1 + rng.below(200), 1 + rng.below(300));
    const auto r = symmetric_koksma_check(f, ps);
    ASSERT_TRUE(r.holds) << trial;
    ASSERT_LE(r.lhs, *r.intermediate);
    ASSERT_LE(*r.intermediate, r.rhs);
  }
}

TEST(Fold, Rule) {
  const auto a = fold_points(FloatPointSet({0.7}));
  EXPECT_NEAR(a.points()[0], 0.3, 1e-15);
  EXPECT_EQ(fold_points(ExactPointSet({Rational(1, 2)})).points()[0], Rational(1, 2));
  EXPECT_EQ(fold_points(ExactPointSet({Rational(1)})).points()[0], Rational(0));
}

TEST(Fold, DoubledStarBoundedByExtremal) {
  CounterRng rng(41);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto ps = oracle::random_point_set(rng, 1 + rng.below(60), 1 + rng.below(200));
    std::vector<Rational> doubled;
    const auto folded = fold_points(ps);
    for (const auto& p : folded.points()) {
      ASSERT_LE(p, Rational(1, 2));
      doubled.push_back(2 * p);
    }
    ASSERT_LE(star_discrepancy(ExactPointSet(doubled)).value, extremal_discrepancy(ps).value) << trial;
  }
}

TEST(Trajectory, ZeroPointHasUnitDiscrepancy) {
  const auto rec = trajectory(SequenceSpec::geometric(2), UnitRational(), StatisticKind::StarDisc, 1000);
  for (const auto& c : rec.checkpoints) EXPECT_EQ(c.raw, 1.0);
}

TEST(Trajectory, ErdosFortetZeroAtHalf) {
  const auto f = BVFunctionSpec::parse("trig:1:1:0;2:1:0");
  const auto rec = trajectory(SequenceSpec::powers_minus_one(2), UnitRational::parse("1/2"),
                              StatisticKind::FunctionSum, 4096, {}, f);
  for (const auto& c : rec.checkpoints) EXPECT_NEAR(c.normalized, 0, 1e-12);
}

TEST(Trajectory, LadderAndRunningMax) {
  const auto rec = trajectory(SequenceSpec::theorem1(), UnitRational::parse("12345/65537"),
                              StatisticKind::ExtremalDisc, 5000);
  ASSERT_FALSE(rec.checkpoints.empty());
  EXPECT_EQ(rec.checkpoints.front().n, 64u);
  EXPECT_EQ(rec.checkpoints.back().n, 5000u);
  for (std::size_t i = 1; i < rec.checkpoints.size(); ++i) {
    EXPECT_GT(rec.checkpoints[i].n, rec.checkpoints[i - 1].n);
    EXPECT_GE(rec.checkpoints[i].running_max, rec.checkpoints[i - 1].running_max);
  }
  EXPECT_THROW(trajectory(SequenceSpec::geometric(2), UnitRational(), StatisticKind::StarDisc, 20'000'000),
               std::length_error);
  EXPECT_THROW(trajectory(SequenceSpec::geometric(2), UnitRational(), StatisticKind::FunctionSum, 100),
               std::invalid_argument);
}

TEST(Trajectory, FastPathMatchesExactPoints) {
  const auto x = UnitRational(BigInt("1234567890123456789", 10), large_prime_denominator());
  for (const auto& seq : {SequenceSpec::geometric(2), SequenceSpec::powers_minus_one(3)}) {
    const auto rec = trajectory(seq, x, StatisticKind::StarDisc, 200, {200});
    std::vector<Rational> exact;
    for (std::size_t k = 1; k <= 200; ++k) exact.push_back(frac_part(seq, k, x).value());
    EXPECT_NEAR(rec.checkpoints[0].raw, star_discrepancy(ExactPointSet(exact)).value.get_d(), 1e-15);
  }
}

TEST(Simulate, ReproducibleFromSeed) {
  const auto a = simulate(SequenceSpec::geometric(2), StatisticKind::StarDisc, 2000, 3, 77);
  const auto b = simulate(SequenceSpec::geometric(2), StatisticKind::StarDisc, 2000, 3, 77);
  ASSERT_EQ(a.size(), 3u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].x, b[i].x);
    EXPECT_EQ(a[i].seed, 77u);
    EXPECT_EQ(a[i].checkpoints.back().normalized, b[i].checkpoints.back().normalized);
  }
  EXPECT_NE(a[0].x, a[1].x);
}
