#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "lacunary/lacunary.hpp"
#include "oracles.hpp"

using namespace lacunary;

namespace {

GammaTable erdos_fortet_table() {
  GammaTable t(2);
  t.set(2, 1, -1, Rational(1));
  return t;
}

}  // namespace

TEST(SigmaSeries, EmptyTableGivesNorm) {
  const GammaTable empty;
  for (const auto& text : {"cos:3", "trig:1:1/2:1/3;4:2:0", "indicator:1/5,4/5"}) {
    const auto f = BVFunctionSpec::parse(text);
    const auto s = sigma_sq_series(f, empty, Rational(2, 7));
    EXPECT_DOUBLE_EQ(s.value, f.l2_norm_sq().get_d());
    EXPECT_EQ(s.tail_bound, 0);
  }
}

TEST(SigmaSeries, TelescopingSumVanishes) {
  GammaTable t(2);
  t.set(2, 1, 0, Rational(1));
  const auto f = BVFunctionSpec::parse("trig:1:1:0;2:-1:0");
  for (int i = 0; i <= 20; ++i) EXPECT_NEAR(sigma_sq_series(f, t, make_rational(i, 20)).value, 0, 1e-15);
}

TEST(SigmaSeries, ErdosFortet) {
  const auto f = BVFunctionSpec::parse("trig:1:1:0;2:1:0");
  const auto t = erdos_fortet_table();
  for (int i = 0; i <= 50; ++i) {
    const double x = i / 50.0;
    const double c = std::cos(std::numbers::pi * x);
    EXPECT_NEAR(sigma_sq_series(f, t, make_rational(i, 50)).value, 2 * c * c, 1e-14);
  }
}

TEST(SigmaSeries, TailBoundFormula) {
  const auto f = BVFunctionSpec::centered_indicator(Rational(0), Rational(1, 2));
  const auto s = sigma_sq_series(f, gamma_table_theorem1(30000), Rational(1, 3));
  EXPECT_NEAR(s.tail_bound, 2 * 4 / (3 * std::numbers::pi * std::numbers::pi) / 10000.5, 1e-12);
  EXPECT_FALSE(s.table_truncated);
  const auto small = sigma_sq_series(f, gamma_table_theorem1(300), Rational(1, 3));
  EXPECT_TRUE(small.table_truncated);
}

TEST(ClosedForm, AgreesWithConvolutionQuadrature) {
  for (int i = 0; i <= 12; ++i)
    for (int k = 0; k <= 12; ++k) {
      const Rational a = make_rational(i, 12), x = make_rational(k, 12);
      const double closed = sigma_sq_closed_form_theorem1(a, x).get_d();
      EXPECT_NEAR(closed, oracle::convolution_sigma_sq(a.get_d(), x.get_d(), 600000), 2e-5) << i << " " << k;
    }
}

TEST(ClosedForm, SpecialValues) {
  for (const Rational& x : {Rational(0), Rational(1, 3), Rational(7, 9), Rational(1)}) {
    EXPECT_EQ(sigma_sq_closed_form_theorem1(Rational(0), x), 0);
    EXPECT_EQ(sigma_sq_closed_form_theorem1(Rational(1), x), 0);
  }
  // Middle third with 0 <= x <= 1 - a and 3a - 1 <= x: overlap 3a - 1.
  const Rational a(9, 20), x(1, 2);
  const Rational overlap = 3 * a - 1;
  EXPECT_EQ(sigma_sq_closed_form_theorem1(a, x), a * (1 - a) + (1 - a) * frac(Rational(3 * a)) / 3 - overlap / 3);
  EXPECT_EQ(sigma_sq_closed_form_theorem1(Rational(1, 3), Rational(2, 5)), Rational(2, 9));
  EXPECT_THROW(sigma_sq_closed_form_theorem1(Rational(3, 2), Rational(0)), std::domain_error);
}

TEST(ClosedForm, IntervalVersionReducesToAnchored) {
  for (int i = 0; i < 24; ++i)
    for (int k = 0; k <= 24; ++k)
      EXPECT_EQ(sigma_sq_interval_theorem1(Rational(0), make_rational(i, 24), make_rational(k, 24)),
                sigma_sq_closed_form_theorem1(make_rational(i, 24), make_rational(k, 24)));
}

TEST(ClosedForm, IntervalVersionMatchesSeries) {
  const auto table = gamma_table_theorem1(30000);
  for (const auto& [a, b] : {std::pair{Rational(1, 10), Rational(1, 2)}, std::pair{Rational(1, 3), Rational(5, 6)},
                             std::pair{Rational(3, 5), Rational(19, 20)}})
    for (const Rational& x : {Rational(0), Rational(2, 7), Rational(9, 10)}) {
      const auto s = sigma_sq_series(BVFunctionSpec::centered_indicator(a, b), table, x);
      EXPECT_NEAR(s.value, sigma_sq_interval_theorem1(a, b, x).get_d(), s.tail_bound);
    }
}

TEST(ClosedForm, SmallOnOuterThirds) {
  for (int i = 0; i <= 120; ++i) {
    const Rational a = make_rational(i, 360);
    const Rational b = 1 - a;
    for (int k = 0; k <= 60; ++k) {
      const Rational x = make_rational(k, 60);
      EXPECT_LE(sigma_sq_closed_form_theorem1(a, x), Rational(2, 9));
      EXPECT_LE(sigma_sq_closed_form_theorem1(b, x), Rational(2, 9));
    }
  }
}

TEST(Symmetry, RelationHoldsExactly) {
  EXPECT_TRUE(symmetry_relation_check(Rational(1, 4), Rational(1, 3)));
  for (int k = 0; k <= 10; ++k) EXPECT_TRUE(symmetry_relation_check(Rational(1, 2), make_rational(k, 10)));
  CounterRng rng(99);
  for (int i = 0; i < 1000; ++i)
    ASSERT_TRUE(symmetry_relation_check(oracle::random_point(rng, 500), oracle::random_point(rng, 500)));
}

TEST(LambdaClosed, BranchValues) {
  EXPECT_EQ(lambda_star_theorem1_closed(Rational(0)).radicand, Rational(1, 3));
  EXPECT_EQ(lambda_star_theorem1_closed(Rational(7, 24)).radicand, Rational(1, 4));
  EXPECT_EQ(lambda_star_theorem1_closed(Rational(7, 24)).value, 0.5);
  EXPECT_EQ(lambda_star_theorem1_closed(Rational(9, 20)).radicand, Rational(2, 9));
  EXPECT_EQ(lambda_star_theorem1_closed(Rational(1, 2)).radicand, Rational(2, 9));
  EXPECT_NEAR(lambda_star_theorem1_closed(Rational(0)).value, 0.5773502691896258, 1e-15);
}

TEST(LambdaClosed, BranchContinuity) {
  const Rational x1(1, 6), x2(3, 8);
  EXPECT_EQ((-3 * x1 * x1 - x1 + 2) / 6, (-24 * x1 + 25) / 72);
  EXPECT_EQ(Rational((-3 * x1 * x1 - x1 + 2) / 6), Rational(7, 24));
  EXPECT_EQ(Rational((-24 * x2 + 25) / 72), Rational(2, 9));
  EXPECT_EQ(lambda_star_theorem1_closed(x2).radicand, Rational(2, 9));
  EXPECT_EQ(lambda_star_theorem1_closed(Rational(5, 8)).radicand, Rational(2, 9));
  for (int i = 0; i <= 480; ++i)
    EXPECT_EQ(lambda_star_theorem1_closed(make_rational(i, 480)).radicand,
              lambda_star_theorem1_closed(Rational(480 - i, 480)).radicand);
}

TEST(LambdaNumeric, MatchesClosedForm) {
  for (const Rational& x : {Rational(0), Rational(1, 10), Rational(1, 6), Rational(7, 24), Rational(3, 8),
                           Rational(1, 2), Rational(2, 3), Rational(19, 20)}) {
    const auto num = lambda_star_numeric_theorem1(x);
    EXPECT_NEAR(num.value, lambda_star_theorem1_closed(x).value, 1e-9) << x;
    ASSERT_TRUE(num.exact_sq);
    EXPECT_EQ(*num.exact_sq, lambda_star_theorem1_closed(x).radicand) << x;
  }
  EXPECT_NEAR(lambda_star_numeric_theorem1(Rational(1, 10)).value, std::sqrt((-0.03 - 0.1 + 2) / 6), 1e-12);
}

TEST(LambdaNumeric, EmptyTable) {
  const auto r = lambda_star_numeric(GammaTable(), 0.3);
  EXPECT_NEAR(r.value, 0.5, 1e-12);
  EXPECT_NEAR(r.witness_a, 0.5, 1e-6);
  EXPECT_NEAR(lambda_extremal_numeric(GammaTable(), 0.3).value, 0.5, 1e-12);
}

TEST(LambdaNumeric, SeriesPathNearClosedForm) {
  const auto table = gamma_table_theorem1(3000);
  for (const double x : {0.05, 0.25, 0.45}) {
    const auto r = lambda_star_numeric(table, x, 128);
    const double closed = lambda_star_theorem1_closed(Rational(x)).value;
    EXPECT_NEAR(r.value, closed, 5e-3) << x;
  }
}

TEST(LambdaExtremal, DominatesStar) {
  const auto table = gamma_table_theorem1(3000);
  for (const double x : {0.1, 0.3, 0.5}) {
    const auto ext = lambda_extremal_numeric(table, x, 48, 1000);
    const auto star = lambda_star_numeric(table, x, 96, 60, 1000);
    EXPECT_GE(ext.value, star.value - 1e-9) << x;
    EXPECT_GE(ext.value, 0.499) << x;
    EXPECT_LE(ext.a, ext.b);
  }
}

TEST(Theorem2, AverageIsOneEighth) {
  EXPECT_NEAR(theorem2_average_check(gamma_table_theorem1(30000), 0.3), 0.125, 1e-4);
  EXPECT_NEAR(theorem2_average_check(GammaTable(), 0.71, 64), 0.125, 1e-15);
  const auto est = estimate_gamma_table(SequenceSpec::powers_minus_one(2), 4, 32, std::vector<std::size_t>{500, 1000});
  EXPECT_NEAR(theorem2_average_check(est, 0.0), 0.125, 1e-4);
}

TEST(Theorem2, StarMeanAtLeastQuarter) {
  EXPECT_GE(theorem2_star_mean(gamma_table_theorem1(3000), 512), 0.25 - 1e-6);
}

TEST(GammaBound, Examples) {
  const auto ind = BVFunctionSpec::centered_indicator(Rational(0), Rational(1, 2));
  const auto b = gamma_bound_check(ind, gamma_table_theorem1(300), Rational(8, 3));
  EXPECT_TRUE(b.holds);
  EXPECT_EQ(b.rhs_exact, Rational(64, 15));
  const auto e = gamma_bound_check(ind, GammaTable(), Rational(2));
  EXPECT_EQ(e.lhs, 0);
  EXPECT_TRUE(e.holds);
  const auto c = gamma_bound_check(BVFunctionSpec::parse("cos:1"), gamma_table_theorem1(30), Rational(2));
  EXPECT_EQ(c.rhs_exact, Rational(64, 3));
  EXPECT_TRUE(c.holds);
  EXPECT_THROW(gamma_bound_check(ind, GammaTable(), Rational(1)), std::invalid_argument);
}

TEST(GammaBound, HoldsOnEstimatedTables) {
  const std::vector<std::size_t> ladder{500, 1000};
  const auto ind = BVFunctionSpec::centered_indicator(Rational(0), Rational(1, 3));
  for (const auto& [seq, q] : {std::pair{SequenceSpec::powers_minus_one(2), Rational(2)},
                               std::pair{SequenceSpec::geometric(2), Rational(2)},
                               std::pair{SequenceSpec::geometric(3), Rational(3)}}) {
    const auto t = estimate_gamma_table(seq, 6, 16, ladder);
    EXPECT_TRUE(gamma_bound_check(ind, t, q).holds) << seq.name();
  }
}

TEST(Fukuyama, ReferenceValues) {
  EXPECT_NEAR(fukuyama_reference(2), std::sqrt(42.0) / 9, 1e-15);
  EXPECT_NEAR(fukuyama_reference(2), 0.720082, 5e-7);
  EXPECT_NEAR(fukuyama_reference(3), 0.707107, 5e-7);
  EXPECT_NEAR(fukuyama_reference(4), 0.608581, 5e-7);
  EXPECT_EQ(fukuyama_reference_irrational(), 0.5);
  EXPECT_THROW(fukuyama_reference(1), std::invalid_argument);
}

TEST(SigmaSeries, RadicandNonNegative) {
  const auto table = gamma_table_theorem1(3000);
  for (int i = 0; i <= 16; ++i)
    for (int k = 0; k <= 16; ++k) {
      const auto f = BVFunctionSpec::centered_indicator(Rational(0), make_rational(i, 17));
      const auto s = sigma_sq_series(f, table, make_rational(k, 16));
      EXPECT_GE(s.value + s.tail_bound, 0);
    }
}
