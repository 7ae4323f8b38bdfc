#include <gtest/gtest.h>

#include "lacunary/lacunary.hpp"
#include "oracles.hpp"

using namespace lacunary;

TEST(CountSolutions, Examples) {
  const auto t1 = SequenceSpec::theorem1();
  EXPECT_EQ(count_solutions(t1, 3, 1, 1, 10), 5u);
  for (std::size_t n = 1; n <= 40; ++n) EXPECT_EQ(count_solutions(t1, 3, 1, 1, n), n / 2) << n;
  for (std::size_t n = 2; n <= 30; ++n) EXPECT_EQ(count_solutions(SequenceSpec::geometric(2), 2, 1, 0, n), n - 1);
  EXPECT_EQ(count_solutions(SequenceSpec::geometric(2), 1, 1, 0, 30), 0u);
  EXPECT_EQ(count_solutions(t1, 1, 1, 0, 20), 0u);
}

TEST(CountSolutions, MatchesNaiveDoubleLoop) {
  for (const auto& seq : {SequenceSpec::theorem1(), SequenceSpec::geometric(2), SequenceSpec::geometric(3),
                          SequenceSpec::powers_minus_one(2)}) {
    const auto terms = counting_terms(seq, 14);
    for (long j1 = 1; j1 <= 5; ++j1)
      for (long j2 = 1; j2 <= 5; ++j2)
        for (long nu = -8; nu <= 8; ++nu)
          ASSERT_EQ(count_solutions(terms, j1, j2, nu), oracle::naive_count(terms, j1, j2, nu))
              << seq.name() << " " << j1 << " " << j2 << " " << nu;
  }
}

TEST(CountSolutions, MonotoneInN) {
  const auto seq = SequenceSpec::powers_minus_one(2);
  std::uint64_t prev = 0;
  for (std::size_t n = 1; n <= 60; ++n) {
    const auto s = count_solutions(seq, 2, 1, -1, n);
    EXPECT_GE(s, prev);
    prev = s;
  }
}

TEST(Symmetry, Examples) {
  const auto t1 = SequenceSpec::theorem1();
  EXPECT_EQ(count_solutions(t1, 3, 1, 1, 20), 10u);
  EXPECT_EQ(count_solutions(t1, 1, 3, -1, 20), 10u);
  EXPECT_TRUE(symmetry_check(t1, 3, 1, 1, 20));
  EXPECT_EQ(count_solutions(SequenceSpec::geometric(2), 2, 1, 0, 15), 14u);
  EXPECT_EQ(count_solutions(SequenceSpec::geometric(2), 1, 2, 0, 15), 14u);
  EXPECT_TRUE(symmetry_check(SequenceSpec::geometric(2), 2, 1, 0, 15));
  EXPECT_TRUE(symmetry_check(SequenceSpec::geometric(2), 4, 4, 0, 15));
  for (long j1 = 1; j1 <= 4; ++j1)
    for (long j2 = 1; j2 <= 4; ++j2)
      for (long nu = -5; nu <= 5; ++nu) EXPECT_TRUE(symmetry_check(SequenceSpec::powers_minus_one(3), j1, j2, nu, 25));
}

TEST(Lemma1, Theorem1CountsAreHalfOrTiny) {
  const auto terms = counting_terms(SequenceSpec::theorem1(), 40);
  for (long j1 = 1; j1 <= 9; ++j1)
    for (long j2 = 1; j2 <= 9; ++j2)
      for (long nu = -100; nu <= 100; ++nu) {
        const auto pairs = solution_pairs(terms, j1, j2, nu);
        const bool main = (j1 == 3 * j2 && nu == j2) || (j2 == 3 * j1 && nu == -j1);
        for (std::size_t n = 1; n <= 40; ++n) {
          const auto s = count_up_to(pairs, n);
          if (main)
            ASSERT_EQ(s, n / 2) << j1 << " " << j2 << " " << nu << " " << n;
          else
            ASSERT_LE(s, 2u) << j1 << " " << j2 << " " << nu << " " << n;
        }
      }
}

TEST(EstimateGamma, Examples) {
  const std::vector<std::size_t> ladder{100, 1000, 10000};
  const auto pm1 = estimate_gamma(SequenceSpec::powers_minus_one(2), 2, 1, -1, ladder);
  EXPECT_EQ(pm1.fitted_limit, Rational(1));
  EXPECT_EQ(pm1.series.back().count, 9999u);
  const auto t1 = estimate_gamma(SequenceSpec::theorem1(), 3, 1, 1, std::vector<std::size_t>{10, 20, 40});
  EXPECT_EQ(t1.fitted_limit, Rational(1, 2));
  EXPECT_EQ(t1.last_ratio, Rational(1, 2));
  const auto g = estimate_gamma(SequenceSpec::geometric(2), 3, 1, 0, ladder);
  EXPECT_EQ(g.fitted_limit, Rational(0));
  EXPECT_THROW(estimate_gamma(SequenceSpec::geometric(2), 2, 1, 0, std::vector<std::size_t>{10, 5}),
               std::invalid_argument);
}

TEST(GammaTable, Theorem1Pattern) {
  EXPECT_TRUE(gamma_table_theorem1(2).empty());
  const auto t3 = gamma_table_theorem1(3);
  EXPECT_EQ(t3.size(), 2u);
  EXPECT_EQ(t3.get(3, 1, 1), Rational(1, 2));
  EXPECT_EQ(t3.get(1, 3, -1), Rational(1, 2));
  const auto t9 = gamma_table_theorem1(9);
  EXPECT_EQ(t9.size(), 6u);
  EXPECT_TRUE(t9.satisfies_invariants());
  EXPECT_TRUE(gamma_table_theorem1(30000).satisfies_invariants());
}

TEST(GammaTable, SetEnforcesConventions) {
  GammaTable t(4);
  t.set(2, 1, 0, Rational(1));
  EXPECT_EQ(t.get(1, 2, 0), Rational(1));
  EXPECT_THROW(t.set(1, 1, 0, Rational(1)), std::invalid_argument);
  EXPECT_THROW(t.set(2, 1, 0, Rational(-1)), std::invalid_argument);
  t.set(2, 1, 0, Rational(0));
  EXPECT_TRUE(t.empty());
}

TEST(GammaTable, JsonRoundTrip) {
  const auto t = gamma_table_theorem1(12);
  const auto back = GammaTable::from_json(t.to_json());
  EXPECT_EQ(back.entries(), t.entries());
  EXPECT_EQ(back.d_max(), 12);
  EXPECT_EQ(back.tail_model(), TailModel::Theorem1Pattern);
  auto bad = t.to_json();
  bad["entries"].erase(bad["entries"].begin());
  EXPECT_THROW(GammaTable::from_json(bad), std::invalid_argument);
}

TEST(EstimateGammaTable, ErdosFortetTable) {
  const auto t = estimate_gamma_table(SequenceSpec::powers_minus_one(2), 2, 64,
                                      std::vector<std::size_t>{1000, 10000});
  EXPECT_EQ(t.size(), 2u);
  EXPECT_EQ(t.get(2, 1, -1), Rational(1));
  EXPECT_EQ(t.get(1, 2, 1), Rational(1));
  EXPECT_TRUE(t.satisfies_invariants());
}

TEST(EstimateGammaTable, Theorem1RecoversPattern) {
  const auto t = estimate_gamma_table(SequenceSpec::theorem1(), 9, 20, std::vector<std::size_t>{20, 40});
  EXPECT_EQ(t.entries(), gamma_table_theorem1(9).entries());
}
