#include <gtest/gtest.h>

#include <thread>
#include <vector>

#include "oracles.hpp"
#include "zetalab/bernoulli.hpp"

namespace zetalab {
namespace {

TEST(Bernoulli, ListedValues) {
  EXPECT_EQ(bernoulli(2), make_rational(1, 6));
  EXPECT_EQ(bernoulli(7), BigRational(0));
  EXPECT_EQ(bernoulli(12), make_rational(-691, 2730));
  EXPECT_EQ(bernoulli(12).to_string(), "-691/2730");
}

TEST(BernoulliTable, SmallTables) {
  EXPECT_EQ(bernoulli_table(0).size(), 1U);
  EXPECT_EQ(bernoulli_table(0)[0], BigRational(1));

  const BernoulliTable one = bernoulli_table(1);
  ASSERT_EQ(one.size(), 2U);
  EXPECT_EQ(one[1], make_rational(-1, 2));

  const std::vector<BigRational> expected{1, make_rational(-1, 2), make_rational(1, 6), 0,
                                          make_rational(-1, 30), 0, make_rational(1, 42), 0};
  const BernoulliTable seven = bernoulli_table(7);
  ASSERT_EQ(seven.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(seven[i], expected[i]) << i;
}

TEST(BernoulliTable, RecursionResidualVanishesThrough200) {
  const BernoulliTable t = bernoulli_table(199);
  for (unsigned long k = 2; k <= 200; ++k) EXPECT_TRUE(recursion_residual(t, k).is_zero()) << k;
  EXPECT_THROW(recursion_residual(t, 201), DomainError);
}

TEST(BernoulliTable, OddValuesVanish) {
  const BernoulliTable t = bernoulli_table(199);
  for (std::size_t k = 1; k <= 99; ++k) EXPECT_TRUE(t[2 * k + 1].is_zero()) << 2 * k + 1;
}

TEST(BernoulliTable, EvenSignsAlternate) {
  for (unsigned n = 1; n <= 50; ++n) EXPECT_EQ(bernoulli(2 * n).sign(), n % 2 == 1 ? 1 : -1) << 2 * n;
}

TEST(Bernoulli, MatchesSeriesDivisionOracle) {
  const auto oracle = oracle::bernoulli_by_series_division(40);
  for (unsigned n = 0; n <= 40; ++n) EXPECT_EQ(bernoulli(n), BigRational(oracle[n])) << n;
}

TEST(Bernoulli, ConcurrentCallersSeeSameValues) {
  const auto oracle = oracle::bernoulli_by_series_division(60);
  std::vector<std::vector<BigRational>> seen(4);
  {
    std::vector<std::jthread> workers;
    for (std::size_t w = 0; w < seen.size(); ++w) {
      workers.emplace_back([&, w] {
        for (unsigned n = 60; n-- > 0;) seen[w].push_back(bernoulli((n * 7 + w) % 61));
      });
    }
  }
  for (std::size_t w = 0; w < seen.size(); ++w) {
    unsigned i = 0;
    for (unsigned n = 60; n-- > 0; ++i) EXPECT_EQ(seen[w][i], BigRational(oracle[(n * 7 + w) % 61]));
  }
}

}  // namespace
}  // namespace zetalab
