#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "poplab/permutation.hpp"
#include "poplab/pop.hpp"
#include "support/oracles.hpp"

using namespace poplab;

TEST(Permutation, ParseAndPrint) {
  EXPECT_EQ(parse_permutation("41523"), Permutation({4, 1, 5, 2, 3}));
  EXPECT_EQ(parse_permutation("10,2,1,3,4,5,6,7,8,9").size(), 10);
  EXPECT_EQ(parse_permutation("10,2,1,3,4,5,6,7,8,9").to_string(), "10,2,1,3,4,5,6,7,8,9");
  EXPECT_EQ(parse_permutation("").size(), 0);
  EXPECT_THROW(parse_permutation("1224"), std::invalid_argument);
  EXPECT_THROW(parse_permutation("13"), std::invalid_argument);
  EXPECT_THROW(parse_permutation("1a2"), std::invalid_argument);
}

TEST(Permutation, Standardize) {
  const std::vector<int> a = {4, 1, 5};
  const std::vector<int> b = {3, 4, 5};
  const std::vector<int> c = {9, 2};
  EXPECT_EQ(standardize(a).to_string(), "213");
  EXPECT_EQ(standardize(b).to_string(), "123");
  EXPECT_EQ(standardize(c).to_string(), "21");
  const std::vector<int> dup = {2, 2};
  EXPECT_THROW(standardize(dup), std::invalid_argument);
}

TEST(Permutation, TrivialBijections) {
  const Permutation p = parse_permutation("41523");
  EXPECT_EQ(complement(p).to_string(), "25143");
  EXPECT_EQ(reverse(p).to_string(), "32514");
  // 4->1, 1->2, 5->3, 2->4, 3->5
  EXPECT_EQ(inverse(p).to_string(), "24513");
  std::vector<int> composed;
  for (int i = 1; i <= 5; ++i) composed.push_back(p(inverse(p)(i)));
  EXPECT_EQ(Permutation(composed), Permutation::identity(5));
  EXPECT_EQ(inverse(inverse(p)), p);
}

TEST(Containment, ClassicalExamples) {
  EXPECT_TRUE(contains_pattern(parse_permutation("31425"), parse_permutation("123")));
  EXPECT_TRUE(contains_pattern(parse_permutation("31425"), Permutation()));
  EXPECT_FALSE(contains_pattern(parse_permutation("123"), parse_permutation("321")));
  EXPECT_EQ(count_pop_occurrences(parse_permutation("31425"), Pop::from_pattern(parse_permutation("123"))), 3U);
}

TEST(Containment, PopExamples) {
  const Pop p = parse_pop("k=3; 1>3");
  EXPECT_TRUE(contains_pop(parse_permutation("41523"), p));
  // 412, 413, 423, 452, 453 and 523; 423 is easy to overlook.
  EXPECT_EQ(count_pop_occurrences(parse_permutation("41523"), p), 6U);
  EXPECT_EQ(oracle::count_occurrences({4, 1, 5, 2, 3}, p), 6U);
  EXPECT_FALSE(contains_pop(parse_permutation("21"), p));
  EXPECT_FALSE(contains_pop(parse_permutation("12345"), parse_pop("k=4; 1>2, 1>3, 1>4")));
  EXPECT_EQ(count_pop_occurrences(parse_permutation("123"), parse_pop("k=2; 1>2")), 0U);
  EXPECT_EQ(count_pop_occurrences(parse_permutation("321"), Pop(2)), 3U);
}

TEST(Containment, AgreesWithSubsetOracle) {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 2 + trial % 4;
    const Pop p = oracle::random_pop(rng, k);
    const oracle::Perm v = oracle::random_perm(rng, 3 + trial % 6);
    const Permutation perm(v);
    ASSERT_EQ(contains_pop(perm, p), oracle::contains_pop(v, p)) << p.to_string() << " in " << perm.to_string();
    ASSERT_EQ(count_pop_occurrences(perm, p), oracle::count_occurrences(v, p));
    const oracle::Perm q = oracle::random_perm(rng, k);
    ASSERT_EQ(contains_pattern(perm, Permutation(q)), oracle::contains_pattern(v, q));
  }
}

TEST(Containment, EndingAtLast) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const Pop p = oracle::random_pop(rng, 3 + trial % 2);
    const oracle::Perm v = oracle::random_perm(rng, 6);
    const std::vector<int> head(v.begin(), v.end() - 1);
    if (oracle::contains_pop(head, p)) continue;
    EXPECT_EQ(contains_pop_ending_at_last(v, p), oracle::contains_pop(v, p));
    for (const Permutation& q : linear_extensions(p)) {
      if (oracle::contains_pattern(head, oracle::values(q))) continue;
      EXPECT_EQ(contains_pattern_ending_at_last(v, q), oracle::contains_pattern(v, oracle::values(q)));
    }
  }
}

TEST(Cycles, CanonicalFlatten) {
  // (163)(7)(82)(45) as a map on 1..8
  const Permutation p({6, 8, 1, 5, 4, 3, 7, 2});
  EXPECT_EQ(cycle_canonical_flatten(p).to_string(), "54631782");
  EXPECT_EQ(cycle_canonical_flatten(Permutation::identity(3)).to_string(), "123");
  EXPECT_EQ(cycle_canonical_flatten(parse_permutation("21")).to_string(), "21");
  EXPECT_EQ(left_to_right_maxima(parse_permutation("54631782")), (std::vector<int>{5, 6, 7, 8}));
}

TEST(Cycles, ListsLargestFirst) {
  const auto c = cycles(Permutation({6, 8, 1, 5, 4, 3, 7, 2}));
  ASSERT_EQ(c.size(), 4U);
  for (const auto& cycle : c) EXPECT_EQ(cycle.front(), *std::max_element(cycle.begin(), cycle.end()));
}

TEST(Cycles, IntervalProperty) {
  EXPECT_TRUE(has_cycle_interval_property(Permutation::identity(6), 2));
  EXPECT_FALSE(has_cycle_interval_property(parse_permutation("51234"), 5));
  EXPECT_TRUE(has_cycle_interval_property(parse_permutation("51234"), 6));
  EXPECT_TRUE(has_cycle_interval_property(parse_permutation("21"), 3));
}
