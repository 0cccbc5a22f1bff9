#include <gtest/gtest.h>

#include "poplab/enumerator.hpp"
#include "poplab/pop.hpp"
#include "support/oracles.hpp"

using namespace poplab;

namespace {

std::vector<BigInt> big(std::initializer_list<long long> xs) {
  std::vector<BigInt> out;
  for (long long x : xs) out.emplace_back(x);
  return out;
}

PatternSet patterns(std::initializer_list<const char*> texts) {
  PatternSet out;
  for (const char* t : texts) out.push_back(parse_permutation(t));
  return out;
}

}  // namespace

TEST(CountAvoiders, Examples) {
  EXPECT_EQ(count_avoiders(parse_pop("k=4; 1>2"), 5), 20);
  EXPECT_EQ(count_avoiders(parse_pop("k=4; 1>3, 4>2"), 3), 6);
  EXPECT_EQ(count_avoiders(Pop(4), 4), 0);
  EXPECT_EQ(count_avoiders(Pop(4), 0), 1);
  EXPECT_EQ(count_avoiders(parse_pop("k=4; 3>1, 1>2, 3>4"), 6), 311);
  // The bowtie {1>2,1>3,4>2,4>3} is the A006012 POP, not the 311 one.
  EXPECT_EQ(count_avoiders(parse_pop("k=4; 1>2, 1>3, 4>2, 4>3"), 6), 232);
}

TEST(CountAvoiders, Prefixes) {
  EXPECT_EQ(count_avoiders_prefix(parse_pop("k=4; 1>2, 4>3"), 6).counts, big({1, 1, 2, 6, 18, 50, 130}));
  EXPECT_EQ(count_avoiders_prefix(parse_pop("k=2; 1>2"), 4).counts, big({1, 1, 1, 1, 1}));
  EXPECT_EQ(count_avoiders_prefix(parse_pop("k=5; 1>2, 1>3, 1>4, 1>5"), 6).counts, big({1, 1, 2, 6, 24, 96, 384}));
}

TEST(CountAvoiders, AgreesWithNaiveOracle) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    const Pop p = oracle::random_pop(rng, 3 + trial % 2);
    for (int n = 0; n <= 7; ++n) {
      ASSERT_EQ(count_avoiders(p, n), oracle::count_avoiders(p, n)) << p.to_string() << " n=" << n;
    }
  }
}

TEST(CountAvoiders, Ceiling) {
  EXPECT_THROW(count_avoiders(parse_pop("k=4; 1>2"), 11), CeilingExceeded);
  EXPECT_THROW(count_avoiders_prefix(parse_pop("k=4; 1>2"), 11), CeilingExceeded);
  CountOptions lowered;
  lowered.ceiling = 5;
  EXPECT_THROW(count_avoiders(parse_pop("k=4; 1>2"), 6, lowered), CeilingExceeded);
  EXPECT_EQ(count_avoiders(parse_pop("k=4; 1>2"), 5, lowered), 20);
}

TEST(CountAvoiders, JobsDoNotChangeResults) {
  const Pop p = parse_pop("k=4; 1>2, 2>4, 1>3");
  CountOptions one;
  CountOptions many;
  many.jobs = 4;
  EXPECT_EQ(count_avoiders_prefix(p, 8, one).counts, count_avoiders_prefix(p, 8, many).counts);
  EXPECT_EQ(count_avoiders_prefix(p, 8, many).counts, big({1, 1, 2, 6, 21, 80, 322, 1346, 5783}));
}

TEST(PatternSet, Examples) {
  EXPECT_EQ(count_avoiders_pattern_set(patterns({"2431", "4231", "4321"}), 6), 311);
  EXPECT_EQ(count_avoiders_pattern_set(patterns({"2413", "3142", "2143"}), 6), 311);
  EXPECT_EQ(count_avoiders_pattern_set({}, 3), 6);
  EXPECT_THROW(count_avoiders_pattern_set(patterns({"21", "123"}), 3), std::invalid_argument);
}

TEST(PatternSet, AgreesWithNaiveOracle) {
  const PatternSet set = patterns({"2143", "3142", "4132"});
  std::vector<oracle::Perm> raw;
  for (const Permutation& q : set) raw.push_back(oracle::values(q));
  for (int n = 0; n <= 7; ++n) EXPECT_EQ(count_avoiders_pattern_set(set, n), oracle::count_avoiders(raw, n));
}

TEST(CycleInterval, Examples) {
  EXPECT_EQ(count_cycle_interval_perms(5, 7), 399);
  EXPECT_EQ(count_cycle_interval_perms(3, 2), 2);
  EXPECT_EQ(count_cycle_interval_perms(4, 5), 25);
  EXPECT_EQ(cycle_interval_pop(5), parse_pop("k=5; 1>5"));
  EXPECT_THROW(count_cycle_interval_perms(2, 3), std::invalid_argument);
}
