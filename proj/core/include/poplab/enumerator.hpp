#pragma once

#include <vector>

#include "poplab/common.hpp"
#include "poplab/permutation.hpp"
#include "poplab/pop.hpp"

namespace poplab {

struct CountOptions {
  /// Largest n an exhaustive request may ask for; raise explicitly.
  int ceiling = 10;
  /// Worker threads; the search forest is split by the first entry.
  int jobs = 1;
};

/// a(0..n_max) for one POP.
struct CountSequence {
  Pop pop;
  std::vector<BigInt> counts;
};

/// Number of n-permutations avoiding p. Throws CeilingExceeded when
/// n > options.ceiling.
BigInt count_avoiders(const Pop& p, int n, const CountOptions& options = {});

CountSequence count_avoiders_prefix(const Pop& p, int n_max, const CountOptions& options = {});

/// Number of n-permutations avoiding every pattern in `patterns`; all
/// patterns must have the same length.
BigInt count_avoiders_pattern_set(const PatternSet& patterns, int n, const CountOptions& options = {});

/// Number of n-permutations whose cycles each fit in an integer interval of
/// at most k-1 elements, by filtering all of S_n.
BigInt count_cycle_interval_perms(int k, int n, const CountOptions& options = {});

/// The POP with label k below label 1 and labels 2..k-1 isolated.
Pop cycle_interval_pop(int k);

}  // namespace poplab
