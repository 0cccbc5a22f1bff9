#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "poplab/common.hpp"

namespace poplab {

class Pop;

/// A permutation of {1..n} in one-line notation; n may be 0.
class Permutation {
 public:
  Permutation() = default;

  /// Throws std::invalid_argument unless `values` is a bijection on 1..n.
  explicit Permutation(std::vector<int> values);
  Permutation(std::initializer_list<int> values) : Permutation(std::vector<int>(values)) {}

  static Permutation identity(int n);

  int size() const { return static_cast<int>(values_.size()); }
  bool empty() const { return values_.empty(); }

  /// 1-based position, matching one-line notation.
  int operator()(int position) const { return values_[position - 1]; }

  std::span<const int> values() const { return values_; }

  /// Digits when n <= 9, comma-separated otherwise.
  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> values_;
};

using Pattern = Permutation;

/// Occurrence search for one POP, with the per-position constraints
/// precomputed. Positions are assigned left to right to increasing
/// indices; a branch dies as soon as a comparable pair is out of order or
/// too few entries remain.
class PopMatcher {
 public:
  explicit PopMatcher(const Pop& p);

  int size() const { return k_; }

  bool contains(std::span<const int> values) const;
  bool contains_ending_at_last(std::span<const int> values) const;
  std::uint64_t count(std::span<const int> values) const;

 private:
  template <bool Count>
  std::uint64_t search(std::span<const int> values, bool pin_last) const;

  int k_ = 0;
  // Earlier positions whose entry must be smaller / larger than position j's.
  std::vector<std::uint32_t> smaller_before_;
  std::vector<std::uint32_t> larger_before_;
};

/// Classical-pattern containment, kept separate from PopMatcher: the entry
/// at each new position must sit in the same relative order as the pattern
/// against every earlier chosen entry.
class PatternMatcher {
 public:
  explicit PatternMatcher(const Pattern& pattern);

  int size() const { return static_cast<int>(pattern_.size()); }

  bool contains(std::span<const int> values) const;
  bool contains_ending_at_last(std::span<const int> values) const;

 private:
  bool search(std::span<const int> values, bool pin_last) const;

  std::vector<int> pattern_;
};

/// Parses the one-line text form: "41523" or "10,2,1,...".
Permutation parse_permutation(std::string_view text);

/// The pattern order-isomorphic to `values`; throws on duplicates.
Pattern standardize(std::span<const int> values);

bool contains_pattern(const Permutation& perm, const Pattern& pattern);

bool contains_pop(const Permutation& perm, const Pop& p);

std::uint64_t count_pop_occurrences(const Permutation& perm, const Pop& p);

/// Span-level predicates used by the enumerator. `values` holds distinct
/// integers (not necessarily 1..n); only their relative order matters.
bool contains_pop(std::span<const int> values, const Pop& p);

/// True iff some occurrence of p uses the last entry of `values` as the
/// image of position k. If `values` without its last entry avoids p, this
/// is exactly "values contains p".
bool contains_pop_ending_at_last(std::span<const int> values, const Pop& p);

bool contains_pattern_ending_at_last(std::span<const int> values, const Pattern& pattern);

Permutation reverse(const Permutation& perm);
Permutation complement(const Permutation& perm);
Permutation inverse(const Permutation& perm);

/// Cycles of perm seen as the map i -> perm(i), each listed from its
/// largest element and following the map.
std::vector<std::vector<int>> cycles(const Permutation& perm);

/// Writes each cycle largest-first, orders cycles by increasing maxima and
/// drops the parentheses. Cycle maxima become the left-to-right maxima.
Permutation cycle_canonical_flatten(const Permutation& perm);

/// Every cycle fits in an integer interval of at most k-1 elements.
bool has_cycle_interval_property(const Permutation& perm, int k);

std::vector<int> left_to_right_maxima(const Permutation& perm);

}  // namespace poplab
