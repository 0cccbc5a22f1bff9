#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "poplab/common.hpp"
#include "poplab/permutation.hpp"

namespace poplab {

/// One "a>b" relation of the one-line POP notation: label `greater` sits
/// above label `lesser` in the poset. Labels are 1-based.
struct Relation {
  int greater = 0;
  int lesser = 0;

  auto operator<=>(const Relation&) const = default;
};

/// A partially ordered pattern: a strict partial order on labels 1..k,
/// stored as its transitive closure.
///
/// `below(a, b)` means a < b in the poset, i.e. in an occurrence the entry
/// matched to position a must be smaller than the entry matched to b.
/// Incomparable positions are unconstrained.
class Pop {
 public:
  static constexpr int kMaxSize = 31;

  /// The k-element antichain (no relations).
  explicit Pop(int k = 0);

  /// Transitive closure of `relations`; throws ParseError on labels out of
  /// range or when the closure is not antisymmetric.
  static Pop from_relations(int k, std::span<const Relation> relations);
  static Pop from_relations(int k, std::initializer_list<Relation> relations) {
    return from_relations(k, std::span<const Relation>(relations.begin(), relations.size()));
  }

  /// From 0-based "above" bitmasks (bit b of masks[a]: a < b); the masks
  /// are closed transitively and checked like from_relations.
  static Pop from_up_masks(int k, std::span<const std::uint32_t> masks);

  /// Chain whose labels are listed from the top of the poset to the bottom.
  static Pop chain(std::span<const int> top_to_bottom);

  /// The chain a classical pattern corresponds to: a < b iff pat_a < pat_b.
  static Pop from_pattern(const Permutation& pattern);

  int size() const { return k_; }

  /// a < b in the poset (1-based labels).
  bool below(int a, int b) const { return (up_[a - 1] >> (b - 1)) & 1U; }
  bool comparable(int a, int b) const { return below(a, b) || below(b, a); }
  bool isolated(int a) const { return up_[a - 1] == 0 && down_[a - 1] == 0; }

  /// Bitmask (bit b-1) of labels strictly above / below label a.
  std::uint32_t up_mask(int a) const { return up_[a - 1]; }
  std::uint32_t down_mask(int a) const { return down_[a - 1]; }

  int relation_count() const;

  /// Covering relations, sorted ascending by (greater, lesser).
  std::vector<Relation> reduction() const;

  /// "k=4; 1>2, 1>3" using the transitive reduction.
  std::string to_string() const;

  /// Row-major 0/1 encoding of the k x k `below` matrix.
  std::string matrix_code() const;

  bool operator==(const Pop& other) const = default;

 private:
  void set_below(int a0, int b0);
  void close();  // transitive closure over 0-based masks

  int k_ = 0;
  std::vector<std::uint32_t> up_;    // up_[a] bit b: a < b
  std::vector<std::uint32_t> down_;  // down_[a] bit b: b < a

};

/// Canonical representative of a POP's orbit under label complement and
/// dual: the lexicographically least matrix code among the four images.
struct ClassKey {
  int k = 0;
  std::string code;

  std::string to_string() const { return std::to_string(k) + ":" + code; }
  auto operator<=>(const ClassKey&) const = default;
};

using PatternSet = std::vector<Permutation>;

Pop parse_pop(std::string_view text);

/// Relabel x -> k+1-x.
Pop label_complement(const Pop& p);

/// Flip the poset upside down (reverse every relation).
Pop dual(const Pop& p);

/// Classical patterns whose avoidance together is equivalent to avoiding p,
/// one per linear extension, sorted lexicographically.
PatternSet linear_extensions(const Pop& p);

ClassKey canonical_class(const Pop& p);

/// The orbit {p, p', p'', p'∘p''}, deduplicated, in that order.
std::vector<Pop> symmetry_orbit(const Pop& p);

/// Every labeled strict partial order on {1..k}, each exactly once, in a
/// fixed order. Built label by label: the new label is attached below an
/// up-set and above a down-set of the existing poset.
void for_each_pop(int k, const std::function<void(const Pop&)>& visit);
std::vector<Pop> enumerate_pops(int k);

}  // namespace poplab
