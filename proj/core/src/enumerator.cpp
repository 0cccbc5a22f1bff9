#include "poplab/enumerator.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <string>
#include <cstdint>
#include <thread>

namespace poplab {

namespace {

void check_ceiling(int n, const CountOptions& options) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  if (n > options.ceiling) {
    throw CeilingExceeded("n=" + std::to_string(n) + " exceeds the exhaustive-search ceiling " +
                          std::to_string(options.ceiling) + " (raise it explicitly)");
  }
}

// Left-to-right construction: the prefix always avoids the forbidden
// structure, so only occurrences ending at the newest entry need checking.
template <typename Blocked>
class AvoiderSearch {
 public:
  AvoiderSearch(int n, const Blocked& blocked) : n_(n), blocked_(blocked), values_(static_cast<std::size_t>(n)) {}

  std::uint64_t count_with_first(int first) {
    values_[0] = first;
    if (blocked_(std::span<const int>(values_.data(), 1))) return 0;
    return descend(1, std::uint32_t{1} << (first - 1));
  }

 private:
  std::uint64_t descend(int depth, std::uint32_t used) {
    if (depth == n_) return 1;
    std::uint64_t total = 0;
    for (int v = 1; v <= n_; ++v) {
      const std::uint32_t b = std::uint32_t{1} << (v - 1);
      if (used & b) continue;
      values_[depth] = v;
      if (blocked_(std::span<const int>(values_.data(), static_cast<std::size_t>(depth) + 1))) continue;
      total += descend(depth + 1, used | b);
    }
    return total;
  }

  int n_;
  const Blocked& blocked_;
  std::vector<int> values_;
};

// Splits the forest by first entry; per-root counts are summed in root
// order, so the result does not depend on the worker count.
template <typename Blocked>
BigInt count_forest(int n, const Blocked& blocked, int jobs) {
  if (n == 0) return 1;
  if (n > 32) throw CeilingExceeded("search limited to n <= 32");
  std::vector<std::uint64_t> partial(static_cast<std::size_t>(n), 0);
  std::atomic<int> next_root{1};
  auto worker = [&] {
    AvoiderSearch<Blocked> search(n, blocked);
    for (int root = next_root++; root <= n; root = next_root++) {
      partial[root - 1] = search.count_with_first(root);
    }
  };
  const int workers = std::clamp(jobs, 1, n);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  BigInt total = 0;
  for (std::uint64_t c : partial) total += c;
  return total;
}

}  // namespace

BigInt count_avoiders(const Pop& p, int n, const CountOptions& options) {
  check_ceiling(n, options);
  const PopMatcher matcher(p);
  auto blocked = [&](std::span<const int> prefix) { return matcher.contains_ending_at_last(prefix); };
  return count_forest(n, blocked, options.jobs);
}

CountSequence count_avoiders_prefix(const Pop& p, int n_max, const CountOptions& options) {
  check_ceiling(n_max, options);
  CountSequence seq{p, {}};
  seq.counts.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) seq.counts.push_back(count_avoiders(p, n, options));
  return seq;
}

BigInt count_avoiders_pattern_set(const PatternSet& patterns, int n, const CountOptions& options) {
  check_ceiling(n, options);
  for (const Pattern& q : patterns) {
    if (q.size() != patterns.front().size()) {
      throw std::invalid_argument("pattern set mixes lengths " + std::to_string(patterns.front().size()) +
                                  " and " + std::to_string(q.size()));
    }
  }
  std::vector<PatternMatcher> matchers;
  matchers.reserve(patterns.size());
  for (const Pattern& q : patterns) matchers.emplace_back(q);
  auto blocked = [&](std::span<const int> prefix) {
    return std::any_of(matchers.begin(), matchers.end(),
                       [&](const PatternMatcher& m) { return m.contains_ending_at_last(prefix); });
  };
  return count_forest(n, blocked, options.jobs);
}

BigInt count_cycle_interval_perms(int k, int n, const CountOptions& options) {
  if (k < 3) throw std::invalid_argument("cycle interval count needs k >= 3");
  check_ceiling(n, options);
  std::vector<int> values(static_cast<std::size_t>(n));
  std::iota(values.begin(), values.end(), 1);
  BigInt total = 0;
  do {
    if (has_cycle_interval_property(Permutation(values), k)) total += 1;
  } while (std::next_permutation(values.begin(), values.end()));
  return total;
}

Pop cycle_interval_pop(int k) {
  if (k < 2) throw std::invalid_argument("cycle interval POP needs k >= 2");
  return Pop::from_relations(k, {Relation{1, k}});
}

}  // namespace poplab
