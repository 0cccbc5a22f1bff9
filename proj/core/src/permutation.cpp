#include "poplab/permutation.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <charconv>
#include <numeric>

#include "poplab/pop.hpp"

namespace poplab {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : values_) {
    if (v < 1 || v > n || seen[v]) {
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(n));
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

std::string Permutation::to_string() const {
  std::string out;
  const bool digits = size() <= 9;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!digits && i != 0) out.push_back(',');
    out += std::to_string(values_[i]);
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  std::vector<int> values;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t end = std::min(text.find(',', start), text.size());
      std::string_view token = text.substr(start, end - start);
      while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) token.remove_prefix(1);
      while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) token.remove_suffix(1);
      int v = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
      if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError("malformed permutation entry \"" + std::string(token) + "\"");
      }
      values.push_back(v);
      start = end + 1;
    }
  } else {
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      if (c < '1' || c > '9') throw ParseError("malformed permutation text \"" + std::string(text) + "\"");
      values.push_back(c - '0');
    }
  }
  try {
    return Permutation(std::move(values));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("\"") + std::string(text) + "\": " + e.what());
  }
}

Pattern standardize(std::span<const int> values) {
  std::vector<int> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return values[a] < values[b]; });
  std::vector<int> ranks(values.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0 && values[order[r]] == values[order[r - 1]]) {
      throw std::invalid_argument("standardize: duplicate value " + std::to_string(values[order[r]]));
    }
    ranks[order[r]] = static_cast<int>(r) + 1;
  }
  return Pattern(std::move(ranks));
}

// ---------------------------------------------------------------------------
// PopMatcher

PopMatcher::PopMatcher(const Pop& p)
    : k_(p.size()),
      smaller_before_(static_cast<std::size_t>(p.size()), 0),
      larger_before_(static_cast<std::size_t>(p.size()), 0) {
  for (int j = 0; j < k_; ++j) {
    for (int a = 0; a < j; ++a) {
      if (p.below(a + 1, j + 1)) smaller_before_[j] |= std::uint32_t{1} << a;
      if (p.below(j + 1, a + 1)) larger_before_[j] |= std::uint32_t{1} << a;
    }
  }
}

template <bool Count>
std::uint64_t PopMatcher::search(std::span<const int> values, bool pin_last) const {
  const int n = static_cast<int>(values.size());
  if (k_ == 0) return 1;
  if (n < k_) return 0;

  std::array<int, Pop::kMaxSize> chosen{};  // value matched to each position
  std::array<int, Pop::kMaxSize> next{};    // next index to try per position
  std::uint64_t found = 0;

  auto fits = [&](int j, int v) {
    for (std::uint32_t m = smaller_before_[j]; m; m &= m - 1) {
      if (chosen[std::countr_zero(m)] > v) return false;
    }
    for (std::uint32_t m = larger_before_[j]; m; m &= m - 1) {
      if (chosen[std::countr_zero(m)] < v) return false;
    }
    return true;
  };

  // With the last position pinned, check it first so the remaining
  // positions are matched against a known value.
  const int last = k_ - 1;
  int span_end = n;  // exclusive bound for free positions
  if (pin_last) {
    chosen[last] = values[n - 1];
    span_end = n - 1;
  }
  const int free_positions = pin_last ? k_ - 1 : k_;

  auto fits_pinned = [&](int j, int v) {
    if (!pin_last) return true;
    const std::uint32_t bit_j = std::uint32_t{1} << j;
    if ((smaller_before_[last] & bit_j) && v > chosen[last]) return false;
    if ((larger_before_[last] & bit_j) && v < chosen[last]) return false;
    return true;
  };

  if (free_positions == 0) return 1;

  int j = 0;
  next[0] = 0;
  while (j >= 0) {
    const int limit = span_end - (free_positions - j);  // last admissible index
    int i = next[j];
    bool advanced = false;
    for (; i <= limit; ++i) {
      const int v = values[i];
      if (fits(j, v) && fits_pinned(j, v)) {
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      --j;
      continue;
    }
    chosen[j] = values[i];
    next[j] = i + 1;
    if (j + 1 == free_positions) {
      if constexpr (!Count) return 1;
      ++found;
      continue;  // try the next index for this position
    }
    ++j;
    next[j] = i + 1;
  }
  return found;
}

bool PopMatcher::contains(std::span<const int> values) const { return search<false>(values, false) != 0; }

bool PopMatcher::contains_ending_at_last(std::span<const int> values) const {
  if (values.empty()) return k_ == 0;
  return search<false>(values, true) != 0;
}

std::uint64_t PopMatcher::count(std::span<const int> values) const { return search<true>(values, false); }

// ---------------------------------------------------------------------------
// PatternMatcher

PatternMatcher::PatternMatcher(const Pattern& pattern)
    : pattern_(pattern.values().begin(), pattern.values().end()) {}

bool PatternMatcher::search(std::span<const int> values, bool pin_last) const {
  const int k = size();
  const int n = static_cast<int>(values.size());
  if (k == 0) return true;
  if (n < k) return false;
  std::vector<int> idx(static_cast<std::size_t>(k), -1);

  auto consistent = [&](int j, int i) {
    for (int a = 0; a < j; ++a) {
      if ((pattern_[a] < pattern_[j]) != (values[idx[a]] < values[i])) return false;
    }
    return true;
  };

  // Recursive descent over pattern positions.
  auto rec = [&](auto&& self, int j, int from) -> bool {
    if (j == k) return true;
    const int hi = n - (k - j);
    const int lo = (pin_last && j == k - 1) ? n - 1 : from;
    const int top = (pin_last && j < k - 1) ? std::min(hi, n - 2) : hi;
    for (int i = lo; i <= top; ++i) {
      if (!consistent(j, i)) continue;
      idx[j] = i;
      if (self(self, j + 1, i + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

bool PatternMatcher::contains(std::span<const int> values) const { return search(values, false); }

bool PatternMatcher::contains_ending_at_last(std::span<const int> values) const {
  if (values.empty()) return pattern_.empty();
  return search(values, true);
}

// ---------------------------------------------------------------------------

bool contains_pattern(const Permutation& perm, const Pattern& pattern) {
  return PatternMatcher(pattern).contains(perm.values());
}

bool contains_pop(const Permutation& perm, const Pop& p) { return PopMatcher(p).contains(perm.values()); }

bool contains_pop(std::span<const int> values, const Pop& p) { return PopMatcher(p).contains(values); }

std::uint64_t count_pop_occurrences(const Permutation& perm, const Pop& p) {
  return PopMatcher(p).count(perm.values());
}

bool contains_pop_ending_at_last(std::span<const int> values, const Pop& p) {
  return PopMatcher(p).contains_ending_at_last(values);
}

bool contains_pattern_ending_at_last(std::span<const int> values, const Pattern& pattern) {
  return PatternMatcher(pattern).contains_ending_at_last(values);
}

Permutation reverse(const Permutation& perm) {
  std::vector<int> v(perm.values().rbegin(), perm.values().rend());
  return Permutation(std::move(v));
}

Permutation complement(const Permutation& perm) {
  const int n = perm.size();
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(n));
  for (int x : perm.values()) v.push_back(n + 1 - x);
  return Permutation(std::move(v));
}

Permutation inverse(const Permutation& perm) {
  std::vector<int> v(static_cast<std::size_t>(perm.size()));
  for (int i = 1; i <= perm.size(); ++i) v[perm(i) - 1] = i;
  return Permutation(std::move(v));
}

std::vector<std::vector<int>> cycles(const Permutation& perm) {
  const int n = perm.size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::vector<std::vector<int>> out;
  // Scanning from n down makes every new cycle start at its maximum.
  for (int start = n; start >= 1; --start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (int x = start; !seen[x]; x = perm(x)) {
      seen[x] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

Permutation cycle_canonical_flatten(const Permutation& perm) {
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(perm.size()));
  for (const auto& c : cycles(perm)) flat.insert(flat.end(), c.begin(), c.end());
  return Permutation(std::move(flat));
}

bool has_cycle_interval_property(const Permutation& perm, int k) {
  if (k < 2) throw std::invalid_argument("cycle interval bound needs k >= 2");
  for (const auto& c : cycles(perm)) {
    const auto [lo, hi] = std::minmax_element(c.begin(), c.end());
    if (*hi - *lo + 1 > k - 1) return false;
  }
  return true;
}

std::vector<int> left_to_right_maxima(const Permutation& perm) {
  std::vector<int> out;
  int best = 0;
  for (int v : perm.values()) {
    if (v > best) {
      best = v;
      out.push_back(v);
    }
  }
  return out;
}

}  // namespace poplab
