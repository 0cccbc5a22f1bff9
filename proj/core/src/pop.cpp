#include "poplab/pop.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>

#include "poplab/permutation.hpp"

namespace poplab {

namespace {

std::uint32_t bit(int i) { return std::uint32_t{1} << i; }

void check_size(int k) {
  if (k < 0 || k > Pop::kMaxSize) {
    throw std::invalid_argument("POP size " + std::to_string(k) + " outside 0.." +
                                std::to_string(Pop::kMaxSize));
  }
}

}  // namespace

Pop::Pop(int k) : k_(k) {
  check_size(k);
  up_.assign(static_cast<std::size_t>(k), 0);
  down_.assign(static_cast<std::size_t>(k), 0);
}

void Pop::set_below(int a0, int b0) {
  up_[a0] |= bit(b0);
  down_[b0] |= bit(a0);
}

void Pop::close() {
  // Warshall over bitmask rows.
  for (int m = 0; m < k_; ++m) {
    for (int a = 0; a < k_; ++a) {
      if (up_[a] & bit(m)) up_[a] |= up_[m];
    }
  }
  std::fill(down_.begin(), down_.end(), 0);
  for (int a = 0; a < k_; ++a) {
    for (int b = 0; b < k_; ++b) {
      if (up_[a] & bit(b)) down_[b] |= bit(a);
    }
  }
  for (int a = 0; a < k_; ++a) {
    if (up_[a] & bit(a)) {
      throw ParseError("relations are not antisymmetric: label " + std::to_string(a + 1) +
                       " ends up above itself");
    }
  }
}

Pop Pop::from_relations(int k, std::span<const Relation> relations) {
  if (k < 1) throw ParseError("POP size must be positive");
  if (k > kMaxSize) throw ParseError("POP size too large: " + std::to_string(k));
  Pop p(k);
  for (const Relation& r : relations) {
    if (r.greater < 1 || r.greater > k || r.lesser < 1 || r.lesser > k) {
      throw ParseError("label out of range in " + std::to_string(r.greater) + ">" +
                       std::to_string(r.lesser) + " for k=" + std::to_string(k));
    }
    if (r.greater == r.lesser) {
      throw ParseError("relation " + std::to_string(r.greater) + ">" + std::to_string(r.lesser) +
                       " is reflexive");
    }
    p.set_below(r.lesser - 1, r.greater - 1);
  }
  p.close();
  return p;
}

Pop Pop::from_up_masks(int k, std::span<const std::uint32_t> masks) {
  if (static_cast<int>(masks.size()) != k) throw std::invalid_argument("mask count differs from k");
  Pop p(k);
  for (int a = 0; a < k; ++a) {
    if (k < 32 && (masks[a] >> k) != 0) throw std::invalid_argument("mask bit outside 0..k-1");
    p.up_[a] = masks[a];
  }
  p.close();
  return p;
}

Pop Pop::chain(std::span<const int> top_to_bottom) {
  std::vector<Relation> rels;
  for (std::size_t i = 0; i + 1 < top_to_bottom.size(); ++i) {
    rels.push_back({top_to_bottom[i], top_to_bottom[i + 1]});
  }
  return from_relations(static_cast<int>(top_to_bottom.size()), rels);
}

Pop Pop::from_pattern(const Permutation& pattern) {
  const int k = pattern.size();
  Pop p(k);
  for (int a = 1; a <= k; ++a) {
    for (int b = 1; b <= k; ++b) {
      if (pattern(a) < pattern(b)) p.set_below(a - 1, b - 1);
    }
  }
  return p;
}

int Pop::relation_count() const {
  int total = 0;
  for (std::uint32_t m : up_) total += std::popcount(m);
  return total;
}

std::vector<Relation> Pop::reduction() const {
  std::vector<Relation> result;
  for (int a = 0; a < k_; ++a) {
    for (int b = 0; b < k_; ++b) {
      if (!(up_[a] & bit(b))) continue;
      // a < b is a cover unless some c sits strictly between them.
      if ((up_[a] & down_[b]) == 0) result.push_back({b + 1, a + 1});
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::string Pop::to_string() const {
  std::string out = "k=" + std::to_string(k_) + ";";
  const auto rels = reduction();
  for (std::size_t i = 0; i < rels.size(); ++i) {
    out += i == 0 ? " " : ", ";
    out += std::to_string(rels[i].greater) + ">" + std::to_string(rels[i].lesser);
  }
  return out;
}

std::string Pop::matrix_code() const {
  std::string code;
  code.reserve(static_cast<std::size_t>(k_ * k_));
  for (int a = 0; a < k_; ++a) {
    for (int b = 0; b < k_; ++b) code.push_back((up_[a] & bit(b)) ? '1' : '0');
  }
  return code;
}

namespace {

class PopParser {
 public:
  explicit PopParser(std::string_view text) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) text_.push_back(c);
    }
  }

  Pop parse() {
    expect('k');
    expect('=');
    const int k = integer();
    expect(';');
    std::vector<Relation> rels;
    if (pos_ < text_.size()) {
      rels.push_back(relation());
      while (pos_ < text_.size()) {
        expect(',');
        rels.push_back(relation());
      }
    }
    return Pop::from_relations(k, rels);
  }

 private:
  Relation relation() {
    Relation r;
    r.greater = integer();
    expect('>');
    r.lesser = integer();
    return r;
  }

  int integer() {
    int value = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr == first || *first == '-' || *first == '+') {
      fail("expected an integer");
    }
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("malformed POP text \"" + text_ + "\": " + what + " at offset " +
                     std::to_string(pos_));
  }

  std::string text_;
  std::size_t pos_ = 0;
};

void extend_linear(const Pop& p, std::uint32_t placed, int rank, std::vector<int>& image,
                   PatternSet& out) {
  const int k = p.size();
  if (rank > k) {
    out.emplace_back(image);
    return;
  }
  for (int a = 1; a <= k; ++a) {
    if (placed & bit(a - 1)) continue;
    // Next rank goes to a label whose lower set is already placed.
    if ((p.down_mask(a) & ~placed) != 0) continue;
    image[a - 1] = rank;
    extend_linear(p, placed | bit(a - 1), rank + 1, image, out);
  }
}

void grow(int k, std::vector<std::uint32_t>& up, const std::function<void(const Pop&)>& visit) {
  const int j = static_cast<int>(up.size());
  if (j == k) {
    visit(Pop::from_up_masks(k, up));
    return;
  }
  std::vector<std::uint32_t> down(static_cast<std::size_t>(j), 0);
  for (int a = 0; a < j; ++a) {
    for (int b = 0; b < j; ++b) {
      if (up[a] & bit(b)) down[b] |= bit(a);
    }
  }
  const std::uint32_t all = (std::uint32_t{1} << j) - 1;
  auto down_closed = [&](std::uint32_t set) {
    for (int d = 0; d < j; ++d) {
      if ((set & bit(d)) && (down[d] & ~set)) return false;
    }
    return true;
  };
  auto up_closed = [&](std::uint32_t set) {
    for (int u = 0; u < j; ++u) {
      if ((set & bit(u)) && (up[u] & ~set)) return false;
    }
    return true;
  };
  for (std::uint32_t lower = 0; lower <= all; ++lower) {
    if (!down_closed(lower)) continue;
    for (std::uint32_t upper = 0; upper <= all; ++upper) {
      if ((upper & lower) || !up_closed(upper)) continue;
      // Every new pair lower < j < upper must already be related.
      bool transitive = true;
      for (int d = 0; d < j && transitive; ++d) {
        if ((lower & bit(d)) && (up[d] & upper) != upper) transitive = false;
      }
      if (!transitive) continue;
      std::vector<std::uint32_t> next = up;
      for (int d = 0; d < j; ++d) {
        if (lower & bit(d)) next[d] |= bit(j);
      }
      next.push_back(upper);
      grow(k, next, visit);
    }
  }
}

}  // namespace

Pop parse_pop(std::string_view text) { return PopParser(text).parse(); }

Pop label_complement(const Pop& p) {
  const int k = p.size();
  std::vector<std::uint32_t> masks(static_cast<std::size_t>(k), 0);
  for (int a = 1; a <= k; ++a) {
    for (int b = 1; b <= k; ++b) {
      if (p.below(a, b)) masks[k - a] |= bit(k - b);
    }
  }
  return Pop::from_up_masks(k, masks);
}

Pop dual(const Pop& p) {
  const int k = p.size();
  std::vector<std::uint32_t> masks(static_cast<std::size_t>(k), 0);
  for (int a = 1; a <= k; ++a) masks[a - 1] = p.down_mask(a);
  return Pop::from_up_masks(k, masks);
}

PatternSet linear_extensions(const Pop& p) {
  PatternSet out;
  std::vector<int> image(static_cast<std::size_t>(p.size()), 0);
  extend_linear(p, 0, 1, image, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Pop> symmetry_orbit(const Pop& p) {
  const Pop complemented = label_complement(p);
  const Pop flipped = dual(p);
  const Pop both = label_complement(flipped);
  std::vector<Pop> orbit;
  for (const Pop* q : {&p, &complemented, &flipped, &both}) {
    if (std::find(orbit.begin(), orbit.end(), *q) == orbit.end()) orbit.push_back(*q);
  }
  return orbit;
}

ClassKey canonical_class(const Pop& p) {
  std::string best;
  for (const Pop& q : symmetry_orbit(p)) {
    std::string code = q.matrix_code();
    if (best.empty() || code < best) best = std::move(code);
  }
  return {p.size(), best};
}

void for_each_pop(int k, const std::function<void(const Pop&)>& visit) {
  if (k < 1 || k > Pop::kMaxSize) throw std::invalid_argument("enumerate_pops needs 1 <= k <= 31");
  std::vector<std::uint32_t> up;
  grow(k, up, visit);
}

std::vector<Pop> enumerate_pops(int k) {
  std::vector<Pop> out;
  for_each_pop(k, [&](const Pop& p) { out.push_back(p); });
  return out;
}

}  // namespace poplab
