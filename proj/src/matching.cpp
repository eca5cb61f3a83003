#include "lightcolor/matching.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <unordered_map>

namespace lightcolor {

namespace {

constexpr std::size_t kFree = std::numeric_limits<std::size_t>::max();

class Augmenter {
 public:
  explicit Augmenter(const BipartiteGraph& g)
      : adjacency_(g.left.size()), match_left_(g.left.size(), kFree), match_right_(g.right.size(), kFree),
        visited_(g.left.size(), 0) {
    for (auto [l, r] : g.edges) {
      if (l >= g.left.size() || r >= g.right.size()) throw InvalidInput("matching edge position out of range");
      adjacency_[l].push_back(r);
    }
    for (auto& adj : adjacency_) {
      std::sort(adj.begin(), adj.end());
      adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    }
  }

  Matching solve() {
    for (std::size_t l = 0; l < adjacency_.size(); ++l) {
      ++stamp_;
      augment(l);
    }
    Matching m;
    for (std::size_t l = 0; l < match_left_.size(); ++l) {
      if (match_left_[l] != kFree) m.pairs.emplace_back(l, match_left_[l]);
    }
    return m;
  }

 private:
  bool augment(std::size_t l) {
    visited_[l] = stamp_;
    for (std::size_t r : adjacency_[l]) {
      std::size_t owner = match_right_[r];
      if (owner == kFree || (visited_[owner] != stamp_ && augment(owner))) {
        match_left_[l] = r;
        match_right_[r] = l;
        return true;
      }
    }
    return false;
  }

  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<std::size_t> match_left_;
  std::vector<std::size_t> match_right_;
  std::vector<std::uint64_t> visited_;
  std::uint64_t stamp_ = 0;
};

}  // namespace

Matching max_bipartite_matching(const BipartiteGraph& g) { return Augmenter(g).solve(); }

std::size_t brute_force_matching_size(const BipartiteGraph& g) {
  if (g.left.size() + g.right.size() > kBruteForceMatchingLimit) {
    throw InvalidInput("brute-force matching limited to " + std::to_string(kBruteForceMatchingLimit) +
                       " vertices, got " + std::to_string(g.left.size() + g.right.size()));
  }
  std::vector<std::uint32_t> allowed(g.left.size(), 0);
  for (auto [l, r] : g.edges) {
    if (l >= g.left.size() || r >= g.right.size()) throw InvalidInput("matching edge position out of range");
    allowed[l] |= std::uint32_t{1} << r;
  }

  std::unordered_map<std::uint64_t, std::size_t> memo;
  auto best = [&](auto&& self, std::size_t l, std::uint32_t used) -> std::size_t {
    if (l == allowed.size()) return 0;
    const std::uint64_t key = (static_cast<std::uint64_t>(l) << 32) | used;
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::size_t result = self(self, l + 1, used);
    for (std::uint32_t options = allowed[l] & ~used; options != 0; options &= options - 1) {
      std::uint32_t bit = options & (~options + 1);
      result = std::max(result, 1 + self(self, l + 1, used | bit));
    }
    memo.emplace(key, result);
    return result;
  };
  return best(best, 0, 0);
}

}  // namespace lightcolor
