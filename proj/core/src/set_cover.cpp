#include "boxcub/set_cover.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace boxcub {
namespace {

class CoverSearch {
 public:
  CoverSearch(std::span<const ElementMask> sets) : sets_(sets) {
    for (int i = 0; i < static_cast<int>(sets_.size()); ++i) {
      largest_ = std::max(largest_, std::popcount(sets_[i]));
      for (ElementMask m = sets_[i]; m != 0; m &= m - 1) {
        containing_[std::countr_zero(m)].push_back(i);
      }
    }
  }

  // Can `uncovered` be covered by at most `k` sets with index >= `start`?
  bool feasible(int k, ElementMask uncovered, int start) {
    if (uncovered == 0) return true;
    if (k == 0 || k * largest_ < std::popcount(uncovered)) return false;
    const Key key{uncovered, k, start};
    if (failed_.contains(key)) return false;

    // Branch on the uncovered element with the fewest usable sets.
    int best_element = -1;
    std::size_t best_count = 0;
    for (ElementMask m = uncovered; m != 0; m &= m - 1) {
      const int e = std::countr_zero(m);
      const auto& list = containing_[e];
      const auto usable = static_cast<std::size_t>(
          list.end() - std::lower_bound(list.begin(), list.end(), start));
      if (usable == 0) {
        failed_.insert(key);
        return false;
      }
      if (best_element < 0 || usable < best_count) {
        best_element = e;
        best_count = usable;
      }
    }
    const auto& list = containing_[best_element];
    for (auto it = std::lower_bound(list.begin(), list.end(), start);
         it != list.end(); ++it) {
      if (feasible(k - 1, uncovered & ~sets_[*it], start)) return true;
    }
    failed_.insert(key);
    return false;
  }

 private:
  struct Key {
    ElementMask uncovered;
    int k;
    int start;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& key) const {
      return std::hash<ElementMask>()(key.uncovered) * 31u +
             static_cast<std::size_t>(key.k) * 1000003u +
             static_cast<std::size_t>(key.start);
    }
  };

  std::span<const ElementMask> sets_;
  std::vector<int> containing_[64];
  int largest_ = 0;
  std::unordered_set<Key, KeyHash> failed_;
};

}  // namespace

std::vector<ElementMask> maximal_sets(std::vector<ElementMask> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::erase(sets, ElementMask{0});
  // Visit larger sets first so each set is only compared against kept ones.
  std::vector<ElementMask> by_size = sets;
  std::stable_sort(by_size.begin(), by_size.end(), [](ElementMask a, ElementMask b) {
    return std::popcount(a) > std::popcount(b);
  });
  std::vector<ElementMask> kept;
  for (ElementMask s : by_size) {
    const bool dominated = std::any_of(kept.begin(), kept.end(), [&](ElementMask t) {
      return (s & ~t) == 0;
    });
    if (!dominated) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::optional<std::vector<int>> minimum_set_cover(std::span<const ElementMask> sets,
                                                  ElementMask universe) {
  ElementMask reachable = 0;
  for (ElementMask s : sets) reachable |= s;
  if ((universe & ~reachable) != 0) return std::nullopt;
  if (universe == 0) return std::vector<int>{};

  CoverSearch search(sets);
  int k = 1;
  while (!search.feasible(k, universe, 0)) ++k;

  // Fix indices left to right: the smallest index that still admits a
  // completion from strictly larger indices.
  std::vector<int> chosen;
  ElementMask uncovered = universe;
  int start = 0;
  for (int slot = 0; slot < k; ++slot) {
    for (int i = start; i < static_cast<int>(sets.size()); ++i) {
      const ElementMask rest = uncovered & ~sets[i];
      if (search.feasible(k - slot - 1, rest, i + 1)) {
        chosen.push_back(i);
        uncovered = rest;
        start = i + 1;
        break;
      }
    }
  }
  return chosen;
}

}  // namespace boxcub
