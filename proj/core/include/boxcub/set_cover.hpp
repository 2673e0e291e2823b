#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace boxcub {

// Sets over a universe of at most 64 elements, one bit per element.
using ElementMask = std::uint64_t;

// Drops empty sets, duplicates and sets contained in another set; the result
// is sorted ascending by mask value.
std::vector<ElementMask> maximal_sets(std::vector<ElementMask> sets);

// Minimum number of `sets` whose union contains `universe`, returned as the
// lexicographically smallest ascending index list among all minimum covers.
// nullopt if the union of all sets misses part of the universe. An empty
// universe yields an empty cover.
std::optional<std::vector<int>> minimum_set_cover(std::span<const ElementMask> sets,
                                                  ElementMask universe);

}  // namespace boxcub
