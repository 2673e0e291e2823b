#pragma once

#include <cstdint>
#include <span>

#include "boxcub/graph.hpp"
#include "boxcub/interval.hpp"

namespace boxcub {

// Smallest t with 2^t >= x; ceil_log2(1) == 0. Requires x >= 1.
int ceil_log2(std::int64_t x);

// Smallest k with base^k >= target, by integer powering. Requires
// target >= 1, and base >= 2 unless target == 1.
int ceil_log(std::int64_t base, std::int64_t target);

// 2*ceil(log chi)*b + chi*ceil(log alpha).
std::int64_t theorem_upper_bound(int chi, int alpha, int b);

// b * ceil(log alpha).
std::int64_t adiga_upper_bound(int alpha, int b);

// Packing bound: for a connected graph with diameter d and independence
// number alpha, the smallest k with (d+1)^k >= alpha. For disconnected
// graphs the maximum over components.
int volume_lower_bound(const Graph& g);

struct MultipartiteTruth {
  int boxicity = 0;
  int cubicity = 0;
};

// Closed forms for complete p-partite graphs: boxicity p and cubicity
// sum(ceil(log n_i)). Throws std::invalid_argument when p < 2.
MultipartiteTruth multipartite_ground_truth(std::span<const int> parts);

// One dimension per part: members of part i get disjoint unit-spaced
// intervals, every other vertex a single interval spanning them all.
// Throws std::invalid_argument if p < 2 or some part has size < 2 (the
// boxicity is then smaller than p).
BoxRepresentation optimal_box_representation_multipartite(
    std::span<const int> parts);

}  // namespace boxcub
