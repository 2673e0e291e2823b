#include "boxcub/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "boxcub/graph_invariants.hpp"

namespace boxcub {

int ceil_log2(std::int64_t x) {
  return ceil_log(2, x);
}

int ceil_log(std::int64_t base, std::int64_t target) {
  if (target < 1) throw std::invalid_argument("ceil_log needs target >= 1");
  if (target == 1) return 0;
  if (base < 2) throw std::invalid_argument("ceil_log needs base >= 2");
  int k = 0;
  std::int64_t power = 1;
  while (power < target) {
    // power < target <= INT64_MAX, so only the multiplication can overflow.
    if (power > target / base) return k + 1;
    power *= base;
    ++k;
  }
  return k;
}

std::int64_t theorem_upper_bound(int chi, int alpha, int b) {
  if (chi < 1 || alpha < 1 || b < 0) {
    throw std::invalid_argument("theorem bound needs chi, alpha >= 1 and b >= 0");
  }
  return 2LL * ceil_log2(chi) * b + static_cast<std::int64_t>(chi) * ceil_log2(alpha);
}

std::int64_t adiga_upper_bound(int alpha, int b) {
  if (alpha < 1 || b < 0) {
    throw std::invalid_argument("bound needs alpha >= 1 and b >= 0");
  }
  return static_cast<std::int64_t>(b) * ceil_log2(alpha);
}

int volume_lower_bound(const Graph& g) {
  int best = 0;
  for (const auto& component : connected_components(g)) {
    if (component.size() == 1) continue;
    const Graph sub = g.induced(component);
    const int alpha = exact_independence_number(sub);
    const int d = diameter(sub).diameter;
    best = std::max(best, ceil_log(d + 1, alpha));
  }
  return best;
}

MultipartiteTruth multipartite_ground_truth(std::span<const int> parts) {
  if (parts.size() < 2) {
    throw std::invalid_argument("closed form holds for at least two parts");
  }
  MultipartiteTruth truth;
  truth.boxicity = static_cast<int>(parts.size());
  for (int size : parts) {
    if (size < 1) throw std::invalid_argument("part sizes must be positive");
    truth.cubicity += ceil_log2(size);
  }
  return truth;
}

BoxRepresentation optimal_box_representation_multipartite(
    std::span<const int> parts) {
  if (parts.size() < 2) {
    throw std::invalid_argument("need at least two parts");
  }
  for (int size : parts) {
    if (size < 2) {
      throw std::invalid_argument(
          "part of size < 2 lowers the boxicity; use the exact oracle");
    }
  }
  const int n = std::accumulate(parts.begin(), parts.end(), 0);
  BoxRepresentation rep;
  rep.n = n;
  int first = 0;
  for (int size : parts) {
    IntervalRepresentation dim;
    dim.intervals.assign(n, Interval{Rational(0), Rational(2 * size)});
    for (int k = 0; k < size; ++k) {
      dim.intervals[first + k] = Interval{Rational(2 * k), Rational(2 * k + 1)};
    }
    rep.dims.push_back(std::move(dim));
    first += size;
  }
  return rep;
}

}  // namespace boxcub
