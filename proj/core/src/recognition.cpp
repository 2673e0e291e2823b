#include "boxcub/recognition.hpp"

#include <algorithm>
#include <list>
#include <numeric>
#include <queue>

namespace boxcub {
namespace {

void bron_kerbosch(const Graph& g, std::vector<int>& current, VertexSet p,
                   VertexSet x, std::vector<Clique>& out) {
  if (p.none()) {
    if (x.none()) {
      Clique c = current;
      std::sort(c.begin(), c.end());
      out.push_back(std::move(c));
    }
    return;
  }
  // Pivot maximizing |P ∩ N(u)| over P ∪ X.
  const VertexSet candidates = p | x;
  std::size_t pivot = VertexSet::npos;
  std::size_t best = 0;
  for (auto u = candidates.find_first(); u != VertexSet::npos;
       u = candidates.find_next(u)) {
    const std::size_t covered = (p & g.neighbors(static_cast<int>(u))).count();
    if (pivot == VertexSet::npos || covered > best) {
      pivot = u;
      best = covered;
    }
  }
  const VertexSet branch = p - g.neighbors(static_cast<int>(pivot));
  for (auto v = branch.find_first(); v != VertexSet::npos;
       v = branch.find_next(v)) {
    const VertexSet& nv = g.neighbors(static_cast<int>(v));
    current.push_back(static_cast<int>(v));
    bron_kerbosch(g, current, p & nv, x & nv, out);
    current.pop_back();
    p.reset(v);
    x.set(v);
  }
}

std::vector<std::vector<int>> cliques_of_vertex(int n,
                                                const std::vector<Clique>& cliques) {
  std::vector<std::vector<int>> member(n);
  for (int i = 0; i < static_cast<int>(cliques.size()); ++i) {
    for (int v : cliques[i]) member[v].push_back(i);
  }
  return member;
}

bool is_consecutive(int n, const std::vector<Clique>& cliques,
                    const std::vector<int>& order) {
  std::vector<int> first(n, -1);
  std::vector<int> last(n, -1);
  std::vector<int> count(n, 0);
  for (int pos = 0; pos < static_cast<int>(order.size()); ++pos) {
    for (int v : cliques[order[pos]]) {
      if (first[v] < 0) first[v] = pos;
      last[v] = pos;
      ++count[v];
    }
  }
  for (int v = 0; v < n; ++v) {
    if (count[v] > 0 && last[v] - first[v] + 1 != count[v]) return false;
  }
  return true;
}

class ExhaustiveArranger {
 public:
  ExhaustiveArranger(int n, const std::vector<Clique>& cliques)
      : cliques_(cliques),
        member_(cliques_of_vertex(n, cliques)),
        used_(cliques.size(), false),
        status_(n, kUnseen),
        placed_count_(n, 0) {}

  std::optional<std::vector<int>> run() {
    if (dfs()) return sequence_;
    return std::nullopt;
  }

 private:
  enum Status { kUnseen, kOpen, kClosed };

  bool dfs() {
    if (sequence_.size() == cliques_.size()) return true;
    for (int i = 0; i < static_cast<int>(cliques_.size()); ++i) {
      if (used_[i] || !can_place(i)) continue;
      const std::vector<Status> saved = status_;
      place(i);
      if (dfs()) return true;
      unplace(i);
      status_ = saved;
    }
    return false;
  }

  // Vertices open in the previous clique but absent from clique i are closed
  // for good, so all of their cliques must already be placed.
  bool can_place(int i) const {
    for (int v = 0; v < static_cast<int>(status_.size()); ++v) {
      if (status_[v] != kOpen) continue;
      if (std::binary_search(cliques_[i].begin(), cliques_[i].end(), v)) continue;
      if (placed_count_[v] != static_cast<int>(member_[v].size())) return false;
    }
    for (int v : cliques_[i]) {
      if (status_[v] == kClosed) return false;
    }
    return true;
  }

  void place(int i) {
    for (auto& s : status_) {
      if (s == kOpen) s = kClosed;
    }
    for (int v : cliques_[i]) {
      status_[v] = kOpen;
      ++placed_count_[v];
    }
    used_[i] = true;
    sequence_.push_back(i);
  }

  void unplace(int i) {
    for (int v : cliques_[i]) --placed_count_[v];
    used_[i] = false;
    sequence_.pop_back();
  }

  const std::vector<Clique>& cliques_;
  std::vector<std::vector<int>> member_;
  std::vector<bool> used_;
  std::vector<Status> status_;
  std::vector<int> placed_count_;
  std::vector<int> sequence_;
};

// Transitive orientation by G-decomposition: repeatedly take an implication
// class of the remaining edge set, orient it, and remove it. Returns the
// out-neighborhoods of the orientation, or nullopt if some implication class
// contains both orientations of an edge (not a comparability graph).
std::optional<std::vector<VertexSet>> transitive_orientation(const Graph& h) {
  const int n = h.num_vertices();
  std::vector<VertexSet> remaining(n);
  for (int v = 0; v < n; ++v) remaining[v] = h.neighbors(v);
  std::vector<VertexSet> oriented(n, VertexSet(n));

  for (int a0 = 0; a0 < n; ++a0) {
    while (true) {
      const auto b0 = remaining[a0].find_next(a0);
      if (b0 == VertexSet::npos) break;
      std::vector<VertexSet> cls(n, VertexSet(n));
      std::queue<std::pair<int, int>> queue;
      cls[a0].set(b0);
      queue.emplace(a0, static_cast<int>(b0));
      while (!queue.empty()) {
        const auto [a, b] = queue.front();
        queue.pop();
        auto force = [&](int x, int y) {
          if (cls[y][x]) return false;
          if (!cls[x][y]) {
            cls[x].set(y);
            queue.emplace(x, y);
          }
          return true;
        };
        // ab forces ab' when bb' is not an edge of the remaining graph.
        VertexSet tails = remaining[a] - remaining[b];
        tails.reset(b);
        for (auto c = tails.find_first(); c != VertexSet::npos;
             c = tails.find_next(c)) {
          if (!force(a, static_cast<int>(c))) return std::nullopt;
        }
        // ab forces a'b when aa' is not an edge of the remaining graph.
        VertexSet heads = remaining[b] - remaining[a];
        heads.reset(a);
        for (auto c = heads.find_first(); c != VertexSet::npos;
             c = heads.find_next(c)) {
          if (!force(static_cast<int>(c), b)) return std::nullopt;
        }
      }
      for (int x = 0; x < n; ++x) {
        for (auto y = cls[x].find_first(); y != VertexSet::npos;
             y = cls[x].find_next(y)) {
          oriented[x].set(y);
          remaining[x].reset(y);
          remaining[y].reset(x);
        }
      }
    }
  }
  return oriented;
}

}  // namespace

std::vector<Clique> maximal_cliques(const Graph& g) {
  std::vector<Clique> out;
  const int n = g.num_vertices();
  if (n == 0) return out;
  VertexSet p(n);
  p.set();
  std::vector<int> current;
  bron_kerbosch(g, current, p, VertexSet(n), out);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_chordal(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> weight(n, 0);
  std::vector<bool> numbered(n, false);
  std::vector<int> selection;
  selection.reserve(n);
  for (int step = 0; step < n; ++step) {
    int v = -1;
    for (int w = 0; w < n; ++w) {
      if (!numbered[w] && (v < 0 || weight[w] > weight[v])) v = w;
    }
    numbered[v] = true;
    selection.push_back(v);
    for (int w : g.neighbor_list(v)) {
      if (!numbered[w]) ++weight[w];
    }
  }
  // The reverse of the selection order is a perfect elimination ordering
  // iff the graph is chordal.
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[selection[n - 1 - i]] = i;
  for (int v = 0; v < n; ++v) {
    int parent = -1;
    VertexSet later = g.empty_set();
    for (int w : g.neighbor_list(v)) {
      if (pos[w] > pos[v]) {
        later.set(w);
        if (parent < 0 || pos[w] < pos[parent]) parent = w;
      }
    }
    if (parent < 0) continue;
    later.reset(parent);
    if (!later.is_subset_of(g.neighbors(parent))) return false;
  }
  return true;
}

std::optional<std::vector<int>> arrange_cliques_exhaustive(
    const Graph& g, const std::vector<Clique>& cliques) {
  return ExhaustiveArranger(g.num_vertices(), cliques).run();
}

std::optional<std::vector<int>> arrange_cliques_by_orientation(
    const Graph& g, const std::vector<Clique>& cliques) {
  const int k = static_cast<int>(cliques.size());
  const int n = g.num_vertices();
  const auto oriented = transitive_orientation(g.complement());
  if (!oriented) return std::nullopt;

  std::vector<VertexSet> sets(k, VertexSet(n));
  for (int i = 0; i < k; ++i) {
    for (int v : cliques[i]) sets[i].set(v);
  }
  // before[i][j]: some non-edge between the two cliques is oriented i -> j.
  std::vector<std::vector<bool>> before(k, std::vector<bool>(k, false));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      const VertexSet only_j = sets[j] - sets[i];
      for (int x : cliques[i]) {
        if ((*oriented)[x].intersects(only_j)) {
          before[i][j] = true;
          break;
        }
      }
    }
  }
  std::vector<int> rank(k, 0);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      if (before[i][j] == before[j][i]) return std::nullopt;
      if (before[j][i]) ++rank[i];
    }
  }
  std::vector<int> order(k, -1);
  for (int i = 0; i < k; ++i) {
    if (order[rank[i]] >= 0) return std::nullopt;
    order[rank[i]] = i;
  }
  if (!is_consecutive(n, cliques, order)) return std::nullopt;
  return order;
}

std::optional<std::vector<Clique>> find_clique_path(const Graph& g) {
  if (!is_chordal(g)) return std::nullopt;
  std::vector<Clique> cliques = maximal_cliques(g);
  const auto order = static_cast<int>(cliques.size()) <= kExhaustiveCliqueLimit
                         ? arrange_cliques_exhaustive(g, cliques)
                         : arrange_cliques_by_orientation(g, cliques);
  if (!order) return std::nullopt;
  std::vector<Clique> path;
  path.reserve(order->size());
  for (int i : *order) path.push_back(std::move(cliques[i]));
  return path;
}

namespace {

IntervalRepresentation representation_from_path(int n,
                                                 const std::vector<Clique>& path) {
  IntervalRepresentation rep;
  rep.intervals.assign(n, Interval{Rational(-1), Rational(-1)});
  for (int pos = 0; pos < static_cast<int>(path.size()); ++pos) {
    for (int v : path[pos]) {
      if (rep.intervals[v].lo < 0) rep.intervals[v].lo = pos;
      rep.intervals[v].hi = pos;
    }
  }
  return rep;
}

}  // namespace

std::optional<IntervalRepresentation> find_interval_representation(
    const Graph& g) {
  const auto path = find_clique_path(g);
  if (!path) return std::nullopt;
  return representation_from_path(g.num_vertices(), *path);
}

std::optional<UnitIntervalRepresentation> find_unit_interval_representation(
    const Graph& g) {
  const auto path = find_clique_path(g);
  if (!path) return std::nullopt;
  auto ordering = proper_ordering_from_clique_path(g, *path);
  if (std::holds_alternative<Claw>(ordering)) return std::nullopt;
  return realize_unit_intervals(g, std::get<std::vector<int>>(ordering));
}

std::optional<Claw> find_claw(const Graph& g) {
  for (int c = 0; c < g.num_vertices(); ++c) {
    const std::vector<int> nb = g.neighbor_list(c);
    const int d = static_cast<int>(nb.size());
    for (int i = 0; i < d; ++i) {
      for (int j = i + 1; j < d; ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        for (int k = j + 1; k < d; ++k) {
          if (!g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k])) {
            return Claw{c, {nb[i], nb[j], nb[k]}};
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<Clique> clique_path_of(const IntervalRepresentation& rep) {
  check_well_formed(rep);
  const int n = rep.num_vertices();
  std::vector<Rational> points;
  points.reserve(n);
  for (const auto& iv : rep.intervals) points.push_back(iv.lo);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  // Every maximal clique is the set of intervals stabbed by some left
  // endpoint; stab sets along increasing points keep each vertex contiguous.
  std::vector<VertexSet> stabs;
  for (const Rational& p : points) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v) {
      if (rep.intervals[v].lo <= p && p <= rep.intervals[v].hi) s.set(v);
    }
    if (stabs.empty() || stabs.back() != s) stabs.push_back(std::move(s));
  }
  std::vector<Clique> path;
  for (std::size_t i = 0; i < stabs.size(); ++i) {
    const bool dominated =
        (i > 0 && stabs[i].is_subset_of(stabs[i - 1])) ||
        (i + 1 < stabs.size() && stabs[i].is_subset_of(stabs[i + 1]));
    if (dominated) continue;
    Clique c;
    for (auto v = stabs[i].find_first(); v != VertexSet::npos;
         v = stabs[i].find_next(v)) {
      c.push_back(static_cast<int>(v));
    }
    path.push_back(std::move(c));
  }
  return path;
}

std::variant<std::vector<int>, Claw> proper_ordering_from_clique_path(
    const Graph& g, const std::vector<Clique>& path) {
  const int n = g.num_vertices();
  std::vector<int> first(n, -1);
  std::vector<int> last(n, -1);
  for (int pos = 0; pos < static_cast<int>(path.size()); ++pos) {
    for (int v : path[pos]) {
      if (first[v] < 0) first[v] = pos;
      last[v] = pos;
    }
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (first[a] != first[b]) return first[a] < first[b];
    if (last[a] != last[b]) return last[a] < last[b];
    return a < b;
  });

  // Sorted by first clique, the last cliques must be non-decreasing. A drop
  // means some range strictly contains another, and the neighbouring maximal
  // cliques then supply a claw around the containing vertex.
  int widest = -1;
  for (int v : order) {
    if (widest >= 0 && last[v] < last[widest]) {
      const Clique& before = path[first[v] - 1];
      const Clique& after = path[last[v] + 1];
      int x = -1;
      int y = -1;
      for (int w : before) {
        if (last[w] < first[v]) {
          x = w;
          break;
        }
      }
      for (int w : after) {
        if (first[w] > last[v]) {
          y = w;
          break;
        }
      }
      if (x < 0 || y < 0) {
        throw std::logic_error("clique path is not an arrangement of maximal cliques");
      }
      return Claw{widest, {v, x, y}};
    }
    if (widest < 0 || last[v] > last[widest]) widest = v;
  }
  if (!is_proper_ordering(g, order)) {
    throw std::logic_error("clique path does not match the graph");
  }
  return order;
}

bool is_proper_ordering(const Graph& g, std::span<const int> order) {
  const int n = g.num_vertices();
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    if (order[i] < 0 || order[i] >= n || pos[order[i]] >= 0) return false;
    pos[order[i]] = i;
  }
  for (int v = 0; v < n; ++v) {
    int lo = pos[v];
    int hi = pos[v];
    for (int w : g.neighbor_list(v)) {
      lo = std::min(lo, pos[w]);
      hi = std::max(hi, pos[w]);
    }
    if (hi - lo != g.degree(v)) return false;
  }
  return true;
}

UnitIntervalRepresentation realize_unit_intervals(const Graph& g,
                                                  std::span<const int> order) {
  if (!is_proper_ordering(g, order)) {
    throw std::invalid_argument("ordering is not proper");
  }
  const int n = g.num_vertices();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  // Leftmost / rightmost closed neighbor, in positions.
  std::vector<int> left(n);
  std::vector<int> right(n);
  for (int i = 0; i < n; ++i) {
    left[i] = right[i] = i;
    for (int w : g.neighbor_list(order[i])) {
      left[i] = std::min(left[i], pos[w]);
      right[i] = std::max(right[i], pos[w]);
    }
  }

  std::vector<int> layer(n);
  std::vector<int> layer_start;
  for (int start = 0; start < n; start = right[start] + 1) {
    const int t = static_cast<int>(layer_start.size());
    layer_start.push_back(start);
    for (int i = start; i <= right[start]; ++i) layer[i] = t;
  }

  std::list<int> merged;
  std::vector<std::list<int>::iterator> where(n);
  for (int i = 0; i < n; ++i) {
    if (layer[i] == 0) {
      where[i] = merged.insert(merged.end(), i);
    } else if (layer[left[i]] == layer[i] - 1) {
      where[i] = merged.insert(where[left[i]], i);
    } else {
      where[i] = merged.insert(merged.end(), i);
    }
  }
  std::vector<int> rank(n);
  int r = 0;
  for (int i : merged) rank[i] = r++;

  UnitIntervalRepresentation rep;
  rep.lefts.resize(n);
  const std::int64_t denominator = n + 1;
  for (int i = 0; i < n; ++i) {
    rep.lefts[order[i]] = Rational(layer[i] * denominator + rank[i], denominator);
  }
  // Twins have identical adjacency, so they can share their first twin's
  // interval; in particular a clique collapses onto one point.
  std::vector<VertexSet> closed(n);
  for (int v = 0; v < n; ++v) {
    closed[v] = g.neighbors(v);
    closed[v].set(v);
  }
  for (int i = 1; i < n; ++i) {
    for (int t = 0; t < i; ++t) {
      if (closed[order[t]] == closed[order[i]]) {
        rep.lefts[order[i]] = rep.lefts[order[t]];
        break;
      }
    }
  }
  return rep;
}

}  // namespace boxcub
