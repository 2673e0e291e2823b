#include "boxcub/graph_invariants.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace boxcub {
namespace {

// Maximum clique search in the style of Tomita's MCQ: candidates are greedily
// colored and a branch is cut once |current| + color bound <= |best|.
class CliqueSearch {
 public:
  // `adjacency[v]` lists v's neighbors; vertices are renumbered internally
  // by non-increasing degree.
  explicit CliqueSearch(const std::vector<VertexSet>& adjacency) {
    const int n = static_cast<int>(adjacency.size());
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return adjacency[a].count() > adjacency[b].count();
    });
    std::vector<int> position(n);
    for (int i = 0; i < n; ++i) position[order_[i]] = i;
    adj_.assign(n, VertexSet(n));
    for (int i = 0; i < n; ++i) {
      const VertexSet& row = adjacency[order_[i]];
      for (auto w = row.find_first(); w != VertexSet::npos;
           w = row.find_next(w)) {
        adj_[i].set(position[w]);
      }
    }
  }

  std::vector<int> run() {
    const int n = static_cast<int>(adj_.size());
    if (n == 0) return {};
    VertexSet all(n);
    all.set();
    expand(all);
    std::vector<int> out;
    out.reserve(best_.size());
    for (int p : best_) out.push_back(order_[p]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void expand(VertexSet candidates) {
    std::vector<int> verts;
    std::vector<int> bounds;
    color_sort(candidates, verts, bounds);
    for (int i = static_cast<int>(verts.size()) - 1; i >= 0; --i) {
      if (current_.size() + bounds[i] <= best_.size()) return;
      const int v = verts[i];
      current_.push_back(v);
      VertexSet next = candidates & adj_[v];
      if (next.none()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      candidates.reset(v);
    }
  }

  void color_sort(const VertexSet& candidates, std::vector<int>& verts,
                  std::vector<int>& bounds) const {
    VertexSet uncolored = candidates;
    int color = 0;
    while (uncolored.any()) {
      ++color;
      VertexSet available = uncolored;
      for (auto v = available.find_first(); v != VertexSet::npos;
           v = available.find_next(v)) {
        verts.push_back(static_cast<int>(v));
        bounds.push_back(color);
        uncolored.reset(v);
        available -= adj_[v];
      }
    }
  }

  std::vector<int> order_;
  std::vector<VertexSet> adj_;
  std::vector<int> current_;
  std::vector<int> best_;
};

std::vector<VertexSet> complement_rows(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<VertexSet> rows(n);
  for (int v = 0; v < n; ++v) {
    rows[v] = ~g.neighbors(v);
    rows[v].reset(v);
  }
  return rows;
}

// DSATUR branch and bound. Vertices of `clique` are pre-assigned colors
// 0..|clique|-1, which is also the lower bound that ends the search early.
class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, const std::vector<int>& clique)
      : g_(g),
        n_(g.num_vertices()),
        color_(n_, -1),
        neighbor_color_count_(n_, std::vector<int>(n_ + 1, 0)),
        saturation_(n_, 0),
        lower_bound_(static_cast<int>(clique.size())) {
    for (int i = 0; i < static_cast<int>(clique.size()); ++i) {
      assign(clique[i], i);
    }
    precolored_ = static_cast<int>(clique.size());
  }

  std::vector<int> run(std::vector<int> upper) {
    best_ = std::move(upper);
    best_k_ = 1 + *std::max_element(best_.begin(), best_.end());
    if (best_k_ > lower_bound_) search(precolored_, lower_bound_);
    return best_;
  }

 private:
  void assign(int v, int c) {
    color_[v] = c;
    for (int w : g_.neighbor_list(v)) {
      if (neighbor_color_count_[w][c]++ == 0) ++saturation_[w];
    }
  }

  void unassign(int v) {
    const int c = color_[v];
    color_[v] = -1;
    for (int w : g_.neighbor_list(v)) {
      if (--neighbor_color_count_[w][c] == 0) --saturation_[w];
    }
  }

  int pick() const {
    int best = -1;
    for (int v = 0; v < n_; ++v) {
      if (color_[v] >= 0) continue;
      if (best < 0 || saturation_[v] > saturation_[best] ||
          (saturation_[v] == saturation_[best] &&
           g_.degree(v) > g_.degree(best))) {
        best = v;
      }
    }
    return best;
  }

  void search(int colored, int used) {
    if (done_) return;
    if (colored == n_) {
      best_ = color_;
      best_k_ = used;
      if (best_k_ == lower_bound_) done_ = true;
      return;
    }
    const int v = pick();
    // Colors >= best_k_ - 1 cannot beat the incumbent.
    for (int c = 0; c < std::min(used + 1, best_k_ - 1) && !done_; ++c) {
      if (neighbor_color_count_[v][c] != 0) continue;
      assign(v, c);
      search(colored + 1, std::max(used, c + 1));
      unassign(v);
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> color_;
  std::vector<std::vector<int>> neighbor_color_count_;
  std::vector<int> saturation_;
  int lower_bound_;
  int precolored_ = 0;
  std::vector<int> best_;
  int best_k_ = 0;
  bool done_ = false;
};

// Plain DSATUR, used as the incumbent for the exact search.
std::vector<int> dsatur_greedy(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> color(n, -1);
  std::vector<VertexSet> seen(n, VertexSet(n + 1));
  std::vector<int> saturation(n, 0);
  for (int step = 0; step < n; ++step) {
    int v = -1;
    for (int w = 0; w < n; ++w) {
      if (color[w] >= 0) continue;
      if (v < 0 || saturation[w] > saturation[v] ||
          (saturation[w] == saturation[v] && g.degree(w) > g.degree(v))) {
        v = w;
      }
    }
    int c = 0;
    while (seen[v][c]) ++c;
    color[v] = c;
    for (int w : g.neighbor_list(v)) {
      if (!seen[w][c]) {
        seen[w].set(c);
        ++saturation[w];
      }
    }
  }
  return color;
}

}  // namespace

std::vector<int> maximum_independent_set(const Graph& g) {
  return CliqueSearch(complement_rows(g)).run();
}

int exact_independence_number(const Graph& g) {
  return static_cast<int>(maximum_independent_set(g).size());
}

std::vector<int> maximum_clique(const Graph& g) {
  std::vector<VertexSet> rows(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) rows[v] = g.neighbors(v);
  return CliqueSearch(rows).run();
}

ProperColoring exact_chromatic_coloring(const Graph& g) {
  if (g.num_vertices() == 0) return {};
  const std::vector<int> clique = maximum_clique(g);
  std::vector<int> colors = ColoringSearch(g, clique).run(dsatur_greedy(g));
  return normalize_coloring(std::move(colors));
}

ProperColoring greedy_coloring(const Graph& g, std::span<const int> order) {
  const int n = g.num_vertices();
  if (static_cast<int>(order.size()) != n) {
    throw std::invalid_argument("order is not a permutation of the vertices");
  }
  std::vector<bool> seen(n, false);
  for (int v : order) {
    if (v < 0 || v >= n || seen[v]) {
      throw std::invalid_argument("order is not a permutation of the vertices");
    }
    seen[v] = true;
  }
  std::vector<int> color(n, -1);
  int used = 0;
  std::vector<bool> blocked;
  for (int v : order) {
    blocked.assign(used + 1, false);
    for (int w : g.neighbor_list(v)) {
      if (color[w] >= 0) blocked[color[w]] = true;
    }
    int c = 0;
    while (blocked[c]) ++c;
    color[v] = c;
    used = std::max(used, c + 1);
  }
  ProperColoring out;
  out.colors = std::move(color);
  out.chi_used = used;
  return out;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> component(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (component[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::queue<int> queue;
    queue.push(s);
    component[s] = id;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      out[id].push_back(v);
      for (int w : g.neighbor_list(v)) {
        if (component[w] < 0) {
          component[w] = id;
          queue.push(w);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

DiameterInfo diameter(const Graph& g) {
  const int n = g.num_vertices();
  DiameterInfo info;
  std::vector<int> dist(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    std::queue<int> queue;
    queue.push(s);
    int reached = 1;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      info.diameter = std::max(info.diameter, dist[v]);
      for (int w : g.neighbor_list(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          ++reached;
          queue.push(w);
        }
      }
    }
    if (reached < n) info.connected = false;
  }
  return info;
}

}  // namespace boxcub
