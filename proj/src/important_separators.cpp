#include "secluded/important_separators.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <string>

#include "secluded/errors.hpp"

namespace secluded {

namespace {

constexpr int kInfinite = std::numeric_limits<int>::max() / 4;

struct FlowEdge {
  int to;
  int capacity;
};

// Unit vertex capacities via in/out splitting: in(v) = 2v, out(v) = 2v + 1.
class VertexFlow {
 public:
  VertexFlow(const Graph& g, const std::vector<char>& deleted, const std::vector<char>& source,
             const std::vector<char>& sink)
      : n_(g.vertex_count()), adjacency_(2 * n_ + 2) {
    const int s = 2 * n_, t = 2 * n_ + 1;
    for (Vertex v = 0; v < n_; ++v) {
      if (deleted[v]) continue;
      add_edge(2 * v, 2 * v + 1, (source[v] || sink[v]) ? kInfinite : 1);
      if (source[v]) add_edge(s, 2 * v, kInfinite);
      if (sink[v]) add_edge(2 * v + 1, t, kInfinite);
      for (Vertex u : g.neighbors(v))
        if (!deleted[u]) add_edge(2 * v + 1, 2 * u, kInfinite);
    }
  }

  // Augments until the flow exceeds `limit` or no path is left.
  int max_flow(int limit) {
    const int s = 2 * n_, t = 2 * n_ + 1;
    int flow = 0;
    std::vector<int> parent_edge(adjacency_.size());
    while (flow <= limit) {
      std::fill(parent_edge.begin(), parent_edge.end(), -1);
      std::deque<int> queue{s};
      parent_edge[s] = -2;
      while (!queue.empty() && parent_edge[t] == -1) {
        int u = queue.front();
        queue.pop_front();
        for (int e : adjacency_[u]) {
          const auto& edge = edges_[e];
          if (edge.capacity > 0 && parent_edge[edge.to] == -1) {
            parent_edge[edge.to] = e;
            queue.push_back(edge.to);
          }
        }
      }
      if (parent_edge[t] == -1) break;
      for (int v = t; v != s;) {
        int e = parent_edge[v];
        edges_[e].capacity -= 1;
        edges_[e ^ 1].capacity += 1;
        v = edges_[e ^ 1].to;
      }
      ++flow;
    }
    return flow;
  }

  // Nodes that still reach the sink in the residual network.
  std::vector<char> reaches_sink() const {
    const int t = 2 * n_ + 1;
    std::vector<char> mark(adjacency_.size(), 0);
    std::vector<int> stack{t};
    mark[t] = 1;
    while (!stack.empty()) {
      int w = stack.back();
      stack.pop_back();
      // residual edge u -> w exists iff the reverse of an edge out of w has capacity
      for (int e : adjacency_[w]) {
        const int u = edges_[e].to;
        if (!mark[u] && edges_[e ^ 1].capacity > 0) {
          mark[u] = 1;
          stack.push_back(u);
        }
      }
    }
    return mark;
  }

 private:
  void add_edge(int from, int to, int capacity) {
    adjacency_[from].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({to, capacity});
    adjacency_[to].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({from, 0});
  }

  int n_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<FlowEdge> edges_;
};

std::vector<char> mask_of(int n, std::span<const Vertex> vertices) {
  std::vector<char> m(n, 0);
  for (Vertex v : vertices) m[v] = 1;
  return m;
}

bool touches(const Graph& g, const std::vector<char>& deleted, const std::vector<char>& x,
             const std::vector<char>& y) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (deleted[v] || !x[v]) continue;
    if (y[v]) return true;
    for (Vertex u : g.neighbors(v))
      if (!deleted[u] && y[u]) return true;
  }
  return false;
}

VertexSet reach_from(const Graph& g, const std::vector<char>& blocked, const std::vector<char>& x) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<Vertex> stack;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (x[v] && !blocked[v]) {
      seen[v] = 1;
      stack.push_back(v);
    }
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(v))
      if (!seen[u] && !blocked[u]) {
        seen[u] = 1;
        stack.push_back(u);
      }
  }
  VertexSet out;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

std::optional<MinimumCut> furthest_cut(const Graph& g, const std::vector<char>& deleted, const std::vector<char>& x,
                                       const std::vector<char>& y, int limit) {
  if (limit < 0 || touches(g, deleted, x, y)) return std::nullopt;
  VertexFlow flow(g, deleted, x, y);
  if (flow.max_flow(limit) > limit) return std::nullopt;
  const auto to_sink = flow.reaches_sink();
  MinimumCut out;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!deleted[v] && !to_sink[2 * v] && to_sink[2 * v + 1]) out.cut.push_back(v);
  std::vector<char> blocked = deleted;
  for (Vertex v : out.cut) blocked[v] = 1;
  out.reach = reach_from(g, blocked, x);
  return out;
}

void check_terminals(const Graph& g, std::span<const Vertex> x, std::span<const Vertex> y) {
  if (x.empty() || y.empty()) throw InputError("terminal sets X and Y must be nonempty");
  require_vertices(g, x);
  require_vertices(g, y);
}

class ImportantSeparatorEnumerator {
 public:
  ImportantSeparatorEnumerator(const Graph& g, std::span<const Vertex> y)
      : g_(g), deleted_(g.vertex_count(), 0), sink_(mask_of(g.vertex_count(), y)) {}

  void run(std::vector<char> source, int budget) {
    auto cut = furthest_cut(g_, deleted_, source, sink_, budget);
    if (!cut) return;
    if (cut->cut.empty()) {
      found_.push_back(make_set(prefix_));
      return;
    }
    const Vertex v = cut->cut.front();

    deleted_[v] = 1;
    prefix_.push_back(v);
    run(source, budget - 1);
    prefix_.pop_back();
    deleted_[v] = 0;

    std::vector<char> grown(g_.vertex_count(), 0);
    for (Vertex u : cut->reach) grown[u] = 1;
    grown[v] = 1;
    run(std::move(grown), budget);
  }

  std::vector<VertexSet> take() { return std::move(found_); }

 private:
  const Graph& g_;
  std::vector<char> deleted_;
  std::vector<char> sink_;
  std::vector<Vertex> prefix_;
  std::vector<VertexSet> found_;
};

// S is important iff it is a minimal separator and, for R its reachable set,
// every (R + v, Y) cut with v in S is larger than |S|.
bool passes_importance_test(const Graph& g, std::span<const Vertex> x, std::span<const Vertex> y, const VertexSet& s) {
  const int n = g.vertex_count();
  const auto none = std::vector<char>(n, 0);
  const auto x_mask = mask_of(n, x), y_mask = mask_of(n, y), s_mask = mask_of(n, s);
  for (Vertex v : s)
    if (x_mask[v] || y_mask[v]) return false;
  if (touches(g, none, x_mask, y_mask)) return false;
  const auto reach = reach_from(g, s_mask, x_mask);
  const auto reach_mask = mask_of(n, reach);
  for (Vertex v : reach)
    if (y_mask[v]) return false;
  const auto y_side = mask_of(n, reach_from(g, s_mask, y_mask));
  for (Vertex v : s) {
    const auto nb = g.neighbors(v);
    const bool near_x = std::any_of(nb.begin(), nb.end(), [&](Vertex u) { return reach_mask[u] != 0; });
    const bool near_y = std::any_of(nb.begin(), nb.end(), [&](Vertex u) { return y_side[u] != 0; });
    if (!near_x || !near_y) return false;
  }
  for (Vertex v : s) {
    auto grown = reach_mask;
    grown[v] = 1;
    if (furthest_cut(g, none, grown, y_mask, static_cast<int>(s.size()))) return false;
  }
  return true;
}

}  // namespace

VertexSet reachable_avoiding(const Graph& g, std::span<const Vertex> x, std::span<const Vertex> s) {
  require_vertices(g, x);
  require_vertices(g, s);
  return reach_from(g, mask_of(g.vertex_count(), s), mask_of(g.vertex_count(), x));
}

bool is_separator(const Graph& g, std::span<const Vertex> x, std::span<const Vertex> y, std::span<const Vertex> s) {
  check_terminals(g, x, y);
  require_vertices(g, s);
  const int n = g.vertex_count();
  const auto x_mask = mask_of(n, x), y_mask = mask_of(n, y);
  for (Vertex v : s)
    if (x_mask[v] || y_mask[v]) return false;
  for (Vertex v : reachable_avoiding(g, x, s))
    if (y_mask[v]) return false;
  return true;
}

std::optional<MinimumCut> furthest_minimum_cut(const Graph& g, std::span<const Vertex> x, std::span<const Vertex> y,
                                               int limit) {
  check_terminals(g, x, y);
  const int n = g.vertex_count();
  return furthest_cut(g, std::vector<char>(n, 0), mask_of(n, x), mask_of(n, y), limit);
}

std::vector<VertexSet> enum_important_separators(const Graph& g, std::span<const Vertex> x,
                                                 std::span<const Vertex> y, int t) {
  check_terminals(g, x, y);
  if (t < 0) throw InputError("t must be nonnegative");
  ImportantSeparatorEnumerator enumerator(g, y);
  enumerator.run(mask_of(g.vertex_count(), x), t);
  auto found = enumerator.take();
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  std::vector<VertexSet> out;
  for (auto& s : found)
    if (passes_importance_test(g, x, y, s)) out.push_back(std::move(s));
  return out;
}

bool is_important_separator(const Graph& g, std::span<const Vertex> x, std::span<const Vertex> y,
                            std::span<const Vertex> s, int vertex_cap) {
  check_terminals(g, x, y);
  require_vertices(g, s);
  const int n = g.vertex_count();
  if (n > vertex_cap || n > 30)
    throw CapacityError("brute-force importance check limited to " + std::to_string(vertex_cap) + " vertices");
  const VertexSet sep = make_set({s.begin(), s.end()});
  if (!is_separator(g, x, y, sep)) return false;
  for (std::size_t i = 0; i < sep.size(); ++i) {
    VertexSet smaller = sep;
    smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
    if (is_separator(g, x, y, smaller)) return false;
  }
  const VertexSet reach = reachable_avoiding(g, x, sep);
  const auto x_mask = mask_of(n, x), y_mask = mask_of(n, y);
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) {
    if (std::popcount(m) > static_cast<int>(sep.size())) continue;
    VertexSet other;
    bool terminal = false;
    for (Vertex v = 0; v < n; ++v)
      if (m >> v & 1u) {
        terminal |= x_mask[v] || y_mask[v];
        other.push_back(v);
      }
    if (terminal || !is_separator(g, x, y, other)) continue;
    const VertexSet other_reach = reachable_avoiding(g, x, other);
    if (other_reach.size() > reach.size() && std::includes(other_reach.begin(), other_reach.end(), reach.begin(), reach.end()))
      return false;
  }
  return true;
}

}  // namespace secluded
