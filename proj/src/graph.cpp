#include "secluded/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "secluded/errors.hpp"

namespace secluded {

Graph::Graph(int vertex_count) : adjacency_(vertex_count < 0 ? 0 : vertex_count) {
  if (vertex_count < 0) throw InputError("negative vertex count");
}

Graph::Graph(int vertex_count, std::span<const Edge> edges) : Graph(vertex_count) {
  for (auto [u, v] : edges) {
    if (!valid(u) || !valid(v)) {
      throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") references a vertex outside 0.." + std::to_string(vertex_count - 1));
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    edge_count_ += list.size();
  }
  edge_count_ /= 2;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (Vertex v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

VertexSet make_set(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

void require_vertices(const Graph& g, std::span<const Vertex> vertices) {
  for (Vertex v : vertices)
    if (!g.valid(v)) throw InputError("vertex id " + std::to_string(v) + " out of range");
}

VertexSet open_neighborhood(const Graph& g, std::span<const Vertex> u) {
  require_vertices(g, u);
  std::vector<char> inside(g.vertex_count(), 0);
  for (Vertex v : u) inside[v] = 1;
  VertexSet out;
  std::vector<char> seen(g.vertex_count(), 0);
  for (Vertex v : u)
    for (Vertex x : g.neighbors(v))
      if (!inside[x] && !seen[x]) {
        seen[x] = 1;
        out.push_back(x);
      }
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  require_vertices(g, std::span(&v, 1));
  VertexSet out(g.neighbors(v).begin(), g.neighbors(v).end());
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex x : g.neighbors(v))
        if (!seen[x]) {
          seen[x] = 1;
          stack.push_back(x);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected_set(const Graph& g, std::span<const Vertex> u) {
  require_vertices(g, u);
  if (u.empty()) return true;
  std::vector<char> inside(g.vertex_count(), 0);
  for (Vertex v : u) inside[v] = 1;
  std::vector<Vertex> stack{u.front()};
  inside[u.front()] = 2;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex x : g.neighbors(v))
      if (inside[x] == 1) {
        inside[x] = 2;
        ++reached;
        stack.push_back(x);
      }
  }
  return reached == make_set({u.begin(), u.end()}).size();
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> u) {
  require_vertices(g, u);
  InducedSubgraph out;
  out.to_original = make_set({u.begin(), u.end()});
  std::vector<Vertex> local(g.vertex_count(), -1);
  for (std::size_t i = 0; i < out.to_original.size(); ++i) local[out.to_original[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < out.to_original.size(); ++i)
    for (Vertex x : g.neighbors(out.to_original[i]))
      if (local[x] > static_cast<Vertex>(i)) edges.emplace_back(static_cast<Vertex>(i), local[x]);
  out.graph = Graph(static_cast<int>(out.to_original.size()), edges);
  return out;
}

std::vector<VertexSet> true_twin_partition(const Graph& g) {
  std::map<VertexSet, VertexSet> by_closed;
  for (Vertex v = 0; v < g.vertex_count(); ++v) by_closed[closed_neighborhood(g, v)].push_back(v);
  std::vector<VertexSet> out;
  out.reserve(by_closed.size());
  for (auto& [key, members] : by_closed) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
  return out;
}

VertexSet TwinQuotient::expand(std::span<const Vertex> nodes) const {
  VertexSet out;
  for (Vertex x : nodes) out.insert(out.end(), classes.at(x).begin(), classes.at(x).end());
  return make_set(std::move(out));
}

VertexSet TwinQuotient::contract(std::span<const Vertex> vertices) const {
  VertexSet out;
  out.reserve(vertices.size());
  for (Vertex v : vertices) out.push_back(node_of.at(v));
  return make_set(std::move(out));
}

TwinQuotient quotient_true_twins(const Graph& g) {
  TwinQuotient q;
  q.classes = true_twin_partition(g);
  q.node_of.assign(g.vertex_count(), -1);
  for (std::size_t i = 0; i < q.classes.size(); ++i)
    for (Vertex v : q.classes[i]) q.node_of[v] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (q.node_of[u] != q.node_of[v]) edges.emplace_back(q.node_of[u], q.node_of[v]);
  q.graph = Graph(static_cast<int>(q.classes.size()), edges);
  return q;
}

namespace {

bool is_forest(const Graph& g) {
  return g.edge_count() + connected_components(g).size() == static_cast<std::size_t>(g.vertex_count());
}

bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

}  // namespace

bool check_shape(const Graph& g, Shape shape) {
  const int n = g.vertex_count();
  if (n == 0) return false;
  switch (shape.kind) {
    case ShapeKind::clique:
      return g.edge_count() == static_cast<std::size_t>(n) * (n - 1) / 2;
    case ShapeKind::star: {
      if (n <= 2) return is_connected(g);
      // the center is the unique vertex of degree n-1, every other vertex is a leaf
      int centers = 0;
      for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) == n - 1)
          ++centers;
        else if (g.degree(v) != 1)
          return false;
      }
      return centers == 1;
    }
    case ShapeKind::induced_path: {
      if (!is_connected(g) || g.edge_count() != static_cast<std::size_t>(n - 1)) return false;
      for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) > 2) return false;
      return true;
    }
    case ShapeKind::regular:
      for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) != shape.degree) return false;
      return true;
    case ShapeKind::forest:
      return is_forest(g);
  }
  return false;
}

}  // namespace secluded
