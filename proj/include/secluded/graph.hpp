#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace secluded {

using Vertex = int;

/// Sorted, duplicate-free list of vertex ids. All set-valued results use this form.
using VertexSet = std::vector<Vertex>;

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency lists are kept sorted, so `adjacent` is a binary search. Every
/// "modification" (induced subgraphs, quotients, sums) builds a new Graph.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);

  /// Throws InputError on self-loops or out-of-range endpoints. Repeated
  /// edges collapse into one.
  Graph(int vertex_count, std::span<const Edge> edges);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const { return edge_count_; }

  bool valid(Vertex v) const { return v >= 0 && v < vertex_count(); }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Sorts and deduplicates.
VertexSet make_set(std::vector<Vertex> vertices);

/// Throws InputError if any id is outside the graph.
void require_vertices(const Graph& g, std::span<const Vertex> vertices);

/// (union of N(v) over v in u) minus u.
VertexSet open_neighborhood(const Graph& g, std::span<const Vertex> u);

VertexSet closed_neighborhood(const Graph& g, Vertex v);

/// Components ordered by their minimum vertex id; each component is sorted.
std::vector<VertexSet> connected_components(const Graph& g);

/// True iff g[u] is connected. The empty set counts as connected.
bool is_connected_set(const Graph& g, std::span<const Vertex> u);

struct InducedSubgraph {
  Graph graph;
  /// Local id i corresponds to original vertex to_original[i].
  std::vector<Vertex> to_original;
};

/// g[u]. Local ids follow the sorted order of u.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> u);

/// Classes of vertices with equal closed neighborhoods, ordered by minimum id.
std::vector<VertexSet> true_twin_partition(const Graph& g);

/// The graph obtained by contracting every maximal true-twin class to one node.
struct TwinQuotient {
  Graph graph;
  std::vector<VertexSet> classes;  // node i <-> classes[i]
  std::vector<Vertex> node_of;     // vertex -> node

  /// Union of the classes of the given nodes.
  VertexSet expand(std::span<const Vertex> nodes) const;
  /// Nodes whose classes meet the given vertex set.
  VertexSet contract(std::span<const Vertex> vertices) const;
};

TwinQuotient quotient_true_twins(const Graph& g);

enum class ShapeKind { clique, star, induced_path, regular, forest };

struct Shape {
  ShapeKind kind = ShapeKind::clique;
  int degree = 0;  // only for ShapeKind::regular

  static Shape clique() { return {ShapeKind::clique, 0}; }
  static Shape star() { return {ShapeKind::star, 0}; }
  static Shape induced_path() { return {ShapeKind::induced_path, 0}; }
  static Shape regular(int d) { return {ShapeKind::regular, d}; }
  static Shape forest() { return {ShapeKind::forest, 0}; }
};

/// Shape test on a whole graph. A single vertex is a clique, star, path,
/// forest and 0-regular; a single edge is a star. The empty graph has no shape.
bool check_shape(const Graph& g, Shape shape);

}  // namespace secluded
