#pragma once

#include <optional>
#include <span>
#include <vector>

#include "secluded/graph.hpp"

namespace secluded {

/// (X, Y)-separators here are vertex sets disjoint from X ∪ Y whose removal
/// leaves no path from X to Y. When X and Y intersect or are adjacent no such
/// set exists.

/// Vertices reachable from `x` in g - s.
VertexSet reachable_avoiding(const Graph& g, std::span<const Vertex> x, std::span<const Vertex> s);

bool is_separator(const Graph& g, std::span<const Vertex> x, std::span<const Vertex> y, std::span<const Vertex> s);

/// The minimum (X, Y) vertex cut lying furthest from X, i.e. with the
/// inclusion-maximal reachable side, or nullopt if every cut exceeds `limit`
/// (including when no cut exists).
struct MinimumCut {
  VertexSet cut;
  VertexSet reach;  // vertices reachable from X after removing `cut`
};
std::optional<MinimumCut> furthest_minimum_cut(const Graph& g, std::span<const Vertex> x, std::span<const Vertex> y,
                                               int limit);

/// All important (X, Y)-separators of size at most t, sorted.
///
/// Branches on the lowest-id vertex v of the furthest minimum cut: either v is
/// in the separator (recurse in g - v with budget t - 1), or v joins the
/// source side (recurse with X := reach ∪ {v}). Candidates are filtered by an
/// exact flow-based importance test. At most 4^t sets are returned.
std::vector<VertexSet> enum_important_separators(const Graph& g, std::span<const Vertex> x,
                                                 std::span<const Vertex> y, int t);

/// Brute-force test of the definition: s is a minimal separator and no
/// separator of size <= |s| has a strictly larger reachable set.
/// CapacityError when g has more than `vertex_cap` vertices.
bool is_important_separator(const Graph& g, std::span<const Vertex> x, std::span<const Vertex> y,
                            std::span<const Vertex> s, int vertex_cap = 14);

}  // namespace secluded
