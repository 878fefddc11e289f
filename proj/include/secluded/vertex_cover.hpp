#pragma once

#include <span>
#include <vector>

#include "secluded/graph.hpp"

namespace secluded {

bool is_vertex_cover(const Graph& g, std::span<const Vertex> cover);

/// A cover from which no single vertex can be dropped.
bool is_minimal_vertex_cover(const Graph& g, std::span<const Vertex> cover);

/// Every inclusion-minimal vertex cover of size at most t, sorted.
/// Two-way branching on the lowest uncovered edge, then a minimality filter.
std::vector<VertexSet> enum_minimal_vertex_covers(const Graph& g, int t);

}  // namespace secluded
