#pragma once

#include <vector>

#include "secluded/graph.hpp"

namespace secluded {

enum class BoundaryMode {
  exact,    // |N(U)| == t
  at_most,  // |N(U)| <= t
};

/// All connected U with v in U, |U| == k and |N(U)| matching t under `mode`,
/// in lexicographic order.
///
/// Include/exclude branching on the lowest-id vertex of N(U) not yet excluded;
/// excluded vertices are committed to the final neighborhood, so branches with
/// more than t of them are cut. In exact mode the number of sets per start
/// vertex is at most C(k+t, t).
std::vector<VertexSet> enum_connected_secluded_sets(const Graph& g, Vertex v, int k, int t, BoundaryMode mode);

}  // namespace secluded
