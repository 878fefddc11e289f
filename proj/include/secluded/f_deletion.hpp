#pragma once

#include <span>
#include <vector>

#include "secluded/graph.hpp"

namespace secluded {

/// Sets S with forced_in ⊆ S, S ∩ forbidden = ∅ and |S| <= |forced_in| + budget
/// such that g - S has no induced member of `family`.
///
/// Starts from S = forced_in, finds a forbidden copy in g - S, and branches on
/// adding each of its vertices outside `forbidden`; a copy lying entirely in
/// `forbidden` ends the branch. Results are deduplicated and sorted but may
/// be non-minimal.
std::vector<VertexSet> enum_f_deletion_sets(const Graph& g, std::span<const Graph> family,
                                            std::span<const Vertex> forced_in, std::span<const Vertex> forbidden,
                                            int budget);

/// Keeps the sets S for which no S - {v}, v ∉ forced_in, still leaves g family-free.
std::vector<VertexSet> keep_minimal_deletion_sets(const Graph& g, std::span<const Graph> family,
                                                  std::span<const Vertex> forced_in, std::vector<VertexSet> sets);

}  // namespace secluded
