#pragma once

#include <span>
#include <string>
#include <vector>

#include "secluded/graph.hpp"

namespace secluded {

/// A graph with an ordered tuple of distinct boundary vertices.
struct BoundariedGraph {
  Graph graph;
  std::vector<Vertex> boundary;

  BoundariedGraph() = default;
  /// Throws InputError on repeated or out-of-range boundary vertices.
  BoundariedGraph(Graph g, std::vector<Vertex> boundary_vertices);

  int boundary_size() const { return static_cast<int>(boundary.size()); }

  /// Every component contains a boundary vertex.
  bool properly_boundaried() const;
};

/// Isomorphism that maps boundary[i] to boundary[i] for every i.
bool boundaried_isomorphic(const BoundariedGraph& g1, const BoundariedGraph& g2);

/// Boundary vertices i, j are adjacent in g1 iff they are adjacent in g2.
/// InputError when boundary lengths differ.
bool boundary_compatible(const BoundariedGraph& g1, const BoundariedGraph& g2);

/// Disjoint union with boundary[i] of both sides identified. Vertices of g1
/// keep their ids; non-boundary vertices of g2 follow in increasing order.
Graph boundary_sum(const BoundariedGraph& g1, const BoundariedGraph& g2);

/// Boundaried graphs (F[A], ordering of A ∩ B) for every separation (A, B) of
/// every F in the family, one per boundaried isomorphism class.
struct ForbiddenBoundariedSet {
  std::vector<BoundariedGraph> members;
  std::vector<Graph> source_family;

  int max_boundary_size() const;
  int max_member_size() const;
};

ForbiddenBoundariedSet build_forbidden_boundaried_set(std::span<const Graph> family);

/// Does g contain an induced copy of h whose boundary vertex j lands on
/// anchors[indices[j]] and which meets the anchors in exactly those vertices?
/// `indices` are 0-based positions into `anchors`.
bool has_boundaried_induced_subgraph(const Graph& g, std::span<const Vertex> anchors, const BoundariedGraph& h,
                                     std::span<const int> indices);

/// Equivalence of two properly boundaried graphs of equal boundary size:
/// boundary-compatible, same partition of the boundary into components, and
/// the same answers to has_boundaried_induced_subgraph for every member of
/// `fb` and every tuple of distinct boundary positions.
bool equivalent_wrt_fb(const BoundariedGraph& g1, const BoundariedGraph& g2, const ForbiddenBoundariedSet& fb);

/// One representative per equivalence class of properly p-boundaried graphs
/// with at most n_cap vertices: the one with the fewest vertices, ties broken
/// by the least canonical encoding. Only p <= 2 and n_cap <= 5 are supported
/// (CapacityError otherwise); n_cap < p gives an empty list.
std::vector<BoundariedGraph> build_representatives(int p, const ForbiddenBoundariedSet& fb, int n_cap);

/// Canonical string for a boundaried graph: minimum adjacency encoding over
/// all relabelings that fix the boundary positions.
std::string canonical_encoding(const BoundariedGraph& g);

}  // namespace secluded
