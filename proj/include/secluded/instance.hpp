#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "secluded/graph.hpp"

namespace secluded {

using Weight = std::int64_t;

/// A problem instance: graph, vertex weights, vertex colors, seclusion budget
/// `t` and weight target `w`. Problem-specific parameters (k, d) are passed to
/// the solvers separately.
struct Instance {
  Graph graph;
  std::vector<Weight> weights;
  std::vector<int> colors;  // one entry per vertex, default 0
  int t = 0;
  Weight w = 1;

  int vertex_count() const { return graph.vertex_count(); }

  /// Instance with unit weights and zero colors.
  static Instance unit(Graph g, int t, Weight w);
};

/// Checks sizes and ranges. User-facing instances need strictly positive
/// weights and w >= 1; internal ones may carry zero weights and any w.
void validate(const Instance& inst, bool user_facing = true);

Weight total_weight(std::span<const Weight> weights, std::span<const Vertex> vertices);

/// A vertex set together with its open neighborhood and weight.
struct SecludedSolution {
  VertexSet vertices;
  VertexSet neighborhood;
  Weight weight = 0;

  friend bool operator==(const SecludedSolution&, const SecludedSolution&) = default;
};

SecludedSolution make_solution(const Instance& inst, VertexSet vertices);

/// Ordering used by every solver: larger weight wins, then the
/// lexicographically smaller vertex list.
bool better_solution(const SecludedSolution& a, const SecludedSolution& b);

/// Replaces `best` if `candidate` is better.
void keep_better(std::optional<SecludedSolution>& best, SecludedSolution candidate);

}  // namespace secluded
