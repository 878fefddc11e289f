#pragma once

#include <optional>
#include <vector>

#include "secluded/graph.hpp"
#include "secluded/instance.hpp"

namespace secluded {

/// A bounded-size star instance built around one candidate center x.
///
/// The graph is F⁺_x (x plus the non-isolated part of F_x - W_x) with a clique
/// of 2t unit-weight vertices attached to every second-neighborhood vertex.
/// w_prime <= 0 means any star centered at x meets the weight target.
struct KernelInstance {
  Graph graph;
  std::vector<Weight> weights;
  int t_prime = 0;
  Weight w_prime = 0;
  Vertex center = 0;        // x in the original graph
  Vertex center_local = 0;  // x in `graph`
  Weight removed_free_weight = 0;  // ω(I_x)
  std::vector<Vertex> to_original;  // -1 for attached clique vertices
  std::vector<VertexSet> attached_cliques;  // local ids, one clique per second-neighborhood vertex
  std::vector<Vertex> clique_anchor;        // local id of the vertex each clique hangs from

  /// The kernel as a solver instance; w_prime is raised to 1 when it is not positive.
  Instance as_instance() const;
};

/// Largest vertex count a kernel for budget t can have: 4t³ + 2t² + 1.
long long star_kernel_size_bound(int t);

/// One kernel per center x that survives the two rejection rules
/// (|W_x| > t, or more than 2t·t' non-isolated vertices in F_x - W_x).
std::vector<KernelInstance> kernelize_star(const Instance& inst);

/// Yes iff some kernel has a star solution centered at its own center. Stars
/// centered elsewhere in a kernel (say a lone low-degree vertex of N(x)) can be
/// secluded there without matching anything in the input, so they are ignored.
bool decide_star_via_kernels(const Instance& inst);

}  // namespace secluded
