#include "secluded/star_kernel.hpp"

#include "secluded/solvers.hpp"

namespace secluded {

Instance KernelInstance::as_instance() const {
  Instance inst;
  inst.graph = graph;
  inst.weights = weights;
  inst.colors.assign(weights.size(), 0);
  inst.t = t_prime;
  inst.w = w_prime > 0 ? w_prime : 1;
  return inst;
}

long long star_kernel_size_bound(int t) {
  const long long tt = t;
  return 4 * tt * tt * tt + 2 * tt * tt + 1;
}

std::vector<KernelInstance> kernelize_star(const Instance& inst) {
  validate(inst, false);
  const Graph& g = inst.graph;
  const int t = inst.t;
  std::vector<KernelInstance> out;
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    const auto aux = build_star_auxiliary(g, x);
    const Graph& f = aux.graph;
    const int nf = f.vertex_count();
    std::vector<char> heavy(nf, 0);
    int heavy_count = 0;
    for (Vertex v = 0; v < nf; ++v)
      if (f.degree(v) > t) heavy[v] = 1, ++heavy_count;
    if (heavy_count > t) continue;
    const int t_prime = t - heavy_count;

    std::vector<char> isolated(nf, 0);
    VertexSet active;  // non-isolated vertices of F_x - W_x
    for (Vertex v = 0; v < nf; ++v) {
      if (heavy[v]) continue;
      bool has_edge = false;
      for (Vertex u : f.neighbors(v)) has_edge |= !heavy[u];
      if (has_edge)
        active.push_back(v);
      else
        isolated[v] = 1;
    }
    if (static_cast<long long>(active.size()) > 2LL * t * t_prime) continue;

    KernelInstance k;
    k.center = x;
    k.t_prime = t_prime;
    for (Vertex v = 0; v < nf; ++v)
      if (isolated[v] && aux.first_neighborhood[v]) k.removed_free_weight += inst.weights[aux.to_original[v]];
    k.w_prime = inst.w - k.removed_free_weight;

    // local ids: x first, then the active vertices, then the cliques
    std::vector<Vertex> local(nf, -1);
    k.to_original.push_back(x);
    k.weights.push_back(inst.weights[x]);
    for (Vertex v : active) {
      local[v] = static_cast<Vertex>(k.to_original.size());
      k.to_original.push_back(aux.to_original[v]);
      k.weights.push_back(inst.weights[aux.to_original[v]]);
    }
    std::vector<Edge> edges;
    for (Vertex v : active) {
      if (aux.first_neighborhood[v]) edges.emplace_back(0, local[v]);
      for (Vertex u : f.neighbors(v))
        if (u > v && local[u] >= 0) edges.emplace_back(local[v], local[u]);
    }
    for (Vertex v : active) {
      if (aux.first_neighborhood[v]) continue;
      VertexSet clique;
      for (int i = 0; i < 2 * t; ++i) {
        const auto c = static_cast<Vertex>(k.to_original.size());
        k.to_original.push_back(-1);
        k.weights.push_back(1);
        edges.emplace_back(local[v], c);
        for (Vertex other : clique) edges.emplace_back(other, c);
        clique.push_back(c);
      }
      k.attached_cliques.push_back(std::move(clique));
      k.clique_anchor.push_back(local[v]);
    }
    k.graph = Graph(static_cast<int>(k.to_original.size()), edges);
    out.push_back(std::move(k));
  }
  return out;
}

bool decide_star_via_kernels(const Instance& inst) {
  for (const auto& k : kernelize_star(inst))
    if (solve_secluded_star(k.as_instance(), k.center_local)) return true;
  return false;
}

}  // namespace secluded
