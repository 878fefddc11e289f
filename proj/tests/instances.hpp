#pragma once

#include <functional>
#include <optional>
#include <random>

#include "oracles.hpp"
#include "secluded/instance.hpp"

namespace oracle {

inline secluded::Instance random_instance(std::mt19937_64& rng, int n_lo, int n_hi, std::vector<double> probabilities,
                                          int t_hi, int max_weight = 5, int colors = 1) {
  const int n = uniform(rng, n_lo, n_hi);
  const double p = probabilities[uniform(rng, 0, static_cast<int>(probabilities.size()) - 1)];
  auto inst = secluded::Instance::unit(random_graph(n, p, rng), uniform(rng, 0, t_hi), 1);
  for (auto& w : inst.weights) w = uniform(rng, 1, max_weight);
  for (auto& c : inst.colors) c = uniform(rng, 0, colors - 1);
  return inst;
}

struct Best {
  Mask set = 0;
  std::int64_t weight = 0;
};

// Heaviest, then lexicographically least, nonempty U with |N(U)| <= t, weight >= w
// and `shape` holding; connectivity enforced when asked.
inline std::optional<Best> best_set(const secluded::Instance& inst, bool connected_only,
                                    const std::function<bool(const std::vector<Mask>&, Mask)>& shape) {
  const auto adj = adjacency(inst.graph);
  const int n = inst.vertex_count();
  std::optional<Best> best;
  for (Mask m = 1; m < bit(n); ++m) {
    if (std::popcount(neighborhood(adj, m)) > inst.t) continue;
    std::int64_t w = 0;
    for (int v = 0; v < n; ++v)
      if (m & bit(v)) w += inst.weights[v];
    if (w < inst.w) continue;
    if (connected_only && !connected(adj, m)) continue;
    if (!shape(adj, m)) continue;
    if (!best || w > best->weight || (w == best->weight && to_set(m) < to_set(best->set))) best = Best{m, w};
  }
  return best;
}

}  // namespace oracle
