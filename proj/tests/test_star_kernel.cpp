#include <doctest.h>

#include "instances.hpp"
#include "secluded/solvers.hpp"
#include "secluded/star_kernel.hpp"

using namespace secluded;

namespace {

// Structure promised for every kernel.
void check_kernel(const KernelInstance& k, int t) {
  CHECK(k.graph.vertex_count() <= star_kernel_size_bound(t));
  CHECK(k.t_prime >= 0);
  CHECK(k.t_prime <= t);
  CHECK(k.to_original[k.center_local] == k.center);
  REQUIRE(k.attached_cliques.size() == k.clique_anchor.size());
  for (std::size_t i = 0; i < k.attached_cliques.size(); ++i) {
    const auto& clique = k.attached_cliques[i];
    CHECK(static_cast<int>(clique.size()) == 2 * t);
    for (Vertex c : clique) {
      CHECK(k.weights[c] == 1);
      CHECK(k.to_original[c] == -1);
      CHECK(k.graph.degree(c) == 2 * t);  // the other 2t-1 clique vertices and the anchor
      CHECK(k.graph.adjacent(c, k.clique_anchor[i]));
      for (Vertex other : clique)
        if (other != c) CHECK(k.graph.adjacent(c, other));
    }
  }
}

}  // namespace

TEST_CASE("kernel of a star around its center") {
  auto inst = Instance::unit(oracle::star(3), 1, 2);
  const auto kernels = kernelize_star(inst);
  const auto it = std::find_if(kernels.begin(), kernels.end(), [](const KernelInstance& k) { return k.center == 0; });
  REQUIRE(it != kernels.end());
  CHECK(it->graph.vertex_count() == 1);
  CHECK(it->removed_free_weight == 3);
  CHECK(it->w_prime == -1);
  CHECK(solve_secluded_star(it->as_instance(), it->center_local).has_value());
  CHECK(decide_star_via_kernels(inst) == solve_secluded_star(inst).has_value());
}

TEST_CASE("centers with too many heavy vertices are rejected") {
  // K_{2,4}: around a vertex of the 2-side, the 4 others are its neighbors, all
  // adjacent to the other 2-side vertex, which then has F_x-degree 4 > t
  std::vector<Edge> e;
  for (int i = 0; i < 2; ++i)
    for (int j = 2; j < 6; ++j) e.emplace_back(i, j);
  auto inst = Instance::unit(Graph(6, e), 0, 1);
  const auto kernels = kernelize_star(inst);
  CHECK(std::none_of(kernels.begin(), kernels.end(), [](const KernelInstance& k) { return k.center == 0; }));
}

TEST_CASE("bound formula") {
  CHECK(star_kernel_size_bound(0) == 1);
  CHECK(star_kernel_size_bound(1) == 7);
  CHECK(star_kernel_size_bound(3) == 127);
}

TEST_CASE("property: OR over kernels equals the direct verdict, n <= 40") {
  std::mt19937_64 rng(91);
  for (int trial = 0; trial < 80; ++trial) {
    auto inst = oracle::random_instance(rng, 5, 40, {0.05, 0.1, 0.2}, 3);
    const auto best = solve_secluded_star(Instance{inst.graph, inst.weights, inst.colors, inst.t, 1});
    const Weight top = best ? best->weight : 1;
    inst.w = std::max<Weight>(1, top + oracle::uniform(rng, -1, 1));
    const auto kernels = kernelize_star(inst);
    for (const auto& k : kernels) check_kernel(k, inst.t);
    CHECK(decide_star_via_kernels(inst) == solve_secluded_star(inst).has_value());
  }
}
