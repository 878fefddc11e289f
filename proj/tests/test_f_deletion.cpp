#include <doctest.h>

#include "oracles.hpp"
#include "secluded/errors.hpp"
#include "secluded/f_deletion.hpp"
#include "secluded/patterns.hpp"

using namespace secluded;

TEST_CASE("deletion set examples") {
  const std::vector<Graph> p3{oracle::path(3)};
  CHECK(enum_f_deletion_sets(oracle::path(3), p3, VertexSet{}, VertexSet{}, 1) ==
        std::vector<VertexSet>{{0}, {1}, {2}});
  const std::vector<Graph> k3{oracle::complete(3)};
  CHECK(enum_f_deletion_sets(oracle::complete(3), k3, VertexSet{}, VertexSet{0, 1, 2}, 3).empty());
  CHECK(enum_f_deletion_sets(oracle::complete(4), p3, VertexSet{2}, VertexSet{}, 2) ==
        std::vector<VertexSet>{{2}});
  CHECK(enum_f_deletion_sets(oracle::path(3), p3, VertexSet{}, VertexSet{}, 0).empty());
  CHECK_THROWS_AS(enum_f_deletion_sets(oracle::path(3), p3, VertexSet{1}, VertexSet{1}, 1), InputError);
}

TEST_CASE("minimality filter") {
  const std::vector<Graph> p3{oracle::path(3)};
  const auto all = enum_f_deletion_sets(oracle::path(4), p3, VertexSet{}, VertexSet{}, 3);
  const auto minimal = keep_minimal_deletion_sets(oracle::path(4), p3, VertexSet{}, all);
  for (const auto& s : minimal)
    for (Vertex v : s) {
      VertexSet smaller;
      for (Vertex u : s)
        if (u != v) smaller.push_back(u);
      std::vector<char> gone(4, 0);
      for (Vertex u : smaller) gone[u] = 1;
      CHECK(find_forbidden_copy(oracle::path(4), p3, gone).has_value());
    }
  CHECK(minimal == std::vector<VertexSet>{{0, 3}, {1}, {2}});
}

TEST_CASE("property: every output is a valid deletion set, and every minimal valid set is found") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = oracle::uniform(rng, 1, 9);
    const Graph g = oracle::random_graph(n, 0.4, rng);
    const std::vector<Graph> family{oracle::random_graph(oracle::uniform(rng, 2, 3), 0.6, rng)};
    const oracle::Mask all = oracle::bit(n) - 1;
    const oracle::Mask forced = rng() & all & rng();
    const oracle::Mask forbidden = rng() & all & ~forced & rng();
    const int budget = oracle::uniform(rng, 0, 3);
    const auto sets = enum_f_deletion_sets(g, family, oracle::to_set(forced), oracle::to_set(forbidden), budget);
    const int limit = std::popcount(forced) + budget;
    for (const auto& s : sets) {
      const auto m = oracle::to_mask(s);
      CHECK((m & forced) == forced);
      CHECK((m & forbidden) == 0);
      CHECK(static_cast<int>(s.size()) <= limit);
      VertexSet rest;
      for (Vertex v = 0; v < n; ++v)
        if (!(m & oracle::bit(v))) rest.push_back(v);
      CHECK(oracle::f_free(induced_subgraph(g, rest).graph, family));
    }
    // completeness for minimal solutions: each must appear
    for (oracle::Mask m = 0; m <= all; ++m) {
      if ((m & forced) != forced || (m & forbidden) || std::popcount(m) > limit) continue;
      auto rest_free = [&](oracle::Mask del) {
        VertexSet rest;
        for (Vertex v = 0; v < n; ++v)
          if (!(del & oracle::bit(v))) rest.push_back(v);
        return oracle::f_free(induced_subgraph(g, rest).graph, family);
      };
      if (!rest_free(m)) continue;
      bool minimal = true;
      for (Vertex v = 0; v < n && minimal; ++v)
        if ((m & oracle::bit(v)) && !(forced & oracle::bit(v)) && rest_free(m & ~oracle::bit(v))) minimal = false;
      if (minimal) CHECK(std::find(sets.begin(), sets.end(), oracle::to_set(m)) != sets.end());
    }
  }
}
