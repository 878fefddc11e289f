#include <doctest.h>

#include "oracles.hpp"
#include "secluded/vertex_cover.hpp"

using namespace secluded;

TEST_CASE("minimal vertex cover examples") {
  CHECK(enum_minimal_vertex_covers(Graph(3), 0) == std::vector<VertexSet>{{}});
  CHECK(enum_minimal_vertex_covers(oracle::path(3), 2) == std::vector<VertexSet>{{0, 2}, {1}});
  CHECK(enum_minimal_vertex_covers(oracle::complete(3), 1).empty());
  CHECK(is_minimal_vertex_cover(oracle::path(3), VertexSet{1}));
  CHECK_FALSE(is_minimal_vertex_cover(oracle::path(3), VertexSet{0, 1}));
  CHECK_FALSE(is_vertex_cover(oracle::path(3), VertexSet{0}));
}

TEST_CASE("property: equals brute-force minimal covers, n <= 12, t <= 5") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = oracle::uniform(rng, 1, 12);
    const Graph g = oracle::random_graph(n, 0.1 * oracle::uniform(rng, 1, 5), rng);
    const int t = oracle::uniform(rng, 0, 5);
    const auto got = enum_minimal_vertex_covers(g, t);
    CHECK(got == oracle::minimal_vertex_covers(g, t));
    for (const auto& c : got) CHECK(is_minimal_vertex_cover(g, c));
  }
}
