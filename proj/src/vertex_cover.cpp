#include "secluded/vertex_cover.hpp"

#include <algorithm>

#include "secluded/errors.hpp"

namespace secluded {

namespace {

class CoverBrancher {
 public:
  CoverBrancher(const Graph& g) : g_(g), in_cover_(g.vertex_count(), 0) {}

  void branch(int budget) {
    const Edge e = first_uncovered();
    if (e.first < 0) {
      found_.push_back(make_set(chosen_));
      return;
    }
    if (budget == 0) return;
    for (Vertex v : {e.first, e.second}) {
      in_cover_[v] = 1;
      chosen_.push_back(v);
      branch(budget - 1);
      chosen_.pop_back();
      in_cover_[v] = 0;
    }
  }

  std::vector<VertexSet> take() { return std::move(found_); }

 private:
  Edge first_uncovered() const {
    for (Vertex u = 0; u < g_.vertex_count(); ++u) {
      if (in_cover_[u]) continue;
      for (Vertex v : g_.neighbors(u))
        if (v > u && !in_cover_[v]) return {u, v};
    }
    return {-1, -1};
  }

  const Graph& g_;
  std::vector<char> in_cover_;
  std::vector<Vertex> chosen_;
  std::vector<VertexSet> found_;
};

}  // namespace

bool is_vertex_cover(const Graph& g, std::span<const Vertex> cover) {
  require_vertices(g, cover);
  std::vector<char> in(g.vertex_count(), 0);
  for (Vertex v : cover) in[v] = 1;
  for (auto [u, v] : g.edges())
    if (!in[u] && !in[v]) return false;
  return true;
}

bool is_minimal_vertex_cover(const Graph& g, std::span<const Vertex> cover) {
  if (!is_vertex_cover(g, cover)) return false;
  std::vector<char> in(g.vertex_count(), 0);
  for (Vertex v : cover) in[v] = 1;
  // v is needed iff it has a neighbor outside the cover
  for (Vertex v : cover) {
    const auto nb = g.neighbors(v);
    if (std::all_of(nb.begin(), nb.end(), [&](Vertex u) { return in[u] != 0; })) return false;
  }
  return true;
}

std::vector<VertexSet> enum_minimal_vertex_covers(const Graph& g, int t) {
  if (t < 0) throw InputError("t must be nonnegative");
  CoverBrancher brancher(g);
  brancher.branch(t);
  auto found = brancher.take();
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  std::erase_if(found, [&](const VertexSet& c) { return !is_minimal_vertex_cover(g, c); });
  return found;
}

}  // namespace secluded
