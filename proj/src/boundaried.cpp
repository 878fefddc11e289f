#include "secluded/boundaried.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "secluded/errors.hpp"
#include "secluded/patterns.hpp"

namespace secluded {

BoundariedGraph::BoundariedGraph(Graph g, std::vector<Vertex> boundary_vertices)
    : graph(std::move(g)), boundary(std::move(boundary_vertices)) {
  require_vertices(graph, boundary);
  if (make_set(boundary).size() != boundary.size()) throw InputError("boundary vertices must be distinct");
}

bool BoundariedGraph::properly_boundaried() const {
  std::vector<char> on_boundary(graph.vertex_count(), 0);
  for (Vertex v : boundary) on_boundary[v] = 1;
  for (const auto& comp : connected_components(graph))
    if (std::none_of(comp.begin(), comp.end(), [&](Vertex v) { return on_boundary[v] != 0; })) return false;
  return true;
}

bool boundaried_isomorphic(const BoundariedGraph& g1, const BoundariedGraph& g2) {
  if (g1.graph.vertex_count() != g2.graph.vertex_count() || g1.boundary.size() != g2.boundary.size() ||
      g1.graph.edge_count() != g2.graph.edge_count())
    return false;
  std::vector<Vertex> pins(g1.graph.vertex_count(), -1);
  for (std::size_t i = 0; i < g1.boundary.size(); ++i) pins[g1.boundary[i]] = g2.boundary[i];
  // same size and edge count, so an induced embedding is a bijection
  return find_induced_extension(g2.graph, g1.graph, std::move(pins)).has_value();
}

bool boundary_compatible(const BoundariedGraph& g1, const BoundariedGraph& g2) {
  if (g1.boundary.size() != g2.boundary.size())
    throw InputError("boundary sizes differ: " + std::to_string(g1.boundary.size()) + " vs " +
                     std::to_string(g2.boundary.size()));
  const std::size_t p = g1.boundary.size();
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i + 1; j < p; ++j)
      if (g1.graph.adjacent(g1.boundary[i], g1.boundary[j]) != g2.graph.adjacent(g2.boundary[i], g2.boundary[j]))
        return false;
  return true;
}

Graph boundary_sum(const BoundariedGraph& g1, const BoundariedGraph& g2) {
  if (!boundary_compatible(g1, g2)) throw InputError("boundary sum of incompatible boundaried graphs");
  const int n1 = g1.graph.vertex_count(), n2 = g2.graph.vertex_count();
  std::vector<Vertex> place(n2, -1);
  for (std::size_t i = 0; i < g2.boundary.size(); ++i) place[g2.boundary[i]] = g1.boundary[i];
  int next = n1;
  for (Vertex v = 0; v < n2; ++v)
    if (place[v] < 0) place[v] = next++;
  std::vector<Edge> edges = g1.graph.edges();
  for (auto [u, v] : g2.graph.edges()) edges.emplace_back(place[u], place[v]);
  return Graph(next, edges);
}

int ForbiddenBoundariedSet::max_boundary_size() const {
  int best = 0;
  for (const auto& m : members) best = std::max(best, m.boundary_size());
  return best;
}

int ForbiddenBoundariedSet::max_member_size() const {
  int best = 0;
  for (const auto& m : members) best = std::max(best, m.graph.vertex_count());
  return best;
}

ForbiddenBoundariedSet build_forbidden_boundaried_set(std::span<const Graph> family) {
  ForbiddenBoundariedSet out;
  out.source_family.assign(family.begin(), family.end());
  for (const Graph& f : family) {
    const int n = f.vertex_count();
    if (n > 8) throw CapacityError("forbidden graphs are limited to 8 vertices");
    int total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    // side[v]: 0 = A \ B, 1 = A ∩ B, 2 = B \ A
    std::vector<int> side(n);
    for (int code = 0; code < total; ++code) {
      for (int v = 0, c = code; v < n; ++v, c /= 3) side[v] = c % 3;
      bool crossing = false;
      for (auto [u, v] : f.edges()) crossing |= (side[u] == 0 && side[v] == 2) || (side[u] == 2 && side[v] == 0);
      if (crossing) continue;
      VertexSet a_side, shared;
      for (Vertex v = 0; v < n; ++v) {
        if (side[v] != 2) a_side.push_back(v);
        if (side[v] == 1) shared.push_back(v);
      }
      const auto sub = induced_subgraph(f, a_side);
      std::vector<Vertex> local(n, -1);
      for (std::size_t i = 0; i < sub.to_original.size(); ++i) local[sub.to_original[i]] = static_cast<Vertex>(i);
      std::vector<Vertex> order = shared;
      do {
        std::vector<Vertex> boundary;
        for (Vertex v : order) boundary.push_back(local[v]);
        BoundariedGraph candidate(sub.graph, std::move(boundary));
        const bool known = std::any_of(out.members.begin(), out.members.end(),
                                       [&](const BoundariedGraph& m) { return boundaried_isomorphic(m, candidate); });
        if (!known) out.members.push_back(std::move(candidate));
      } while (std::next_permutation(order.begin(), order.end()));
    }
  }
  return out;
}

bool has_boundaried_induced_subgraph(const Graph& g, std::span<const Vertex> anchors, const BoundariedGraph& h,
                                     std::span<const int> indices) {
  require_vertices(g, anchors);
  if (indices.size() != h.boundary.size())
    throw InputError("need one anchor index per boundary vertex of the pattern");
  std::vector<char> excluded(g.vertex_count(), 0);
  for (Vertex a : anchors) excluded[a] = 1;
  std::vector<Vertex> pins(h.graph.vertex_count(), -1);
  std::vector<char> picked(anchors.size(), 0);
  for (std::size_t j = 0; j < indices.size(); ++j) {
    const int i = indices[j];
    if (i < 0 || static_cast<std::size_t>(i) >= anchors.size() || picked[i])
      throw InputError("anchor indices must be distinct positions into the anchor tuple");
    picked[i] = 1;
    pins[h.boundary[j]] = anchors[i];
  }
  return find_induced_extension(g, h.graph, std::move(pins), excluded).has_value();
}

namespace {

// All s-tuples of distinct positions from {0..p-1}.
std::vector<std::vector<int>> index_tuples(int p, int s) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::vector<char> used(p, 0);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(current.size()) == s) {
      out.push_back(current);
      return;
    }
    for (int i = 0; i < p; ++i) {
      if (used[i]) continue;
      used[i] = 1;
      current.push_back(i);
      self(self);
      current.pop_back();
      used[i] = 0;
    }
  };
  rec(rec);
  return out;
}

std::vector<int> boundary_component_ids(const BoundariedGraph& g) {
  std::vector<int> comp_of(g.graph.vertex_count(), -1);
  const auto comps = connected_components(g.graph);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (Vertex v : comps[c]) comp_of[v] = static_cast<int>(c);
  std::vector<int> out;
  for (Vertex v : g.boundary) out.push_back(comp_of[v]);
  return out;
}

}  // namespace

bool equivalent_wrt_fb(const BoundariedGraph& g1, const BoundariedGraph& g2, const ForbiddenBoundariedSet& fb) {
  if (!g1.properly_boundaried() || !g2.properly_boundaried())
    throw InputError("equivalence is defined for properly boundaried graphs only");
  if (!boundary_compatible(g1, g2)) return false;
  const int p = g1.boundary_size();
  const auto c1 = boundary_component_ids(g1), c2 = boundary_component_ids(g2);
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j)
      if ((c1[i] == c1[j]) != (c2[i] == c2[j])) return false;
  std::map<int, std::vector<std::vector<int>>> tuples;
  for (const auto& h : fb.members) {
    const int s = h.boundary_size();
    if (s > p) continue;
    auto [it, fresh] = tuples.try_emplace(s);
    if (fresh) it->second = index_tuples(p, s);
    for (const auto& idx : it->second)
      if (has_boundaried_induced_subgraph(g1.graph, g1.boundary, h, idx) !=
          has_boundaried_induced_subgraph(g2.graph, g2.boundary, h, idx))
        return false;
  }
  return true;
}

std::string canonical_encoding(const BoundariedGraph& g) {
  const int n = g.graph.vertex_count();
  const int p = g.boundary_size();
  std::vector<char> on_boundary(n, 0);
  for (Vertex v : g.boundary) on_boundary[v] = 1;
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < n; ++v)
    if (!on_boundary[v]) rest.push_back(v);
  std::string best;
  do {
    std::vector<Vertex> label(g.boundary);
    label.insert(label.end(), rest.begin(), rest.end());
    std::string code = std::to_string(n) + "/" + std::to_string(p) + ":";
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) code.push_back(g.graph.adjacent(label[i], label[j]) ? '1' : '0');
    if (best.empty() || code < best) best = std::move(code);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return best;
}

std::vector<BoundariedGraph> build_representatives(int p, const ForbiddenBoundariedSet& fb, int n_cap) {
  if (p < 0 || n_cap < 0) throw InputError("boundary size and vertex cap must be nonnegative");
  if (p > 2 || n_cap > 5)
    throw CapacityError("representatives are only built for p <= 2 and at most 5 vertices");
  std::vector<BoundariedGraph> reps;
  std::vector<Vertex> boundary(p);
  std::iota(boundary.begin(), boundary.end(), 0);
  for (int n = p; n <= n_cap; ++n) {
    std::vector<Edge> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::map<std::string, BoundariedGraph> candidates;  // ordered by encoding
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t e = 0; e < pairs.size(); ++e)
        if (mask >> e & 1u) edges.push_back(pairs[e]);
      BoundariedGraph candidate(Graph(n, edges), boundary);
      if (!candidate.properly_boundaried()) continue;
      auto code = canonical_encoding(candidate);
      candidates.try_emplace(std::move(code), std::move(candidate));
    }
    for (auto& [code, candidate] : candidates) {
      const bool covered = std::any_of(reps.begin(), reps.end(),
                                       [&](const BoundariedGraph& r) { return equivalent_wrt_fb(r, candidate, fb); });
      if (!covered) reps.push_back(std::move(candidate));
    }
  }
  return reps;
}

}  // namespace secluded
