#include "secluded/solvers.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

#include "secluded/connected_sets.hpp"
#include "secluded/errors.hpp"
#include "secluded/patterns.hpp"
#include "secluded/vertex_cover.hpp"

namespace secluded {

bool PropertySpec::holds(const Graph& h, std::span<const int> colors) const {
  switch (kind) {
    case Kind::clique:
      return check_shape(h, Shape::clique());
    case Kind::star:
      return check_shape(h, Shape::star());
    case Kind::induced_path:
      return check_shape(h, Shape::induced_path());
    case Kind::regular:
      return check_shape(h, Shape::regular(degree));
    case Kind::forest:
      return check_shape(h, Shape::forest());
    case Kind::f_free:
      return is_f_free(h, family);
    case Kind::colored:
      if (!predicate) throw InputError("colored property without a predicate");
      return predicate(h, colors);
  }
  return false;
}

bool PropertySpec::holds_on(const Instance& inst, std::span<const Vertex> u) const {
  const auto sub = induced_subgraph(inst.graph, u);
  std::vector<int> colors;
  colors.reserve(u.size());
  for (Vertex v : sub.to_original) colors.push_back(inst.colors[v]);
  return holds(sub.graph, colors);
}

std::string PropertySpec::name() const {
  switch (kind) {
    case Kind::clique:
      return "clique";
    case Kind::star:
      return "star";
    case Kind::induced_path:
      return "induced-path";
    case Kind::regular:
      return std::to_string(degree) + "-regular";
    case Kind::forest:
      return "forest";
    case Kind::f_free:
      return "f-free";
    case Kind::colored:
      return "colored";
  }
  return "unknown";
}

namespace {

// Components of g[s] for a membership mask `in`, ordered by minimum vertex.
std::vector<VertexSet> components_within(const Graph& g, const std::vector<char>& in) {
  std::vector<VertexSet> out;
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (!in[s] || seen[s]) continue;
    VertexSet comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Vertex v : g.neighbors(u))
        if (in[v] && !seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

// Component of g[s] containing `root`.
VertexSet component_of(const Graph& g, const std::vector<char>& in, Vertex root) {
  std::vector<char> seen(g.vertex_count(), 0);
  VertexSet comp;
  std::vector<Vertex> stack{root};
  seen[root] = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    comp.push_back(u);
    for (Vertex v : g.neighbors(u))
      if (in[v] && !seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
  }
  std::sort(comp.begin(), comp.end());
  return comp;
}

std::vector<char> row_mask(const SeparatingFamily& family, std::size_t member) {
  std::vector<char> in(family.universe_size(), 0);
  for (Vertex v = 0; v < family.universe_size(); ++v) in[v] = family.contains(member, v) ? 1 : 0;
  return in;
}

std::vector<Vertex> map_back(const std::vector<Vertex>& to_original, const VertexSet& local) {
  std::vector<Vertex> out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(to_original[v]);
  return make_set(std::move(out));
}

// Final validation against the original instance; search results are never trusted.
void offer(const Instance& inst, VertexSet u, Shape shape, std::optional<SecludedSolution>& best,
           SolverTrace* trace) {
  if (u.empty() || !is_connected_set(inst.graph, u)) return;
  auto sol = make_solution(inst, std::move(u));
  if (static_cast<int>(sol.neighborhood.size()) > inst.t || sol.weight < inst.w) return;
  if (!check_shape(induced_subgraph(inst.graph, sol.vertices).graph, shape)) return;
  if (trace) trace->accepted.push_back(sol.vertices);
  keep_better(best, std::move(sol));
}

// Largest internal degree of g[c], with `in` marking c.
int max_internal_degree(const Graph& g, const VertexSet& c, const std::vector<char>& in) {
  int best = 0;
  for (Vertex u : c) {
    int d = 0;
    for (Vertex v : g.neighbors(u)) d += in[v];
    best = std::max(best, d);
  }
  return best;
}

std::vector<char> mask_of(int n, const VertexSet& c) {
  std::vector<char> in(n, 0);
  for (Vertex v : c) in[v] = 1;
  return in;
}

int clamp_parameter(long long value, int n) { return static_cast<int>(std::min<long long>(value, n)); }

}  // namespace

std::optional<SecludedSolution> brute_force_solve(const Instance& inst, const PropertySpec& prop,
                                                  bool require_connected, const BruteForceLimits& limits) {
  validate(inst, false);
  const int n = inst.vertex_count();
  const int cap = require_connected ? limits.connected_vertex_cap : limits.vertex_cap;
  if (n > cap || n > 30)
    throw CapacityError("brute force is limited to " + std::to_string(cap) + " vertices, got " + std::to_string(n));
  std::vector<std::uint32_t> adj(n, 0);
  for (auto [u, v] : inst.graph.edges()) {
    adj[u] |= std::uint32_t{1} << v;
    adj[v] |= std::uint32_t{1} << u;
  }
  std::optional<SecludedSolution> best;
  const std::uint32_t full = n == 0 ? 0 : (n == 32 ? ~0u : (std::uint32_t{1} << n) - 1);
  for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
    std::uint32_t reach = 0;
    Weight weight = 0;
    for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      reach |= adj[v];
      weight += inst.weights[v];
    }
    if (std::popcount(reach & ~mask) > inst.t || weight < inst.w) continue;
    if (best && weight < best->weight) continue;
    if (require_connected) {
      std::uint32_t seen = mask & (~mask + 1), frontier = seen;
      while (frontier) {
        std::uint32_t next = 0;
        for (std::uint32_t rest = frontier; rest; rest &= rest - 1) next |= adj[std::countr_zero(rest)];
        next &= mask & ~seen;
        seen |= next;
        frontier = next;
      }
      if (seen != mask) continue;
    }
    VertexSet u;
    for (std::uint32_t rest = mask; rest; rest &= rest - 1) u.push_back(std::countr_zero(rest));
    if (best && weight == best->weight && !(u < best->vertices)) continue;
    if (!prop.holds_on(inst, u)) continue;
    best = make_solution(inst, std::move(u));
  }
  return best;
}

std::optional<SecludedSolution> solve_exact_size_colored(const Instance& inst, int k, const PropertySpec& prop,
                                                         ExactSizeMethod method, const SplitterOptions& splitter) {
  validate(inst, false);
  if (k < 1) throw InputError("k must be at least 1");
  const Graph& g = inst.graph;
  const int n = g.vertex_count();
  std::optional<SecludedSolution> best;
  if (k > n) return best;
  auto consider = [&](VertexSet u) {
    auto sol = make_solution(inst, std::move(u));
    if (static_cast<int>(sol.neighborhood.size()) > inst.t || sol.weight < inst.w) return;
    if (best && better_solution(*best, sol)) return;
    if (!prop.holds_on(inst, sol.vertices)) return;
    keep_better(best, std::move(sol));
  };
  if (method == ExactSizeMethod::enumeration) {
    for (Vertex v = 0; v < n; ++v)
      for (auto& u : enum_connected_secluded_sets(g, v, k, inst.t, BoundaryMode::at_most))
        if (u.front() == v) consider(std::move(u));  // each set once, from its least vertex
    return best;
  }
  const auto family = build_separating_family(n, k, clamp_parameter(inst.t, n), splitter);
  std::set<VertexSet> tried;
  for (std::size_t i = 0; i < family.size(); ++i)
    for (auto& comp : components_within(g, row_mask(family, i)))
      if (static_cast<int>(comp.size()) == k && tried.insert(comp).second) consider(std::move(comp));
  return best;
}

std::optional<SecludedSolution> solve_secluded_clique(const Instance& inst, const SplitterOptions& splitter) {
  validate(inst, false);
  std::optional<SecludedSolution> best;
  const int n = inst.vertex_count();
  if (n == 0) return best;
  const TwinQuotient quotient = quotient_true_twins(inst.graph);
  const Graph& q = quotient.graph;
  const int nq = q.vertex_count();
  // a maximum solution is a union of twin classes whose quotient has at most 2^t nodes
  const long long node_bound = inst.t >= 40 ? (1LL << 40) : (1LL << inst.t);
  const auto family = build_separating_family(nq, clamp_parameter(node_bound, nq), clamp_parameter(inst.t, nq),
                                              splitter);
  std::set<VertexSet> tried;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto in = row_mask(family, i);
    for (auto& comp : components_within(q, in)) {
      if (static_cast<long long>(comp.size()) > node_bound) continue;
      if (max_internal_degree(q, comp, in) != static_cast<int>(comp.size()) - 1) continue;
      if (!tried.insert(comp).second) continue;
      offer(inst, quotient.expand(comp), Shape::clique(), best, nullptr);
    }
  }
  return best;
}

StarAuxiliary build_star_auxiliary(const Graph& g, Vertex x) {
  if (!g.valid(x)) throw InputError("vertex " + std::to_string(x) + " is not in the graph");
  const int n = g.vertex_count();
  std::vector<int> layer(n, -1);  // 1 = N(x), 2 = N²(x)
  layer[x] = 0;
  for (Vertex u : g.neighbors(x)) layer[u] = 1;
  for (Vertex u : g.neighbors(x))
    for (Vertex v : g.neighbors(u))
      if (layer[v] < 0) layer[v] = 2;
  StarAuxiliary aux;
  std::vector<Vertex> local(n, -1);
  for (Vertex v = 0; v < n; ++v)
    if (layer[v] > 0) {
      local[v] = static_cast<Vertex>(aux.to_original.size());
      aux.to_original.push_back(v);
      aux.first_neighborhood.push_back(layer[v] == 1 ? 1 : 0);
    }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (layer[u] > 0 && layer[v] > 0 && (layer[u] == 1 || layer[v] == 1)) edges.emplace_back(local[u], local[v]);
  aux.graph = Graph(static_cast<int>(aux.to_original.size()), edges);
  return aux;
}

std::optional<SecludedSolution> solve_secluded_star(const Instance& inst, std::optional<Vertex> center) {
  validate(inst, false);
  std::optional<SecludedSolution> best;
  const Graph& g = inst.graph;
  if (center && !g.valid(*center)) throw InputError("vertex " + std::to_string(*center) + " is not in the graph");
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    if (center && x != *center) continue;
    const auto aux = build_star_auxiliary(g, x);
    const auto closed = closed_neighborhood(g, x);
    for (const auto& cover : enum_minimal_vertex_covers(aux.graph, inst.t)) {
      std::vector<char> removed(g.vertex_count(), 0);
      for (Vertex v : cover) removed[aux.to_original[v]] = 1;
      VertexSet candidate;
      for (Vertex v : closed)
        if (!removed[v]) candidate.push_back(v);
      offer(inst, std::move(candidate), Shape::star(), best, nullptr);
    }
  }
  return best;
}

std::optional<SecludedSolution> solve_secluded_regular(const Instance& inst, int d, const SplitterOptions& splitter,
                                                       SolverTrace* trace) {
  validate(inst, false);
  if (d < 1) throw InputError("d must be at least 1");
  const Graph& g = inst.graph;
  const int n = g.vertex_count();
  const int t = inst.t;
  std::optional<SecludedSolution> best;
  // a vertex with more than t + d neighbors cannot be in a solution
  VertexSet kept;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) <= t + d) kept.push_back(v);
  const auto reduced = induced_subgraph(g, kept);
  const Graph& h = reduced.graph;
  const int nh = h.vertex_count();
  for (const auto& comp : connected_components(h))
    offer(inst, map_back(reduced.to_original, comp), Shape::regular(d), best, trace);
  if (nh == 0 || t == 0) return best;

  const long long a = static_cast<long long>(t) * (d + 1) * (t + d);
  const auto family = build_separating_family(nh, clamp_parameter(a, nh), clamp_parameter(t, nh), splitter);
  std::set<VertexSet> tried;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto start = row_mask(family, i);
    for (auto comp : components_within(h, start)) {
      if (max_internal_degree(h, comp, start) > d) continue;
      auto s = start;
      bool alive = true;
      while (true) {
        const auto in = mask_of(nh, comp);
        Vertex deficient = -1;
        for (Vertex u : comp) {
          int deg = 0;
          for (Vertex v : h.neighbors(u)) deg += in[v];
          if (deg < d) {
            deficient = u;
            break;
          }
        }
        if (deficient < 0) break;
        bool grew = false;
        for (Vertex v : h.neighbors(deficient))
          if (!s[v]) s[v] = 1, grew = true;
        if (!grew) {
          alive = false;
          break;
        }
        comp = component_of(h, s, deficient);
        if (max_internal_degree(h, comp, mask_of(nh, comp)) > d) {
          alive = false;
          break;
        }
      }
      if (alive && tried.insert(comp).second)
        offer(inst, map_back(reduced.to_original, comp), Shape::regular(d), best, trace);
    }
  }
  return best;
}

namespace {

bool is_induced_path_in(const Graph& h, const VertexSet& c) {
  const auto in = mask_of(h.vertex_count(), c);
  std::size_t edges = 0;
  for (Vertex u : c) {
    int deg = 0;
    for (Vertex v : h.neighbors(u)) deg += in[v];
    if (deg > 2) return false;
    edges += deg;
  }
  // c is always connected here, so |E| = |c| - 1 rules out a cycle
  return edges / 2 + 1 == c.size();
}

}  // namespace

std::optional<SecludedSolution> solve_secluded_long_path(const Instance& inst, const SplitterOptions& splitter,
                                                         SolverTrace* trace) {
  validate(inst, false);
  const Graph& g = inst.graph;
  const int n = g.vertex_count();
  const int t = inst.t;
  std::optional<SecludedSolution> best;
  // a path vertex with t + 3 or more neighbors has more than t outside the path
  VertexSet kept;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) < t + 3) kept.push_back(v);
  const auto reduced = induced_subgraph(g, kept);
  const Graph& h = reduced.graph;
  const int nh = h.vertex_count();
  for (const auto& comp : connected_components(h))
    offer(inst, map_back(reduced.to_original, comp), Shape::induced_path(), best, trace);
  if (nh == 0 || t == 0) return best;

  const long long a = 3LL * t * (t + 3);
  const auto family = build_separating_family(nh, clamp_parameter(a, nh), clamp_parameter(t, nh), splitter);
  std::set<VertexSet> checked;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto start = row_mask(family, i);
    std::set<VertexSet> visited;
    std::vector<VertexSet> stack;
    for (auto& comp : components_within(h, start))
      if (is_induced_path_in(h, comp) && visited.insert(comp).second) stack.push_back(std::move(comp));
    while (!stack.empty()) {
      VertexSet c = std::move(stack.back());
      stack.pop_back();
      if (checked.insert(c).second) offer(inst, map_back(reduced.to_original, c), Shape::induced_path(), best, trace);
      const auto in = mask_of(nh, c);
      for (Vertex u : c) {
        Vertex outside = -1;
        int inside = 0, outside_count = 0;
        for (Vertex v : h.neighbors(u)) {
          if (in[v])
            ++inside;
          else
            outside = v, ++outside_count;
        }
        // grow through an endpoint with exactly one neighbor outside the path
        if (inside > 1 || outside_count != 1) continue;
        auto s = start;
        for (Vertex v : c) s[v] = 1;
        s[outside] = 1;
        auto next = component_of(h, s, outside);
        if (is_induced_path_in(h, next) && visited.insert(next).second) stack.push_back(std::move(next));
      }
    }
  }
  return best;
}

}  // namespace secluded
