#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "secluded/graph.hpp"
#include "secluded/instance.hpp"
#include "secluded/separating_family.hpp"

namespace secluded {

/// A property of colored graphs, evaluated on the induced subgraph G[U] with
/// the coloring restricted to U (colors listed in the order of U).
struct PropertySpec {
  enum class Kind { clique, star, induced_path, regular, forest, f_free, colored };
  using Predicate = std::function<bool(const Graph&, std::span<const int>)>;

  Kind kind = Kind::clique;
  int degree = 0;             // Kind::regular
  std::vector<Graph> family;  // Kind::f_free
  Predicate predicate;        // Kind::colored; must be pure

  static PropertySpec clique() { return of(Kind::clique); }
  static PropertySpec star() { return of(Kind::star); }
  static PropertySpec induced_path() { return of(Kind::induced_path); }
  static PropertySpec regular(int d) {
    auto p = of(Kind::regular);
    p.degree = d;
    return p;
  }
  static PropertySpec forest() { return of(Kind::forest); }
  static PropertySpec f_free(std::vector<Graph> forbidden) {
    auto p = of(Kind::f_free);
    p.family = std::move(forbidden);
    return p;
  }
  static PropertySpec colored(Predicate pred) {
    auto p = of(Kind::colored);
    p.predicate = std::move(pred);
    return p;
  }

  bool holds(const Graph& h, std::span<const int> colors) const;
  /// holds() on inst.graph[u] with the colors of u.
  bool holds_on(const Instance& inst, std::span<const Vertex> u) const;
  std::string name() const;

 private:
  static PropertySpec of(Kind k) {
    PropertySpec p;
    p.kind = k;
    return p;
  }
};

struct BruteForceLimits {
  int vertex_cap = 14;            // all subsets
  int connected_vertex_cap = 20;  // connected subsets only
};

/// Exhaustive reference solver: the best nonempty U (connected if required)
/// with |N(U)| <= t, prop on G[U] and weight >= w. Best means heaviest, then
/// lexicographically least. CapacityError beyond the limits.
std::optional<SecludedSolution> brute_force_solve(const Instance& inst, const PropertySpec& prop,
                                                  bool require_connected, const BruteForceLimits& limits = {});

enum class ExactSizeMethod { enumeration, splitter };

/// Best connected U with |U| == k, |N(U)| <= t, prop on G[U], weight >= w.
std::optional<SecludedSolution> solve_exact_size_colored(const Instance& inst, int k, const PropertySpec& prop,
                                                         ExactSizeMethod method,
                                                         const SplitterOptions& splitter = {});

/// Records every candidate a solver validated as a solution, in search order.
struct SolverTrace {
  std::vector<VertexSet> accepted;
};

/// Best t-secluded clique of weight >= w. Splits the true-twin quotient with a
/// family for (2^t, t) and expands the components of each member.
std::optional<SecludedSolution> solve_secluded_clique(const Instance& inst, const SplitterOptions& splitter = {});

/// F_x: the subgraph of G induced by N(x) ∪ N²(x) without edges inside N²(x).
struct StarAuxiliary {
  Graph graph;
  std::vector<Vertex> to_original;
  std::vector<char> first_neighborhood;  // per local vertex: in N(x) rather than N²(x)
};
StarAuxiliary build_star_auxiliary(const Graph& g, Vertex x);

/// Best t-secluded induced star of weight >= w. For every center x and every
/// inclusion-minimal vertex cover U of F_x with |U| <= t, tests N[x] \ U.
/// With a center given, only stars centered there are considered.
std::optional<SecludedSolution> solve_secluded_star(const Instance& inst, std::optional<Vertex> center = std::nullopt);

/// Best connected t-secluded d-regular induced subgraph of weight >= w (d >= 1).
std::optional<SecludedSolution> solve_secluded_regular(const Instance& inst, int d,
                                                       const SplitterOptions& splitter = {},
                                                       SolverTrace* trace = nullptr);

/// Best t-secluded induced path of weight >= w.
std::optional<SecludedSolution> solve_secluded_long_path(const Instance& inst, const SplitterOptions& splitter = {},
                                                         SolverTrace* trace = nullptr);

}  // namespace secluded
