#include "secluded/instance.hpp"

#include <string>

#include "secluded/errors.hpp"

namespace secluded {

Instance Instance::unit(Graph g, int t, Weight w) {
  Instance inst;
  const auto n = static_cast<std::size_t>(g.vertex_count());
  inst.graph = std::move(g);
  inst.weights.assign(n, 1);
  inst.colors.assign(n, 0);
  inst.t = t;
  inst.w = w;
  return inst;
}

void validate(const Instance& inst, bool user_facing) {
  const auto n = static_cast<std::size_t>(inst.vertex_count());
  if (inst.weights.size() != n)
    throw InputError("expected " + std::to_string(n) + " weights, got " + std::to_string(inst.weights.size()));
  if (inst.colors.size() != n)
    throw InputError("expected " + std::to_string(n) + " colors, got " + std::to_string(inst.colors.size()));
  if (inst.t < 0) throw InputError("t must be nonnegative");
  for (std::size_t v = 0; v < n; ++v) {
    if (inst.weights[v] < 0 || (user_facing && inst.weights[v] == 0))
      throw InputError("vertex " + std::to_string(v) + " has invalid weight " + std::to_string(inst.weights[v]));
    if (inst.colors[v] < 0) throw InputError("vertex " + std::to_string(v) + " has a negative color");
  }
  if (user_facing && inst.w < 1) throw InputError("w must be positive");
}

Weight total_weight(std::span<const Weight> weights, std::span<const Vertex> vertices) {
  Weight sum = 0;
  for (Vertex v : vertices) sum += weights[v];
  return sum;
}

SecludedSolution make_solution(const Instance& inst, VertexSet vertices) {
  SecludedSolution s;
  s.vertices = make_set(std::move(vertices));
  s.neighborhood = open_neighborhood(inst.graph, s.vertices);
  s.weight = total_weight(inst.weights, s.vertices);
  return s;
}

bool better_solution(const SecludedSolution& a, const SecludedSolution& b) {
  if (a.weight != b.weight) return a.weight > b.weight;
  return a.vertices < b.vertices;
}

void keep_better(std::optional<SecludedSolution>& best, SecludedSolution candidate) {
  if (!best || better_solution(candidate, *best)) best = std::move(candidate);
}

}  // namespace secluded
