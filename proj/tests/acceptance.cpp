// Acceptance suite: one PASS/FAIL line per criterion, exit code 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "family_check.hpp"
#include "instances.hpp"
#include "secluded/boundaried.hpp"
#include "secluded/connected_sets.hpp"
#include "secluded/important_separators.hpp"
#include "secluded/patterns.hpp"
#include "secluded/separating_family.hpp"
#include "secluded/solvers.hpp"
#include "secluded/star_kernel.hpp"
#include "secluded/vertex_cover.hpp"

using namespace secluded;

namespace {

// Pinned thresholds.
constexpr int kSolverInstances = 500;
constexpr int kExactSizeInstances = 300;
constexpr int kConnectedSetInstances = 200;
constexpr int kSeparatorInstances = 200;
constexpr int kCoverInstances = 200;
constexpr int kEquivalenceTrials = 200;
constexpr int kKernelInstances = 200;
constexpr double kRandomDelta = 1e-3;
constexpr int kSampledPairs = 10000;
constexpr double kMaxMissRate = 0.005;
constexpr double kScaleSecondsLimit = 300.0;
constexpr Weight kWeightTolerance = 0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string describe(const std::optional<SecludedSolution>& s) {
  return s ? "weight " + std::to_string(s->weight) : "none";
}

bool same_verdict(const std::optional<SecludedSolution>& a, const std::optional<SecludedSolution>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || std::llabs(a->weight - b->weight) <= kWeightTolerance;
}

// Clique successes collected by criterion 1 for criterion 9.
std::vector<std::pair<Instance, SecludedSolution>> g_clique_successes;

Outcome criterion_1() {
  struct Problem {
    std::string name;
    std::function<std::optional<SecludedSolution>(const Instance&)> fpt;
    PropertySpec prop;
  };
  std::vector<Problem> problems{
      {"clique", [](const Instance& i) { return solve_secluded_clique(i); }, PropertySpec::clique()},
      {"star", [](const Instance& i) { return solve_secluded_star(i); }, PropertySpec::star()},
      {"path", [](const Instance& i) { return solve_secluded_long_path(i); }, PropertySpec::induced_path()},
  };
  for (int d = 1; d <= 3; ++d)
    problems.push_back({"regular-d" + std::to_string(d),
                        [d](const Instance& i) { return solve_secluded_regular(i, d); }, PropertySpec::regular(d)});
  Outcome out;
  std::ostringstream detail;
  std::uint64_t seed = 1000;
  for (const auto& problem : problems) {
    std::mt19937_64 rng(seed++);
    int mismatches = 0, yes = 0;
    for (int i = 0; i < kSolverInstances; ++i) {
      auto inst = oracle::random_instance(rng, 4, 12, {0.2, 0.4, 0.6}, 3);
      // sweep w around the optimum so both verdicts occur
      const auto top = brute_force_solve(inst, problem.prop, true);
      const Weight best = top ? top->weight : 1;
      inst.w = std::max<Weight>(1, best + oracle::uniform(rng, -2, 1));
      const auto want = brute_force_solve(inst, problem.prop, true);
      const auto got = problem.fpt(inst);
      if (!same_verdict(got, want)) {
        if (++mismatches <= 3)
          std::cerr << "  criterion 1 " << problem.name << " instance " << i << ": fpt " << describe(got) << ", brute "
                    << describe(want) << '\n';
      }
      yes += want.has_value();
      if (problem.name == "clique" && got) g_clique_successes.emplace_back(inst, *got);
    }
    detail << problem.name << " " << mismatches << "/" << kSolverInstances << " mismatches (" << yes << " yes); ";
    out.pass &= mismatches == 0;
  }
  out.detail = detail.str();
  return out;
}

Outcome criterion_2() {
  const auto same_color = PropertySpec::colored([](const Graph&, std::span<const int> c) {
    return std::adjacent_find(c.begin(), c.end(), std::not_equal_to<>()) == c.end();
  });
  const std::vector<PropertySpec> props{PropertySpec::clique(), PropertySpec::f_free({oracle::path(3)}), same_color};
  std::mt19937_64 rng(2000);
  int mismatches = 0, yes = 0;
  for (int i = 0; i < kExactSizeInstances; ++i) {
    auto inst = oracle::random_instance(rng, 4, 12, {0.2, 0.4, 0.6}, 3, 5, 2);
    const int k = oracle::uniform(rng, 1, 6);
    const auto& prop = props[i % props.size()];
    const auto sized = PropertySpec::colored(
        [&](const Graph& h, std::span<const int> c) { return h.vertex_count() == k && prop.holds(h, c); });
    const auto top = brute_force_solve(inst, sized, true);
    inst.w = std::max<Weight>(1, (top ? top->weight : 1) + oracle::uniform(rng, -2, 1));
    const auto brute = brute_force_solve(inst, sized, true);
    const auto by_enum = solve_exact_size_colored(inst, k, prop, ExactSizeMethod::enumeration);
    const auto by_splitter = solve_exact_size_colored(inst, k, prop, ExactSizeMethod::splitter);
    const bool ok = same_verdict(by_enum, brute) && same_verdict(by_splitter, brute) &&
                    same_verdict(by_enum, by_splitter);
    mismatches += !ok;
    yes += brute.has_value();
  }
  return {mismatches == 0, std::to_string(mismatches) + "/" + std::to_string(kExactSizeInstances) +
                               " mismatches (" + std::to_string(yes) + " yes)"};
}

Outcome criterion_3() {
  std::mt19937_64 rng(3000);
  int mismatches = 0, over_bound = 0;
  std::size_t largest = 0;
  for (int i = 0; i < kConnectedSetInstances; ++i) {
    const int n = oracle::uniform(rng, 4, 12);
    const Graph g = oracle::random_graph(n, 0.1 * oracle::uniform(rng, 2, 6), rng);
    const int k = oracle::uniform(rng, 1, std::min(n, 6));
    const int t = oracle::uniform(rng, 0, 3);
    const double bound = std::round(std::exp(std::lgamma(k + t + 1) - std::lgamma(k + 1) - std::lgamma(t + 1)));
    for (Vertex v = 0; v < n; ++v) {
      const auto sets = enum_connected_secluded_sets(g, v, k, t, BoundaryMode::exact);
      mismatches += sets != oracle::connected_sets(g, v, k, t, true);
      over_bound += static_cast<double>(sets.size()) > bound;
      largest = std::max(largest, sets.size());
    }
  }
  return {mismatches == 0 && over_bound == 0, std::to_string(mismatches) + " mismatches, " +
                                                  std::to_string(over_bound) + " over C(k+t,t), largest list " +
                                                  std::to_string(largest)};
}

Outcome criterion_4() {
  std::mt19937_64 rng(4000);
  int mismatches = 0, over_bound = 0, nonempty = 0;
  for (int i = 0; i < kSeparatorInstances; ++i) {
    const int n = oracle::uniform(rng, 3, 10);
    const Graph g = oracle::random_graph(n, 0.1 * oracle::uniform(rng, 2, 6), rng);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const int nx = oracle::uniform(rng, 1, 2), ny = oracle::uniform(rng, 1, std::min(2, n - nx));
    const VertexSet x = make_set({perm.begin(), perm.begin() + nx});
    const VertexSet y = make_set({perm.begin() + nx, perm.begin() + nx + ny});
    const int t = oracle::uniform(rng, 0, 4);
    const auto got = enum_important_separators(g, x, y, t);
    mismatches += got != oracle::important_separators(g, x, y, t);
    over_bound += static_cast<double>(got.size()) > std::pow(4.0, t);
    nonempty += !got.empty();
  }
  return {mismatches == 0 && over_bound == 0, std::to_string(mismatches) + " mismatches, " +
                                                  std::to_string(over_bound) + " over 4^t, " +
                                                  std::to_string(nonempty) + " nonempty outputs"};
}

Outcome criterion_5() {
  long long misses = 0;
  int families = 0;
  for (int n = 1; n <= 12; ++n)
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; b <= 3; ++b) {
        const auto family = build_separating_family(n, a, b);
        misses += oracle::unsplit_pairs(family, a, b);
        ++families;
      }

  struct Config {
    int n, a, b;
  };
  const std::vector<Config> configs{{30, 3, 2}, {60, 4, 3}, {100, 3, 3}, {120, 6, 3}, {200, 5, 2}};
  std::mt19937_64 rng(5000);
  double worst = 0;
  std::ostringstream detail;
  for (const auto& c : configs) {
    SplitterOptions opts;
    opts.mode = SplitterMode::randomized;
    opts.delta = kRandomDelta;
    opts.seed = rng();
    const auto family = build_separating_family(c.n, c.a, c.b, opts);
    int sample_misses = 0;
    std::vector<Vertex> perm(c.n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int s = 0; s < kSampledPairs; ++s) {
      for (int i = 0; i < c.a + c.b; ++i) std::swap(perm[i], perm[oracle::uniform(rng, i, c.n - 1)]);
      const VertexSet as = make_set({perm.begin(), perm.begin() + c.a});
      const VertexSet bs = make_set({perm.begin() + c.a, perm.begin() + c.a + c.b});
      sample_misses += !family.separates(as, bs);
    }
    const double rate = static_cast<double>(sample_misses) / kSampledPairs;
    worst = std::max(worst, rate);
    detail << "(" << c.n << "," << c.a << "," << c.b << "): " << family.size() << " sets, miss " << rate << "; ";
  }
  return {misses == 0 && worst <= kMaxMissRate, std::to_string(families) + " deterministic families, " +
                                                    std::to_string(misses) + " unsplit pairs; random " +
                                                    detail.str()};
}

Outcome criterion_6() {
  std::mt19937_64 rng(6000);
  int mismatches = 0;
  for (int i = 0; i < kCoverInstances; ++i) {
    const int n = oracle::uniform(rng, 1, 12);
    const Graph g = oracle::random_graph(n, 0.1 * oracle::uniform(rng, 1, 5), rng);
    const int t = oracle::uniform(rng, 0, 5);
    mismatches += enum_minimal_vertex_covers(g, t) != oracle::minimal_vertex_covers(g, t);
  }
  return {mismatches == 0, std::to_string(mismatches) + "/" + std::to_string(kCoverInstances) + " mismatches"};
}

// Random boundaried graph on n vertices with boundary (0..p-1); the edge between
// boundary vertices 0 and 1 is fixed by `boundary_edge` so all graphs of a trial
// are compatible.
BoundariedGraph random_boundaried(std::mt19937_64& rng, int n, int p, bool boundary_edge, bool proper) {
  while (true) {
    const Graph g = oracle::random_graph(n, 0.45, rng);
    std::vector<Edge> edges;
    for (auto e : g.edges())
      if (!(p == 2 && e == Edge{0, 1})) edges.push_back(e);
    if (p == 2 && boundary_edge) edges.emplace_back(0, 1);
    std::vector<Vertex> boundary(p);
    std::iota(boundary.begin(), boundary.end(), 0);
    BoundariedGraph b(Graph(n, edges), boundary);
    if (!proper || b.properly_boundaried()) return b;
  }
}

Outcome criterion_7() {
  std::mt19937_64 rng(7000);
  int violations = 0, equivalent_pairs = 0;
  for (int trial = 0; trial < kEquivalenceTrials; ++trial) {
    std::vector<Graph> family;
    const int members = oracle::uniform(rng, 1, 2);
    for (int i = 0; i < members; ++i) family.push_back(oracle::random_graph(oracle::uniform(rng, 2, 4), 0.5, rng));
    const auto fb = build_forbidden_boundaried_set(family);
    const int p = oracle::uniform(rng, 1, 2);
    const bool boundary_edge = oracle::uniform(rng, 0, 1) == 1;
    const auto g = random_boundaried(rng, oracle::uniform(rng, p, 5), p, boundary_edge, false);
    // draw pairs until one is equivalent, so most trials exercise the implication
    for (int attempt = 0; attempt < 50; ++attempt) {
      const auto h1 = random_boundaried(rng, oracle::uniform(rng, p, 5), p, boundary_edge, true);
      const auto h2 = random_boundaried(rng, oracle::uniform(rng, p, 5), p, boundary_edge, true);
      if (!equivalent_wrt_fb(h1, h2, fb)) continue;
      ++equivalent_pairs;
      const bool free1 = oracle::f_free(boundary_sum(g, h1), family);
      const bool free2 = oracle::f_free(boundary_sum(g, h2), family);
      violations += free1 != free2;
      break;
    }
  }
  return {violations == 0, std::to_string(violations) + " violations over " + std::to_string(equivalent_pairs) +
                               " equivalent pairs in " + std::to_string(kEquivalenceTrials) + " trials"};
}

Outcome criterion_8() {
  std::mt19937_64 rng(8000);
  int mismatches = 0, size_violations = 0, clique_violations = 0, yes = 0;
  long long largest = 0;
  for (int i = 0; i < kKernelInstances; ++i) {
    auto inst = oracle::random_instance(rng, 5, 40, {0.05, 0.1, 0.2, 0.3}, 3);
    const auto top = solve_secluded_star(inst);
    inst.w = std::max<Weight>(1, (top ? top->weight : 1) + oracle::uniform(rng, -2, 1));
    const auto kernels = kernelize_star(inst);
    for (const auto& k : kernels) {
      largest = std::max<long long>(largest, k.graph.vertex_count());
      size_violations += k.graph.vertex_count() > star_kernel_size_bound(inst.t);
      for (const auto& clique : k.attached_cliques) {
        bool ok = static_cast<int>(clique.size()) == 2 * inst.t;
        for (Vertex c : clique) {
          ok = ok && k.weights[c] == 1 && k.graph.degree(c) == 2 * inst.t;
          for (Vertex o : clique) ok = ok && (o == c || k.graph.adjacent(c, o));
        }
        clique_violations += !ok;
      }
    }
    const bool direct = solve_secluded_star(inst).has_value();
    const bool via_kernels = decide_star_via_kernels(inst);
    if (direct != via_kernels && ++mismatches <= 3)
      std::cerr << "  criterion 8 instance " << i << ": direct " << direct << ", kernels " << via_kernels << '\n';
    yes += direct;
  }
  return {mismatches == 0 && size_violations == 0 && clique_violations == 0,
          std::to_string(mismatches) + " verdict mismatches (" + std::to_string(yes) + " yes), " +
              std::to_string(size_violations) + " oversized kernels (largest " + std::to_string(largest) + "), " +
              std::to_string(clique_violations) + " malformed cliques"};
}

Outcome criterion_9() {
  int violations = 0;
  for (const auto& [inst, sol] : g_clique_successes) {
    const auto classes = oracle::true_twin_classes(inst.graph);
    int nodes = 0;
    for (const auto& cls : classes) {
      int inside = 0;
      for (Vertex v : cls) inside += std::binary_search(sol.vertices.begin(), sol.vertices.end(), v);
      if (inside == 0) continue;
      ++nodes;
      violations += inside != static_cast<int>(cls.size());
    }
    violations += nodes > (1 << inst.t);
  }
  return {violations == 0 && !g_clique_successes.empty(),
          std::to_string(violations) + " violations over " + std::to_string(g_clique_successes.size()) +
              " clique solutions"};
}

Outcome criterion_10() {
  const auto graph_inst = [] {
    std::mt19937_64 rng(10000);
    auto inst = oracle::random_instance(rng, 200, 200, {0.05}, 0);
    inst.t = 4;
    inst.w = 1;
    return inst;
  }();
  SplitterOptions opts;
  opts.mode = SplitterMode::randomized;
  opts.delta = kRandomDelta;
  opts.seed = 10;
  struct Run {
    std::string name;
    std::function<std::optional<SecludedSolution>()> solve;
    Shape shape;
  };
  const std::vector<Run> runs{
      {"clique", [&] { return solve_secluded_clique(graph_inst, opts); }, Shape::clique()},
      {"star", [&] { return solve_secluded_star(graph_inst); }, Shape::star()},
      {"path", [&] { return solve_secluded_long_path(graph_inst, opts); }, Shape::induced_path()},
      {"regular-d2", [&] { return solve_secluded_regular(graph_inst, 2, opts); }, Shape::regular(2)},
  };
  Outcome out;
  std::ostringstream detail;
  for (const auto& run : runs) {
    const auto start = std::chrono::steady_clock::now();
    const auto sol = run.solve();
    const double secs = seconds_since(start);
    bool valid = true;
    if (sol) {
      const auto nb = open_neighborhood(graph_inst.graph, sol->vertices);
      valid = nb == sol->neighborhood && static_cast<int>(nb.size()) <= graph_inst.t &&
              total_weight(graph_inst.weights, sol->vertices) == sol->weight &&
              is_connected_set(graph_inst.graph, sol->vertices) &&
              check_shape(induced_subgraph(graph_inst.graph, sol->vertices).graph, run.shape);
    }
    out.pass &= valid && secs <= kScaleSecondsLimit;
    detail << run.name << " " << secs << "s " << describe(sol) << (valid ? "" : " INVALID") << "; ";
  }
  out.detail = detail.str();
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"solver oracle equivalence (clique, star, path, regular d=1..3)", criterion_1},
      {"exact-size: enumeration = splitter = brute force", criterion_2},
      {"connected secluded sets: exhaustive match and C(k+t,t) bound", criterion_3},
      {"important separators: definition match and 4^t bound", criterion_4},
      {"separating families: exhaustive and sampled covering", criterion_5},
      {"minimal vertex covers: brute-force match", criterion_6},
      {"boundaried equivalence preserves F-freeness of sums", criterion_7},
      {"star Turing kernel: verdicts, sizes, attached cliques", criterion_8},
      {"clique solutions: whole twin classes, at most 2^t quotient nodes", criterion_9},
      {"scale smoke test: n=200, p=0.05, t=4, randomized splitter", criterion_10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    failed += !outcome.pass;
    std::printf("[%s] criterion %zu: %s -- %s (%.1fs)\n", outcome.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), outcome.detail.c_str(), seconds_since(start));
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
