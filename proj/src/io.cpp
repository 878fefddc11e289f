#include "secluded/io.hpp"

#include <charconv>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "secluded/errors.hpp"

namespace secluded {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long parse_integer(std::string_view field, std::size_t line, const char* what) {
  long long value = 0;
  auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || end != field.data() + field.size())
    throw ParseError(line, std::string("expected an integer ") + what + ", got '" + std::string(field) + "'");
  return value;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  std::size_t line_no = 0;
  bool have_header = false;
  int n = 0;
  long long declared_edges = 0;
  std::vector<Weight> weights;
  std::vector<int> colors;
  std::vector<char> weight_seen;
  std::vector<Edge> edges;
  std::set<Edge> edge_set;

  auto vertex = [&](std::string_view field) {
    const long long id = parse_integer(field, line_no, "vertex id");
    if (id < 1 || id > n)
      throw ParseError(line_no, "vertex id " + std::to_string(id) + " outside 1.." + std::to_string(n));
    return static_cast<Vertex>(id - 1);
  };

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto fields = split_fields(line);
    if (fields.empty()) continue;

    if (fields[0] == "p") {
      if (have_header) throw ParseError(line_no, "second header line");
      if (fields.size() != 4 || fields[1] != "secluded")
        throw ParseError(line_no, "header must read 'p secluded <n> <m>'");
      const long long nn = parse_integer(fields[2], line_no, "vertex count");
      declared_edges = parse_integer(fields[3], line_no, "edge count");
      if (nn < 0 || nn > 100000000 || declared_edges < 0) throw ParseError(line_no, "invalid header counts");
      n = static_cast<int>(nn);
      weights.assign(n, 1);
      colors.assign(n, 0);
      weight_seen.assign(n, 0);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(line_no, "expected the 'p secluded' header first");
    if (fields[0] == "v") {
      if (fields.size() != 3 && fields.size() != 4) throw ParseError(line_no, "vertex line must read 'v <id> <weight> [<color>]'");
      const Vertex v = vertex(fields[1]);
      if (weight_seen[v]) throw ParseError(line_no, "vertex " + std::to_string(v + 1) + " listed twice");
      weight_seen[v] = 1;
      const long long w = parse_integer(fields[2], line_no, "weight");
      if (w < 1) throw ParseError(line_no, "weights must be positive");
      weights[v] = w;
      if (fields.size() == 4) {
        const long long c = parse_integer(fields[3], line_no, "color");
        if (c < 0 || c > 1000000000) throw ParseError(line_no, "colors must be nonnegative");
        colors[v] = static_cast<int>(c);
      }
    } else if (fields[0] == "e") {
      if (fields.size() != 3) throw ParseError(line_no, "edge line must read 'e <u> <v>'");
      Vertex u = vertex(fields[1]), v = vertex(fields[2]);
      if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u + 1));
      if (u > v) std::swap(u, v);
      if (!edge_set.insert({u, v}).second)
        throw ParseError(line_no, "duplicate edge " + std::to_string(u + 1) + " " + std::to_string(v + 1));
      edges.emplace_back(u, v);
    } else {
      throw ParseError(line_no, "unknown line type '" + std::string(fields[0]) + "'");
    }
  }
  if (!have_header) throw ParseError(0, "missing 'p secluded' header");
  if (static_cast<long long>(edges.size()) != declared_edges)
    throw ParseError(0, "header declares " + std::to_string(declared_edges) + " edges, found " +
                            std::to_string(edges.size()));
  Instance inst;
  inst.graph = Graph(n, edges);
  inst.weights = std::move(weights);
  inst.colors = std::move(colors);
  inst.t = 0;
  inst.w = 1;
  return inst;
}

std::string emit_instance(const Instance& inst) {
  std::ostringstream out;
  const int n = inst.vertex_count();
  const auto edges = inst.graph.edges();
  bool any_color = false;
  for (int c : inst.colors) any_color |= c != 0;
  out << "p secluded " << n << ' ' << edges.size() << '\n';
  for (Vertex v = 0; v < n; ++v) {
    out << "v " << v + 1 << ' ' << inst.weights[v];
    if (any_color) out << ' ' << inst.colors[v];
    out << '\n';
  }
  for (auto [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

Instance gen_random_instance(int n, double edge_probability, int max_weight, int color_count, std::uint64_t seed) {
  if (n < 1) throw InputError("n must be at least 1");
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0)) throw InputError("edge probability must lie in [0, 1]");
  if (max_weight < 1) throw InputError("max weight must be at least 1");
  std::mt19937_64 rng(seed);
  // explicit conversions instead of std distributions, which differ across standard libraries
  auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  auto below = [&](std::uint64_t bound) { return rng() % bound; };
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (unit() < edge_probability) edges.emplace_back(u, v);
  Instance inst = Instance::unit(Graph(n, edges), 0, 1);
  for (Vertex v = 0; v < n; ++v) inst.weights[v] = 1 + static_cast<Weight>(below(max_weight));
  if (color_count > 1)
    for (Vertex v = 0; v < n; ++v) inst.colors[v] = static_cast<int>(below(color_count));
  return inst;
}

nlohmann::json make_report(const std::optional<SecludedSolution>& solution, const ReportContext& context) {
  auto one_based = [](const VertexSet& s) {
    std::vector<int> out;
    for (Vertex v : s) out.push_back(v + 1);
    return out;
  };
  nlohmann::json report;
  report["problem"] = context.problem;
  report["params"] = context.params;
  report["method"] = context.method;
  report["seed"] = context.seed;
  report["wall_ms"] = context.wall_ms;
  report["solved"] = solution.has_value();
  report["vertices"] = solution ? one_based(solution->vertices) : std::vector<int>{};
  report["neighborhood"] = solution ? one_based(solution->neighborhood) : std::vector<int>{};
  report["neighborhood_size"] = solution ? solution->neighborhood.size() : 0;
  report["weight"] = solution ? solution->weight : 0;
  return report;
}

std::string emit_report(const std::optional<SecludedSolution>& solution, const ReportContext& context) {
  return make_report(solution, context).dump();
}

}  // namespace secluded
