#include "cli_app.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "secluded/connected_sets.hpp"
#include "secluded/errors.hpp"
#include "secluded/important_separators.hpp"
#include "secluded/io.hpp"
#include "secluded/solvers.hpp"
#include "secluded/star_kernel.hpp"
#include "secluded/vertex_cover.hpp"

namespace secluded::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Instance load_instance(const std::string& path) {
  try {
    return parse_instance(read_file(path));
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

// "1,4,5" -> {0,3,4}
VertexSet parse_ids(const std::string& text, int n) {
  VertexSet out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    int id = 0;
    try {
      std::size_t used = 0;
      id = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("bad vertex id '" + item + "'");
    }
    if (id < 1 || id > n) throw InputError("vertex id " + item + " outside 1.." + std::to_string(n));
    out.push_back(id - 1);
  }
  return make_set(std::move(out));
}

nlohmann::json one_based(const VertexSet& s) {
  auto arr = nlohmann::json::array();
  for (Vertex v : s) arr.push_back(v + 1);
  return arr;
}

nlohmann::json set_list(const std::vector<VertexSet>& sets) {
  auto arr = nlohmann::json::array();
  for (const auto& s : sets) arr.push_back(one_based(s));
  return arr;
}

std::string join_ids(const VertexSet& s) {
  std::string out;
  for (Vertex v : s) out += (out.empty() ? "" : " ") + std::to_string(v + 1);
  return out;
}

struct SolveArgs {
  std::string problem;
  std::string input;
  int t = 0;
  long long w = 1;
  int d = 2;
  int k = 1;
  std::vector<std::string> forbidden;
  std::string method = "fpt";
  std::string splitter = "deterministic";
  double delta = 1e-3;
  std::uint64_t seed = 0;
  std::string property = "clique";
  bool json = false;
};

PropertySpec exact_size_property(const SolveArgs& a, const std::vector<Graph>& family) {
  if (a.property == "clique") return PropertySpec::clique();
  if (a.property == "star") return PropertySpec::star();
  if (a.property == "path") return PropertySpec::induced_path();
  if (a.property == "regular") return PropertySpec::regular(a.d);
  if (a.property == "forest") return PropertySpec::forest();
  if (a.property == "ffree") return PropertySpec::f_free(family);
  if (a.property == "same-color")
    return PropertySpec::colored([](const Graph&, std::span<const int> colors) {
      return std::adjacent_find(colors.begin(), colors.end(), std::not_equal_to<>()) == colors.end();
    });
  throw InputError("unknown property '" + a.property + "'");
}

int run_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  Instance inst = load_instance(a.input);
  inst.t = a.t;
  inst.w = a.w;
  validate(inst);
  std::vector<Graph> family;
  for (const auto& path : a.forbidden) family.push_back(load_instance(path).graph);

  SplitterOptions splitter;
  splitter.mode = a.splitter == "random" ? SplitterMode::randomized : SplitterMode::deterministic;
  splitter.delta = a.delta;
  splitter.seed = a.seed;

  const bool brute = a.method == "brute";
  if ((a.method == "enum" || a.method == "splitter") && a.problem != "exact-size")
    throw InputError("--method enum|splitter applies to exact-size only");
  if ((a.problem == "ffree-brute" || a.problem == "tree-brute") && a.method != "fpt" && a.method != "brute")
    throw InputError(a.problem + " has only the brute-force method");

  nlohmann::json params = {{"t", a.t}, {"w", a.w}};
  std::string method = brute ? "brute" : "fpt";
  const auto started = std::chrono::steady_clock::now();
  std::optional<SecludedSolution> result;
  if (a.problem == "clique") {
    result = brute ? brute_force_solve(inst, PropertySpec::clique(), true) : solve_secluded_clique(inst, splitter);
  } else if (a.problem == "star") {
    result = brute ? brute_force_solve(inst, PropertySpec::star(), true) : solve_secluded_star(inst);
  } else if (a.problem == "path") {
    result = brute ? brute_force_solve(inst, PropertySpec::induced_path(), true)
                   : solve_secluded_long_path(inst, splitter);
  } else if (a.problem == "regular") {
    params["d"] = a.d;
    result = brute ? brute_force_solve(inst, PropertySpec::regular(a.d), true)
                   : solve_secluded_regular(inst, a.d, splitter);
  } else if (a.problem == "exact-size") {
    params["k"] = a.k;
    params["property"] = a.property;
    const auto prop = exact_size_property(a, family);
    if (brute) {
      // size-restricted brute force
      auto sized = PropertySpec::colored([&](const Graph& h, std::span<const int> colors) {
        return h.vertex_count() == a.k && prop.holds(h, colors);
      });
      result = brute_force_solve(inst, sized, true);
    } else {
      const bool use_enum = a.method == "enum";
      method = use_enum ? "enum" : "splitter";
      result = solve_exact_size_colored(inst, a.k, prop,
                                        use_enum ? ExactSizeMethod::enumeration : ExactSizeMethod::splitter, splitter);
    }
  } else if (a.problem == "ffree-brute") {
    if (family.empty()) err << "note: empty forbidden family, every connected set qualifies\n";
    params["forbidden_count"] = family.size();
    method = "brute";
    result = brute_force_solve(inst, PropertySpec::f_free(family), true);
  } else if (a.problem == "tree-brute") {
    method = "brute";
    result = brute_force_solve(inst, PropertySpec::forest(), true);
  } else {
    throw InputError("unknown problem '" + a.problem + "'");
  }
  const double wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  if (method == "fpt" || method == "splitter") {
    params["splitter"] = a.splitter;
    if (splitter.mode == SplitterMode::randomized) params["delta"] = a.delta;
  }

  ReportContext context{a.problem, params, method, a.seed, wall_ms};
  if (a.json) {
    out << emit_report(result, context) << '\n';
  } else if (result) {
    out << "solved: weight " << result->weight << ", vertices {" << join_ids(result->vertices) << "}, neighborhood {"
        << join_ids(result->neighborhood) << "}\n";
  } else {
    out << "no solution\n";
  }
  err << a.problem << " (" << method << "): " << (result ? "solved" : "no solution") << " in " << wall_ms << " ms\n";
  return 0;
}

int run_kernelize(const std::string& input, int t, long long w, bool json, const std::string& out_dir,
                  std::ostream& out, std::ostream& err) {
  Instance inst = load_instance(input);
  inst.t = t;
  inst.w = w;
  validate(inst);
  const auto kernels = kernelize_star(inst);
  if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
  auto manifest = nlohmann::json::array();
  bool decision = false;
  for (const auto& k : kernels) {
    const bool yes = solve_secluded_star(k.as_instance(), k.center_local).has_value();
    decision |= yes;
    const std::string text = emit_instance(k.as_instance());
    nlohmann::json entry = {{"center", k.center + 1},
                            {"t_prime", k.t_prime},
                            {"w_prime", k.w_prime},
                            {"removed_free_weight", k.removed_free_weight},
                            {"vertex_count", k.graph.vertex_count()},
                            {"star_found", yes}};
    if (!out_dir.empty()) {
      const auto path = std::filesystem::path(out_dir) / ("kernel_" + std::to_string(k.center + 1) + ".txt");
      std::ofstream(path) << text;
      entry["file"] = path.string();
    } else if (json) {
      entry["instance"] = text;
    }
    manifest.push_back(entry);
    if (!json) {
      out << "# kernel for center " << k.center + 1 << ": t' = " << k.t_prime << ", w' = " << k.w_prime
          << ", removed free weight " << k.removed_free_weight << "\n";
      if (out_dir.empty()) out << text;
    }
  }
  nlohmann::json report = {{"problem", "kernelize-star"},
                           {"params", {{"t", t}, {"w", w}}},
                           {"kernels", manifest},
                           {"solved", decision}};
  if (!out_dir.empty()) std::ofstream(std::filesystem::path(out_dir) / "manifest.json") << report.dump(2) << '\n';
  if (json)
    out << report.dump() << '\n';
  else
    out << "# decision: " << (decision ? "yes" : "no") << "\n";
  err << kernels.size() << " kernel(s), decision " << (decision ? "yes" : "no") << '\n';
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Secluded subgraph solvers and FPT primitives"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Find a heaviest t-secluded subgraph of the requested kind");
  solve_cmd->add_option("--problem", solve.problem, "Problem kind")
      ->required()
      ->check(CLI::IsMember({"clique", "star", "path", "regular", "exact-size", "ffree-brute", "tree-brute"}));
  solve_cmd->add_option("--input", solve.input, "Instance file")->required();
  solve_cmd->add_option("--t", solve.t, "Seclusion budget")->required()->check(CLI::NonNegativeNumber);
  solve_cmd->add_option("--w", solve.w, "Weight target")->required()->check(CLI::PositiveNumber);
  solve_cmd->add_option("--d", solve.d, "Degree for regular")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--k", solve.k, "Size for exact-size")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--forbidden", solve.forbidden, "Forbidden graph files");
  solve_cmd->add_option("--method", solve.method, "fpt, brute, or enum/splitter for exact-size")
      ->check(CLI::IsMember({"fpt", "brute", "enum", "splitter"}));
  solve_cmd->add_option("--splitter", solve.splitter, "Separating family construction")
      ->check(CLI::IsMember({"deterministic", "random"}));
  solve_cmd->add_option("--delta", solve.delta, "Failure bound of the random construction")
      ->check(CLI::Range(1e-300, 1.0));
  solve_cmd->add_option("--seed", solve.seed, "Random seed");
  solve_cmd->add_option("--property", solve.property, "Property for exact-size")
      ->check(CLI::IsMember({"clique", "star", "path", "regular", "forest", "ffree", "same-color"}));
  solve_cmd->add_flag("--json", solve.json, "Print the JSON report");

  std::string kernel_input, kernel_dir;
  int kernel_t = 0;
  long long kernel_w = 1;
  bool kernel_json = false;
  auto* kernel_cmd = app.add_subcommand("kernelize-star", "Emit the bounded star instances, one per center");
  kernel_cmd->add_option("--input", kernel_input, "Instance file")->required();
  kernel_cmd->add_option("--t", kernel_t, "Seclusion budget")->required()->check(CLI::NonNegativeNumber);
  kernel_cmd->add_option("--w", kernel_w, "Weight target")->required()->check(CLI::PositiveNumber);
  kernel_cmd->add_option("--out-dir", kernel_dir, "Write kernel files and manifest.json here");
  kernel_cmd->add_flag("--json", kernel_json, "Print the JSON manifest");

  int gen_n = 1, gen_max_weight = 1, gen_colors = 0;
  double gen_p = 0;
  std::uint64_t gen_seed = 0;
  std::string gen_output;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--n", gen_n, "Vertex count")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--p", gen_p, "Edge probability")->required()->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--max-weight", gen_max_weight, "Largest weight")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--colors", gen_colors, "Number of colors")->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--seed", gen_seed, "Random seed")->required();
  gen_cmd->add_option("--output", gen_output, "Write to this file instead of standard output");

  auto* prim_cmd = app.add_subcommand("primitives", "Run one of the building blocks");
  prim_cmd->require_subcommand(1);
  std::string prim_input, sep_x, sep_y;
  int prim_t = 0, cs_v = 1, cs_k = 1;
  bool cs_exact = false;
  auto* sep_cmd = prim_cmd->add_subcommand("important-separators", "Important (X,Y)-separators of size <= t");
  sep_cmd->add_option("--input", prim_input, "Instance file")->required();
  sep_cmd->add_option("--x", sep_x, "Comma separated ids of X")->required();
  sep_cmd->add_option("--y", sep_y, "Comma separated ids of Y")->required();
  sep_cmd->add_option("--t", prim_t, "Size bound")->required()->check(CLI::NonNegativeNumber);
  auto* cs_cmd = prim_cmd->add_subcommand("connected-sets", "Connected k-sets containing v with small boundary");
  cs_cmd->add_option("--input", prim_input, "Instance file")->required();
  cs_cmd->add_option("--v", cs_v, "Start vertex")->required();
  cs_cmd->add_option("--k", cs_k, "Set size")->required()->check(CLI::PositiveNumber);
  cs_cmd->add_option("--t", prim_t, "Boundary size")->required()->check(CLI::NonNegativeNumber);
  cs_cmd->add_flag("--exact-boundary", cs_exact, "Require |N(U)| = t instead of <= t");
  auto* vc_cmd = prim_cmd->add_subcommand("min-vertex-covers", "Inclusion-minimal vertex covers of size <= t");
  vc_cmd->add_option("--input", prim_input, "Instance file")->required();
  vc_cmd->add_option("--t", prim_t, "Size bound")->required()->check(CLI::NonNegativeNumber);

  try {
    std::vector<std::string> rest(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (solve_cmd->parsed()) return run_solve(solve, out, err);
    if (kernel_cmd->parsed())
      return run_kernelize(kernel_input, kernel_t, kernel_w, kernel_json, kernel_dir, out, err);
    if (gen_cmd->parsed()) {
      const auto text = emit_instance(gen_random_instance(gen_n, gen_p, gen_max_weight, gen_colors, gen_seed));
      if (gen_output.empty())
        out << text;
      else
        std::ofstream(gen_output, std::ios::binary) << text;
      return 0;
    }
    const Instance inst = load_instance(prim_input);
    const int n = inst.vertex_count();
    nlohmann::json report;
    std::vector<VertexSet> sets;
    if (sep_cmd->parsed()) {
      const auto x = parse_ids(sep_x, n), y = parse_ids(sep_y, n);
      sets = enum_important_separators(inst.graph, x, y, prim_t);
      report = {{"primitive", "important-separators"}, {"x", one_based(x)}, {"y", one_based(y)}, {"t", prim_t}};
    } else if (cs_cmd->parsed()) {
      if (cs_v < 1 || cs_v > n) throw InputError("vertex id " + std::to_string(cs_v) + " outside 1.." + std::to_string(n));
      sets = enum_connected_secluded_sets(inst.graph, cs_v - 1, cs_k, prim_t,
                                          cs_exact ? BoundaryMode::exact : BoundaryMode::at_most);
      report = {{"primitive", "connected-sets"}, {"v", cs_v},  {"k", cs_k},
                {"t", prim_t},                   {"exact_boundary", cs_exact}};
    } else {
      sets = enum_minimal_vertex_covers(inst.graph, prim_t);
      report = {{"primitive", "min-vertex-covers"}, {"t", prim_t}};
    }
    report["sets"] = set_list(sets);
    report["count"] = sets.size();
    out << report.dump() << '\n';
    return 0;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace secluded::cli
