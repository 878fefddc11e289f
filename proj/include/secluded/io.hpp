#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "secluded/instance.hpp"

namespace secluded {

/// Reads the line-oriented instance format:
///
///   p secluded <n> <m>
///   v <id> <weight> [<color>]
///   e <u> <v>
///
/// Ids are 1-based; '#' starts a comment. Unlisted weights are 1 and unlisted
/// colors 0. The returned instance has t = 0 and w = 1. ParseError on any
/// malformed, duplicate or out-of-range line, or an edge count that disagrees
/// with the header.
Instance parse_instance(std::string_view text);

/// Inverse of parse_instance. Colors are written only when some color is nonzero.
std::string emit_instance(const Instance& inst);

/// G(n, p) with weights uniform in 1..max_weight and colors uniform in
/// 0..color_count-1 (all 0 when color_count <= 1). Same arguments, same output.
Instance gen_random_instance(int n, double edge_probability, int max_weight, int color_count, std::uint64_t seed);

struct ReportContext {
  std::string problem;
  nlohmann::json params = nlohmann::json::object();
  std::string method;
  std::uint64_t seed = 0;
  double wall_ms = 0;
};

/// JSON report with sorted keys and 1-based vertex lists.
nlohmann::json make_report(const std::optional<SecludedSolution>& solution, const ReportContext& context);
std::string emit_report(const std::optional<SecludedSolution>& solution, const ReportContext& context);

}  // namespace secluded
