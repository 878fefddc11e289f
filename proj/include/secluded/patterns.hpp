#pragma once

#include <optional>
#include <span>
#include <vector>

#include "secluded/graph.hpp"

namespace secluded {

/// Searches for an induced copy of `pattern` in `host`, skipping host vertices
/// marked in `excluded` (if non-empty it must have one entry per host vertex).
/// Returns the image of every pattern vertex, or nullopt.
///
/// Backtracking over injective maps, pattern vertices taken in a
/// connectivity-first order, candidates pruned by degree.
std::optional<std::vector<Vertex>> find_induced_copy(const Graph& host, const Graph& pattern,
                                                     std::span<const char> excluded = {});

/// Like find_induced_copy, but pattern vertices with partial_image[p] >= 0 are
/// pinned to that host vertex. Unpinned vertices avoid `excluded`.
std::optional<std::vector<Vertex>> find_induced_extension(const Graph& host, const Graph& pattern,
                                                          std::vector<Vertex> partial_image,
                                                          std::span<const char> excluded = {});

bool contains_induced(const Graph& host, const Graph& pattern);

/// True iff no member of `family` occurs as an induced subgraph of g.
bool is_f_free(const Graph& g, std::span<const Graph> family);

/// First family member found in g (minus `excluded`), with its image.
struct ForbiddenCopy {
  std::size_t member = 0;
  std::vector<Vertex> image;
};
std::optional<ForbiddenCopy> find_forbidden_copy(const Graph& g, std::span<const Graph> family,
                                                 std::span<const char> excluded = {});

}  // namespace secluded
