#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "secluded/graph.hpp"

namespace secluded {

enum class SplitterMode { deterministic, randomized };

struct SplitterOptions {
  SplitterMode mode = SplitterMode::deterministic;
  double delta = 1e-3;  // failure bound for randomized mode
  std::uint64_t seed = 0;
};

/// A family of subsets of {0..n-1} such that for all disjoint A, B with
/// |A| <= a and |B| <= b some member S has A ⊆ S and S ∩ B = ∅.
///
/// Members are stored as packed bit rows. In deterministic mode the covering
/// property has been checked exhaustively; in randomized mode it holds with
/// probability at least 1 - delta (or exactly, when the complement family was
/// cheaper and used instead).
class SeparatingFamily {
 public:
  int universe_size() const { return n_; }
  int a() const { return a_; }
  int b() const { return b_; }
  SplitterMode mode() const { return mode_; }
  double delta() const { return delta_; }
  std::uint64_t seed() const { return seed_; }
  /// True when the family is exact by construction or by verification.
  bool certified() const { return certified_; }

  std::size_t size() const { return bits_.size() / words_per_set_; }

  bool contains(std::size_t member, Vertex v) const {
    return (bits_[member * words_per_set_ + (v >> 6)] >> (v & 63)) & 1u;
  }

  std::span<const std::uint64_t> row(std::size_t member) const {
    return {bits_.data() + member * words_per_set_, words_per_set_};
  }

  VertexSet members(std::size_t member) const;

  /// True iff some member contains `a_side` and avoids `b_side`.
  bool separates(std::span<const Vertex> a_side, std::span<const Vertex> b_side) const;

 private:
  friend class SeparatingFamilyBuilder;

  int n_ = 0, a_ = 0, b_ = 0;
  SplitterMode mode_ = SplitterMode::deterministic;
  double delta_ = 0;
  std::uint64_t seed_ = 0;
  bool certified_ = false;
  std::size_t words_per_set_ = 1;
  std::vector<std::uint64_t> bits_;
};

/// Builds a family for universe size n and pair sizes (a, b); sizes beyond n
/// are clamped.
///
/// When a + b >= n, or when it is the smaller option, the family is the exact
/// complement family {V \ B}. Otherwise deterministic mode takes a seeded
/// random pool, adds V \ B for every B the pool fails on, and verifies the
/// result exhaustively (CapacityError when n > 64 or the check is too large);
/// randomized mode draws m independent sets with inclusion probability
/// a/(a+b), m chosen so that m-fold miss probability times the number of
/// maximal pairs is at most delta.
SeparatingFamily build_separating_family(int n, int a, int b, const SplitterOptions& options = {});

/// Exhaustive check over all maximal disjoint pairs. Returns a pair that no
/// member separates, or nullopt. CapacityError beyond `max_pairs` pairs.
std::optional<std::pair<VertexSet, VertexSet>> find_unseparated_pair(const SeparatingFamily& family,
                                                                     double max_pairs = 2e7);

/// Number of members the randomized construction would draw (before any
/// fallback to the complement family).
double randomized_family_size(int n, int a, int b, double delta);

}  // namespace secluded
