#include "secluded/separating_family.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <string>

#include "secluded/errors.hpp"

namespace secluded {

namespace {

constexpr double kMaxMembers = 5e7;

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

// Visits every k-subset of {0..n-1} in colex order as a sorted index list.
template <class F>
void for_each_combination(int n, int k, F&& visit) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(std::span<const int>(idx));
    int i = 0;
    while (i < k && idx[i] + 1 == (i + 1 < k ? idx[i + 1] : n)) ++i;
    if (i == k) return;
    ++idx[i];
    for (int j = 0; j < i; ++j) idx[j] = j;
  }
}

// Same for subsets of an explicit 64-bit mask, yielding masks.
template <class F>
bool for_each_submask_of_size(std::uint64_t universe, int k, F&& visit) {
  std::vector<int> pos;
  for (std::uint64_t m = universe; m; m &= m - 1) pos.push_back(std::countr_zero(m));
  bool keep_going = true;
  for_each_combination(static_cast<int>(pos.size()), k, [&](std::span<const int> idx) {
    if (!keep_going) return;
    std::uint64_t mask = 0;
    for (int i : idx) mask |= std::uint64_t{1} << pos[i];
    keep_going = visit(mask);
  });
  return keep_going;
}

// |B| ranges over [lo, b]; A is then min(a, n - |B|) elements of the rest.
int smallest_maximal_b(int n, int a, int b) { return a + b >= n ? std::max(0, n - a) : b; }

double maximal_pair_count(int n, int a, int b) {
  double total = 0;
  for (int j = smallest_maximal_b(n, a, b); j <= b; ++j) total += binomial(n, j) * binomial(n - j, std::min(a, n - j));
  return total;
}

double complement_family_size(int n, int a, int b) {
  double total = 0;
  for (int j = smallest_maximal_b(n, a, b); j <= b; ++j) total += binomial(n, j);
  return total;
}

}  // namespace

class SeparatingFamilyBuilder {
 public:
  SeparatingFamilyBuilder(int n, int a, int b, const SplitterOptions& options) {
    family_.n_ = n;
    family_.a_ = a;
    family_.b_ = b;
    family_.mode_ = options.mode;
    family_.delta_ = options.delta;
    family_.seed_ = options.seed;
    family_.words_per_set_ = std::max<std::size_t>(1, (static_cast<std::size_t>(n) + 63) / 64);
  }

  std::vector<std::uint64_t>& bits() { return family_.bits_; }

  void add_all() {
    const auto start = family_.bits_.size();
    family_.bits_.resize(start + family_.words_per_set_, 0);
    for (int v = 0; v < family_.n_; ++v) family_.bits_[start + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  }

  void add_empty() { family_.bits_.resize(family_.bits_.size() + family_.words_per_set_, 0); }

  void add_complement(std::span<const int> removed) {
    add_all();
    const auto start = family_.bits_.size() - family_.words_per_set_;
    for (int v : removed) family_.bits_[start + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
  }

  void add_random(std::mt19937_64& rng, double p) {
    add_empty();
    const auto start = family_.bits_.size() - family_.words_per_set_;
    for (int v = 0; v < family_.n_; ++v) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < p) family_.bits_[start + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    }
  }

  void add_complement_family() {
    const int n = family_.n_, a = family_.a_, b = family_.b_;
    if (complement_family_size(n, a, b) > kMaxMembers)
      throw CapacityError("complement separating family too large for n=" + std::to_string(n));
    for (int j = smallest_maximal_b(n, a, b); j <= b; ++j)
      for_each_combination(n, j, [&](std::span<const int> removed) { add_complement(removed); });
  }

  // Adds V \ B for every maximal B on which the current members fail.
  // Requires n <= 64 and a + b < n.
  void patch_failures() {
    const int n = family_.n_, a = family_.a_, b = family_.b_;
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    const std::size_t pool = family_.size();
    std::vector<std::uint64_t> rows(pool);
    for (std::size_t i = 0; i < pool; ++i) rows[i] = family_.bits_[i];
    std::vector<std::uint64_t> disjoint;
    for_each_combination(n, b, [&](std::span<const int> idx) {
      std::uint64_t bmask = 0;
      for (int v : idx) bmask |= std::uint64_t{1} << v;
      disjoint.clear();
      for (auto r : rows)
        if ((r & bmask) == 0) disjoint.push_back(r);
      const bool ok = for_each_submask_of_size(all & ~bmask, a, [&](std::uint64_t amask) {
        return std::any_of(disjoint.begin(), disjoint.end(), [&](std::uint64_t r) { return (r & amask) == amask; });
      });
      if (!ok) add_complement(idx);
    });
  }

  SeparatingFamily finish(bool certified) {
    family_.certified_ = certified;
    return std::move(family_);
  }

 private:
  SeparatingFamily family_;
};

VertexSet SeparatingFamily::members(std::size_t member) const {
  VertexSet out;
  for (int v = 0; v < n_; ++v)
    if (contains(member, v)) out.push_back(v);
  return out;
}

bool SeparatingFamily::separates(std::span<const Vertex> a_side, std::span<const Vertex> b_side) const {
  for (std::size_t i = 0; i < size(); ++i) {
    const bool ok = std::all_of(a_side.begin(), a_side.end(), [&](Vertex v) { return contains(i, v); }) &&
                    std::none_of(b_side.begin(), b_side.end(), [&](Vertex v) { return contains(i, v); });
    if (ok) return true;
  }
  return false;
}

double randomized_family_size(int n, int a, int b, double delta) {
  a = std::min(a, n);
  b = std::min(b, n);
  if (a == 0 || b == 0) return 1;
  const double p = static_cast<double>(a) / (a + b);
  const double hit = std::pow(p, a) * std::pow(1 - p, b);
  const double pairs = std::max(1.0, maximal_pair_count(n, a, b));
  return std::ceil((std::log(pairs) - std::log(delta)) / -std::log1p(-hit));
}

SeparatingFamily build_separating_family(int n, int a, int b, const SplitterOptions& options) {
  if (n < 0 || a < 0 || b < 0) throw InputError("separating family sizes must be nonnegative");
  if (options.mode == SplitterMode::randomized && !(options.delta > 0 && options.delta < 1))
    throw InputError("delta must lie in (0, 1)");
  a = std::min(a, n);
  b = std::min(b, n);
  SeparatingFamilyBuilder builder(n, a, b, options);

  if (a == 0) {
    builder.add_empty();
    return builder.finish(true);
  }
  if (b == 0) {
    builder.add_all();
    return builder.finish(true);
  }
  const double complements = complement_family_size(n, a, b);
  if (a + b >= n) {
    builder.add_complement_family();
    return builder.finish(true);
  }

  const double p = static_cast<double>(a) / (a + b);
  std::mt19937_64 rng(options.seed);

  if (options.mode == SplitterMode::randomized) {
    const double m = randomized_family_size(n, a, b, options.delta);
    if (complements <= m) {
      builder.add_complement_family();
      return builder.finish(true);
    }
    if (m > kMaxMembers) throw CapacityError("randomized separating family would need " + std::to_string(m) + " members");
    const auto count = static_cast<std::size_t>(m);
    builder.bits().reserve(count * ((static_cast<std::size_t>(n) + 63) / 64));
    for (std::size_t i = 0; i < count; ++i) builder.add_random(rng, p);
    return builder.finish(false);
  }

  if (n > 64) throw CapacityError("deterministic separating family supports n <= 64, got " + std::to_string(n));
  if (maximal_pair_count(n, a, b) > 2e7)
    throw CapacityError("deterministic separating family: exhaustive check too large for n=" + std::to_string(n));
  // a pool that misses about one maximal pair in expectation, then patched
  const double pool = randomized_family_size(n, a, b, 1.0);
  if (complements <= pool) {
    builder.add_complement_family();
  } else {
    for (std::size_t i = 0; i < static_cast<std::size_t>(pool); ++i) builder.add_random(rng, p);
    builder.patch_failures();
  }
  SeparatingFamily family = builder.finish(true);
  if (find_unseparated_pair(family)) throw std::logic_error("separating family failed verification");
  return family;
}

std::optional<std::pair<VertexSet, VertexSet>> find_unseparated_pair(const SeparatingFamily& family,
                                                                     double max_pairs) {
  const int n = family.universe_size(), a = family.a(), b = family.b();
  if (n > 64) throw CapacityError("exhaustive separating-family check supports n <= 64");
  if (maximal_pair_count(n, a, b) > max_pairs) throw CapacityError("exhaustive separating-family check too large");
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (n == 0 ? 0 : (std::uint64_t{1} << n) - 1);
  std::vector<std::uint64_t> rows(family.size());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = family.row(i)[0];

  auto to_set = [](std::uint64_t m) {
    VertexSet s;
    for (; m; m &= m - 1) s.push_back(std::countr_zero(m));
    return s;
  };

  std::optional<std::pair<VertexSet, VertexSet>> failure;
  std::vector<std::uint64_t> disjoint;
  for (int j = smallest_maximal_b(n, a, b); j <= b && !failure; ++j) {
    const int a_size = std::min(a, n - j);
    for_each_combination(n, j, [&](std::span<const int> idx) {
      if (failure) return;
      std::uint64_t bmask = 0;
      for (int v : idx) bmask |= std::uint64_t{1} << v;
      disjoint.clear();
      for (auto r : rows)
        if ((r & bmask) == 0) disjoint.push_back(r);
      for_each_submask_of_size(all & ~bmask, a_size, [&](std::uint64_t amask) {
        if (std::any_of(disjoint.begin(), disjoint.end(), [&](std::uint64_t r) { return (r & amask) == amask; }))
          return true;
        failure = std::make_pair(to_set(amask), to_set(bmask));
        return false;
      });
    });
  }
  return failure;
}

}  // namespace secluded
