#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "secluded/separating_family.hpp"

namespace oracle {

// Counts the maximal disjoint pairs (A, B), |A| <= a, |B| <= b, that no member
// splits. Every smaller pair extends to a maximal one, so zero means the whole
// contract holds. Enumerates all 3^n assignments; n <= 14.
inline long long unsplit_pairs(const secluded::SeparatingFamily& family, int a, int b) {
  const int n = family.universe_size();
  a = std::min(a, n);
  b = std::min(b, n);
  std::vector<std::uint64_t> rows;
  for (std::size_t i = 0; i < family.size(); ++i) rows.push_back(family.row(i)[0]);
  long long misses = 0;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t bs = 0; bs <= full; ++bs) {
    const int nb = std::popcount(bs);
    if (nb > b) continue;
    const std::uint64_t rest = full & ~bs;
    for (std::uint64_t as = rest;; as = (as - 1) & rest) {
      const int na = std::popcount(as);
      const bool saturated = na + nb == n;
      if (na <= a && (na == a || saturated) && (nb == b || saturated)) {
        bool split = false;
        for (auto r : rows)
          if ((r & as) == as && (r & bs) == 0) {
            split = true;
            break;
          }
        misses += !split;
      }
      if (as == 0) break;
    }
  }
  return misses;
}

}  // namespace oracle
