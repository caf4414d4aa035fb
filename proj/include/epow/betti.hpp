#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "epow/errors.hpp"

namespace epow {

/// binom(a, b) as an exact 64-bit value; 0 when b < 0 or b > a.
/// Overflow raises ResourceError instead of wrapping.
std::uint64_t binomial(long long a, long long b);

/// Total and graded Betti numbers of an ideal. Only nonzero entries are
/// stored; `total[i]` is beta_i, `graded[{i,j}]` is beta_{i,j} with j the
/// internal degree.
struct BettiTable {
  std::map<int, std::uint64_t> total;
  std::map<std::pair<int, int>, std::uint64_t> graded;

  std::uint64_t beta(int i) const {
    auto it = total.find(i);
    return it == total.end() ? 0 : it->second;
  }
  std::uint64_t beta(int i, int j) const {
    auto it = graded.find({i, j});
    return it == graded.end() ? 0 : it->second;
  }
  /// Largest i with beta_i != 0; -1 for an empty table.
  int projective_dimension() const {
    return total.empty() ? -1 : total.rbegin()->first;
  }

  bool operator==(const BettiTable&) const = default;
};

} // namespace epow
