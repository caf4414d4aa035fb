#include "epow/taylor.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "epow/gf2.hpp"

namespace epow {

namespace {

// Total elimination budget in 64-bit word operations. The bound keeps a
// single oracle call within seconds; instances past it raise ResourceError.
constexpr std::uint64_t kEliminationBudget = 400'000'000'000ull;

std::uint64_t rank_work(std::uint64_t rows, std::uint64_t cols) {
  if (rows == 0 || cols == 0) return 0;
  return rows * std::min(rows, cols) * ((cols + 63) / 64);
}

struct StrandMasks {
  std::uint32_t id = 0;
  std::map<int, std::vector<std::uint32_t>> by_size; // ascending masks
};

} // namespace

std::vector<TaylorStrand> taylor_strands(const MonomialIdeal& ideal) {
  std::vector<TaylorStrand> strands;
  if (ideal.is_zero()) return strands;

  const auto& gens = ideal.gens();
  const std::size_t m = gens.size();
  if (m > kTaylorMaxGenerators)
    throw ResourceError("taylor complex guarded at " +
                        std::to_string(kTaylorMaxGenerators) + " generators");
  if (ideal.is_unit()) {
    TaylorStrand s{Monomial::one(ideal.ambient()), {}, {}};
    s.chains[1] = 1;
    s.homology[1] = 1;
    strands.push_back(std::move(s));
    return strands;
  }

  const std::uint32_t full = std::uint32_t{1} << m;

  // lcm of every nonempty subset, deduplicated into ids.
  std::vector<std::uint32_t> lcm_id(full, 0);
  std::vector<Monomial> lcms;
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> lcm_index;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    const std::uint32_t low = mask & (~mask + 1);
    const std::size_t g = std::countr_zero(low);
    Monomial l = mask == low ? gens[g] : lcms[lcm_id[mask ^ low]].lcm(gens[g]);
    auto [it, inserted] =
        lcm_index.try_emplace(std::move(l), static_cast<std::uint32_t>(lcms.size()));
    if (inserted) lcms.push_back(it->first);
    lcm_id[mask] = it->second;
  }

  // Group subsets by lcm id, then by size; masks stay ascending.
  std::vector<StrandMasks> groups(lcms.size());
  for (std::uint32_t i = 0; i < groups.size(); ++i) groups[i].id = i;
  for (std::uint32_t mask = 1; mask < full; ++mask)
    groups[lcm_id[mask]].by_size[std::popcount(mask)].push_back(mask);

  std::uint64_t work = 0;
  for (const StrandMasks& g : groups) {
    for (auto it = g.by_size.begin(); it != g.by_size.end(); ++it) {
      auto below = g.by_size.find(it->first - 1);
      if (below != g.by_size.end())
        work += rank_work(it->second.size(), below->second.size());
    }
  }
  if (work > kEliminationBudget)
    throw ResourceError("taylor complex strands exceed the elimination budget");

  for (const StrandMasks& group : groups) {
    TaylorStrand strand{lcms[group.id], {}, {}};
    for (const auto& [size, masks] : group.by_size)
      strand.chains[size] = masks.size();

    // rank of the boundary from subsets of size s down to size s-1,
    // restricted to this strand.
    std::map<int, std::size_t> rank_below;
    for (const auto& [size, masks] : group.by_size) {
      auto below = group.by_size.find(size - 1);
      if (below == group.by_size.end() || below->second.empty()) {
        rank_below[size] = 0;
        continue;
      }
      const auto& cols = below->second;
      Gf2Matrix mat(masks.size(), cols.size());
      for (std::size_t r = 0; r < masks.size(); ++r) {
        std::uint32_t t = masks[r];
        std::uint32_t bits = t;
        while (bits) {
          const std::uint32_t bit = bits & (~bits + 1);
          bits &= bits - 1;
          const std::uint32_t sub = t ^ bit;
          if (sub == 0 || lcm_id[sub] != group.id) continue;
          auto pos = std::lower_bound(cols.begin(), cols.end(), sub);
          mat.set(r, static_cast<std::size_t>(pos - cols.begin()));
        }
      }
      rank_below[size] = mat.rank();
    }

    for (const auto& [size, masks] : group.by_size) {
      auto above = rank_below.find(size + 1);
      const std::size_t r_in = above == rank_below.end() ? 0 : above->second;
      const std::size_t h = masks.size() - rank_below[size] - r_in;
      if (h > 0) strand.homology[size] = h;
    }
    strands.push_back(std::move(strand));
  }
  return strands;
}

BettiTable taylor_betti(const MonomialIdeal& ideal) {
  BettiTable table;
  for (const TaylorStrand& strand : taylor_strands(ideal)) {
    const int degree = strand.multidegree.degree();
    for (const auto& [size, h] : strand.homology) {
      table.total[size - 1] += h;
      table.graded[{size - 1, degree}] += h;
    }
  }
  return table;
}

int projective_dimension(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw ArgumentError("zero ideal has no resolution");
  return taylor_betti(ideal).projective_dimension();
}

bool is_linear_resolution(const MonomialIdeal& ideal) {
  const int degree = ideal.common_degree();
  if (degree < 0)
    throw ArgumentError("generators must share one degree");
  for (const auto& [key, value] : taylor_betti(ideal).graded) {
    (void)value;
    if (key.second != degree + key.first) return false;
  }
  return true;
}

} // namespace epow
