#pragma once

#include <map>
#include <vector>

#include "epow/betti.hpp"
#include "epow/ideal.hpp"

namespace epow {

inline constexpr std::size_t kTaylorMaxGenerators = 22;

/// One multidegree strand of the Taylor complex tensored down to GF(2):
/// the subsets of generators sharing one lcm, with chain counts and
/// homology dimensions indexed by subset size.
struct TaylorStrand {
  Monomial multidegree;
  std::map<int, std::size_t> chains;   // subset size -> number of subsets
  std::map<int, std::size_t> homology; // subset size -> dim H (zeros omitted)
};

/// Strand-by-strand GF(2) homology of the Taylor complex of `ideal`.
/// Guards: at most 22 generators, and a deterministic bound on the total
/// elimination work; either violation raises ResourceError.
std::vector<TaylorStrand> taylor_strands(const MonomialIdeal& ideal);

/// Betti numbers assembled from the strands: homology at subset size i+1 in
/// the strand of multidegree a contributes to beta_{i, deg(a)}.
/// The zero ideal yields an empty table.
BettiTable taylor_betti(const MonomialIdeal& ideal);

/// max { i : beta_i != 0 }; ArgumentError on the zero ideal.
int projective_dimension(const MonomialIdeal& ideal);

/// True iff every nonzero graded Betti number sits at internal degree
/// (generator degree) + i. ArgumentError unless generated in one degree.
bool is_linear_resolution(const MonomialIdeal& ideal);

} // namespace epow
