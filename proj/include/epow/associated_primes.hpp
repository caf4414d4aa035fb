#pragma once

#include <optional>
#include <vector>

#include "epow/graph.hpp"
#include "epow/ideal.hpp"

namespace epow {

inline constexpr int kAssMaxVariables = 20;

/// All monomial primes P_A in Ass(S/J), as variable supports sorted
/// lexicographically. For each support A the ideal is localized at A and
/// P_A is associated iff (J_A : P_A) strictly contains J_A; the strictness
/// witness is searched on the divisor lattice of lcm(G(J_A)), which bounds
/// every minimal generator of the colon. Guarded at 20 variables.
std::vector<PrimeSupport> ass_primes(const MonomialIdeal& j);

/// Scans the divisors m of lcm(G(J)) for one with J : m = P_A exactly and
/// returns the first hit in the lattice enumeration order, or nothing.
std::optional<Monomial> witness_search(const MonomialIdeal& j,
                                       const PrimeSupport& a);

/// Runs the localized socle test and the global witness search on every
/// support and records where they disagree (they never should).
struct TwoMethodReport {
  std::size_t supports_checked = 0;
  std::vector<PrimeSupport> associated;    // per the socle test
  std::vector<PrimeSupport> disagreements; // supports where methods differ
};
TwoMethodReport two_method_ass_report(const MonomialIdeal& j);

/// The explicit monomial m with I^k : m = (x_1,...,x_n) for the k-th power
/// of an anti-d-path edge ideal in the non-bipartite range d+2 <= n-d-1:
/// x_1^{k-1} x_{d+2}...x_{d+k} x_n for k <= d+2, and x_1...x_{2k-1} for
/// k > d+2 (which needs 2k-1 <= n). The two defining properties, m not in
/// I^k and I^k : m = (x_1..x_n), are re-verified before returning.
Monomial theorem_witness(int n, int d, int k);

struct AssChain {
  std::vector<std::vector<PrimeSupport>> entries; // entries[k-1] = Ass(S/I^k)

  int depth() const { return static_cast<int>(entries.size()); }
  const std::vector<PrimeSupport>& at(int k) const { return entries.at(k - 1); }
  bool constant() const;
  /// Smallest k >= 2 with Ass(S/I^k) != Ass(S/I), or 0 if none computed.
  int first_growth() const;

  bool operator==(const AssChain&) const = default;
};

AssChain ass_chain(const MonomialIdeal& ideal, int max_power);

enum class NtfStatus {
  torsion_free_up_to_k,   // chain constant for the checked powers only
  fails_at_k,             // chain grows at a specific power
  certified_by_bipartite, // exact: edge ideal of a bipartite graph
};

struct NtfVerdict {
  NtfStatus status = NtfStatus::torsion_free_up_to_k;
  int checked_up_to = 0;
  std::optional<int> fails_at;
  std::optional<PrimeSupport> offending;
  std::vector<int> side_a, side_b; // bipartition, when certified
  std::vector<int> odd_walk;       // odd closed walk, when one exists
  std::optional<AssChain> chain;
};

/// Bounded normally-torsion-free check. When `graph` is supplied it must
/// satisfy edge_ideal(*graph) == ideal; bipartiteness then certifies the
/// verdict exactly, otherwise the chain up to `max_power` decides.
NtfVerdict is_normally_torsion_free(const MonomialIdeal& ideal, int max_power,
                                    const Graph* graph = nullptr);

struct AssTheoremRow {
  int k = 0;
  bool pass = false;
  std::vector<PrimeSupport> expected, actual;
};

struct AssTheoremReport {
  int n = 0, d = 0, max_power = 0;
  bool bipartite_branch = false; // d+2 > n-d-1
  std::vector<AssTheoremRow> rows;
  bool all_pass = false;
};

/// Checks, for the anti-d-path edge ideal, that Ass(S/I) consists of the
/// window-complement primes and that higher powers add exactly the maximal
/// ideal when d+2 <= n-d-1 and nothing otherwise.
AssTheoremReport verify_antipath_ass_theorem(int n, int d, int max_power);

} // namespace epow
