#pragma once

#include <optional>
#include <string>
#include <vector>

#include "epow/betti.hpp"
#include "epow/ideal.hpp"

namespace epow {

/// Witness that an ordered generating sequence has linear quotients:
/// for each position i, `sets[i]` lists the variable indices generating
/// (u_1,...,u_{i-1}) : u_i. `sets[0]` is always empty.
struct QuotientCertificate {
  std::vector<Monomial> order;
  std::vector<std::vector<int>> sets;
};

/// Computes each successive colon ideal and extracts its variables.
/// Requires an equigenerated antichain; throws NotLinearQuotientsError when
/// a colon has a minimal generator of degree >= 2.
QuotientCertificate lq_certificate(const std::vector<Monomial>& order);

/// beta_i = sum over positions of binom(|set|, i).
std::uint64_t betti_from_sets(const QuotientCertificate& cert, int i);

/// Full table from a certificate; the graded part sits on the diagonal
/// j = (generator degree) + i, as linear quotients force.
BettiTable betti_from_certificate(const QuotientCertificate& cert);

/// Variables x_r, r < max(u), with nu_r(u) + 1 <= t. Describes the colon at
/// positions >= 2 when the powers of an initial lexsegment ideal are
/// processed in decreasing lexicographic order.
std::vector<int> initial_lex_set(const Monomial& u, int t);

/// max(u)-2 if some variable below max(u) has exponent exactly t in u,
/// else max(u)-1.
int initial_lex_set_size(const Monomial& u, int t);

/// Variables x_r, r > min(u), with nu_r(u) + 1 <= t (increasing revlex
/// processing order for powers of a final lexsegment ideal).
std::vector<int> final_lex_set(const Monomial& u, int t);

/// n-min(u)-1 if some variable above min(u) has exponent exactly t in u,
/// else n-min(u).
int final_lex_set_size(const Monomial& u, int t);

/// Generators of the k-th power of the edge ideal of the complement of a
/// d-path, enumerated directly as x_{i_1}..x_{i_k} x_{j_1}..x_{j_k} with
/// i_1<=...<=i_k<=j_1<=...<=j_k and i_r + d < j_r.
MonomialIdeal antipath_power_generators(int n, int d, int k);

/// Index decomposition of a generator of such a power: the sorted index
/// multiset split into the k low and k high entries.
struct AntipathIndices {
  std::vector<int> lows, highs;
};
AntipathIndices antipath_decompose(const Monomial& u, int d, int k);

/// Colon variables for a generator of the k-th anti-d-path power under the
/// decreasing lexicographic order: {1..i_k-1} together with every s strictly
/// between i_r + d and j_r.
std::vector<int> antipath_set(const Monomial& u, int d, int k);

/// beta_i of the t-th power of the star edge ideal (x_1x_2,...,x_1x_n),
/// by direct enumeration of the generators x_1^t * w, deg(w) = t.
std::uint64_t star_power_betti(int n, int t, int i);
BettiTable star_power_betti_table(int n, int t);

/// One homological index of an audited closed-form claim.
struct AuditRow {
  int index = 0;
  std::uint64_t claimed = 0;
  std::uint64_t actual = 0;
  std::optional<std::uint64_t> oracle;
  bool claim_matches = false;
};

struct AuditReport {
  std::string claim;
  std::string instance;
  std::vector<AuditRow> rows;
  bool all_match = false;        // claimed == actual on every row
  bool oracle_consistent = true; // actual == oracle wherever the oracle ran
};

/// Audits the tabulated closed form
///   beta_i(I^t) = sum_{j=2}^{n} binom(j+t-2, t) * binom(j-2, i)
/// for the star edge ideal against direct enumeration and the homology
/// oracle. Known to overcount; the report records the mismatch.
AuditReport audit_star_power_formula(int n, int t);

enum class LexsegmentKind { initial, final };

/// Audits the summation forms for lexsegment powers: for t = 1 the single
/// binomial per generator, for t > 1 the two-binomial summand. The t > 1
/// form disagrees with the certificate Betti numbers on small cases; the
/// report records per-index verdicts.
AuditReport audit_lexsegment_power_formula(LexsegmentKind kind,
                                           const Monomial& bound, int t);

/// Exhaustive backtracking search (memoized over prefix sets) for an order
/// with linear quotients. Test support; guarded at 20 generators.
std::optional<std::vector<Monomial>> find_lq_order(const MonomialIdeal& ideal);

/// The orders under which the closed-form sets above apply.
std::vector<Monomial> decreasing_lex_order(const MonomialIdeal& ideal);
std::vector<Monomial> increasing_revlex_order(const MonomialIdeal& ideal);

/// Certificates assembled from the closed-form sets (position 1 empty).
QuotientCertificate initial_lexsegment_certificate(const MonomialIdeal& power,
                                                   int t);
QuotientCertificate final_lexsegment_certificate(const MonomialIdeal& power,
                                                 int t);
QuotientCertificate antipath_certificate(int n, int d, int k);

} // namespace epow
