#include "epow/associated_primes.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace epow {

namespace {

constexpr std::size_t kLatticeCellBudget = std::size_t{1} << 26;

// Mixed-radix enumeration of the divisors of a bound monomial; index i
// encodes the exponent vector through per-variable strides.
struct DivisorLattice {
  int n;
  std::vector<int> bound;
  std::vector<std::size_t> stride;
  std::size_t size = 1;

  explicit DivisorLattice(const Monomial& b)
      : n(b.ambient()), bound(b.exponents()), stride(n) {
    for (int i = 0; i < n; ++i) {
      stride[i] = size;
      size *= static_cast<std::size_t>(bound[i]) + 1;
      if (size > kLatticeCellBudget)
        throw ResourceError("divisor lattice exceeds the cell budget");
    }
  }

  std::size_t index_of(const Monomial& m) const {
    std::size_t idx = 0;
    for (int i = 0; i < n; ++i) idx += stride[i] * m.exponents()[i];
    return idx;
  }

  Monomial monomial_at(std::size_t idx) const {
    std::vector<int> e(n);
    for (int i = 0; i < n; ++i)
      e[i] = static_cast<int>(idx / stride[i] % (bound[i] + 1));
    return Monomial(std::move(e));
  }

  int digit(std::size_t idx, int i) const {
    return static_cast<int>(idx / stride[i] % (bound[i] + 1));
  }

  // membership[idx] == 1 iff the divisor at idx is in the ideal generated
  // by `gens` (every generator must divide the bound).
  std::vector<char> membership(const std::vector<Monomial>& gens) const {
    std::vector<char> in(size, 0);
    for (const Monomial& g : gens) in[index_of(g)] = 1;
    for (std::size_t idx = 0; idx < size; ++idx) {
      if (in[idx]) continue;
      for (int i = 0; i < n; ++i) {
        if (bound[i] == 0) continue;
        if (digit(idx, i) > 0 && in[idx - stride[i]]) {
          in[idx] = 1;
          break;
        }
      }
    }
    return in;
  }
};

PrimeSupport support_from_mask(std::uint32_t mask) {
  std::vector<int> vars;
  while (mask) {
    vars.push_back(std::countr_zero(mask) + 1);
    mask &= mask - 1;
  }
  return PrimeSupport{std::move(vars)};
}

void check_proper(const MonomialIdeal& j) {
  if (j.is_zero() || j.is_unit())
    throw ArgumentError("associated primes need a proper nonzero ideal");
  if (j.ambient() > kAssMaxVariables)
    throw ResourceError("associated-prime search guarded at " +
                        std::to_string(kAssMaxVariables) + " variables");
}

// Generators localized at the support: exponents outside are dropped.
// Returns nothing when some generator becomes a unit.
std::optional<std::vector<Monomial>> localized_gens(
    const std::vector<Monomial>& gens, std::uint64_t keep_mask) {
  std::vector<Monomial> out;
  std::unordered_set<Monomial, MonomialHash> seen;
  out.reserve(gens.size());
  for (const Monomial& g : gens) {
    Monomial r = g.restrict_to(keep_mask);
    if (r.is_one()) return std::nullopt;
    if (seen.insert(r).second) out.push_back(std::move(r));
  }
  return out;
}

// First divisor w of lcm(loc_gens) with w outside the localized ideal and
// x_v * w inside it for every v in the support; the multiplication is
// capped at the bound, which is exact because all generators divide it.
std::optional<Monomial> socle_witness(const std::vector<Monomial>& loc_gens,
                                      const PrimeSupport& a) {
  Monomial bound = loc_gens.front();
  for (const Monomial& g : loc_gens) bound = bound.lcm(g);
  DivisorLattice lattice(bound);
  std::vector<char> in = lattice.membership(loc_gens);
  for (std::size_t idx = 0; idx < lattice.size; ++idx) {
    if (in[idx]) continue;
    bool socle = true;
    for (int v : a.vars) {
      const int i = v - 1;
      const std::size_t up =
          lattice.digit(idx, i) < lattice.bound[i] ? idx + lattice.stride[i] : idx;
      if (!in[up]) {
        socle = false;
        break;
      }
    }
    if (socle) return lattice.monomial_at(idx);
  }
  return std::nullopt;
}

// Shared state for the global witness search over one ideal.
struct WitnessSearcher {
  explicit WitnessSearcher(const MonomialIdeal& j)
      : ideal(j), lattice(j.lcm_of_gens()), in(lattice.membership(j.gens())) {}

  const MonomialIdeal& ideal;
  DivisorLattice lattice;
  std::vector<char> in;

  // m is a witness for P_A iff x_v m lies in J for every v in A while the
  // restriction m|_A stays outside the localization J_A; together these say
  // J : m = P_A exactly.
  std::optional<Monomial> find(const PrimeSupport& a) const {
    auto loc = localized_gens(ideal.gens(), a.mask());
    if (!loc) return std::nullopt; // some generator survives outside A
    Monomial loc_bound = loc->front();
    for (const Monomial& g : *loc) loc_bound = loc_bound.lcm(g);
    DivisorLattice loc_lattice(loc_bound);
    std::vector<char> in_loc = loc_lattice.membership(*loc);

    std::vector<int> dig(lattice.n, 0);
    for (std::size_t idx = 0; idx < lattice.size; ++idx) {
      std::size_t proj = 0;
      for (int v : a.vars)
        proj += loc_lattice.stride[v - 1] *
                std::min(dig[v - 1], loc_lattice.bound[v - 1]);
      bool ok = !in_loc[proj];
      if (ok) {
        for (int v : a.vars) {
          const int i = v - 1;
          const std::size_t up =
              dig[i] < lattice.bound[i] ? idx + lattice.stride[i] : idx;
          if (!in[up]) {
            ok = false;
            break;
          }
        }
      }
      if (ok) return lattice.monomial_at(idx);
      // odometer step
      for (int i = 0; i < lattice.n; ++i) {
        if (dig[i] < lattice.bound[i]) {
          ++dig[i];
          break;
        }
        dig[i] = 0;
      }
    }
    return std::nullopt;
  }
};

} // namespace

std::vector<PrimeSupport> ass_primes(const MonomialIdeal& j) {
  check_proper(j);
  const int n = j.ambient();
  std::vector<PrimeSupport> result;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    PrimeSupport a = support_from_mask(mask);
    auto loc = localized_gens(j.gens(), a.mask());
    if (!loc) continue;
    if (socle_witness(*loc, a)) result.push_back(std::move(a));
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::optional<Monomial> witness_search(const MonomialIdeal& j,
                                       const PrimeSupport& a) {
  check_proper(j);
  if (a.empty()) throw ArgumentError("empty support has no witness");
  for (int v : a.vars)
    if (v < 1 || v > j.ambient())
      throw ArgumentError("support index out of range");
  return WitnessSearcher(j).find(a);
}

TwoMethodReport two_method_ass_report(const MonomialIdeal& j) {
  check_proper(j);
  const int n = j.ambient();
  WitnessSearcher searcher(j);
  TwoMethodReport report;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    PrimeSupport a = support_from_mask(mask);
    auto loc = localized_gens(j.gens(), a.mask());
    const bool by_socle = loc && socle_witness(*loc, a).has_value();
    const bool by_witness = searcher.find(a).has_value();
    ++report.supports_checked;
    if (by_socle) report.associated.push_back(a);
    if (by_socle != by_witness) report.disagreements.push_back(a);
  }
  std::sort(report.associated.begin(), report.associated.end());
  std::sort(report.disagreements.begin(), report.disagreements.end());
  return report;
}

Monomial theorem_witness(int n, int d, int k) {
  if (d < 1 || k < 2) throw ArgumentError("require d >= 1 and k >= 2");
  if (d + 2 > n - d - 1)
    throw ArgumentError("the maximal ideal is not associated when d+2 > n-d-1");
  std::vector<int> idx;
  if (k <= d + 2) {
    for (int i = 0; i < k - 1; ++i) idx.push_back(1);
    for (int s = d + 2; s <= d + k; ++s) idx.push_back(s);
    idx.push_back(n);
  } else {
    if (2 * k - 1 > n)
      throw ArgumentError("witness form for k > d+2 needs 2k-1 <= n");
    for (int s = 1; s <= 2 * k - 1; ++s) idx.push_back(s);
  }
  Monomial m = Monomial::from_indices(n, idx);

  MonomialIdeal power = edge_ideal(d_path(n, d).complement()).power(k);
  if (power.contains(m))
    throw std::logic_error("witness lies in the power");
  if (power.colon(m) != prime_ideal(PrimeSupport::full(n), n))
    throw std::logic_error("witness colon is not the maximal ideal");
  return m;
}

bool AssChain::constant() const {
  for (const auto& e : entries)
    if (e != entries.front()) return false;
  return true;
}

int AssChain::first_growth() const {
  for (std::size_t i = 1; i < entries.size(); ++i)
    if (entries[i] != entries[0]) return static_cast<int>(i) + 1;
  return 0;
}

AssChain ass_chain(const MonomialIdeal& ideal, int max_power) {
  if (max_power < 1) throw ArgumentError("max_power must be >= 1");
  AssChain chain;
  MonomialIdeal power = ideal;
  for (int k = 1; k <= max_power; ++k) {
    if (k > 1) power = power.times(ideal);
    chain.entries.push_back(ass_primes(power));
  }
  return chain;
}

NtfVerdict is_normally_torsion_free(const MonomialIdeal& ideal, int max_power,
                                    const Graph* graph) {
  NtfVerdict verdict;
  verdict.checked_up_to = max_power;

  if (graph != nullptr) {
    if (edge_ideal(*graph) != ideal)
      throw ArgumentError("graph does not match the ideal");
    BipartitionResult bip = is_bipartite(*graph);
    if (bip.bipartite) {
      verdict.status = NtfStatus::certified_by_bipartite;
      verdict.side_a = std::move(bip.side_a);
      verdict.side_b = std::move(bip.side_b);
      return verdict;
    }
    verdict.odd_walk = std::move(bip.odd_walk);
  }

  AssChain chain = ass_chain(ideal, max_power);
  const int growth = chain.first_growth();
  if (growth != 0) {
    verdict.status = NtfStatus::fails_at_k;
    verdict.fails_at = growth;
    for (const PrimeSupport& p : chain.at(growth))
      if (std::find(chain.at(1).begin(), chain.at(1).end(), p) ==
          chain.at(1).end()) {
        verdict.offending = p;
        break;
      }
  } else {
    verdict.status = NtfStatus::torsion_free_up_to_k;
  }
  verdict.chain = std::move(chain);
  return verdict;
}

AssTheoremReport verify_antipath_ass_theorem(int n, int d, int max_power) {
  if (d < 1 || n < d + 2) throw ArgumentError("require d >= 1 and n >= d+2");
  AssTheoremReport report;
  report.n = n;
  report.d = d;
  report.max_power = max_power;
  report.bipartite_branch = d + 2 > n - d - 1;

  std::vector<PrimeSupport> min_primes;
  for (int t = 1; t <= n - d; ++t) {
    std::vector<int> vars;
    for (int s = 1; s <= n; ++s)
      if (s < t || s > t + d) vars.push_back(s);
    min_primes.push_back(PrimeSupport{std::move(vars)});
  }
  std::sort(min_primes.begin(), min_primes.end());

  std::vector<PrimeSupport> with_max = min_primes;
  with_max.push_back(PrimeSupport::full(n));
  std::sort(with_max.begin(), with_max.end());

  AssChain chain = ass_chain(edge_ideal(d_path(n, d).complement()), max_power);
  report.all_pass = true;
  for (int k = 1; k <= max_power; ++k) {
    AssTheoremRow row;
    row.k = k;
    row.expected =
        (k == 1 || report.bipartite_branch) ? min_primes : with_max;
    row.actual = chain.at(k);
    row.pass = row.expected == row.actual;
    if (!row.pass) report.all_pass = false;
    report.rows.push_back(std::move(row));
  }
  return report;
}

} // namespace epow
