#include "epow/linear_quotients.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <unordered_set>

#include "epow/graph.hpp"
#include "epow/taylor.hpp"

namespace epow {

std::uint64_t binomial(long long a, long long b) {
  if (b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  unsigned __int128 r = 1;
  for (long long i = 1; i <= b; ++i) {
    r = r * static_cast<unsigned __int128>(a - b + i);
    r /= static_cast<unsigned __int128>(i);
    if (r > static_cast<unsigned __int128>(UINT64_MAX))
      throw ResourceError("binomial coefficient exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

QuotientCertificate lq_certificate(const std::vector<Monomial>& order) {
  if (order.empty()) throw ArgumentError("empty generator sequence");
  const int n = order[0].ambient();
  const int deg = order[0].degree();
  for (const Monomial& u : order) {
    if (u.ambient() != n) throw DimensionError("mixed ambient rings");
    if (u.degree() != deg)
      throw ArgumentError("generators must share one degree");
  }

  QuotientCertificate cert;
  cert.order = order;
  cert.sets.reserve(order.size());
  cert.sets.push_back({});

  std::vector<std::uint64_t> qmask(order.size());
  std::vector<int> qdeg(order.size());
  for (std::size_t i = 1; i < order.size(); ++i) {
    const Monomial& u = order[i];
    std::uint64_t varmask = 0;
    for (std::size_t j = 0; j < i; ++j) {
      Monomial q = order[j].colon_quotient(u);
      qdeg[j] = q.degree();
      qmask[j] = q.support_mask();
      if (qdeg[j] == 0)
        throw ArgumentError("generator sequence is not an antichain");
      if (qdeg[j] == 1) varmask |= qmask[j];
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (qdeg[j] >= 2 && (qmask[j] & varmask) == 0) {
        // Not covered by any variable of the colon; report a minimal
        // generator of degree >= 2.
        std::vector<Monomial> quotients;
        for (std::size_t l = 0; l < i; ++l)
          quotients.push_back(order[l].colon_quotient(u));
        MonomialIdeal colon = MonomialIdeal::from_gens(n, std::move(quotients));
        for (const Monomial& g : colon.gens())
          if (g.degree() >= 2)
            throw NotLinearQuotientsError(i + 1, g.str());
        throw NotLinearQuotientsError(i + 1, order[j].colon_quotient(u).str());
      }
    }
    std::vector<int> vars;
    std::uint64_t bits = varmask;
    while (bits) {
      vars.push_back(std::countr_zero(bits) + 1);
      bits &= bits - 1;
    }
    cert.sets.push_back(std::move(vars));
  }
  return cert;
}

std::uint64_t betti_from_sets(const QuotientCertificate& cert, int i) {
  std::uint64_t total = 0;
  for (const auto& s : cert.sets)
    total += binomial(static_cast<long long>(s.size()), i);
  return total;
}

BettiTable betti_from_certificate(const QuotientCertificate& cert) {
  BettiTable table;
  if (cert.order.empty()) return table;
  const int deg = cert.order[0].degree();
  std::size_t max_size = 0;
  for (const auto& s : cert.sets) max_size = std::max(max_size, s.size());
  for (int i = 0; i <= static_cast<int>(max_size); ++i) {
    std::uint64_t b = betti_from_sets(cert, i);
    if (b == 0) continue;
    table.total[i] = b;
    table.graded[{i, deg + i}] = b;
  }
  return table;
}

std::vector<int> initial_lex_set(const Monomial& u, int t) {
  std::vector<int> vars;
  for (int r = 1; r < u.max_var(); ++r)
    if (u.exponent(r) + 1 <= t) vars.push_back(r);
  return vars;
}

int initial_lex_set_size(const Monomial& u, int t) {
  const int maxv = u.max_var();
  for (int j = 1; j < maxv; ++j)
    if (u.exponent(j) == t) return maxv - 2;
  return maxv - 1;
}

std::vector<int> final_lex_set(const Monomial& u, int t) {
  std::vector<int> vars;
  for (int r = u.min_var() + 1; r <= u.ambient(); ++r)
    if (u.exponent(r) + 1 <= t) vars.push_back(r);
  return vars;
}

int final_lex_set_size(const Monomial& u, int t) {
  const int n = u.ambient();
  const int minv = u.min_var();
  for (int j = minv + 1; j <= n; ++j)
    if (u.exponent(j) == t) return n - minv - 1;
  return n - minv;
}

MonomialIdeal antipath_power_generators(int n, int d, int k) {
  if (n < 1 || d < 1 || k < 1)
    throw ArgumentError("require n >= 1, d >= 1, k >= 1");
  std::vector<Monomial> gens;
  std::vector<int> lows(k), highs(k);

  auto emit = [&] {
    std::vector<int> idx(lows);
    idx.insert(idx.end(), highs.begin(), highs.end());
    gens.push_back(Monomial::from_indices(n, idx));
  };

  auto rec_high = [&](auto&& self, int pos) -> void {
    if (pos == k) {
      emit();
      return;
    }
    int lo = std::max(lows[pos] + d + 1, pos == 0 ? lows[k - 1] : highs[pos - 1]);
    for (int j = lo; j <= n; ++j) {
      highs[pos] = j;
      self(self, pos + 1);
    }
  };
  auto rec_low = [&](auto&& self, int pos) -> void {
    if (pos == k) {
      rec_high(rec_high, 0);
      return;
    }
    for (int i = pos == 0 ? 1 : lows[pos - 1]; i + d + 1 <= n; ++i) {
      lows[pos] = i;
      self(self, pos + 1);
    }
  };
  rec_low(rec_low, 0);
  return MonomialIdeal::from_gens(n, std::move(gens));
}

AntipathIndices antipath_decompose(const Monomial& u, int d, int k) {
  if (u.degree() != 2 * k)
    throw ArgumentError("generator degree must equal 2k");
  std::vector<int> idx;
  idx.reserve(2 * k);
  for (int r = 1; r <= u.ambient(); ++r)
    idx.insert(idx.end(), u.exponent(r), r);
  AntipathIndices parts;
  parts.lows.assign(idx.begin(), idx.begin() + k);
  parts.highs.assign(idx.begin() + k, idx.end());
  for (int r = 0; r < k; ++r)
    if (parts.lows[r] + d >= parts.highs[r])
      throw ArgumentError("not a generator of the anti-d-path power");
  return parts;
}

std::vector<int> antipath_set(const Monomial& u, int d, int k) {
  AntipathIndices parts = antipath_decompose(u, d, k);
  std::vector<bool> in(u.ambient() + 1, false);
  for (int s = 1; s < parts.lows[k - 1]; ++s) in[s] = true;
  for (int r = 0; r < k; ++r)
    for (int s = parts.lows[r] + d + 1; s < parts.highs[r]; ++s) in[s] = true;
  std::vector<int> vars;
  for (int s = 1; s <= u.ambient(); ++s)
    if (in[s]) vars.push_back(s);
  return vars;
}

namespace {
// Generators of the star power are x_1^t * w with w of degree t in
// x_2..x_n; iterate the w by nondecreasing index lists.
template <typename F>
void for_each_star_power_generator(int n, int t, F&& fn) {
  std::vector<int> w(t);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == t) {
      fn(w.back()); // max variable of w
      return;
    }
    for (int v = pos == 0 ? 2 : w[pos - 1]; v <= n; ++v) {
      w[pos] = v;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
}
} // namespace

std::uint64_t star_power_betti(int n, int t, int i) {
  if (n < 2 || t < 1) throw ArgumentError("require n >= 2, t >= 1");
  std::uint64_t total = 0;
  for_each_star_power_generator(
      n, t, [&](int maxw) { total += binomial(maxw - 2, i); });
  return total;
}

BettiTable star_power_betti_table(int n, int t) {
  BettiTable table;
  for (int i = 0; i <= n - 2; ++i) {
    std::uint64_t b = star_power_betti(n, t, i);
    if (b == 0) continue;
    table.total[i] = b;
    table.graded[{i, 2 * t + i}] = b;
  }
  return table;
}

namespace {
std::optional<BettiTable> try_oracle(const MonomialIdeal& ideal) {
  try {
    return taylor_betti(ideal);
  } catch (const ResourceError&) {
    return std::nullopt;
  }
}

AuditReport make_report(std::string claim, std::string instance,
                        const std::vector<std::uint64_t>& claimed,
                        const std::vector<std::uint64_t>& actual,
                        const std::optional<BettiTable>& oracle) {
  AuditReport report;
  report.claim = std::move(claim);
  report.instance = std::move(instance);
  report.all_match = true;
  for (std::size_t i = 0; i < claimed.size(); ++i) {
    AuditRow row;
    row.index = static_cast<int>(i);
    row.claimed = claimed[i];
    row.actual = actual[i];
    if (oracle) {
      row.oracle = oracle->beta(row.index);
      if (*row.oracle != row.actual) report.oracle_consistent = false;
    }
    row.claim_matches = row.claimed == row.actual;
    if (!row.claim_matches) report.all_match = false;
    report.rows.push_back(row);
  }
  return report;
}
} // namespace

AuditReport audit_star_power_formula(int n, int t) {
  if (n < 2 || t < 1) throw ArgumentError("require n >= 2, t >= 1");
  std::vector<std::uint64_t> claimed, actual;
  for (int i = 0; i <= n - 1; ++i) {
    std::uint64_t c = 0;
    for (int j = 2; j <= n; ++j)
      c += binomial(j + t - 2, t) * binomial(j - 2, i);
    claimed.push_back(c);
    actual.push_back(star_power_betti(n, t, i));
  }
  MonomialIdeal power = edge_ideal(star_graph(n)).power(t);
  return make_report(
      "star_power_generator_count_form",
      "star n=" + std::to_string(n) + " t=" + std::to_string(t), claimed,
      actual, try_oracle(power));
}

AuditReport audit_lexsegment_power_formula(LexsegmentKind kind,
                                           const Monomial& bound, int t) {
  if (t < 1) throw ArgumentError("require t >= 1");
  const int n = bound.ambient();
  MonomialIdeal ideal = kind == LexsegmentKind::initial
                            ? lexsegment_initial(bound)
                            : lexsegment_final(bound);
  MonomialIdeal power = ideal.power(t);
  std::vector<Monomial> order = kind == LexsegmentKind::initial
                                    ? decreasing_lex_order(power)
                                    : increasing_revlex_order(power);
  QuotientCertificate cert = lq_certificate(order);

  std::vector<std::uint64_t> claimed, actual;
  for (int i = 0; i <= n - 1; ++i) {
    std::uint64_t c = 0;
    for (const Monomial& u : order) {
      if (kind == LexsegmentKind::initial) {
        if (t == 1)
          c += binomial(u.max_var() - 2, i);
        else
          c += binomial(u.max_var() - 1, i) + binomial(u.max_var() - 2, i);
      } else {
        if (t == 1)
          c += binomial(n - u.min_var() - 1, i);
        else
          c += binomial(n - u.min_var(), i) + binomial(n - u.min_var() - 1, i);
      }
    }
    claimed.push_back(c);
    actual.push_back(betti_from_sets(cert, i));
  }
  std::string name = kind == LexsegmentKind::initial
                         ? "initial_lexsegment_power_betti_form"
                         : "final_lexsegment_power_betti_form";
  return make_report(std::move(name),
                     "bound=" + bound.str() + " n=" + std::to_string(n) +
                         " t=" + std::to_string(t),
                     claimed, actual, try_oracle(power));
}

std::optional<std::vector<Monomial>> find_lq_order(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw ArgumentError("zero ideal has no generators");
  const std::size_t m = ideal.num_gens();
  if (m > 20) throw ResourceError("linear-quotients order search guarded at 20 generators");
  if (ideal.common_degree() < 0)
    throw ArgumentError("generators must share one degree");
  const auto& gens = ideal.gens();

  // quotient g_j / gcd(g_j, g_i): variable index when of degree 1, and the
  // support mask either way.
  std::vector<std::vector<int>> qvar(m, std::vector<int>(m, 0));
  std::vector<std::vector<std::uint64_t>> qmask(
      m, std::vector<std::uint64_t>(m, 0));
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < m; ++i) {
      if (i == j) continue;
      Monomial q = gens[j].colon_quotient(gens[i]);
      qmask[j][i] = q.support_mask();
      if (q.degree() == 1) qvar[j][i] = q.max_var();
    }

  auto admissible = [&](std::uint32_t prefix, std::size_t i) {
    std::uint64_t varmask = 0;
    for (std::uint32_t s = prefix; s;) {
      std::size_t j = std::countr_zero(s);
      s &= s - 1;
      if (qvar[j][i]) varmask |= qmask[j][i];
    }
    for (std::uint32_t s = prefix; s;) {
      std::size_t j = std::countr_zero(s);
      s &= s - 1;
      if (!qvar[j][i] && (qmask[j][i] & varmask) == 0) return false;
    }
    return true;
  };

  std::unordered_set<std::uint32_t> dead;
  std::vector<std::size_t> chosen;
  const std::uint32_t all = m == 32 ? ~0u : (1u << m) - 1;

  auto dfs = [&](auto&& self, std::uint32_t prefix) -> bool {
    if (prefix == all) return true;
    if (dead.contains(prefix)) return false;
    for (std::size_t i = 0; i < m; ++i) {
      if (prefix >> i & 1) continue;
      if (!admissible(prefix, i)) continue;
      chosen.push_back(i);
      if (self(self, prefix | (1u << i))) return true;
      chosen.pop_back();
    }
    dead.insert(prefix);
    return false;
  };

  if (!dfs(dfs, 0)) return std::nullopt;
  std::vector<Monomial> order;
  order.reserve(m);
  for (std::size_t i : chosen) order.push_back(gens[i]);
  return order;
}

std::vector<Monomial> decreasing_lex_order(const MonomialIdeal& ideal) {
  return ideal.gens(); // canonical storage order
}

std::vector<Monomial> increasing_revlex_order(const MonomialIdeal& ideal) {
  std::vector<Monomial> order = ideal.gens();
  std::sort(order.begin(), order.end(), revlex_less);
  return order;
}

namespace {
QuotientCertificate closed_form_certificate(
    std::vector<Monomial> order,
    const std::function<std::vector<int>(const Monomial&)>& set_of) {
  QuotientCertificate cert;
  cert.sets.reserve(order.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    cert.sets.push_back(i == 0 ? std::vector<int>{} : set_of(order[i]));
  cert.order = std::move(order);
  return cert;
}
} // namespace

QuotientCertificate initial_lexsegment_certificate(const MonomialIdeal& power,
                                                   int t) {
  return closed_form_certificate(
      decreasing_lex_order(power),
      [t](const Monomial& u) { return initial_lex_set(u, t); });
}

QuotientCertificate final_lexsegment_certificate(const MonomialIdeal& power,
                                                 int t) {
  return closed_form_certificate(
      increasing_revlex_order(power),
      [t](const Monomial& u) { return final_lex_set(u, t); });
}

QuotientCertificate antipath_certificate(int n, int d, int k) {
  return closed_form_certificate(
      decreasing_lex_order(antipath_power_generators(n, d, k)),
      [d, k](const Monomial& u) { return antipath_set(u, d, k); });
}

} // namespace epow
