#include "epow/json_io.hpp"

#include <cctype>
#include <sstream>

namespace epow {

ordered_json json_of(const Monomial& m) { return m.exponents(); }

ordered_json json_of(const MonomialIdeal& ideal) {
  ordered_json gens = ordered_json::array();
  for (const Monomial& g : ideal.gens()) gens.push_back(json_of(g));
  return {{"n", ideal.ambient()}, {"gens", std::move(gens)}};
}

ordered_json json_of(const Graph& graph) {
  ordered_json edges = ordered_json::array();
  for (auto [i, j] : graph.edges()) edges.push_back({i, j});
  return {{"n", graph.order()}, {"edges", std::move(edges)}};
}

ordered_json json_of(const PrimeSupport& support) { return support.vars; }

ordered_json json_of(const BettiTable& table) {
  ordered_json total = ordered_json::object();
  for (const auto& [i, b] : table.total) total[std::to_string(i)] = b;
  ordered_json graded = ordered_json::object();
  for (const auto& [key, b] : table.graded)
    graded[std::to_string(key.first) + "," + std::to_string(key.second)] = b;
  return {{"total", std::move(total)}, {"graded", std::move(graded)}};
}

ordered_json json_of(const QuotientCertificate& cert) {
  ordered_json order = ordered_json::array();
  for (const Monomial& u : cert.order) order.push_back(json_of(u));
  return {{"order", std::move(order)}, {"sets", cert.sets}};
}

ordered_json json_of(const AuditReport& report) {
  ordered_json rows = ordered_json::array();
  for (const AuditRow& row : report.rows) {
    ordered_json r{{"i", row.index},
                   {"claimed", row.claimed},
                   {"actual", row.actual},
                   {"verdict", row.claim_matches ? "agree" : "mismatch"}};
    if (row.oracle) r["oracle"] = *row.oracle;
    rows.push_back(std::move(r));
  }
  return {{"claim", report.claim},
          {"instance", report.instance},
          {"rows", std::move(rows)},
          {"all_match", report.all_match},
          {"oracle_consistent", report.oracle_consistent},
          {"status", report.all_match ? "agree" : "documented-discrepancy"}};
}

ordered_json json_of(const AssChain& chain) {
  ordered_json entries = ordered_json::object();
  for (int k = 1; k <= chain.depth(); ++k) {
    ordered_json primes = ordered_json::array();
    for (const PrimeSupport& p : chain.at(k)) primes.push_back(json_of(p));
    entries[std::to_string(k)] = std::move(primes);
  }
  return {{"entries", std::move(entries)},
          {"constant", chain.constant()},
          {"first_growth", chain.first_growth()}};
}

ordered_json json_of(const NtfVerdict& verdict) {
  ordered_json j;
  switch (verdict.status) {
    case NtfStatus::torsion_free_up_to_k:
      j["status"] = "torsion_free_up_to_K";
      break;
    case NtfStatus::fails_at_k:
      j["status"] = "fails_at_k";
      break;
    case NtfStatus::certified_by_bipartite:
      j["status"] = "certified_by_bipartite";
      break;
  }
  j["checked_up_to"] = verdict.checked_up_to;
  if (verdict.fails_at) j["fails_at"] = *verdict.fails_at;
  if (verdict.offending) j["offending_prime"] = json_of(*verdict.offending);
  if (!verdict.side_a.empty() || !verdict.side_b.empty()) {
    j["bipartition"] = {{"side_a", verdict.side_a}, {"side_b", verdict.side_b}};
  }
  if (!verdict.odd_walk.empty()) j["odd_walk"] = verdict.odd_walk;
  if (verdict.chain) j["chain"] = json_of(*verdict.chain);
  return j;
}

ordered_json json_of(const AssTheoremReport& report) {
  ordered_json rows = ordered_json::array();
  for (const AssTheoremRow& row : report.rows) {
    ordered_json expected = ordered_json::array();
    for (const PrimeSupport& p : row.expected) expected.push_back(json_of(p));
    ordered_json actual = ordered_json::array();
    for (const PrimeSupport& p : row.actual) actual.push_back(json_of(p));
    rows.push_back({{"k", row.k},
                    {"pass", row.pass},
                    {"expected", std::move(expected)},
                    {"actual", std::move(actual)}});
  }
  return {{"n", report.n},
          {"d", report.d},
          {"K", report.max_power},
          {"branch", report.bipartite_branch ? "bipartite" : "non_bipartite"},
          {"rows", std::move(rows)},
          {"all_pass", report.all_pass}};
}

ordered_json json_of(const TwoMethodReport& report) {
  ordered_json associated = ordered_json::array();
  for (const PrimeSupport& p : report.associated) associated.push_back(json_of(p));
  ordered_json disagreements = ordered_json::array();
  for (const PrimeSupport& p : report.disagreements)
    disagreements.push_back(json_of(p));
  return {{"supports_checked", report.supports_checked},
          {"associated", std::move(associated)},
          {"disagreements", std::move(disagreements)},
          {"agree", report.disagreements.empty()}};
}

Monomial monomial_from_json(const ordered_json& j) {
  return Monomial(j.get<std::vector<int>>());
}

MonomialIdeal ideal_from_json(const ordered_json& j) {
  const int n = j.at("n").get<int>();
  std::vector<Monomial> gens;
  for (const auto& g : j.at("gens")) gens.push_back(monomial_from_json(g));
  return MonomialIdeal::from_gens(n, std::move(gens));
}

Graph graph_from_json(const ordered_json& j) {
  const int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges"))
    edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return Graph(n, std::move(edges));
}

Monomial parse_monomial(const std::string& text, int n) {
  if (text == "1") return Monomial::one(n);
  std::vector<int> exps(n, 0);
  std::size_t pos = 0;
  auto read_int = [&]() {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (start == pos) throw ArgumentError("malformed monomial: " + text);
    return std::stoi(text.substr(start, pos - start));
  };
  while (pos < text.size()) {
    if (text[pos] == '*' || text[pos] == ' ') {
      ++pos;
      continue;
    }
    if (text[pos] != 'x') throw ArgumentError("malformed monomial: " + text);
    ++pos;
    const int var = read_int();
    if (var < 1 || var > n)
      throw ArgumentError("variable index out of range in: " + text);
    int exp = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      exp = read_int();
    }
    exps[var - 1] += exp;
  }
  return Monomial(std::move(exps));
}

std::string betti_csv(const BettiTable& table) {
  std::ostringstream out;
  out << "kind,i,j,beta\n";
  for (const auto& [i, b] : table.total)
    out << "total," << i << ",," << b << "\n";
  for (const auto& [key, b] : table.graded)
    out << "graded," << key.first << "," << key.second << "," << b << "\n";
  return out.str();
}

} // namespace epow
