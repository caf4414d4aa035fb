#pragma once

#include <string>

#include <json.hpp>

#include "epow/associated_primes.hpp"
#include "epow/betti.hpp"
#include "epow/graph.hpp"
#include "epow/ideal.hpp"
#include "epow/linear_quotients.hpp"

namespace epow {

using ordered_json = nlohmann::ordered_json;

// Canonical JSON forms shared by the CLI and the file formats: a monomial is
// its exponent array, an ideal {"n", "gens"} with generators in decreasing
// lexicographic order, a graph {"n", "edges"} with sorted edges.
ordered_json json_of(const Monomial& m);
ordered_json json_of(const MonomialIdeal& ideal);
ordered_json json_of(const Graph& graph);
ordered_json json_of(const PrimeSupport& support);
ordered_json json_of(const BettiTable& table);
ordered_json json_of(const QuotientCertificate& cert);
ordered_json json_of(const AuditReport& report);
ordered_json json_of(const AssChain& chain);
ordered_json json_of(const NtfVerdict& verdict);
ordered_json json_of(const AssTheoremReport& report);
ordered_json json_of(const TwoMethodReport& report);

Monomial monomial_from_json(const ordered_json& j);
MonomialIdeal ideal_from_json(const ordered_json& j);
Graph graph_from_json(const ordered_json& j);

/// Parses "x1x4", "x1^2*x2x3" or "1" into a monomial with ambient n.
Monomial parse_monomial(const std::string& text, int n);

/// "kind,i,j,beta" rows: totals with empty j, graded entries with both.
std::string betti_csv(const BettiTable& table);

} // namespace epow
