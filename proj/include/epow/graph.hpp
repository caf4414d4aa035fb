#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "epow/ideal.hpp"

namespace epow {

/// Finite simple graph on the vertex set {1..n}.
class Graph {
public:
  Graph(int n, std::vector<std::pair<int, int>> edges);
  static Graph empty(int n) { return Graph(n, {}); }

  int order() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::size_t num_edges() const { return edges_.size(); }
  bool has_edge(int i, int j) const;
  std::uint64_t neighbors_mask(int v) const { return adj_[v - 1]; }

  Graph complement() const;

  bool operator==(const Graph&) const = default;

private:
  int n_;
  std::vector<std::pair<int, int>> edges_; // i < j, sorted
  std::vector<std::uint64_t> adj_;
};

/// Union of the complete graphs on {t,...,t+d} for t = 1..n-d: vertices i<j
/// are adjacent iff j - i <= d.
Graph d_path(int n, int d);

/// Edges {1,i} for i = 2..n.
Graph star_graph(int n);

/// The squarefree quadratic ideal (x_i x_j : {i,j} an edge).
MonomialIdeal edge_ideal(const Graph& g);

/// Inverse of edge_ideal; requires all generators squarefree of degree 2.
Graph graph_of_quadratic_ideal(const MonomialIdeal& ideal);

/// Ideal of all squarefree degree-2 monomials w with w >=_lex v.
/// `v` must be squarefree of degree 2.
MonomialIdeal lexsegment_initial(const Monomial& v);

/// Ideal of all squarefree degree-2 monomials w with w <=_lex u.
MonomialIdeal lexsegment_final(const Monomial& u);

struct BipartitionResult {
  bool bipartite = false;
  std::vector<int> side_a, side_b; // valid 2-coloring when bipartite
  std::vector<int> odd_walk;       // closed odd walk (first->...->last->first)
};

BipartitionResult is_bipartite(const Graph& g);

/// Chordality via maximum-cardinality search and perfect-elimination check;
/// ties broken toward the smallest vertex index.
bool is_chordal(const Graph& g);

/// All inclusion-maximal independent sets, each sorted ascending; the list is
/// sorted lexicographically. Guarded at n <= 24.
std::vector<std::vector<int>> maximal_independent_sets(const Graph& g);

/// Minimal primes of edge_ideal(g): complements of the maximal independent
/// sets, i.e. the minimal vertex covers.
std::vector<PrimeSupport> minimal_vertex_cover_primes(const Graph& g);

} // namespace epow
