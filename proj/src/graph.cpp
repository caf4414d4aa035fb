#include "epow/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>

namespace epow {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 1 || n > kMaxVariables)
    throw ResourceError("vertex count must be in 1.." +
                        std::to_string(kMaxVariables));
  adj_.assign(n, 0);
  for (auto& [i, j] : edges) {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > n) throw ArgumentError("edge endpoint out of range");
    if (i == j) throw ArgumentError("loops are not allowed");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (auto [i, j] : edges) {
    adj_[i - 1] |= std::uint64_t{1} << (j - 1);
    adj_[j - 1] |= std::uint64_t{1} << (i - 1);
  }
  edges_ = std::move(edges);
}

bool Graph::has_edge(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) return false;
  return adj_[i - 1] >> (j - 1) & 1;
}

Graph Graph::complement() const {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (!has_edge(i, j)) edges.emplace_back(i, j);
  return Graph(n_, std::move(edges));
}

Graph d_path(int n, int d) {
  if (n < 1) throw ArgumentError("n must be positive");
  if (d < 1) throw ArgumentError("d must be positive");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n && j - i <= d; ++j) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

Graph star_graph(int n) {
  if (n < 1) throw ArgumentError("n must be positive");
  std::vector<std::pair<int, int>> edges;
  for (int i = 2; i <= n; ++i) edges.emplace_back(1, i);
  return Graph(n, std::move(edges));
}

MonomialIdeal edge_ideal(const Graph& g) {
  std::vector<Monomial> gens;
  gens.reserve(g.num_edges());
  for (auto [i, j] : g.edges())
    gens.push_back(Monomial::from_indices(g.order(), {i, j}));
  return MonomialIdeal::from_gens(g.order(), std::move(gens));
}

Graph graph_of_quadratic_ideal(const MonomialIdeal& ideal) {
  std::vector<std::pair<int, int>> edges;
  for (const Monomial& g : ideal.gens()) {
    if (g.degree() != 2 || !g.is_squarefree())
      throw ArgumentError("generator is not squarefree of degree 2");
    auto s = g.support();
    edges.emplace_back(s[0], s[1]);
  }
  return Graph(ideal.ambient(), std::move(edges));
}

namespace {
void check_lexsegment_bound(const Monomial& m) {
  if (m.degree() != 2 || !m.is_squarefree())
    throw ArgumentError("lexsegment bound must be squarefree of degree 2");
}
} // namespace

MonomialIdeal lexsegment_initial(const Monomial& v) {
  check_lexsegment_bound(v);
  const int n = v.ambient();
  std::vector<Monomial> gens;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Monomial w = Monomial::from_indices(n, {i, j});
      if (lex_cmp(w, v) >= 0) gens.push_back(std::move(w));
    }
  return MonomialIdeal::from_gens(n, std::move(gens));
}

MonomialIdeal lexsegment_final(const Monomial& u) {
  check_lexsegment_bound(u);
  const int n = u.ambient();
  std::vector<Monomial> gens;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Monomial w = Monomial::from_indices(n, {i, j});
      if (lex_cmp(w, u) <= 0) gens.push_back(std::move(w));
    }
  return MonomialIdeal::from_gens(n, std::move(gens));
}

BipartitionResult is_bipartite(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(n + 1, -1), parent(n + 1, 0), depth(n + 1, 0);
  BipartitionResult res;

  for (int root = 1; root <= n; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      std::uint64_t nb = g.neighbors_mask(u);
      while (nb) {
        int v = std::countr_zero(nb) + 1;
        nb &= nb - 1;
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          parent[v] = u;
          depth[v] = depth[u] + 1;
          q.push(v);
        } else if (color[v] == color[u]) {
          // Odd closed walk: u -> ... -> w -> ... -> v -> u through the BFS
          // tree, where w is the common ancestor.
          std::vector<int> up_u, up_v;
          int a = u, b = v;
          while (depth[a] > depth[b]) { up_u.push_back(a); a = parent[a]; }
          while (depth[b] > depth[a]) { up_v.push_back(b); b = parent[b]; }
          while (a != b) {
            up_u.push_back(a); a = parent[a];
            up_v.push_back(b); b = parent[b];
          }
          up_u.push_back(a);
          res.odd_walk = up_u;
          res.odd_walk.insert(res.odd_walk.end(), up_v.rbegin(), up_v.rend());
          res.bipartite = false;
          return res;
        }
      }
    }
  }

  res.bipartite = true;
  for (int v = 1; v <= n; ++v)
    (color[v] == 0 ? res.side_a : res.side_b).push_back(v);
  return res;
}

bool is_chordal(const Graph& g) {
  const int n = g.order();
  // Maximum-cardinality search; the reversed visit order is a perfect
  // elimination ordering iff the graph is chordal.
  std::vector<int> weight(n + 1, 0), order;
  std::vector<bool> seen(n + 1, false);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 1; v <= n; ++v)
      if (!seen[v] && (best == -1 || weight[v] > weight[best])) best = v;
    seen[best] = true;
    order.push_back(best);
    std::uint64_t nb = g.neighbors_mask(best);
    while (nb) {
      int v = std::countr_zero(nb) + 1;
      nb &= nb - 1;
      if (!seen[v]) ++weight[v];
    }
  }

  std::vector<int> pos(n + 1, 0);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  // Eliminate in reverse visit order: check that the earlier-visited
  // neighbors of each vertex form a clique with the latest of them.
  for (int i = n - 1; i >= 0; --i) {
    int v = order[i];
    std::uint64_t earlier = 0;
    std::uint64_t nb = g.neighbors_mask(v);
    int latest = -1;
    while (nb) {
      int u = std::countr_zero(nb) + 1;
      nb &= nb - 1;
      if (pos[u] < i) {
        earlier |= std::uint64_t{1} << (u - 1);
        if (latest == -1 || pos[u] > pos[latest]) latest = u;
      }
    }
    if (latest == -1) continue;
    std::uint64_t rest = earlier & ~(std::uint64_t{1} << (latest - 1));
    if ((rest & ~g.neighbors_mask(latest)) != 0) return false;
  }
  return true;
}

namespace {
// Bron-Kerbosch with pivoting over an adjacency given by bitmasks.
void bron_kerbosch(const std::vector<std::uint64_t>& adj, std::uint64_t r,
                   std::uint64_t p, std::uint64_t x,
                   std::vector<std::uint64_t>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  std::uint64_t px = p | x;
  int pivot = -1, best = -1;
  std::uint64_t it = px;
  while (it) {
    int v = std::countr_zero(it);
    it &= it - 1;
    int cnt = std::popcount(p & adj[v]);
    if (cnt > best) { best = cnt; pivot = v; }
  }
  std::uint64_t candidates = p & ~adj[pivot];
  while (candidates) {
    int v = std::countr_zero(candidates);
    std::uint64_t bit = std::uint64_t{1} << v;
    candidates &= candidates - 1;
    bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v], out);
    p &= ~bit;
    x |= bit;
  }
}

std::vector<int> mask_to_vertices(std::uint64_t mask) {
  std::vector<int> v;
  while (mask) {
    v.push_back(std::countr_zero(mask) + 1);
    mask &= mask - 1;
  }
  return v;
}
} // namespace

std::vector<std::vector<int>> maximal_independent_sets(const Graph& g) {
  const int n = g.order();
  if (n > 24)
    throw ResourceError("maximal independent set enumeration guarded at 24 vertices");
  // Maximal independent sets are the maximal cliques of the complement.
  std::vector<std::uint64_t> co_adj(n);
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0}
                                    : (std::uint64_t{1} << n) - 1;
  for (int v = 1; v <= n; ++v)
    co_adj[v - 1] = all & ~g.neighbors_mask(v) & ~(std::uint64_t{1} << (v - 1));
  std::vector<std::uint64_t> cliques;
  bron_kerbosch(co_adj, 0, all, 0, cliques);
  std::vector<std::vector<int>> sets;
  sets.reserve(cliques.size());
  for (std::uint64_t c : cliques) sets.push_back(mask_to_vertices(c));
  std::sort(sets.begin(), sets.end());
  return sets;
}

std::vector<PrimeSupport> minimal_vertex_cover_primes(const Graph& g) {
  if (g.num_edges() == 0) return {};
  std::vector<PrimeSupport> primes;
  for (const auto& ind : maximal_independent_sets(g)) {
    std::vector<int> cover;
    std::size_t k = 0;
    for (int v = 1; v <= g.order(); ++v) {
      if (k < ind.size() && ind[k] == v) { ++k; continue; }
      cover.push_back(v);
    }
    primes.push_back(PrimeSupport{std::move(cover)});
  }
  std::sort(primes.begin(), primes.end());
  return primes;
}

} // namespace epow
