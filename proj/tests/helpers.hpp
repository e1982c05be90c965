#pragma once

// Small independent oracles used by the tests. They share nothing with the
// library's search code beyond the Graph type.

#include <algorithm>
#include <numeric>
#include <vector>

#include "patternforge/graph.hpp"

namespace pft {

// Every permutation of V(g); true if one maps g onto h.
inline bool iso_by_permutation(const pf::Graph& g, const pf::Graph& h) {
  if (g.n() != h.n() || g.m() != h.m()) return false;
  std::vector<int> p(g.n());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (auto [u, v] : g.edges())
      if (!h.has_edge(p[u], p[v])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Every map V(h) -> V(c); true if one is a homomorphism.
inline bool hom_by_enumeration(const pf::Graph& h, const pf::Graph& c) {
  int n = h.n(), k = c.n();
  if (n == 0) return true;
  if (k == 0) return false;
  std::vector<int> f(n, 0);
  auto edges = h.edges();
  while (true) {
    bool ok = true;
    for (auto [u, v] : edges)
      if (!c.has_edge(f[u], f[v])) {
        ok = false;
        break;
      }
    if (ok) return true;
    int i = 0;
    while (i < n && ++f[i] == k) f[i++] = 0;
    if (i == n) return false;
  }
}

// Does `vs` induce a clique in g?
inline bool is_clique(const pf::Graph& g, const std::vector<int>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (vs[i] == vs[j] || !g.has_edge(vs[i], vs[j])) return false;
  return true;
}

// Largest clique by subset enumeration (n <= 20).
inline int clique_number_by_subsets(const pf::Graph& g) {
  int n = g.n(), best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    int c = __builtin_popcount(s);
    if (c <= best) continue;
    std::vector<int> vs;
    for (int v = 0; v < n; ++v)
      if (s >> v & 1) vs.push_back(v);
    if (is_clique(g, vs)) best = c;
  }
  return best;
}

inline bool symmetric_irreflexive(const pf::Graph& g) {
  for (int v = 0; v < g.n(); ++v) {
    if (g.has_edge(v, v)) return false;
    for (int w : g.neighbors(v))
      if (w < 0 || w >= g.n() || !g.has_edge(w, v)) return false;
  }
  return true;
}

}  // namespace pft
