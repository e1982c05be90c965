#include <numeric>

#include "doctest.h"
#include "helpers.hpp"
#include "patternforge/errors.hpp"
#include "patternforge/generators.hpp"
#include "patternforge/homcore.hpp"
#include "patternforge/random.hpp"

using namespace pf;

namespace {

Pattern pat(const char* name, std::optional<int> k = std::nullopt) { return catalog_lookup(name, k); }

Pattern anon(const Graph& g) { return Pattern{g, std::nullopt}; }

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> es = a.edges();
  for (auto [u, v] : b.edges()) es.emplace_back(u + a.n(), v + a.n());
  return graph_from_edges(a.n() + b.n(), es);
}

// Chromatic number by trying every k-coloring, k = 1, 2, ...
int chromatic_by_enumeration(const Graph& g) {
  for (int k = 1; k <= g.n(); ++k)
    if (pft::hom_by_enumeration(g, complement(Graph(k)))) return k;
  return 0;
}

bool proper_subgraph_hom(const Graph& g) {
  // hom into some induced subgraph on n-1 vertices
  for (int drop = 0; drop < g.n(); ++drop) {
    std::vector<int> keep;
    for (int v = 0; v < g.n(); ++v)
      if (v != drop) keep.push_back(v);
    if (pft::hom_by_enumeration(g, induced_subgraph(g, keep).graph)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("find_homomorphism examples") {
  auto f = find_homomorphism(pat("C4"), pat("K2"));
  REQUIRE(f);
  CHECK(is_homomorphism(pat("C4").graph, pat("K2").graph, f->map));
  CHECK_FALSE(find_homomorphism(pat("C5"), pat("K2")));
  CHECK_FALSE(find_homomorphism(pat("K4"), pat("K3")));
  CHECK(find_homomorphism(pat("C5"), pat("K3")));
}

TEST_CASE("find_homomorphism honours fixed images") {
  Graph p3 = pat("P3").graph, k3 = pat("K3").graph;
  auto f = find_homomorphism(p3, k3, {2, -1, 2});
  REQUIRE(f);
  CHECK(f->map[0] == 2);
  CHECK(f->map[2] == 2);
  CHECK_FALSE(find_homomorphism(p3, k3, {1, 1, -1}));
}

TEST_CASE("find_homomorphism agrees with enumeration for n <= 5") {
  std::vector<Graph> small;
  for (int n = 1; n <= 4; ++n)
    for (auto& g : all_graphs(n)) small.push_back(g);
  for (int n = 1; n <= 5; ++n)
    for (const auto& h : all_graphs(n))
      for (std::size_t j = 0; j < small.size(); j += 3) {
        const Graph& c = small[j];
        auto f = find_homomorphism(h, c);
        REQUIRE(f.has_value() == pft::hom_by_enumeration(h, c));
        if (f) CHECK(is_homomorphism(h, c, f->map));
      }
}

TEST_CASE("compute_core examples") {
  auto c4 = compute_core(pat("C4"));
  CHECK(c4.core.size() == 2);
  CHECK(c4.core.graph.m() == 1);
  Pattern cc7 = pat("co-C7");
  auto r = compute_core(cc7);
  CHECK(r.core.size() == 7);
  CHECK(is_isomorphic(r.core.graph, cc7.graph));
  CHECK(compute_core(pat("K5")).core.size() == 5);
  CHECK(compute_core(anon(Graph(4))).core.size() == 1);
  CHECK(compute_core(anon(Graph(0))).core.size() == 0);
}

TEST_CASE("is_core examples") {
  CHECK(is_core(pat("C5")));
  CHECK_FALSE(is_core(pat("P6")));
  CHECK(is_core(pat("co-C9")));
  CHECK(is_core(pat("K1")));
  CHECK_FALSE(is_core(anon(Graph(2))));
}

TEST_CASE("chromatic_number examples") {
  CHECK(chromatic_number(pat("co-C7")) == 4);
  CHECK(chromatic_number(pat("K6")) == 6);
  CHECK(chromatic_number(pat("C6")) == 2);
  CHECK(chromatic_number(pat("C7")) == 3);
  CHECK(chromatic_number(anon(Graph(3))) == 1);
  CHECK(chromatic_number(anon(Graph(0))) == 0);
}

TEST_CASE("is_color_critical examples") {
  CHECK(is_color_critical(pat("co-C5")));
  CHECK_FALSE(is_color_critical(pat("P4")));
  CHECK(is_color_critical(pat("K3")));
  CHECK(is_color_critical(pat("C7")));
  CHECK_FALSE(is_color_critical(pat("C6")));
}

TEST_CASE("core invariants over all graphs with n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& g : all_graphs(n)) {
      Pattern h = anon(g);
      auto r = compute_core(h);
      // retraction is a homomorphism onto the core and fixes it
      REQUIRE(is_homomorphism(g, r.core.graph, r.retraction.map));
      for (std::size_t i = 0; i < r.vertices.size(); ++i) CHECK(r.retraction.map[r.vertices[i]] == static_cast<int>(i));
      CHECK(is_isomorphic(r.core.graph, induced_subgraph(g, r.vertices).graph));
      // the core is hom-equivalent to g and admits no proper endomorphism
      CHECK(pft::hom_by_enumeration(r.core.graph, g));
      if (n <= 6) CHECK_FALSE(proper_subgraph_hom(r.core.graph));
      CHECK(is_core(h) == (static_cast<int>(r.vertices.size()) == n));
      if (is_color_critical(h)) CHECK(is_core(h));
    }
  }
}

TEST_CASE("core is unique up to isomorphism under relabeling") {
  Rng rng(17);
  for (int n = 5; n <= 8; ++n)
    for (int t = 0; t < 25; ++t) {
      Graph g = gnp(n, 0.45, rng.next());
      std::vector<int> p(n);
      std::iota(p.begin(), p.end(), 0);
      rng.shuffle(p.begin(), p.end());
      std::vector<Edge> es;
      for (auto [u, v] : g.edges()) es.emplace_back(p[u], p[v]);
      auto a = compute_core(anon(g)).core.graph;
      auto b = compute_core(anon(graph_from_edges(n, es))).core.graph;
      CHECK(is_isomorphic(a, b).has_value());
    }
}

TEST_CASE("chromatic_number agrees with enumeration for n <= 6") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : all_graphs(n)) CHECK(chromatic_number(anon(g)) == chromatic_by_enumeration(g));
}

TEST_CASE("find_C_coloring") {
  Pattern k3 = pat("K3"), c5 = pat("C5");
  CHECK_FALSE(find_C_coloring(pat("K4").graph, k3));
  Graph two_c5 = disjoint_union(c5.graph, c5.graph);
  auto col = find_C_coloring(two_c5, c5);
  REQUIRE(col);
  CHECK(is_C_coloring(two_c5, c5, *col));
  // every copy of C is rainbow
  for (const auto& copy : subgraph_copies(two_c5, c5.graph)) {
    std::vector<int> seen;
    for (int v : copy) seen.push_back((*col)[v]);
    std::sort(seen.begin(), seen.end());
    CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
  }
  CHECK(find_C_coloring(Graph(5), k3));
}

TEST_CASE("subgraph_copies lists vertex sets of copies") {
  auto copies = subgraph_copies(pat("K4").graph, pat("K3").graph);
  CHECK(copies.size() == 4);
  CHECK(subgraph_copies(pat("C4").graph, pat("K2").graph).size() == 4);
  CHECK(subgraph_copies(pat("C5").graph, pat("K3").graph).empty());
}

TEST_CASE("min_C_covering examples") {
  Pattern c5 = pat("C5");
  auto self = min_C_covering(c5, c5);
  CHECK(self.sets.size() == 1);
  CHECK(is_C_covering(c5, self));
  auto c6 = min_C_covering(pat("C6"), pat("K2"));
  CHECK(c6.sets.size() == 1);
  CHECK(is_C_covering(pat("C6"), c6));
}

TEST_CASE("min_C_covering matches exhaustive search on two triangles joined by an edge") {
  Pattern h = anon(graph_from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}}));
  Pattern k3 = pat("K3");
  auto cov = min_C_covering(h, k3);
  CHECK(is_C_covering(h, cov));
  // oracle: smallest family of K3-colorable subsets covering both triangles
  const std::uint32_t tri[2] = {0b000111, 0b111000};
  auto colorable = [&](std::uint32_t s) {
    // some 3-coloring of s makes each triangle inside s rainbow
    for (int code = 0; code < 729; ++code) {
      int col[6], c = code;
      for (int v = 0; v < 6; ++v, c /= 3) col[v] = c % 3;
      bool ok = true;
      for (std::uint32_t t : tri) {
        if ((s & t) != t) continue;
        int b = __builtin_ctz(t);
        if (col[b] == col[b + 1] || col[b] == col[b + 2] || col[b + 1] == col[b + 2]) ok = false;
      }
      if (ok) return true;
    }
    return false;
  };
  auto covers = [](std::uint32_t s) { return (s & 0b000111) == 0b000111 && (s & 0b111000) == 0b111000; };
  int best = 3;
  for (std::uint32_t a = 0; a < 64; ++a) {
    if (!colorable(a)) continue;
    if (covers(a)) best = std::min(best, 1);
    for (std::uint32_t b = 0; b < 64; ++b)
      if (colorable(b) && (a & 7) == 7 && (b & 56) == 56) best = std::min(best, 2);
  }
  CHECK(static_cast<int>(cov.sets.size()) == best);
}

TEST_CASE("min_C_covering invariants on small graphs") {
  Pattern k2 = pat("K2"), k3 = pat("K3");
  for (int n = 3; n <= 6; ++n)
    for (const auto& g : all_graphs(n)) {
      Pattern h = anon(g);
      for (const Pattern* c : {&k2, &k3}) {
        auto cov = min_C_covering(h, *c);
        CHECK(is_C_covering(h, cov));
        CHECK(cov.sets.empty() == subgraph_copies(g, c->graph).empty());
      }
    }
}

TEST_CASE("min_C_covering is minimal against exhaustive set systems (n <= 6, up to 3 sets)") {
  // C is K2 (copies = edges) or K3 (copies = triangles); colorability of a
  // vertex set is decided by enumerating all |C|-colorings of it.
  for (int c : {2, 3}) {
    Pattern cp = pat(c == 2 ? "K2" : "K3");
    for (int n = 2; n <= 6; ++n)
      for (const auto& g : all_graphs(n)) {
        std::vector<std::uint32_t> copies;
        for (std::uint32_t s = 0; s < (1u << n); ++s) {
          if (__builtin_popcount(s) != c) continue;
          std::vector<int> vs;
          for (int v = 0; v < n; ++v)
            if (s >> v & 1) vs.push_back(v);
          if (pft::is_clique(g, vs)) copies.push_back(s);
        }
        if (copies.empty()) continue;
        std::vector<std::uint32_t> colorable;
        for (std::uint32_t s = 1; s < (1u << n); ++s) {
          std::vector<int> vs;
          for (int v = 0; v < n; ++v)
            if (s >> v & 1) vs.push_back(v);
          int total = 1;
          for (std::size_t i = 0; i < vs.size(); ++i) total *= c;
          bool ok = false;
          std::vector<int> col(n, -1);
          for (int code = 0; code < total && !ok; ++code) {
            int x = code;
            for (int v : vs) col[v] = x % c, x /= c;
            ok = true;
            for (std::uint32_t cm : copies) {
              if ((cm & s) != cm) continue;
              int seen = 0;
              for (int v = 0; v < n; ++v)
                if (cm >> v & 1) seen |= 1 << col[v];
              if (__builtin_popcount(seen) != c) ok = false;
            }
          }
          if (ok) colorable.push_back(s);
        }
        auto covered = [&](std::uint32_t a, std::uint32_t b, std::uint32_t d) {
          for (std::uint32_t cm : copies)
            if ((cm & a) != cm && (cm & b) != cm && (cm & d) != cm) return false;
          return true;
        };
        int best = 4;
        for (std::size_t i = 0; i < colorable.size() && best > 1; ++i) {
          if (covered(colorable[i], 0, 0)) best = 1;
          for (std::size_t j = i + 1; j < colorable.size() && best > 2; ++j) {
            if (covered(colorable[i], colorable[j], 0)) best = 2;
            for (std::size_t k = j + 1; k < colorable.size() && best > 3; ++k)
              if (covered(colorable[i], colorable[j], colorable[k])) best = 3;
          }
        }
        auto cov = min_C_covering(anon(g), cp);
        CHECK(is_C_covering(anon(g), cov));
        if (best <= 3)
          CHECK(static_cast<int>(cov.sets.size()) == best);
        else
          CHECK(cov.sets.size() >= 4);
      }
  }
}
