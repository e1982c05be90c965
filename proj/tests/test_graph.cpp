#include "doctest.h"
#include "helpers.hpp"
#include "patternforge/errors.hpp"
#include "patternforge/generators.hpp"
#include "patternforge/minors.hpp"
#include "patternforge/random.hpp"
#include "patternforge/reductions.hpp"

using namespace pf;

TEST_CASE("graph_from_edges builds exactly the given edges") {
  Graph k3 = graph_from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(k3.m() == 3);
  CHECK(is_isomorphic(k3, catalog_lookup("K3").graph));
  Graph c4 = graph_from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(c4 == catalog_lookup("C4").graph);
  CHECK(graph_from_edges(3, {{0, 1}, {1, 0}, {0, 1}}).m() == 1);
  CHECK_THROWS_AS(graph_from_edges(2, {{0, 0}}), InputError);
  CHECK_THROWS_AS(graph_from_edges(2, {{0, 2}}), InputError);
  CHECK_THROWS_AS(graph_from_edges(2, {{-1, 1}}), InputError);
}

TEST_CASE("adjacency is symmetric and irreflexive after every constructor") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    Graph g = gnp(1 + static_cast<int>(s % 25), 0.3, s);
    CHECK(pft::symmetric_irreflexive(g));
    CHECK(pft::symmetric_irreflexive(complement(g)));
    CHECK(pft::symmetric_irreflexive(induced_subgraph(g, {0}).graph));
  }
}

TEST_CASE("complement") {
  CHECK(complement(catalog_lookup("K4").graph).m() == 0);
  Graph c5 = catalog_lookup("C5").graph;
  CHECK(pft::iso_by_permutation(complement(c5), c5));
  for (std::uint64_t s = 0; s < 20; ++s) {
    Graph g = gnp(10, 0.4, s);
    CHECK(complement(complement(g)) == g);
    CHECK(complement(g).m() + g.m() == 45);
  }
}

TEST_CASE("induced_subgraph") {
  Graph k5 = catalog_lookup("K5").graph;
  auto r = induced_subgraph(k5, {0, 1, 2});
  CHECK(r.graph == catalog_lookup("K3").graph);
  auto c6 = induced_subgraph(catalog_lookup("C6").graph, {0, 2, 4});
  CHECK(c6.graph.m() == 0);
  CHECK(c6.old_to_new[2] == 1);
  CHECK(c6.old_to_new[1] == -1);
  CHECK(c6.new_to_old == std::vector<int>{0, 2, 4});
  Graph g = gnp(9, 0.5, 3);
  CHECK(induced_subgraph(g, {0, 1, 2, 3, 4, 5, 6, 7, 8}).graph == g);
  CHECK_THROWS_AS(induced_subgraph(g, {0, 9}), InputError);
}

TEST_CASE("catalog") {
  Pattern d = catalog_lookup("diamond");
  CHECK(d.size() == 4);
  CHECK(d.graph.m() == 5);
  Pattern cc = catalog_lookup("co-claw");
  CHECK(cc.graph.m() == 3);
  CHECK(cc.graph.degree(0) == 0);
  Pattern c7 = catalog_lookup("C", 7);
  CHECK(c7.size() == 7);
  for (int v = 0; v < 7; ++v) CHECK(c7.graph.has_edge(v, (v + 1) % 7));
  CHECK(catalog_lookup("C_7").graph == c7.graph);
  CHECK(catalog_lookup("paw").graph.m() == 4);
  CHECK(catalog_lookup("claw").graph.degree(0) == 3);
  CHECK(catalog_lookup("2K2").graph.m() == 2);
  CHECK(catalog_lookup("P5").graph.m() == 4);
  CHECK(catalog_lookup("I4").graph.m() == 0);
  CHECK_THROWS_AS(catalog_lookup("bogus"), InputError);
  CHECK_THROWS_AS(catalog_lookup("C2"), InputError);
  CHECK_THROWS_AS(catalog_lookup("C"), InputError);
  CHECK_THROWS_AS(catalog_lookup("C5", 6), InputError);
}

TEST_CASE("co-X equals the complement of X up to isomorphism") {
  for (const char* x : {"diamond", "paw", "claw", "2K2", "C4", "P4", "K4", "C5", "P6", "C7"}) {
    Pattern a = catalog_lookup(std::string("co-") + x);
    Pattern b = catalog_lookup(x);
    CHECK(pft::iso_by_permutation(a.graph, complement(b.graph)));
    CHECK(a.label() == std::string("co-") + x);
  }
}

TEST_CASE("is_isomorphic") {
  Graph c5 = catalog_lookup("C5").graph;
  auto f = is_isomorphic(c5, complement(c5));
  REQUIRE(f);
  Graph cc = complement(c5);
  for (auto [u, v] : c5.edges()) CHECK(cc.has_edge((*f)[u], (*f)[v]));
  CHECK_FALSE(is_isomorphic(catalog_lookup("P4").graph, catalog_lookup("claw").graph));
  Graph g = gnp(8, 0.5, 9);
  auto id = is_isomorphic(g, g);
  REQUIRE(id);
  CHECK_FALSE(is_isomorphic(Graph(3), Graph(4)));
}

TEST_CASE("is_isomorphic agrees with permutation search for n <= 6") {
  Rng rng(5);
  for (int n = 1; n <= 6; ++n) {
    auto all = all_graphs(n);
    for (std::size_t i = 0; i < all.size(); ++i) {
      // a random relabeling must be recognized, distinct classes must not be
      std::vector<int> p(n);
      std::iota(p.begin(), p.end(), 0);
      rng.shuffle(p.begin(), p.end());
      std::vector<Edge> es;
      for (auto [u, v] : all[i].edges()) es.emplace_back(p[u], p[v]);
      Graph relabeled = graph_from_edges(n, es);
      CHECK(is_isomorphic(all[i], relabeled).has_value());
      std::size_t j = rng.below(all.size());
      CHECK(is_isomorphic(all[i], all[j]).has_value() == pft::iso_by_permutation(all[i], all[j]));
    }
  }
}

TEST_CASE("all_graphs counts isomorphism classes") {
  const std::size_t expected[] = {1, 1, 2, 4, 11, 34, 156, 1044};
  for (int n = 0; n <= 7; ++n) CHECK(all_graphs(n).size() == expected[n]);
}

TEST_CASE("is_H_partite") {
  Pattern c4 = catalog_lookup("C4");
  auto mf = max_clique_minor(c4).witness;
  auto inst = build_psi_reduction(gnp(6, 0.5, 1), c4, mf);
  CHECK(is_H_partite(inst.out, c4));
  PartitionedGraph bad{graph_from_edges(4, {{0, 1}}), {0, 0, 1, 2}, 4};
  bad.part_of = {0, 0, 1, 2};
  CHECK_FALSE(is_H_partite(bad, c4));
  PartitionedGraph empty{Graph(4), {0, 1, 2, 3}, 4};
  CHECK(is_H_partite(empty, c4));
  PartitionedGraph wrong{Graph(3), {0, 1, 2}, 3};
  CHECK_THROWS_AS(is_H_partite(wrong, c4), InputError);
}
