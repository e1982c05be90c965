#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>

#include "doctest.h"
#include "helpers.hpp"
#include "patternforge/detectors.hpp"
#include "patternforge/errors.hpp"
#include "patternforge/generators.hpp"
#include "patternforge/harness.hpp"
#include "structured.hpp"

using namespace pf;

namespace {

Pattern pat(const std::string& name, std::optional<int> k = std::nullopt) { return catalog_lookup(name, k); }

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> es = a.edges();
  for (auto [u, v] : b.edges()) es.emplace_back(u + a.n(), v + a.n());
  return graph_from_edges(a.n() + b.n(), es);
}

Graph petersen() {
  std::vector<Edge> es;
  for (int i = 0; i < 5; ++i) {
    es.emplace_back(i, (i + 1) % 5);
    es.emplace_back(i, i + 5);
    es.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return graph_from_edges(10, es);
}

// Induced (or not) copy of h among the k-subsets of g, checked by permutation.
bool by_subsets(const Graph& g, const Graph& h, bool induced) {
  int n = g.n(), k = h.n();
  if (k > n) return false;
  std::vector<int> pick(k);
  std::function<bool(int, int)> rec = [&](int i, int from) {
    if (i == k) {
      Graph sub = induced_subgraph(g, pick).graph;
      if (induced) return pft::iso_by_permutation(sub, h);
      std::vector<int> p(k);
      std::iota(p.begin(), p.end(), 0);
      do {
        bool ok = true;
        for (auto [u, v] : h.edges()) ok = ok && sub.has_edge(p[u], p[v]);
        if (ok) return true;
      } while (std::next_permutation(p.begin(), p.end()));
      return false;
    }
    for (int v = from; v < n; ++v) {
      pick[i] = v;
      if (rec(i + 1, v + 1)) return true;
    }
    return false;
  };
  return rec(0, 0);
}

bool oracle_any(const Graph& g, const std::vector<Pattern>& ps, bool induced = true) {
  for (const auto& p : ps)
    if (brute_force_detect(g, p, induced).present()) return true;
  return false;
}

void check_sound(const Graph& g, const DetectionResult& r) {
  if (r.found) CHECK(verify_witness(g, catalog_lookup(r.found->pattern), *r.found));
  if (r.certificate) CHECK(verify_certificate(g, *r.certificate));
  CHECK_FALSE((r.found && r.certificate));
}

}  // namespace

TEST_CASE("brute force examples") {
  CHECK(brute_force_detect(pat("C5").graph, pat("C5"), true).present());
  CHECK_FALSE(brute_force_detect(pat("K5").graph, pat("C4"), true).present());
  CHECK(brute_force_detect(pat("K5").graph, pat("C4"), false).present());
  auto r = brute_force_detect(petersen(), pat("C5"), true);
  REQUIRE(r.present());
  CHECK(verify_witness(petersen(), pat("C5"), *r.found));
  CHECK(by_subsets(petersen(), pat("C5").graph, true));
  CHECK_THROWS_AS(brute_force_detect(Graph(3), pat("C", 9), true), CapacityError);
}

TEST_CASE("brute force agrees with subset enumeration") {
  std::vector<Pattern> ps;
  for (const char* n : {"P3", "K3", "C4", "paw", "claw", "diamond", "P4", "2K2", "co-claw", "C5"}) {
    ps.push_back(pat(n));
  }
  for (std::uint64_t s = 0; s < 40; ++s) {
    Graph g = gnp(4 + static_cast<int>(s % 6), 0.2 + 0.015 * static_cast<double>(s), s);
    for (const auto& p : ps) {
      CHECK(brute_force_detect(g, p, true).present() == by_subsets(g, p.graph, true));
      CHECK(brute_force_detect(g, p, false).present() == by_subsets(g, p.graph, false));
    }
  }
}

TEST_CASE("brute_force_colorful") {
  PartitionedGraph pg{pat("K3").graph, {0, 1, 2}, 3};
  CHECK(brute_force_colorful(pg, pat("K3")).present());
  PartitionedGraph empty_part{graph_from_edges(4, {{0, 1}, {1, 2}, {0, 2}}), {0, 0, 1, 1}, 3};
  CHECK_FALSE(brute_force_colorful(empty_part, pat("K3")).present());
}

TEST_CASE("noninduced_c4") {
  CHECK(noninduced_c4(pat("K4").graph).present());
  CHECK(noninduced_c4(pat("diamond").graph).present());
  Rng rng(4);
  for (int i = 0; i < 20; ++i) CHECK_FALSE(noninduced_c4(pft::random_tree(30 + i, rng)).present());
  for (std::uint64_t s = 0; s < 60; ++s) {
    Graph g = gnp(12, 0.12, s);
    auto r = noninduced_c4(g);
    CHECK(r.present() == by_subsets(g, pat("C4").graph, false));
    if (r.found) CHECK(verify_witness(g, pat("C4"), *r.found));
  }
}

TEST_CASE("p3_structure examples") {
  auto p4 = p3_structure(pat("P4").graph, false);
  REQUIRE(p4.present());
  CHECK(p4.found->pattern == "P3");
  Graph k3k2 = disjoint_union(pat("K3").graph, pat("K2").graph);
  auto c = p3_structure(k3k2, false);
  REQUIRE(c.certificate);
  CHECK(c.certificate->kind == CertificateKind::DisjointCliques);
  CHECK(c.certificate->parts.size() == 2);
  CHECK(verify_certificate(k3k2, *c.certificate));
  Graph k23 = graph_from_edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  auto m = p3_structure(k23, true);
  REQUIRE(m.certificate);
  CHECK(m.certificate->kind == CertificateKind::CompleteMultipartite);
  CHECK(m.certificate->parts.size() == 2);
  CHECK(verify_certificate(k23, *m.certificate));
}

TEST_CASE("p3_structure agrees with the oracle") {
  for (std::uint64_t s = 0; s < 200; ++s) {
    Graph g = pft::structured(s, 5 + static_cast<int>(s % 30), 77);
    for (bool comp : {false, true}) {
      auto r = p3_structure(g, comp);
      CHECK(r.present() == brute_force_detect(g, pat(comp ? "co-P3" : "P3"), true).present());
      if (!r.present()) CHECK(r.certificate.has_value());
      check_sound(g, r);
    }
  }
}

TEST_CASE("verify_certificate rejects wrong certificates") {
  Graph p3 = pat("P3").graph;
  CHECK_FALSE(verify_certificate(p3, {CertificateKind::DisjointCliques, {{0, 1, 2}}}));
  CHECK_FALSE(verify_certificate(p3, {CertificateKind::DisjointCliques, {{0, 1}, {2}}}));
  CHECK(verify_certificate(p3, {CertificateKind::Split, {{0, 1}, {2}}}));
  CHECK_FALSE(verify_certificate(p3, {CertificateKind::Split, {{0, 1}}}));
  CHECK(verify_certificate(p3, {CertificateKind::CompleteMultipartite, {{1}, {0, 2}}}));
  CHECK_FALSE(verify_certificate(p3, {CertificateKind::CompleteMultipartite, {{0}, {1, 2}}}));
}

TEST_CASE("C4 pair detector examples") {
  DetectOptions real{0};
  auto t = detect_c4_or_triangle(pat("C4").graph, real);
  REQUIRE(t.present());
  CHECK(t.found->pattern == "C4");
  CHECK(detect_c4_or_triangle(pat("paw").graph, real).found->pattern == "K3");
  // incidence graph of the Fano plane: C4-free and triangle-free
  std::vector<Edge> fano;
  const int lines[7][3] = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
  for (int l = 0; l < 7; ++l)
    for (int p : lines[l]) fano.emplace_back(p, 7 + l);
  Graph inc = graph_from_edges(14, fano);
  CHECK_FALSE(detect_c4_or_triangle(inc, real).present());
  CHECK_FALSE(brute_force_detect_any(inc, {pat("C4"), pat("K3")}, true).present());

  CHECK(detect_c4_or_diamond(pat("diamond").graph, real).found->pattern == "diamond");
  CHECK(detect_c4_or_diamond(disjoint_union(pat("C4").graph, Graph(5)), real).found->pattern == "C4");
  CHECK(detect_c4_or_k4(pat("K4").graph, real).found->pattern == "K4");
  CHECK(detect_c4_or_k4(pat("C4").graph, real).found->pattern == "C4");
  CHECK(detect_c4_or_paw(pat("paw").graph, real).found->pattern == "paw");
  Graph star = graph_from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  CHECK_FALSE(detect_c4_or_paw(star, real).present());
  Graph k222 = complement(graph_from_edges(6, {{0, 1}, {2, 3}, {4, 5}}));
  CHECK(detect_c4_or_paw(k222, real).found->pattern == "C4");
  Graph coclaw = disjoint_union(pat("K3").graph, Graph(1));
  CHECK(detect_c4_or_coclaw(coclaw, real).found->pattern == "co-claw");
  CHECK(detect_c4_or_coclaw(pat("C4").graph, real).found->pattern == "C4");
}

TEST_CASE("diamond detector on a ring of four cliques") {
  // four K4s, consecutive ones joined by one edge: no diamond inside a clique, no C4 across
  std::vector<Edge> es;
  for (int c = 0; c < 4; ++c) {
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) es.emplace_back(4 * c + i, 4 * c + j);
    es.emplace_back(4 * c + 3, 4 * ((c + 1) % 4));
  }
  Graph g = graph_from_edges(16, es);
  bool truth = oracle_any(g, {pat("C4"), pat("diamond")});
  auto r = detect_c4_or_diamond(g, DetectOptions{0});
  CHECK(r.present() == truth);
  check_sound(g, r);
}

TEST_CASE("detect_c4_or_triangleH dispatch and errors") {
  CHECK_FALSE(detect_c4_or_triangleH(Graph(20), pat("paw")).present());
  CHECK(detect_c4_or_triangleH(pat("C4").graph, pat("diamond"), DetectOptions{0}).found->pattern == "C4");
  auto dense = gnp(60, 0.5, 3);
  auto r = detect_c4_or_triangleH(dense, pat("K4"));
  REQUIRE(r.present());
  check_sound(dense, r);
  CHECK_THROWS_AS(detect_c4_or_triangleH(Graph(5), pat("P4")), InputError);
  CHECK_THROWS_AS(detect_c4_or_triangleH(Graph(5), pat("K3")), InputError);
}

TEST_CASE("detect_pair_3node examples") {
  auto r = detect_pair_3node(pat("K4").graph, pat("K3"), pat("I3"));
  REQUIRE(r.present());
  CHECK(r.found->pattern == "K3");
  CHECK_FALSE(detect_pair_3node(Graph(10), pat("K3"), pat("co-P3")).present());
  CHECK_THROWS_AS(detect_pair_3node(Graph(10), pat("K3"), pat("C4")), InputError);
}

TEST_CASE("Ramsey detector examples") {
  auto i = detect_k4_or_i4(Graph(31));
  REQUIRE(i.present());
  CHECK(i.found->pattern == "I4");
  Graph k31 = complement(Graph(31));
  auto k = detect_k4_or_i4(k31);
  REQUIRE(k.present());
  CHECK(k.found->pattern == "K4");
  CHECK_THROWS_AS(detect_k4_or_i4(Graph(30)), InputError);
}

TEST_CASE("Ramsey detector on a list-only graph") {
  Graph g = gnp(100000, 4e-5, 1);
  REQUIRE_FALSE(g.dense());
  auto t0 = std::chrono::steady_clock::now();
  auto r = detect_k4_or_i4(g);
  double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  REQUIRE(r.present());
  CHECK(verify_witness(g, pat(r.found->pattern), *r.found));
  CHECK(sec < 1.0);
}

TEST_CASE("h_or_complement examples") {
  CHECK_FALSE(detect_h_or_complement(pat("C5").graph, pat("C4")).present());
  // K16 with 15 pendant-ish independent vertices: a split graph
  Rng rng(8);
  pf::GraphBuilder b(31);
  for (int u = 0; u < 16; ++u)
    for (int v = u + 1; v < 16; ++v) b.add_edge(u, v);
  for (int u = 0; u < 16; ++u)
    for (int v = 16; v < 31; ++v)
      if (rng.bernoulli(0.5)) b.add_edge(u, v);
  Graph split = b.build();
  auto r = detect_h_or_complement(split, pat("C4"), DetectOptions{0});
  CHECK_FALSE(r.present());
  REQUIRE(r.certificate);
  CHECK(r.certificate->kind == CertificateKind::Split);
  CHECK(verify_certificate(split, *r.certificate));
  CHECK_THROWS_AS(detect_h_or_complement(Graph(5), pat("K3")), InputError);
  CHECK_THROWS_AS(detect_h_or_complement(Graph(5), pat("C5")), InputError);
}

TEST_CASE("every registered detector agrees with the oracle on structured families") {
  for (const auto& d : detector_registry()) {
    std::size_t mism = 0;
    for (std::size_t i = 0; i < 52; ++i) {
      int n = std::max(d.min_n, 12 + static_cast<int>(i % 4) * 8);
      Graph g = pft::structured(i, n, 2024);
      auto r = d.run(g, DetectOptions{0});
      bool truth = brute_force_detect_any(g, d.patterns, d.induced).present();
      if (!check_detection(g, d, r, truth).empty()) ++mism;
    }
    INFO(d.name);
    CHECK(mism == 0);
  }
}

TEST_CASE("every registered detector agrees with the oracle on random graphs") {
  for (const auto& d : detector_registry()) {
    std::size_t mism = 0;
    for (std::uint64_t s = 0; s < 24; ++s) {
      int n = std::max(d.min_n, 14 + static_cast<int>(s % 3) * 9);
      Graph g = gnp(n, 0.08 + 0.035 * static_cast<double>(s), s);
      auto r = d.run(g, DetectOptions{0});
      bool truth = brute_force_detect_any(g, d.patterns, d.induced).present();
      if (!check_detection(g, d, r, truth).empty()) ++mism;
      if (r.found) CHECK(verify_witness(g, catalog_lookup(r.found->pattern), *r.found));
      if (r.certificate) CHECK(verify_certificate(g, *r.certificate));
    }
    INFO(d.name);
    CHECK(mism == 0);
  }
}

TEST_CASE("triangle-and-C4-free hosts obey the edge bound") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    Graph g = c4free(200 + 50 * static_cast<int>(s), s);
    auto r = detect_c4_or_triangle(g);
    if (!r.present()) CHECK(static_cast<double>(g.m()) <= 3.0 * std::pow(g.n(), 1.5));
  }
}
