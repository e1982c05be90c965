#include <sstream>

#include "doctest.h"
#include "patternforge/errors.hpp"
#include "patternforge/generators.hpp"
#include "patternforge/io.hpp"
#include "patternforge/minors.hpp"
#include "patternforge/reductions.hpp"

using namespace pf;

namespace {

Graph parse(const std::string& s) {
  std::istringstream in(s);
  return read_edge_list(in);
}

std::string parse_error(const std::string& s) {
  try {
    parse(s);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

std::string dump(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace

TEST_CASE("edge list round-trips") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    Graph g = gnp(static_cast<int>(s * 3), 0.3, s);
    CHECK(parse(dump(g)) == g);
  }
  CHECK(parse("0 0\n").n() == 0);
}

TEST_CASE("edge list parser skips comments and blank lines") {
  Graph g = parse("# header\n\n4 2\n  # inside\n0 1\n\n2 3\n# trailing\n");
  CHECK(g.n() == 4);
  CHECK(g.m() == 2);
  CHECK(g.has_edge(2, 3));
}

TEST_CASE("edge list errors carry line numbers") {
  CHECK(parse_error("3 1\n0 x\n") == "line 2: expected an integer, got 'x'");
  CHECK(parse_error("3 2\n0 1\n1 1\n").rfind("line 3: self-loop", 0) == 0);
  CHECK(parse_error("3 1\n0 3\n").rfind("line 2: vertex 3 out of range", 0) == 0);
  CHECK(parse_error("3 2\n0 1\n").rfind("line 2: expected 2 edges", 0) == 0);
  CHECK(parse_error("3 1\n0 1\n1 2\n").rfind("line 3: unexpected trailing", 0) == 0);
  CHECK(parse_error("3 2\n0 1\n1 0\n").rfind("line 3: duplicate", 0) == 0);
  CHECK(parse_error("").rfind("line 0: missing", 0) == 0);
  CHECK(parse_error("3\n").rfind("line 1: expected 'n m'", 0) == 0);
  CHECK(parse_error("-1 0\n").rfind("line 1: negative", 0) == 0);
  CHECK(parse_error("3 1\n0 1 2\n").rfind("line 2: expected 'u v'", 0) == 0);
}

TEST_CASE("vertex ids are kept as written") {
  Graph g = parse("10 1\n7 9\n");
  CHECK(g.n() == 10);
  CHECK(g.has_edge(7, 9));
  CHECK(g.degree(0) == 0);
}

TEST_CASE("edge list file round-trip and missing file") {
  std::string path = "test_io_roundtrip.el";
  Graph g = planted_clique(30, 5, 0.2, 4);
  write_edge_list_file(path, g);
  CHECK(read_edge_list_file(path) == g);
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_edge_list_file("no/such/file.el"), InputError);
}

TEST_CASE("hypergraph round-trips") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    Hypergraph4P3U hg = hg_random({1 + static_cast<int>(s % 3), 2, 3, 1 + static_cast<int>(s % 4)}, 0.4, s);
    std::ostringstream out;
    write_hypergraph(out, hg);
    std::istringstream in(out.str());
    Hypergraph4P3U back = read_hypergraph(in);
    CHECK(back.sizes == hg.sizes);
    CHECK(back.edges == hg.edges);
  }
}

TEST_CASE("hypergraph parse errors") {
  auto err = [](const std::string& s) {
    std::istringstream in(s);
    try {
      read_hypergraph(in);
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(err("hg 4 3 1 1 1 1 1\n0:0 1:0 2:0\n") == "");
  CHECK(err("hg 4 2 1 1 1 1 0\n").rfind("line 1:", 0) == 0);
  CHECK(err("hg 4 3 1 1 1 1 1\n0:0 1:0 1:0\n").rfind("line 2:", 0) == 0);
  CHECK(err("hg 4 3 1 1 1 1 1\n0:0 1:1 2:0\n").rfind("line 2: index out of range", 0) == 0);
  CHECK(err("hg 4 3 1 1 1 1 1\n0:0 1:0 4:0\n").rfind("line 2: part out of range", 0) == 0);
  CHECK(err("hg 4 3 1 1 1 1 1\n00 1:0 2:0\n").rfind("line 2: expected part:index", 0) == 0);
}

TEST_CASE("reduction instance round-trips") {
  Pattern c4 = catalog_lookup("C4");
  auto inst = build_psi_reduction(gnp(6, 0.6, 2), c4, max_clique_minor(c4).witness);
  std::ostringstream out;
  write_instance(out, inst);
  std::istringstream in(out.str());
  InstanceFile f = read_instance(in);
  CHECK(f.kind == "psi");
  CHECK(f.k == 4);
  CHECK(f.t == inst.params.t);
  CHECK(f.n == 6);
  CHECK(f.out.graph == inst.out.graph);
  CHECK(f.out.part_of == inst.out.part_of);
  CHECK(f.origin == inst.origin);
}

TEST_CASE("instance parse rejects missing parts") {
  std::istringstream in("reduction psi k=2 t=2 n=2\npart 0 0\n2 0\n");
  CHECK_THROWS_WITH_AS(read_instance(in), doctest::Contains("vertex 1 has no part"), InputError);
}

TEST_CASE("generators are deterministic in the seed") {
  CHECK(dump(gnp(40, 0.3, 11)) == dump(gnp(40, 0.3, 11)));
  CHECK(dump(gnp(40, 0.3, 11)) != dump(gnp(40, 0.3, 12)));
  CHECK(dump(c4free(200, 5)) == dump(c4free(200, 5)));
  CHECK(dump(planted_clique(50, 6, 0.2, 3)) == dump(planted_clique(50, 6, 0.2, 3)));
}

TEST_CASE("generator examples") {
  Graph g = planted_clique(50, 6, 0.2, 1);
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v) CHECK(g.has_edge(u, v));
  CHECK(gnp(10, 0.0, 3).m() == 0);
  CHECK(gnp(10, 1.0, 3).m() == 45);
  auto ph = hg_planted({3, 3, 3, 3}, 0.0, 8);
  CHECK(ph.hg.edges.size() == 4);
  auto hc = find_hyperclique(ph.hg);
  REQUIRE(hc);
  CHECK(*hc == ph.planted);
  CHECK_THROWS_AS(gnp(5, 1.5, 0), InputError);
  CHECK_THROWS_AS(planted_clique(5, 6, 0.5, 0), InputError);
  CHECK_THROWS_AS(hg_random({0, 1, 1, 1}, 0.5, 0), InputError);
}

TEST_CASE("c4free output has no 4-cycle") {
  for (std::uint64_t s = 0; s < 5; ++s) {
    Graph g = c4free(60, s);
    for (int u = 0; u < g.n(); ++u)
      for (int v = u + 1; v < g.n(); ++v) {
        int common = 0;
        for (int w : g.neighbors(u))
          if (g.has_edge(w, v)) ++common;
        CHECK(common <= 1);
      }
  }
}
