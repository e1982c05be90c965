#include <atomic>
#include <cmath>

#include "doctest.h"
#include "patternforge/errors.hpp"
#include "patternforge/harness.hpp"

using namespace pf;

TEST_CASE("parallel_for visits every index once") {
  std::vector<std::atomic<int>> hits(1000);
  parallel_for(hits.size(), [&](std::size_t i) { hits[i]++; });
  for (auto& h : hits) CHECK(h.load() == 1);
  parallel_for(0, [](std::size_t) { FAIL("called on empty range"); });
  CHECK(harness_threads() >= 1);
}

TEST_CASE("parallel_for rethrows the first exception") {
  CHECK_THROWS_AS(parallel_for(50,
                               [](std::size_t i) {
                                 if (i == 17) throw InputError("boom");
                               }),
                  InputError);
}

TEST_CASE("report status and formatting") {
  VerificationReport r{"psi", 10, {}, 0.5, 0.25};
  CHECK(r.pass());
  CHECK(format_report(r).rfind("PASS psi", 0) == 0);
  VerificationReport bad{"psi", 5, {{42, "no clique"}}, 0, 0};
  CHECK_FALSE(bad.pass());
  std::string s = format_report(bad);
  CHECK(s.rfind("FAIL psi", 0) == 0);
  CHECK(s.find("seed=42") != std::string::npos);
  r.merge(bad);
  CHECK(r.trials == 15);
  CHECK(r.mismatches.size() == 1);
  CHECK_FALSE(r.pass());
}

TEST_CASE("log-log slope fit") {
  std::vector<BenchRow> quad{{1000, 1.0, 3}, {2000, 4.0, 3}, {4000, 16.0, 3}};
  CHECK(loglog_slope(quad) == doctest::Approx(2.0).epsilon(1e-9));
  std::vector<BenchRow> lin{{10, 0.1, 1}, {100, 1.0, 1}};
  CHECK(loglog_slope(lin) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("detector registry and name resolution") {
  CHECK(find_detector("c4_or_diamond") != nullptr);
  CHECK(find_detector("detect_c4_or_diamond") == find_detector("c4_or_diamond"));
  CHECK(find_detector("nope") == nullptr);
  CHECK(resolve_detectors("all").size() == detector_registry().size());
  CHECK(resolve_detectors("detect_pair_3node").size() == 10);
  CHECK(resolve_detectors("detect_h_or_complement").size() == 6);
  CHECK(resolve_detectors("detect_c4_or_triangleH").size() == 4);
  CHECK(resolve_detectors("nope").empty());
}

TEST_CASE("detect_auto dispatches by pattern shape") {
  auto p = [](const char* n) { return catalog_lookup(n); };
  Graph c4 = p("C4").graph;
  std::string used;
  auto r = detect_auto(c4, {p("C4"), p("diamond")}, true, {}, &used);
  CHECK(r.present());
  CHECK(used.find("diamond") != std::string::npos);
  r = detect_auto(Graph(10), {p("K3")}, true, {}, &used);
  CHECK_FALSE(r.present());
  r = detect_auto(c4, {p("P4")}, true, {}, &used);
  CHECK_FALSE(r.present());
  r = detect_auto(p("K4").graph, {p("C4")}, false, {}, &used);
  CHECK(r.present());
  CHECK(used == "noninduced_c4");
  r = detect_auto(p("C5").graph, {p("C5")}, true, {}, &used);
  CHECK(r.present());
}

TEST_CASE("generate_model") {
  CHECK(generate_model("gnp:0", 10, 1).m() == 0);
  CHECK(generate_model("gnp:1", 10, 1).m() == 45);
  CHECK(generate_model("c4free", 100, 3) == generate_model("c4free", 100, 3));
  Graph s = generate_model("sparse:4", 2000, 5);
  CHECK(s.m() > 2000);
  CHECK(s.m() < 6000);
  CHECK_THROWS_AS(generate_model("bogus", 10, 1), InputError);
  CHECK_THROWS_AS(generate_model("gnp:x", 10, 1), InputError);
}

TEST_CASE("verification drivers pass and are deterministic") {
  VerifyOptions opt;
  opt.trials = 30;
  opt.nmax = 7;
  opt.seed = 5;
  auto a = verify_psi(opt, default_psi_patterns());
  auto b = verify_psi(opt, default_psi_patterns());
  CHECK(a.pass());
  CHECK(format_report(a).substr(0, 20) == format_report(b).substr(0, 20));
  CHECK(a.mismatches.size() == b.mismatches.size());
  CHECK(verify_pathcycle(opt, {catalog_lookup("co-P5"), catalog_lookup("co-C6")}).pass());
  opt.exhaustive_n = 3;
  opt.trials = 5;
  opt.nmax = 5;
  CHECK(verify_core(opt, {catalog_lookup("C4")}).pass());
  CHECK(verify_set(opt, {{catalog_lookup("P3"), catalog_lookup("C4")}}).pass());
}

TEST_CASE("verify_detector exhaustive and random") {
  VerifyOptions opt;
  opt.exhaustive_n = 6;
  auto r = verify_detector(*find_detector("c4_or_paw"), opt);
  CHECK(r.trials == 156);
  CHECK(r.pass());
  CHECK_THROWS_AS(verify_detector(*find_detector("k4_or_i4"), opt), InputError);
  VerifyOptions rnd;
  rnd.exhaustive_n.reset();
  rnd.trials = 18;
  rnd.sizes = {20, 30};
  rnd.seed = 9;
  CHECK(verify_detector(*find_detector("k4_or_i4"), rnd).pass());
  CHECK(verify_detector(*find_detector("c4_or_k4"), rnd).pass());
}

TEST_CASE("hyperclique verification with a small budget") {
  VerifyOptions opt;
  opt.trials = 20;
  opt.seed = 3;
  HyperVerifyOptions h;
  h.exhaustive_slots = 12;
  h.sampled = 256;
  CHECK(verify_hc4(opt, h).pass());
}

TEST_CASE("run_bench produces one row per size") {
  auto b = run_bench(*find_detector("noninduced_c4"), {200, 400}, "sparse:3", 2, 1);
  REQUIRE(b.rows.size() == 2);
  CHECK(b.rows[0].n == 200);
  CHECK(b.rows[1].trials == 2);
  CHECK(std::isfinite(b.slope));
  std::string s = format_bench(b);
  CHECK(s.find("@bench,noninduced_c4,sparse:3,200,") != std::string::npos);
  CHECK(s.find("@slope,noninduced_c4,sparse:3,") != std::string::npos);
}
