#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "patternforge/detectors.hpp"
#include "patternforge/graph.hpp"

namespace pf {

// Worker count: hardware concurrency, capped by PATTERNFORGE_THREADS.
int harness_threads();
// Runs body(i) for every i < count on harness_threads() workers. The first
// exception thrown by a body is rethrown after all workers stop.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

struct Mismatch {
  std::uint64_t seed = 0;
  std::string description;
};

struct VerificationReport {
  std::string kind;
  std::size_t trials = 0;
  std::vector<Mismatch> mismatches;
  double oracle_seconds = 0;
  double detector_seconds = 0;

  bool pass() const { return mismatches.empty(); }
  void merge(const VerificationReport& o);
};
// "PASS psi trials=200 mismatches=0 oracle=0.12s detector=0.03s", then one
// line per mismatch (at most `max_lines`).
std::string format_report(const VerificationReport& r, std::size_t max_lines = 20);

// A detector together with the pattern set its answer is checked against.
struct DetectorEntry {
  std::string name;
  std::vector<Pattern> patterns;
  bool induced = true;
  int min_n = 0;  // smaller hosts are rejected by the detector
  std::function<DetectionResult(const Graph&, const DetectOptions&)> run;
};
const std::vector<DetectorEntry>& detector_registry();
// Accepts registry names and the "detect_" prefixed operation names.
const DetectorEntry* find_detector(const std::string& name);
// Registry names behind a group name ("detect_pair_3node",
// "detect_h_or_complement", "all"), or just `name` for a single detector.
std::vector<const DetectorEntry*> resolve_detectors(const std::string& name);

// Picks the specialized detector for a pattern set when one exists, else the
// brute-force oracle. `used` receives the detector's name.
DetectionResult detect_auto(const Graph& g, const std::vector<Pattern>& patterns, bool induced,
                            const DetectOptions& opt = {}, std::string* used = nullptr);

struct VerifyOptions {
  std::size_t trials = 200;
  int nmax = 9;
  std::uint64_t seed = 1;
  // Detectors: every graph on this many vertices. Core/set: every host up to
  // this many vertices.
  std::optional<int> exhaustive_n;
  // Random detector trials cycle through these.
  std::vector<int> sizes{20, 40, 60};
  std::vector<double> densities{0.1, 0.3, 0.5};
  // Threshold 0 so the specialized code runs wherever its own minimum allows.
  DetectOptions detect{0};
};

std::vector<Pattern> default_psi_patterns();
std::vector<Pattern> default_core_patterns();
std::vector<Pattern> default_pathcycle_patterns();
std::vector<std::vector<Pattern>> default_pattern_sets();

// t-clique in g <=> colorful h in the psi instance; witnesses decoded.
VerificationReport verify_psi(const VerifyOptions& opt, const std::vector<Pattern>& patterns);
// Core subgraph in g <=> h subgraph in some exhaustive-mode instance. Hosts:
// every graph up to exhaustive_n vertices (default 5) plus `trials` random
// hosts on nmax vertices.
VerificationReport verify_core(const VerifyOptions& opt, const std::vector<Pattern>& patterns);
// t'-clique in g <=> h subgraph in the shrunk instance.
VerificationReport verify_pathcycle(const VerifyOptions& opt, const std::vector<Pattern>& patterns);
// As verify_core, through choose_set_representative.
VerificationReport verify_set(const VerifyOptions& opt, const std::vector<std::vector<Pattern>>& sets);
// Induced C4 in the gadget <=> 4-hyperclique. Every size vector in {1,2}^4
// with at most `exhaustive_slots` possible triples is enumerated in full; the
// others get `sampled` random edge sets. Then `trials` random instances with
// parts of size <= 5.
struct HyperVerifyOptions {
  int exhaustive_slots = 20;
  std::size_t sampled = 1 << 16;
};
VerificationReport verify_hc4(const VerifyOptions& opt, const HyperVerifyOptions& hopt = {});
// Existence agrees with brute force; witnesses and certificates re-verify.
VerificationReport verify_detector(const DetectorEntry& d, const VerifyOptions& opt);
// Checks one result against the oracle answer; empty string when consistent.
std::string check_detection(const Graph& g, const DetectorEntry& d, const DetectionResult& r, bool oracle_present);

// Models: "gnp:<p>", "sparse:<avg degree>", "c4free".
Graph generate_model(const std::string& model, int n, std::uint64_t seed);

struct BenchRow {
  int n = 0;
  double median_seconds = 0;
  std::size_t trials = 0;
};
struct BenchResult {
  std::string detector;
  std::string model;
  std::vector<BenchRow> rows;
  double slope = 0;  // least-squares slope of log time against log n
};
BenchResult run_bench(const DetectorEntry& d, const std::vector<int>& sizes, const std::string& model, int trials,
                      std::uint64_t seed, const DetectOptions& opt = {});
double loglog_slope(const std::vector<BenchRow>& rows);
// Human-readable table followed by "@bench,<detector>,<model>,<n>,<median s>"
// rows and "@slope,<detector>,<model>,<slope>".
std::string format_bench(const BenchResult& b);

}  // namespace pf
