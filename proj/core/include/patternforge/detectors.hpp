#pragma once

#include <optional>
#include <string>
#include <vector>

#include "patternforge/graph.hpp"

namespace pf {

enum class CertificateKind {
  DisjointCliques,       // parts are cliques with no edges between them
  CompleteMultipartite,  // parts are independent sets, all cross edges present
  Split,                 // parts[0] is a clique, parts[1] an independent set
};
std::string to_string(CertificateKind k);

struct Certificate {
  CertificateKind kind;
  std::vector<std::vector<int>> parts;
};
bool verify_certificate(const Graph& g, const Certificate& c);

// vertices[i] is the image of pattern vertex i.
struct Witness {
  std::string pattern;
  std::vector<int> vertices;
  bool induced = true;
};
bool verify_witness(const Graph& g, const Pattern& h, const Witness& w);

struct DetectionResult {
  std::optional<Witness> found;
  std::optional<Certificate> certificate;

  bool present() const { return found.has_value(); }
};

// Result constructors. Both re-verify and throw InternalError on a bad
// witness or certificate. For induced witnesses `vertices` may be in any
// order; it is reordered to follow the pattern.
DetectionResult found_result(const Graph& g, const Pattern& h, std::vector<int> vertices, bool induced = true);
DetectionResult absent_result();
DetectionResult absent_result(const Graph& g, Certificate cert);

struct DetectOptions {
  // Specialized detectors hand graphs with fewer vertices to the brute-force
  // oracle. Algorithms with a larger structural minimum (31 for the Ramsey
  // based pairs, 11 for claw/co-claw, 8 for 3-node pairs) use that instead
  // when it is larger.
  int brute_force_below = 12;
};

// Exhaustive backtracking. |V(h)| <= 8, |V(g)| <= kBruteForceHostCap.
inline constexpr int kBruteForcePatternCap = 8;
inline constexpr int kBruteForceHostCap = 512;
DetectionResult brute_force_detect(const Graph& g, const Pattern& h, bool induced);
// First pattern of `s` found, in list order.
DetectionResult brute_force_detect_any(const Graph& g, const std::vector<Pattern>& s, bool induced);

// Pattern vertex i goes to part i. Non-induced; on H-partite inputs the two
// notions agree.
DetectionResult brute_force_colorful(const PartitionedGraph& pg, const Pattern& h);

// Non-induced 4-cycle, O(n^2) pair marking.
DetectionResult noninduced_c4(const Graph& g);

// Induced P3 (co-P3 when complemented), else a clique partition (complete
// multipartite partition).
DetectionResult p3_structure(const Graph& g, bool complemented);

DetectionResult detect_c4_or_triangle(const Graph& g, const DetectOptions& opt = {});
DetectionResult detect_c4_or_diamond(const Graph& g, const DetectOptions& opt = {});
DetectionResult detect_c4_or_k4(const Graph& g, const DetectOptions& opt = {});
DetectionResult detect_c4_or_paw(const Graph& g, const DetectOptions& opt = {});
DetectionResult detect_c4_or_coclaw(const Graph& g, const DetectOptions& opt = {});

// Both patterns on 3 vertices.
DetectionResult detect_pair_3node(const Graph& g, const Pattern& h1, const Pattern& h2, const DetectOptions& opt = {});

// Requires n >= 31; always returns a K4 or I4. Works on list-only graphs.
DetectionResult detect_k4_or_i4(const Graph& g);

// |V(h)| = 4; detects h or its complement.
DetectionResult detect_h_or_complement(const Graph& g, const Pattern& h, const DetectOptions& opt = {});

// h: K4, diamond, paw or co-claw; detects C4 or h.
DetectionResult detect_c4_or_triangleH(const Graph& g, const Pattern& h, const DetectOptions& opt = {});

}  // namespace pf
