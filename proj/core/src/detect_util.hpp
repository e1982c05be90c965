#pragma once

// Helpers shared by detectors.cpp and detect_pairs.cpp.

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "patternforge/detectors.hpp"
#include "patternforge/graph.hpp"

namespace pf::detail {

// Catalog patterns used by the detectors, built once.
const Pattern& named(const std::string& name);

// Induced subgraph with the local -> original vertex map.
struct Local {
  Graph g;
  std::vector<int> to_old;
};
Local sub(const Graph& g, const std::vector<int>& vs);

// If the 4 (or 3) vertices induce one of `names` in g, the verified result.
std::optional<DetectionResult> classify(const Graph& g, const std::vector<int>& vs,
                                        std::initializer_list<const char*> names);
// Tries each candidate set in order; throws InternalError if none matches.
DetectionResult first_match(const Graph& g, const std::vector<std::vector<int>>& candidates,
                            std::initializer_list<const char*> names, const char* where);

// Maps a found result from a local graph back into g and re-verifies it.
DetectionResult lift(const Graph& g, const DetectionResult& r, const std::vector<int>& to_old);

// Greedy maximal clique / independent set containing `seed`, extended in
// ascending vertex order. Require g.dense().
std::vector<int> grow_clique(const Graph& g, const std::vector<int>& seed);
std::vector<int> grow_independent(const Graph& g, const std::vector<int>& seed,
                                  const std::vector<char>* allowed = nullptr);

// Connected components, each sorted, in order of smallest vertex.
std::vector<std::vector<int>> components(const Graph& g);

void require_dense(const Graph& g, const char* who);

// Core algorithms without the small-n delegation, on any n.
DetectionResult tri_c4_core(const Graph& g);

}  // namespace pf::detail
