#pragma once

#include <optional>
#include <vector>

#include "patternforge/graph.hpp"

namespace pf {

struct Homomorphism {
  std::vector<int> map;  // source vertex -> target vertex
};

// Edge-preserving map h -> c, if one exists. Both at most 16 vertices.
// Optional `fixed` pins source vertices (entries >= 0) before the search.
std::optional<Homomorphism> find_homomorphism(const Graph& h, const Graph& c,
                                              const std::vector<int>& fixed = {});
inline std::optional<Homomorphism> find_homomorphism(const Pattern& h, const Pattern& c) {
  return find_homomorphism(h.graph, c.graph);
}
bool is_homomorphism(const Graph& h, const Graph& c, const std::vector<int>& map);

struct CoreResult {
  Pattern core;                // induced subgraph of h
  std::vector<int> vertices;   // core vertex i is h-vertex vertices[i]
  Homomorphism retraction;     // h -> core, identity on `vertices`
};

// Minimal retract; ties go to the lexicographically smallest vertex set.
CoreResult compute_core(const Pattern& h);
bool is_core(const Pattern& h);

int chromatic_number(const Pattern& h);
bool is_color_critical(const Pattern& h);

// Vertex sets of all (not necessarily induced) subgraph copies of c in f,
// each sorted, deduplicated, in lexicographic order.
std::vector<std::vector<int>> subgraph_copies(const Graph& f, const Graph& c);

// Coloring V(f) -> {0..|c|-1} under which every subgraph copy of c uses
// |c| distinct colors. A homomorphism f -> c is preferred when it qualifies.
std::optional<std::vector<int>> find_C_coloring(const Graph& f, const Pattern& c);
bool is_C_coloring(const Graph& f, const Pattern& c, const std::vector<int>& coloring);

struct CCovering {
  Pattern core;
  std::vector<std::vector<int>> sets;       // vertex subsets of h, sorted
  std::vector<std::vector<int>> colorings;  // colorings[i][j] colors sets[i][j]
};

// Minimum-size C-covering. Caps: |V(h)| <= 12, at most 64 copies of c.
CCovering min_C_covering(const Pattern& h, const Pattern& c);
// Checks both covering conditions directly.
bool is_C_covering(const Pattern& h, const CCovering& cov);

}  // namespace pf
