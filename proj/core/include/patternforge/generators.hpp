#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "patternforge/graph.hpp"
#include "patternforge/reductions.hpp"

namespace pf {

// Erdos-Renyi G(n, p) with geometric edge skipping.
Graph gnp(int n, double p, std::uint64_t seed);

// G(n, p) plus a clique on vertices 0..t-1.
Graph planted_clique(int n, int t, double p, std::uint64_t seed);

// Random induced subgraph of the point-line incidence graph of a projective
// plane over GF(q): bipartite, C4-free, about sqrt(n/2) average degree.
Graph c4free(int n, std::uint64_t seed);

// Each consecutive triple kept with probability p.
Hypergraph4P3U hg_random(const std::array<int, 4>& sizes, double p, std::uint64_t seed);

// hg_random with the four triples of one random quadruple added.
struct PlantedHypergraph {
  Hypergraph4P3U hg;
  std::array<int, 4> planted{};
};
PlantedHypergraph hg_planted(const std::array<int, 4>& sizes, double p, std::uint64_t seed);

// One representative of every isomorphism class of graphs on n vertices
// (n <= 8), built by vertex extension.
std::vector<Graph> all_graphs(int n);

}  // namespace pf
