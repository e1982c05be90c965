#pragma once

#include <optional>
#include <vector>

#include "patternforge/graph.hpp"

namespace pf {

// f: V(pattern) -> {0..t-1} with connected blocks and an edge between every
// pair of blocks, i.e. a K_t minor of the pattern.
struct MinorFunction {
  Pattern pattern;
  int t = 0;
  std::vector<int> f;

  std::vector<std::vector<int>> blocks() const;
};

bool is_minor_function(const MinorFunction& mf);

// Exact maximum clique size. Cap: 20 vertices.
int max_clique(const Pattern& h);
// Exact maximum clique vertex set for larger graphs (bitset branch and bound).
std::vector<int> max_clique_set(const Graph& g);

// Smallest restricted-growth string with exactly t blocks. Cap: 12 vertices.
std::optional<MinorFunction> find_Kt_minor_function(const Pattern& h, int t);

// Largest t with a K_t minor, and the minor function. A disconnected h is
// handled per component: the witness lives on the best component and all
// other vertices carry -1 (deleted).
struct CliqueMinor {
  int eta = 0;
  MinorFunction witness;
};
CliqueMinor max_clique_minor(const Pattern& h);

enum class PathOrCycle { Path, Cycle };
// Clique-minor size of the complement of P_k or C_k from the closed form.
int eta_path_cycle_formula(PathOrCycle kind, int k);

// max{ceil(sqrt((k + 2w)/2)), ceil(sqrt(k/1.95))} for a core h with k vertices
// and clique number w.
int core_clique_lower_bound(const Pattern& h);
int core_clique_lower_bound(int k, int w);
// ceil(k^(1/4) / 1.39)
int induced_si_bound(int k);

// Permutes block labels of mf so that block `a` gets label t-2 and block `b`
// gets label t-1 (a == b: that block gets t-1). Other blocks keep their
// relative order in labels 0.. .
MinorFunction relabel_blocks_last(const MinorFunction& mf, int a, int b);

}  // namespace pf
