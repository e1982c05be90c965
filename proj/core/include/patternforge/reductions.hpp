#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "patternforge/graph.hpp"
#include "patternforge/homcore.hpp"
#include "patternforge/minors.hpp"

namespace pf {

inline constexpr int kSentinel = -1;

// Where a G* vertex came from: the pattern vertex whose part holds it, and
// the host vertex it copies (kSentinel for single stand-in vertices).
struct Origin {
  int h_vertex = 0;
  int g_vertex = kSentinel;
  friend bool operator==(const Origin&, const Origin&) = default;
};

enum class ReductionKind { Psi, Core, PathCycle, Set };
std::string to_string(ReductionKind k);
ReductionKind reduction_kind_from_string(const std::string& s);

struct ReductionParams {
  ReductionKind kind = ReductionKind::Psi;
  Pattern pattern;
  int source_n = 0;  // vertex count of the host G
  int t = 0;         // clique size (psi, pathcycle) or |V(core)| (core, set)
  std::optional<MinorFunction> minor;
  std::optional<CCovering> covering;
  std::optional<Pattern> core;
  std::vector<int> host_coloring;    // core reduction: V(G) -> colors
  std::vector<int> set_coloring;     // core reduction: C-coloring of the first covering set, by pattern vertex (-1 outside)
  std::vector<int> path_order;       // pathcycle: v_1..v_k as pattern vertices
  std::uint64_t work = 0;            // edge slots examined during construction
};

struct ReductionInstance {
  PartitionedGraph out;
  std::vector<Origin> origin;
  ReductionParams params;
};

// One copy of V(g) per pattern vertex; matchings inside minor blocks, mirrored
// host edges between blocks. Colorful h in G* <=> t-clique in g.
ReductionInstance build_psi_reduction(const Graph& g, const Pattern& h, const MinorFunction& f);

// `copy` lists one G* vertex per part (any order). Returns the t host vertices
// of the clique, in block order.
std::vector<int> extract_clique_psi(const ReductionInstance& inst, const std::vector<int>& copy);

struct CoreMode {
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::optional<int> rounds;  // seeded mode; default ceil(c^c (ln n + ln 100))
};
int default_color_coding_rounds(int c, int n);

// Calls `visit` for each color-coded instance; stops early when it returns
// false. Returns the number of instances visited.
std::size_t for_each_core_instance(const Graph& g, const Pattern& h, const CoreMode& mode,
                                   const std::function<bool(const ReductionInstance&)>& visit);
// Set reduction: the core reduction on choose_set_representative(s).h.
std::size_t for_each_set_instance(const Graph& g, const std::vector<Pattern>& s, const CoreMode& mode,
                                  const std::function<bool(const ReductionInstance&)>& visit);
std::vector<ReductionInstance> build_core_reduction(const Graph& g, const Pattern& h, const CoreMode& mode);

// Single instance for a fixed host coloring (exposed for tests and the CLI).
ReductionInstance build_core_instance(const Graph& g, const Pattern& h, const CoreResult& core,
                                      const CCovering& cov, const std::vector<int>& set_coloring,
                                      const std::vector<int>& host_coloring);

struct PathCycleReduction {
  ReductionInstance instance;
  int t_prime = 0;
};
// h must be the complement of P_k (k >= 4) or of an even C_k (k >= 4).
PathCycleReduction build_pathcycle_reduction(const Graph& g, const Pattern& h);

// If the complement of h is a path or a cycle, its vertex order v_1..v_k.
struct PathCycleShape {
  PathOrCycle kind;
  std::vector<int> order;
};
std::optional<PathCycleShape> complement_path_cycle_shape(const Pattern& h);

struct SetRepresentative {
  Pattern h;
  Pattern core;
  std::size_t index = 0;  // position of h in the input list
};
SetRepresentative choose_set_representative(const std::vector<Pattern>& s);

// 4-partite 3-uniform hypergraph. Vertices are (part, index) pairs.
struct HyperVertex {
  int part = 0;
  int index = 0;
  friend auto operator<=>(const HyperVertex&, const HyperVertex&) = default;
};
using Hyperedge = std::array<HyperVertex, 3>;  // sorted by part

struct Hypergraph4P3U {
  std::array<int, 4> sizes{};
  std::set<Hyperedge> edges;

  // Sorts the triple by part; rejects repeated parts and bad indices.
  void add_edge(HyperVertex a, HyperVertex b, HyperVertex c);
  bool has_edge(HyperVertex a, HyperVertex b, HyperVertex c) const;
};

struct BandOrigin {
  int band = 0;  // i: the pair lies in V_i x V_{i+1}
  int x = 0;     // index in V_i
  int y = 0;     // index in V_{i+1}
};

struct HyperC4Reduction {
  Graph out;
  std::vector<BandOrigin> origin;
};
HyperC4Reduction build_hyperclique_c4_reduction(const Hypergraph4P3U& hg);

// `copy` must be an induced C4 of out. Returns indices (a0, a1, a2, a3) with
// a_i in V_i forming a 4-hyperclique. With `hg` the four triples are also
// checked against the hypergraph itself.
std::array<int, 4> extract_hyperclique(const HyperC4Reduction& red, const std::vector<int>& copy,
                                       const Hypergraph4P3U* hg = nullptr);

// Brute-force 4-hyperclique search.
std::optional<std::array<int, 4>> find_hyperclique(const Hypergraph4P3U& hg);

}  // namespace pf
