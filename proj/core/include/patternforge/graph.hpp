#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "patternforge/bitset.hpp"

namespace pf {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1. Immutable once built.
//
// Sorted neighbor lists are always present. Bitset rows are kept as long as
// n <= kDenseLimit, which covers every pattern and every host the exhaustive
// and oracle paths touch; larger hosts (the linear-time Ramsey path) are
// list-only and has_edge falls back to binary search.
class Graph {
 public:
  static constexpr int kDenseLimit = 1 << 14;

  Graph() = default;
  explicit Graph(int n);  // edgeless

  int n() const { return n_; }
  std::size_t m() const { return m_; }
  bool dense() const { return !rows_.empty() || n_ == 0; }

  bool has_edge(int u, int v) const;
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  // Requires dense().
  const Bitset& row(int v) const { return rows_[v]; }

  // Lexicographically sorted (u < v).
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  friend class GraphBuilder;
  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<Bitset> rows_;
};

// Accumulates edges; duplicates are merged, self-loops and bad indices throw.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  void add_edge(int u, int v);
  int n() const { return n_; }
  Graph build();

 private:
  int n_;
  std::vector<std::vector<int>> adj_;
};

Graph graph_from_edges(int n, const std::vector<Edge>& edges);
Graph complement(const Graph& g);

struct InducedResult {
  Graph graph;
  std::vector<int> old_to_new;  // -1 for vertices outside the set
  std::vector<int> new_to_old;
};
InducedResult induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// Bitmask adjacency for graphs with at most 32 vertices.
std::vector<std::uint32_t> small_masks(const Graph& g);

struct Pattern {
  Graph graph;
  std::optional<std::string> name;

  int size() const { return graph.n(); }
  std::string label() const { return name ? *name : "pattern" + std::to_string(graph.n()); }
};

struct PartitionedGraph {
  Graph graph;
  std::vector<int> part_of;
  int k = 0;

  std::vector<std::vector<int>> parts() const;
};

// Returns v -> w for an isomorphism g -> h, if one exists. Both graphs must
// have at most 16 vertices.
std::optional<std::vector<int>> is_isomorphic(const Graph& g, const Graph& h);

// Every edge of pg must join parts i, j with (i, j) an edge of h.
bool is_H_partite(const PartitionedGraph& pg, const Pattern& h);

// Named graphs: diamond, paw, claw, 2K2, P_k, C_k, K_k, I_k and co-<name>.
// Accepts "C7", "C_7", or ("C", 7).
Pattern catalog_lookup(const std::string& name, std::optional<int> k = std::nullopt);

}  // namespace pf
