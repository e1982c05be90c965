#pragma once

#include <iosfwd>
#include <string>

#include "patternforge/graph.hpp"
#include "patternforge/reductions.hpp"

namespace pf {

// Edge-list text: "n m", then m lines "u v" (u < v); '#' lines are comments.
// Parse failures throw InputError naming the 1-based line number.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);
Graph read_edge_list_file(const std::string& path);
void write_edge_list_file(const std::string& path, const Graph& g);

// "hg 4 3 n0 n1 n2 n3 m", then m lines "i:a j:b k:c".
Hypergraph4P3U read_hypergraph(std::istream& in);
void write_hypergraph(std::ostream& out, const Hypergraph4P3U& hg);

// "reduction <kind> k=<k> t=<t> n=<n>", "part <v> <h>" and "origin <v> <g|*>"
// lines for every G* vertex, then the edge-list body of G*. n is the host
// vertex count.
struct InstanceFile {
  std::string kind;
  int k = 0;
  int t = 0;
  int n = 0;
  PartitionedGraph out;
  std::vector<Origin> origin;
};
void write_instance(std::ostream& out, const std::string& kind, int t, int source_n, const PartitionedGraph& pg,
                    const std::vector<Origin>& origin);
void write_instance(std::ostream& out, const ReductionInstance& inst);
InstanceFile read_instance(std::istream& in);

}  // namespace pf
