#include "patternforge/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "patternforge/errors.hpp"

namespace pf {

namespace {

struct LineReader {
  std::istream& in;
  int lineno = 0;

  // Next non-comment, non-blank line split on whitespace; false at EOF.
  bool next(std::vector<std::string>& tok) {
    std::string line;
    while (std::getline(in, line)) {
      ++lineno;
      std::size_t p = line.find_first_not_of(" \t\r");
      if (p == std::string::npos || line[p] == '#') continue;
      tok.clear();
      std::istringstream ss(line);
      std::string t;
      while (ss >> t) tok.push_back(t);
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("line " + std::to_string(lineno) + ": " + msg);
  }

  long long integer(const std::string& s) const {
    long long v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) fail("expected an integer, got '" + s + "'");
    return v;
  }

  int vertex(const std::string& s, int n) const {
    long long v = integer(s);
    if (v < 0 || v >= n) fail("vertex " + s + " out of range for n=" + std::to_string(n));
    return static_cast<int>(v);
  }
};

void read_edges(LineReader& r, GraphBuilder& b, long long m) {
  std::vector<std::string> tok;
  for (long long i = 0; i < m; ++i) {
    if (!r.next(tok)) r.fail("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    if (tok.size() != 2) r.fail("expected 'u v'");
    int u = r.vertex(tok[0], b.n()), v = r.vertex(tok[1], b.n());
    if (u == v) r.fail("self-loop at vertex " + tok[0]);
    b.add_edge(u, v);
  }
}

Graph read_body(LineReader& r) {
  std::vector<std::string> tok;
  if (!r.next(tok)) r.fail("missing 'n m' header");
  if (tok.size() != 2) r.fail("expected 'n m' header");
  long long n = r.integer(tok[0]), m = r.integer(tok[1]);
  if (n < 0 || m < 0) r.fail("negative count in header");
  if (n > (1 << 26)) r.fail("vertex count too large");
  GraphBuilder b(static_cast<int>(n));
  read_edges(r, b, m);
  Graph g = b.build();
  if (g.m() != static_cast<std::size_t>(m)) r.fail("duplicate edges in edge list");
  return g;
}

void no_trailing(LineReader& r) {
  std::vector<std::string> tok;
  if (r.next(tok)) r.fail("unexpected trailing content");
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  LineReader r{in};
  Graph g = read_body(r);
  no_trailing(r);
  return g;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return read_edge_list(in);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_edge_list_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  write_edge_list(out, g);
}

Hypergraph4P3U read_hypergraph(std::istream& in) {
  LineReader r{in};
  std::vector<std::string> tok;
  if (!r.next(tok)) r.fail("missing hypergraph header");
  if (tok.size() != 8 || tok[0] != "hg" || tok[1] != "4" || tok[2] != "3") r.fail("expected 'hg 4 3 n0 n1 n2 n3 m'");
  Hypergraph4P3U hg;
  for (int i = 0; i < 4; ++i) {
    long long s = r.integer(tok[3 + i]);
    if (s < 0 || s > (1 << 20)) r.fail("bad part size");
    hg.sizes[i] = static_cast<int>(s);
  }
  long long m = r.integer(tok[7]);
  if (m < 0) r.fail("negative hyperedge count");
  for (long long e = 0; e < m; ++e) {
    if (!r.next(tok)) r.fail("expected " + std::to_string(m) + " hyperedges, found " + std::to_string(e));
    if (tok.size() != 3) r.fail("expected 'i:a j:b k:c'");
    std::array<HyperVertex, 3> v;
    for (int j = 0; j < 3; ++j) {
      auto c = tok[j].find(':');
      if (c == std::string::npos) r.fail("expected part:index, got '" + tok[j] + "'");
      long long p = r.integer(tok[j].substr(0, c)), x = r.integer(tok[j].substr(c + 1));
      if (p < 0 || p > 3) r.fail("part out of range in '" + tok[j] + "'");
      if (x < 0 || x >= hg.sizes[p]) r.fail("index out of range in '" + tok[j] + "'");
      v[j] = {static_cast<int>(p), static_cast<int>(x)};
    }
    try {
      hg.add_edge(v[0], v[1], v[2]);
    } catch (const InputError& err) {
      r.fail(err.what());
    }
  }
  no_trailing(r);
  return hg;
}

void write_hypergraph(std::ostream& out, const Hypergraph4P3U& hg) {
  out << "hg 4 3";
  for (int s : hg.sizes) out << ' ' << s;
  out << ' ' << hg.edges.size() << '\n';
  for (const auto& e : hg.edges)
    out << e[0].part << ':' << e[0].index << ' ' << e[1].part << ':' << e[1].index << ' ' << e[2].part << ':'
        << e[2].index << '\n';
}

void write_instance(std::ostream& out, const std::string& kind, int t, int source_n, const PartitionedGraph& pg,
                    const std::vector<Origin>& origin) {
  out << "reduction " << kind << " k=" << pg.k << " t=" << t << " n=" << source_n << '\n';
  for (int v = 0; v < pg.graph.n(); ++v) out << "part " << v << ' ' << pg.part_of[v] << '\n';
  for (int v = 0; v < pg.graph.n(); ++v) {
    out << "origin " << v << ' ';
    if (origin[v].g_vertex == kSentinel)
      out << '*';
    else
      out << origin[v].g_vertex;
    out << '\n';
  }
  write_edge_list(out, pg.graph);
}

void write_instance(std::ostream& out, const ReductionInstance& inst) {
  write_instance(out, to_string(inst.params.kind), inst.params.t, inst.params.source_n, inst.out, inst.origin);
}

InstanceFile read_instance(std::istream& in) {
  LineReader r{in};
  std::vector<std::string> tok;
  InstanceFile f;
  if (!r.next(tok)) r.fail("missing reduction header");
  if (tok.size() != 5 || tok[0] != "reduction") r.fail("expected 'reduction <kind> k=<k> t=<t> n=<n>'");
  f.kind = tok[1];
  auto field = [&](const std::string& s, const std::string& key) {
    if (s.rfind(key + "=", 0) != 0) r.fail("expected " + key + "=<value>");
    long long v = r.integer(s.substr(key.size() + 1));
    if (v < 0) r.fail("negative " + key);
    return static_cast<int>(v);
  };
  f.k = field(tok[2], "k");
  f.t = field(tok[3], "t");
  f.n = field(tok[4], "n");

  // part and origin lines precede the "N M" header of the body
  std::vector<std::pair<int, int>> parts;
  std::vector<std::pair<int, int>> origins;
  while (true) {
    if (!r.next(tok)) r.fail("missing edge-list body");
    if (tok[0] == "part") {
      if (tok.size() != 3) r.fail("expected 'part <v> <h>'");
      parts.emplace_back(static_cast<int>(r.integer(tok[1])), static_cast<int>(r.integer(tok[2])));
    } else if (tok[0] == "origin") {
      if (tok.size() != 3) r.fail("expected 'origin <v> <g|*>'");
      int g = tok[2] == "*" ? kSentinel : static_cast<int>(r.integer(tok[2]));
      if (g != kSentinel && (g < 0 || g >= f.n)) r.fail("origin vertex out of range");
      origins.emplace_back(static_cast<int>(r.integer(tok[1])), g);
    } else {
      break;
    }
  }
  if (tok.size() != 2) r.fail("expected 'n m' header");
  long long n = r.integer(tok[0]), m = r.integer(tok[1]);
  if (n < 0 || m < 0) r.fail("negative count in header");
  GraphBuilder b(static_cast<int>(n));
  read_edges(r, b, m);
  f.out.graph = b.build();
  f.out.k = f.k;
  f.out.part_of.assign(n, -1);
  f.origin.assign(n, Origin{});
  for (auto [v, p] : parts) {
    if (v < 0 || v >= n || p < 0 || p >= f.k) r.fail("part line out of range");
    f.out.part_of[v] = p;
  }
  for (auto [v, g] : origins) {
    if (v < 0 || v >= n) r.fail("origin line out of range");
    f.origin[v] = {f.out.part_of[v], g};
  }
  for (int v = 0; v < n; ++v)
    if (f.out.part_of[v] < 0) r.fail("vertex " + std::to_string(v) + " has no part");
  no_trailing(r);
  return f;
}

}  // namespace pf
