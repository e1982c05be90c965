#include "patternforge/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <functional>

#include "patternforge/errors.hpp"

namespace pf {

Graph::Graph(int n) {
  if (n < 0) throw InputError("negative vertex count");
  n_ = n;
  adj_.assign(n, {});
  if (n <= kDenseLimit) rows_.assign(n, Bitset(n));
}

bool Graph::has_edge(int u, int v) const {
  if (!rows_.empty()) return rows_[u].test(v);
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  int x = &a == &adj_[u] ? v : u;
  return std::binary_search(a.begin(), a.end(), x);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

GraphBuilder::GraphBuilder(int n) : n_(n) {
  if (n < 0) throw InputError("negative vertex count");
  adj_.assign(n, {});
}

void GraphBuilder::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" +
                     std::to_string(n_));
  if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  adj_[u].push_back(v);
  adj_[v].push_back(u);
}

Graph GraphBuilder::build() {
  Graph g(n_);
  std::size_t twice_m = 0;
  for (int v = 0; v < n_; ++v) {
    auto& a = adj_[v];
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    twice_m += a.size();
    if (g.dense())
      for (int w : a) g.rows_[v].set(w);
  }
  g.adj_ = std::move(adj_);
  g.m_ = twice_m / 2;
  adj_.assign(n_, {});
  return g;
}

Graph graph_from_edges(int n, const std::vector<Edge>& edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

Graph complement(const Graph& g) {
  int n = g.n();
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    const auto& a = g.neighbors(u);
    std::size_t j = 0;
    for (int v = u + 1; v < n; ++v) {
      while (j < a.size() && a[j] < v) ++j;
      if (j < a.size() && a[j] == v) continue;
      b.add_edge(u, v);
    }
  }
  return b.build();
}

InducedResult induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  InducedResult r;
  r.old_to_new.assign(g.n(), -1);
  for (int v : vertices) {
    if (v < 0 || v >= g.n()) throw InputError("induced_subgraph: vertex " + std::to_string(v) + " out of range");
    if (r.old_to_new[v] != -1) continue;
    r.old_to_new[v] = static_cast<int>(r.new_to_old.size());
    r.new_to_old.push_back(v);
  }
  GraphBuilder b(static_cast<int>(r.new_to_old.size()));
  for (std::size_t i = 0; i < r.new_to_old.size(); ++i)
    for (int w : g.neighbors(r.new_to_old[i]))
      if (r.old_to_new[w] > static_cast<int>(i)) b.add_edge(static_cast<int>(i), r.old_to_new[w]);
  r.graph = b.build();
  return r;
}

std::vector<std::uint32_t> small_masks(const Graph& g) {
  if (g.n() > 32) throw CapacityError("small_masks: more than 32 vertices");
  std::vector<std::uint32_t> m(g.n(), 0);
  for (int v = 0; v < g.n(); ++v)
    for (int w : g.neighbors(v)) m[v] |= 1u << w;
  return m;
}

std::vector<std::vector<int>> PartitionedGraph::parts() const {
  std::vector<std::vector<int>> out(k);
  for (int v = 0; v < graph.n(); ++v) out[part_of[v]].push_back(v);
  return out;
}

std::optional<std::vector<int>> is_isomorphic(const Graph& g, const Graph& h) {
  if (g.n() > 16 || h.n() > 16) throw CapacityError("is_isomorphic: more than 16 vertices");
  int n = g.n();
  if (n != h.n() || g.m() != h.m()) return std::nullopt;
  auto gm = small_masks(g), hm = small_masks(h);
  std::vector<int> dg(n), dh(n);
  for (int v = 0; v < n; ++v) {
    dg[v] = g.degree(v);
    dh[v] = h.degree(v);
  }
  {
    auto a = dg, b = dh;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  // Map g-vertices in order of decreasing degree, with ties broken by index.
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return dg[a] > dg[b]; });

  std::vector<int> map(n, -1);
  std::uint32_t used = 0;
  std::function<bool(int)> go = [&](int i) -> bool {
    if (i == n) return true;
    int v = order[i];
    for (int w = 0; w < n; ++w) {
      if ((used >> w) & 1u || dh[w] != dg[v]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        int u = order[j];
        bool eg = (gm[v] >> u) & 1u, eh = (hm[w] >> map[u]) & 1u;
        ok = eg == eh;
      }
      if (!ok) continue;
      map[v] = w;
      used |= 1u << w;
      if (go(i + 1)) return true;
      used &= ~(1u << w);
      map[v] = -1;
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  return map;
}

bool is_H_partite(const PartitionedGraph& pg, const Pattern& h) {
  if (pg.k != h.size())
    throw InputError("is_H_partite: partition has " + std::to_string(pg.k) + " parts but pattern has " +
                     std::to_string(h.size()) + " vertices");
  if (static_cast<int>(pg.part_of.size()) != pg.graph.n()) throw InputError("is_H_partite: part map size mismatch");
  for (auto [u, v] : pg.graph.edges()) {
    int a = pg.part_of[u], b = pg.part_of[v];
    if (a == b || !h.graph.has_edge(a, b)) return false;
  }
  return true;
}

namespace {

Graph path_graph(int k) {
  GraphBuilder b(k);
  for (int i = 0; i + 1 < k; ++i) b.add_edge(i, i + 1);
  return b.build();
}

Graph cycle_graph(int k) {
  GraphBuilder b(k);
  for (int i = 0; i < k; ++i) b.add_edge(i, (i + 1) % k);
  return b.build();
}

Graph clique_graph(int k) {
  GraphBuilder b(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) b.add_edge(i, j);
  return b.build();
}

Pattern lookup(const std::string& raw, std::optional<int> k) {
  if (raw.rfind("co-", 0) == 0) {
    Pattern inner = lookup(raw.substr(3), k);
    return {complement(inner.graph), "co-" + *inner.name};
  }
  if (raw == "diamond") return {graph_from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}), raw};
  if (raw == "paw") return {graph_from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}), raw};
  if (raw == "claw") return {graph_from_edges(4, {{0, 1}, {0, 2}, {0, 3}}), raw};
  if (raw == "2K2") return {graph_from_edges(4, {{0, 1}, {2, 3}}), raw};

  // Parametric: letter, optional '_', optional digits.
  if (raw.empty()) throw InputError("empty pattern name");
  char kind = raw[0];
  if (kind != 'P' && kind != 'C' && kind != 'K' && kind != 'I') throw InputError("unknown pattern name '" + raw + "'");
  std::string rest = raw.substr(1);
  if (!rest.empty() && rest[0] == '_') rest = rest.substr(1);
  int size;
  if (rest.empty()) {
    if (!k) throw InputError("pattern '" + raw + "' needs a size");
    size = *k;
  } else {
    if (!std::all_of(rest.begin(), rest.end(), [](unsigned char c) { return std::isdigit(c); }) || rest.size() > 4)
      throw InputError("unknown pattern name '" + raw + "'");
    size = std::stoi(rest);
    if (k && *k != size) throw InputError("pattern '" + raw + "' conflicts with size " + std::to_string(*k));
  }
  if (size < 1) throw InputError("pattern size must be positive");
  std::string name = std::string(1, kind) + std::to_string(size);
  switch (kind) {
    case 'P':
      return {path_graph(size), name};
    case 'C':
      if (size < 3) throw InputError("cycle needs at least 3 vertices");
      return {cycle_graph(size), name};
    case 'K':
      return {clique_graph(size), name};
    default:
      return {Graph(size), name};
  }
}

}  // namespace

Pattern catalog_lookup(const std::string& name, std::optional<int> k) { return lookup(name, k); }

}  // namespace pf
