#include "patternforge/detectors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <unordered_map>

#include "detect_util.hpp"
#include "patternforge/errors.hpp"

namespace pf {

std::string to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::DisjointCliques:
      return "disjoint-cliques";
    case CertificateKind::CompleteMultipartite:
      return "complete-multipartite";
    case CertificateKind::Split:
      return "split";
  }
  return "?";
}

namespace {

bool partitions(const Graph& g, const Certificate& c) {
  std::vector<char> seen(g.n(), 0);
  std::size_t total = 0;
  for (const auto& p : c.parts)
    for (int v : p) {
      if (v < 0 || v >= g.n() || seen[v]) return false;
      seen[v] = 1;
      ++total;
    }
  return total == static_cast<std::size_t>(g.n());
}

bool all_pairs(const Graph& g, const std::vector<int>& p, bool edge) {
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (g.has_edge(p[i], p[j]) != edge) return false;
  return true;
}

std::size_t pairs(std::size_t k) { return k * (k - 1) / 2; }

}  // namespace

bool verify_certificate(const Graph& g, const Certificate& c) {
  if (!partitions(g, c)) return false;
  std::size_t inside = 0;
  for (const auto& p : c.parts) inside += pairs(p.size());
  switch (c.kind) {
    case CertificateKind::DisjointCliques:
      for (const auto& p : c.parts)
        if (!all_pairs(g, p, true)) return false;
      return g.m() == inside;
    case CertificateKind::CompleteMultipartite:
      for (const auto& p : c.parts)
        if (!all_pairs(g, p, false)) return false;
      return g.m() == pairs(static_cast<std::size_t>(g.n())) - inside;
    case CertificateKind::Split:
      return c.parts.size() == 2 && all_pairs(g, c.parts[0], true) && all_pairs(g, c.parts[1], false);
  }
  return false;
}

bool verify_witness(const Graph& g, const Pattern& h, const Witness& w) {
  int k = h.size();
  if (static_cast<int>(w.vertices.size()) != k) return false;
  for (int i = 0; i < k; ++i) {
    int v = w.vertices[i];
    if (v < 0 || v >= g.n()) return false;
    for (int j = 0; j < i; ++j)
      if (w.vertices[j] == v) return false;
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      bool he = h.graph.has_edge(i, j), ge = g.has_edge(w.vertices[i], w.vertices[j]);
      if (he && !ge) return false;
      if (w.induced && !he && ge) return false;
    }
  return true;
}

DetectionResult found_result(const Graph& g, const Pattern& h, std::vector<int> vertices, bool induced) {
  if (induced && h.size() <= 16 && static_cast<int>(vertices.size()) == h.size()) {
    // reorder so that vertices[i] is the image of pattern vertex i
    int k = h.size();
    bool ok = true;
    GraphBuilder b(k);
    for (int i = 0; i < k && ok; ++i) {
      if (vertices[i] < 0 || vertices[i] >= g.n()) ok = false;
      for (int j = 0; j < i && ok; ++j) {
        if (vertices[i] == vertices[j]) ok = false;
        else if (g.has_edge(vertices[i], vertices[j])) b.add_edge(i, j);
      }
    }
    if (ok) {
      if (auto iso = is_isomorphic(b.build(), h.graph)) {
        std::vector<int> ordered(k);
        for (int i = 0; i < k; ++i) ordered[(*iso)[i]] = vertices[i];
        vertices = std::move(ordered);
      }
    }
  }
  Witness w{h.label(), std::move(vertices), induced};
  if (!verify_witness(g, h, w)) throw InternalError("detector produced an invalid " + w.pattern + " witness");
  DetectionResult r;
  r.found = std::move(w);
  return r;
}

DetectionResult absent_result() { return {}; }

DetectionResult absent_result(const Graph& g, Certificate cert) {
  if (!verify_certificate(g, cert)) throw InternalError("detector produced an invalid " + to_string(cert.kind) + " certificate");
  DetectionResult r;
  r.certificate = std::move(cert);
  return r;
}

namespace detail {

const Pattern& named(const std::string& name) {
  static const std::map<std::string, Pattern> cache = [] {
    std::map<std::string, Pattern> m;
    for (const char* n : {"K3", "I3", "P3", "co-P3", "C4", "K4", "I4", "diamond", "co-diamond", "paw", "co-paw", "claw",
                          "co-claw", "2K2", "P4"})
      m.emplace(n, catalog_lookup(n));
    return m;
  }();
  auto it = cache.find(name);
  if (it == cache.end()) throw InternalError("no cached pattern " + name);
  return it->second;
}

void require_dense(const Graph& g, const char* who) {
  if (!g.dense())
    throw CapacityError(std::string(who) + ": host has more than " + std::to_string(Graph::kDenseLimit) + " vertices");
}

Local sub(const Graph& g, const std::vector<int>& vs) {
  Local l;
  l.to_old = vs;
  int k = static_cast<int>(vs.size());
  std::size_t deg_sum = 0;
  for (int v : vs) deg_sum += g.neighbors(v).size();
  if (g.dense() && static_cast<std::size_t>(k) * k <= 2 * deg_sum) {
    GraphBuilder b(k);
    for (int i = 0; i < k; ++i) {
      const Bitset& r = g.row(vs[i]);
      for (int j = i + 1; j < k; ++j)
        if (r.test(vs[j])) b.add_edge(i, j);
    }
    l.g = b.build();
  } else {
    auto ir = induced_subgraph(g, vs);
    l.g = std::move(ir.graph);
  }
  return l;
}

std::optional<DetectionResult> classify(const Graph& g, const std::vector<int>& vs,
                                        std::initializer_list<const char*> names) {
  int k = static_cast<int>(vs.size());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < i; ++j)
      if (vs[i] == vs[j]) return std::nullopt;
  GraphBuilder b(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.has_edge(vs[i], vs[j])) b.add_edge(i, j);
  Graph s = b.build();
  for (const char* n : names) {
    const Pattern& p = named(n);
    if (p.size() == k && is_isomorphic(s, p.graph)) return found_result(g, p, vs);
  }
  return std::nullopt;
}

DetectionResult first_match(const Graph& g, const std::vector<std::vector<int>>& candidates,
                            std::initializer_list<const char*> names, const char* where) {
  for (const auto& c : candidates)
    if (auto r = classify(g, c, names)) return *r;
  throw InternalError(std::string(where) + ": case analysis produced no pattern");
}

DetectionResult lift(const Graph& g, const DetectionResult& r, const std::vector<int>& to_old) {
  if (!r.found) return absent_result();
  std::vector<int> vs;
  for (int v : r.found->vertices) vs.push_back(to_old[v]);
  return found_result(g, named(r.found->pattern), vs, r.found->induced);
}

std::vector<int> grow_clique(const Graph& g, const std::vector<int>& seed) {
  Bitset cand(g.n());
  cand.set_all();
  for (int v : seed) {
    cand &= g.row(v);
  }
  std::vector<int> c = seed;
  for (std::size_t v = cand.first(); v != Bitset::npos; v = cand.next(v)) {
    if (!cand.test(v)) continue;
    c.push_back(static_cast<int>(v));
    cand &= g.row(static_cast<int>(v));
  }
  std::sort(c.begin(), c.end());
  return c;
}

std::vector<int> grow_independent(const Graph& g, const std::vector<int>& seed, const std::vector<char>* allowed) {
  Bitset cand(g.n());
  cand.set_all();
  if (allowed)
    for (int v = 0; v < g.n(); ++v)
      if (!(*allowed)[v]) cand.reset(v);
  for (int v : seed) {
    cand -= g.row(v);
    cand.reset(v);
  }
  std::vector<int> s = seed;
  for (std::size_t v = cand.first(); v != Bitset::npos; v = cand.next(v)) {
    s.push_back(static_cast<int>(v));
    cand -= g.row(static_cast<int>(v));
  }
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<std::vector<int>> components(const Graph& g) {
  int n = g.n();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> c{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t h = 0; h < c.size(); ++h)
      for (int w : g.neighbors(c[h]))
        if (comp[w] < 0) {
          comp[w] = comp[s];
          c.push_back(w);
        }
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace detail

using namespace detail;

// ---------------------------------------------------------------------------
// brute force

namespace {

std::vector<int> search_order(const Graph& h) {
  int k = h.n();
  std::vector<int> order;
  std::vector<char> placed(k, 0);
  for (int step = 0; step < k; ++step) {
    int best = -1, best_links = -1, best_deg = -1;
    for (int v = 0; v < k; ++v) {
      if (placed[v]) continue;
      int links = 0;
      for (int u : h.neighbors(v)) links += placed[u];
      if (links > best_links || (links == best_links && h.degree(v) > best_deg)) {
        best = v;
        best_links = links;
        best_deg = h.degree(v);
      }
    }
    placed[best] = 1;
    order.push_back(best);
  }
  return order;
}

}  // namespace

DetectionResult brute_force_detect(const Graph& g, const Pattern& h, bool induced) {
  int k = h.size();
  if (k > kBruteForcePatternCap)
    throw CapacityError("brute_force_detect: pattern has " + std::to_string(k) + " vertices, cap is " +
                        std::to_string(kBruteForcePatternCap));
  if (g.n() > kBruteForceHostCap)
    throw CapacityError("brute_force_detect: host has " + std::to_string(g.n()) + " vertices, cap is " +
                        std::to_string(kBruteForceHostCap));
  if (k == 0) return found_result(g, h, {}, induced);
  if (k > g.n()) return absent_result();
  auto order = search_order(h.graph);
  std::vector<int> map(k, -1);
  std::vector<int> pos(k);
  for (int i = 0; i < k; ++i) pos[order[i]] = i;

  auto go = [&](auto&& self, int d) -> bool {
    if (d == k) return true;
    int v = order[d];
    Bitset cand(g.n());
    cand.set_all();
    for (int j = 0; j < d; ++j) {
      int u = order[j], w = map[u];
      if (h.graph.has_edge(v, u))
        cand &= g.row(w);
      else if (induced)
        cand -= g.row(w);
      cand.reset(w);
    }
    for (std::size_t c = cand.first(); c != Bitset::npos; c = cand.next(c)) {
      map[v] = static_cast<int>(c);
      if (self(self, d + 1)) return true;
    }
    map[v] = -1;
    return false;
  };
  if (!go(go, 0)) return absent_result();
  return found_result(g, h, map, induced);
}

DetectionResult brute_force_detect_any(const Graph& g, const std::vector<Pattern>& s, bool induced) {
  for (const auto& h : s) {
    auto r = brute_force_detect(g, h, induced);
    if (r.present()) return r;
  }
  return absent_result();
}

DetectionResult brute_force_colorful(const PartitionedGraph& pg, const Pattern& h) {
  constexpr int kPartCap = 4096;
  constexpr std::uint64_t kNodeBudget = 2'000'000'000ULL;
  int k = h.size();
  if (pg.k != k)
    throw InputError("brute_force_colorful: partition has " + std::to_string(pg.k) + " parts but pattern has " +
                     std::to_string(k) + " vertices");
  const Graph& g = pg.graph;
  require_dense(g, "brute_force_colorful");
  if (static_cast<int>(pg.part_of.size()) != g.n()) throw InputError("brute_force_colorful: part map size mismatch");
  std::vector<Bitset> part(k, Bitset(g.n()));
  std::vector<int> size(k, 0);
  for (int v = 0; v < g.n(); ++v) {
    int p = pg.part_of[v];
    if (p < 0 || p >= k) throw InputError("brute_force_colorful: part index out of range");
    part[p].set(v);
    ++size[p];
  }
  for (int i = 0; i < k; ++i) {
    if (size[i] > kPartCap)
      throw CapacityError("brute_force_colorful: part " + std::to_string(i) + " has " + std::to_string(size[i]) +
                          " vertices, cap is " + std::to_string(kPartCap));
    if (size[i] == 0) return absent_result();
  }
  auto order = search_order(h.graph);
  std::vector<int> map(k, -1);
  std::uint64_t nodes = 0;
  auto go = [&](auto&& self, int d) -> bool {
    if (d == k) return true;
    if (++nodes > kNodeBudget) throw CapacityError("brute_force_colorful: search exceeded node budget");
    int v = order[d];
    Bitset cand = part[v];
    for (int j = 0; j < d; ++j) {
      int u = order[j];
      if (h.graph.has_edge(v, u)) cand &= g.row(map[u]);
    }
    for (std::size_t c = cand.first(); c != Bitset::npos; c = cand.next(c)) {
      map[v] = static_cast<int>(c);
      if (self(self, d + 1)) return true;
    }
    map[v] = -1;
    return false;
  };
  if (!go(go, 0)) return absent_result();
  return found_result(g, h, map, false);
}

// ---------------------------------------------------------------------------
// noninduced C4, P3 structure, {C4, K3}

DetectionResult noninduced_c4(const Graph& g) {
  int n = g.n();
  // For each a, walk the length-2 paths a-c-b; the first b reached twice
  // closes a 4-cycle. Each a marks at most n vertices before that happens.
  std::vector<int> stamp(n, -1), via(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int c : g.neighbors(a))
      for (int b : g.neighbors(c)) {
        if (b == a) continue;
        if (stamp[b] == a) return found_result(g, named("C4"), {a, via[b], b, c}, false);
        stamp[b] = a;
        via[b] = c;
      }
  }
  return absent_result();
}

namespace {

// Induced P3 in g, or the clique partition.
std::pair<std::optional<std::array<int, 3>>, std::vector<std::vector<int>>> p3_scan(const Graph& g) {
  int n = g.n();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<char> removed(n, 0);
  std::vector<std::vector<int>> cliques;
  for (int v : order) {
    if (removed[v]) continue;
    const auto& nb = g.neighbors(v);
    // N(v) must be a clique; v has maximum degree among the remaining
    // vertices, so then N[v] is a whole component.
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (!g.has_edge(nb[i], nb[j])) return {std::array<int, 3>{nb[i], v, nb[j]}, {}};
    std::vector<int> c{v};
    c.insert(c.end(), nb.begin(), nb.end());
    std::sort(c.begin(), c.end());
    for (int u : c) removed[u] = 1;
    cliques.push_back(std::move(c));
  }
  return {std::nullopt, std::move(cliques)};
}

}  // namespace

DetectionResult p3_structure(const Graph& g, bool complemented) {
  if (!complemented) {
    auto [p, parts] = p3_scan(g);
    if (p) return found_result(g, named("P3"), {(*p)[0], (*p)[1], (*p)[2]});
    return absent_result(g, {CertificateKind::DisjointCliques, std::move(parts)});
  }
  Graph gc = complement(g);
  auto [p, parts] = p3_scan(gc);
  if (p) return found_result(g, named("co-P3"), {(*p)[0], (*p)[1], (*p)[2]});
  return absent_result(g, {CertificateKind::CompleteMultipartite, std::move(parts)});
}

DetectionResult detail::tri_c4_core(const Graph& g) {
  int n = g.n();
  auto nc = noninduced_c4(g);
  if (nc.present()) {
    const auto& c = nc.found->vertices;  // cycle order
    if (g.has_edge(c[0], c[2])) return found_result(g, named("K3"), {c[0], c[1], c[2]});
    if (g.has_edge(c[1], c[3])) return found_result(g, named("K3"), {c[0], c[1], c[3]});
    return found_result(g, named("C4"), c);
  }
  // C4-free: fewer than sqrt(n) vertices reach degree 3 sqrt(n).
  double thr = 3.0 * std::sqrt(static_cast<double>(n));
  std::vector<int> high;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) >= thr) high.push_back(v);
  for (int u = 0; u < n; ++u)
    for (int v : g.neighbors(u)) {
      if (v < u) continue;
      for (int h : high)
        if (h != u && h != v && g.has_edge(h, u) && g.has_edge(h, v)) return found_result(g, named("K3"), {h, u, v});
    }
  for (int w = 0; w < n; ++w) {
    if (g.degree(w) >= thr) continue;
    const auto& nb = g.neighbors(w);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (g.has_edge(nb[i], nb[j])) return found_result(g, named("K3"), {w, nb[i], nb[j]});
  }
  double bound = 3.0 * std::pow(static_cast<double>(n), 1.5);
  if (static_cast<double>(g.m()) > bound)
    throw InternalError("{C4, K3}-free graph with " + std::to_string(g.m()) + " edges exceeds 3 n^1.5");
  return absent_result();
}

namespace {

int fallback(const DetectOptions& opt, int structural = 0) { return std::max(opt.brute_force_below, structural); }

std::vector<Pattern> pats(std::initializer_list<const char*> names) {
  std::vector<Pattern> out;
  for (const char* n : names) out.push_back(named(n));
  return out;
}

}  // namespace

DetectionResult detect_c4_or_triangle(const Graph& g, const DetectOptions& opt) {
  if (g.n() < fallback(opt)) return brute_force_detect_any(g, pats({"C4", "K3"}), true);
  return tri_c4_core(g);
}

// ---------------------------------------------------------------------------
// {C4, diamond}

namespace {

int recursion_threshold(int n) {
  int t = static_cast<int>(std::ceil(std::cbrt(static_cast<double>(n) * n)));
  while (static_cast<long long>(t - 1) * (t - 1) * (t - 1) >= static_cast<long long>(n) * n) --t;
  while (static_cast<long long>(t) * t * t < static_cast<long long>(n) * n) ++t;
  return t;  // ceil(n^{2/3})
}

std::vector<int> mis_ascending(const Graph& g) { return grow_independent(g, {}); }

struct RoundOutcome {
  std::optional<DetectionResult> found;  // local numbering
  std::vector<int> remove;               // non-empty: drop these and recurse
};

RoundOutcome diamond_round(const Graph& G) {
  const std::initializer_list<const char*> kPat = {"C4", "diamond"};
  int n = G.n();
  RoundOutcome out;
  auto I = mis_ascending(G);
  int t = static_cast<int>(I.size());
  std::vector<int> in_I(n, -1);
  for (int i = 0; i < t; ++i) in_I[I[i]] = i;
  std::vector<std::vector<int>> memb(n);  // i with x in N_i
  for (int i = 0; i < t; ++i)
    for (int x : G.neighbors(I[i])) memb[x].push_back(i);

  // step 1: |N_i cap N_j| <= 1
  {
    std::vector<int> stamp(t, -1), first(t, -1);
    for (int i = 0; i < t; ++i)
      for (int x : G.neighbors(I[i]))
        for (int j : memb[x]) {
          if (j >= i) break;
          if (stamp[j] == i) {
            out.found = first_match(G, {{I[i], first[j], I[j], x}}, kPat, "diamond step 1");
            return out;
          }
          stamp[j] = i;
          first[j] = x;
        }
  }
  // step 1: each N_i is P3-free, i.e. a disjoint union of cliques
  std::vector<std::vector<int>> cliques;
  std::vector<std::vector<int>> clique_of(n);  // clique ids containing x
  for (int i = 0; i < t; ++i) {
    const auto& Ni = G.neighbors(I[i]);
    if (Ni.empty()) continue;
    Local l = sub(G, Ni);
    auto [p, parts] = p3_scan(l.g);
    if (p) {
      out.found = found_result(G, named("diamond"), {I[i], l.to_old[(*p)[0]], l.to_old[(*p)[1]], l.to_old[(*p)[2]]});
      return out;
    }
    for (auto& part : parts) {
      int id = static_cast<int>(cliques.size());
      std::vector<int> c;
      for (int x : part) {
        c.push_back(l.to_old[x]);
        clique_of[l.to_old[x]].push_back(id);
      }
      std::sort(c.begin(), c.end());
      cliques.push_back(std::move(c));
    }
  }

  // step 2: x outside N_j has at most one neighbor in N_j
  {
    std::vector<int> in_stamp(t, -1), stamp(t, -1), first(t, -1);
    for (int x = 0; x < n; ++x) {
      if (in_I[x] >= 0) continue;
      for (int i : memb[x]) in_stamp[i] = x;
      for (int y : G.neighbors(x)) {
        if (in_I[y] >= 0) continue;
        for (int j : memb[y]) {
          if (in_stamp[j] == x) continue;
          if (stamp[j] == x) {
            out.found = first_match(G, {{x, I[j], first[j], y}}, kPat, "diamond step 2");
            return out;
          }
          stamp[j] = x;
          first[j] = y;
        }
      }
    }
  }

  if (t > recursion_threshold(n)) {
    out.remove = I;
    return out;
  }

  // non-clique edges: endpoints share no N_i
  auto share = [&](int x, int y) {
    const auto& a = memb[x];
    const auto& b = memb[y];
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) return true;
      if (a[i] < b[j]) ++i;
      else ++j;
    }
    return false;
  };
  std::vector<std::vector<int>> xnb(n);
  for (int x = 0; x < n; ++x) {
    if (in_I[x] >= 0) continue;
    for (int y : G.neighbors(x))
      if (in_I[y] < 0 && !share(x, y)) xnb[x].push_back(y);
  }

  // step 3: at most one non-clique edge between two cliques
  {
    std::unordered_map<std::uint64_t, std::pair<int, int>> table;
    for (int x = 0; x < n; ++x)
      for (int y : xnb[x]) {
        if (y < x) continue;
        for (int c1 : clique_of[x])
          for (int c2 : clique_of[y]) {
            int a = c1, b = c2, ea = x, eb = y;
            if (a > b) {
              std::swap(a, b);
              std::swap(ea, eb);
            }
            std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
            auto [it, fresh] = table.emplace(key, std::make_pair(ea, eb));
            if (!fresh) {
              out.found = first_match(G, {{ea, eb, it->second.second, it->second.first}}, kPat, "diamond step 3");
              return out;
            }
          }
      }
  }

  // steps 4-6: a non-adjacent pair with two common neighbors is a C4 or a
  // diamond. Walk length-2 paths from every a; clique neighbors of a are
  // expanded one clique at a time so that no clique is rescanned.
  {
    std::vector<int> stamp(n, -1), via(n, -1);
    for (int a = 0; a < n; ++a) {
      if (in_I[a] >= 0) continue;
      std::optional<std::vector<int>> hit;
      auto visit = [&](int b, int c) {
        if (b == a || in_I[b] >= 0 || G.has_edge(a, b)) return;
        if (stamp[b] == a) {
          if (via[b] != c) hit = std::vector<int>{a, via[b], b, c};
          return;
        }
        stamp[b] = a;
        via[b] = c;
      };
      for (int ca : clique_of[a]) {
        for (int c : cliques[ca]) {
          if (c == a) continue;
          for (int cc : clique_of[c]) {
            if (cc == ca) continue;
            for (int b : cliques[cc]) {
              if (b != c) visit(b, c);
              if (hit) break;
            }
            if (hit) break;
          }
          for (int b : xnb[c]) {
            if (hit) break;
            visit(b, c);
          }
          if (hit) break;
        }
        if (hit) break;
      }
      if (!hit)
        for (int c : xnb[a]) {
          for (int b : G.neighbors(c)) {
            visit(b, c);
            if (hit) break;
          }
          if (hit) break;
        }
      if (hit) {
        out.found = first_match(G, {*hit}, kPat, "diamond steps 4-6");
        return out;
      }
    }
  }
  return out;
}

// Runs `round` on G, G - I_1, G - I_1 - I_2, ... until it finds a pattern or
// stops asking to recurse.
template <class Round>
DetectionResult run_rounds(const Graph& g, Round round) {
  std::vector<int> alive(g.n());
  std::iota(alive.begin(), alive.end(), 0);
  while (!alive.empty()) {
    Local l = sub(g, alive);
    RoundOutcome r = round(l.g);
    if (r.found) return lift(g, *r.found, l.to_old);
    if (r.remove.empty()) return absent_result();
    std::vector<char> drop(l.g.n(), 0);
    for (int v : r.remove) drop[v] = 1;
    std::vector<int> next;
    for (int v = 0; v < l.g.n(); ++v)
      if (!drop[v]) next.push_back(l.to_old[v]);
    alive = std::move(next);
  }
  return absent_result();
}

}  // namespace

DetectionResult detect_c4_or_diamond(const Graph& g, const DetectOptions& opt) {
  if (g.n() < fallback(opt)) return brute_force_detect_any(g, pats({"C4", "diamond"}), true);
  require_dense(g, "detect_c4_or_diamond");
  return run_rounds(g, diamond_round);
}

// ---------------------------------------------------------------------------
// {C4, K4}

namespace {

struct LEntry {
  int i;
  int a;
  int b;  // -1 when only one common neighbor
};

const LEntry* find_entry(const std::vector<LEntry>& v, int i) {
  auto it = std::lower_bound(v.begin(), v.end(), i, [](const LEntry& e, int x) { return e.i < x; });
  return it != v.end() && it->i == i ? &*it : nullptr;
}

std::vector<int> entry_list(const LEntry* e) {
  std::vector<int> out;
  if (e) {
    out.push_back(e->a);
    if (e->b >= 0) out.push_back(e->b);
  }
  return out;
}

// Three or more common neighbors of two non-adjacent vertices p, q (p in I):
// a non-edge among them closes a C4 through p and q, a triangle plus p is a K4.
DetectionResult three_common(const Graph& G, int p, int q, int x, int y, int z) {
  return first_match(G, {{p, x, q, y}, {p, x, q, z}, {p, y, q, z}, {p, x, y, z}}, {"C4", "K4"}, "k4 common neighbors");
}

RoundOutcome k4_round(const Graph& G) {
  const std::initializer_list<const char*> kPat = {"C4", "K4"};
  int n = G.n();
  RoundOutcome out;
  auto I = mis_ascending(G);
  int t = static_cast<int>(I.size());
  std::vector<int> in_I(n, -1);
  for (int i = 0; i < t; ++i) in_I[I[i]] = i;
  std::vector<std::vector<int>> memb(n);
  for (int i = 0; i < t; ++i)
    for (int x : G.neighbors(I[i])) memb[x].push_back(i);
  auto inN = [&](int i, int x) { return G.has_edge(I[i], x); };

  // step 1: L(v_i, v_j)
  {
    std::unordered_map<std::uint64_t, std::vector<int>> L;
    for (int x = 0; x < n; ++x) {
      if (in_I[x] >= 0) continue;
      const auto& m = memb[x];
      for (std::size_t a = 0; a < m.size(); ++a)
        for (std::size_t b = a + 1; b < m.size(); ++b) {
          auto& l = L[static_cast<std::uint64_t>(m[a]) * t + m[b]];
          l.push_back(x);
          int vi = I[m[a]], vj = I[m[b]];
          if (l.size() == 2 && !G.has_edge(l[0], l[1])) {
            out.found = found_result(G, named("C4"), {vi, l[0], vj, l[1]});
            return out;
          }
          if (l.size() == 3) {
            out.found = three_common(G, vi, vj, l[0], l[1], l[2]);
            return out;
          }
        }
    }
  }
  // step 2: {C4, K3} inside each N_i
  for (int i = 0; i < t; ++i) {
    const auto& Ni = G.neighbors(I[i]);
    if (Ni.size() < 3) continue;
    Local l = sub(G, Ni);
    auto r = tri_c4_core(l.g);
    if (r.present()) {
      std::vector<int> vs;
      for (int v : r.found->vertices) vs.push_back(l.to_old[v]);
      if (vs.size() == 3) vs.push_back(I[i]);
      out.found = first_match(G, {vs}, kPat, "k4 step 2");
      return out;
    }
  }
  // step 3: L(v_i, w) for w outside N_i and I
  std::vector<std::vector<LEntry>> Lw(n);
  {
    std::vector<int> stamp(n, -1), cnt(n, 0), fa(n, -1), fb(n, -1);
    std::vector<int> touched;
    for (int i = 0; i < t; ++i) {
      touched.clear();
      for (int x : G.neighbors(I[i]))
        for (int w : G.neighbors(x)) {
          if (in_I[w] >= 0 || inN(i, w)) continue;
          if (stamp[w] != i) {
            stamp[w] = i;
            cnt[w] = 0;
            touched.push_back(w);
          }
          int c = ++cnt[w];
          if (c == 1) {
            fa[w] = x;
          } else if (c == 2) {
            fb[w] = x;
            if (!G.has_edge(fa[w], x)) {
              out.found = found_result(G, named("C4"), {I[i], fa[w], w, x});
              return out;
            }
          } else {
            out.found = three_common(G, I[i], w, fa[w], fb[w], x);
            return out;
          }
        }
      for (int w : touched) Lw[w].push_back({i, fa[w], cnt[w] == 2 ? fb[w] : -1});
    }
  }

  if (t >= recursion_threshold(n)) {
    out.remove = I;
    return out;
  }

  // external neighbors, I excluded
  std::vector<std::vector<int>> next(n);
  std::vector<std::vector<char>> is_ext(n);
  for (int u = 0; u < n; ++u) {
    if (in_I[u] >= 0) continue;
    for (int v : G.neighbors(u)) {
      if (in_I[v] >= 0) continue;
      for (int i : memb[u])
        if (!inN(i, v)) {
          next[u].push_back(v);
          break;
        }
    }
  }
  auto ext = [&](int u, int v) { return std::binary_search(next[u].begin(), next[u].end(), v); };

  // step 4-1, K4 with two vertices in N_i and two in N_j
  for (int a = 0; a < n; ++a) {
    if (in_I[a] >= 0) continue;
    for (const auto& e : Lw[a]) {
      if (e.b < 0) continue;
      int b = e.a, c = e.b;
      for (int i : memb[a]) {
        if (inN(i, b) || inN(i, c)) continue;
        auto lb = entry_list(find_entry(Lw[b], i));
        auto lc = entry_list(find_entry(Lw[c], i));
        for (int d : lb)
          if (d != a && std::find(lc.begin(), lc.end(), d) != lc.end())
            if (auto r = classify(G, {a, b, c, d}, {"K4"})) {
              out.found = *r;
              return out;
            }
      }
    }
  }
  // step 4-1, C4 a-b-c-d with edge ad in N_i and edge bc in N_j
  for (int i = 0; i < t; ++i)
    for (int a : G.neighbors(I[i]))
      for (int d : G.neighbors(a)) {
        if (d <= a || in_I[d] >= 0 || !inN(i, d)) continue;
        for (const auto& ea : Lw[a]) {
          const LEntry* ed = find_entry(Lw[d], ea.i);
          if (!ed) continue;
          for (int b : entry_list(&ea))
            for (int c : entry_list(ed))
              if (auto r = classify(G, {a, b, c, d}, {"C4"})) {
                out.found = *r;
                return out;
              }
        }
      }
  // step 4-2: {C4, K3} inside each N_ext(u)
  for (int u = 0; u < n; ++u) {
    if (next[u].size() < 3) continue;
    Local l = sub(G, next[u]);
    auto r = tri_c4_core(l.g);
    if (r.present()) {
      std::vector<int> vs;
      for (int v : r.found->vertices) vs.push_back(l.to_old[v]);
      if (vs.size() == 3) vs.push_back(u);
      out.found = first_match(G, {vs}, kPat, "k4 step 4-2");
      return out;
    }
  }
  // step 4-3: fully external edge ab plus its neighbors in one N_i
  for (int a = 0; a < n; ++a)
    for (int b : next[a]) {
      if (b <= a || !ext(b, a)) continue;
      for (const auto& ea : Lw[a]) {
        const LEntry* eb = find_entry(Lw[b], ea.i);
        if (!eb) continue;
        for (int d : entry_list(&ea))
          for (int c : entry_list(eb))
            if (auto r = classify(G, {a, b, c, d}, {"C4"})) {
              out.found = *r;
              return out;
            }
      }
    }
  // step 4-4: L_ext(w, u) = {z : w, u in N_ext(z)} for non-adjacent w, u
  {
    std::vector<std::vector<int>> rev(n);  // rev[w] = z with w in N_ext(z)
    for (int z = 0; z < n; ++z)
      for (int w : next[z]) rev[w].push_back(z);
    std::vector<int> stamp(n, -1), cnt(n, 0), fa(n, -1), fb(n, -1);
    for (int w = 0; w < n; ++w) {
      if (in_I[w] >= 0) continue;
      for (int z : rev[w])
        for (int u : next[z]) {
          if (u == w || G.has_edge(w, u)) continue;
          if (stamp[u] != w) {
            stamp[u] = w;
            cnt[u] = 0;
          }
          int c = ++cnt[u];
          if (c == 1) {
            fa[u] = z;
          } else if (c == 2) {
            fb[u] = z;
            if (!G.has_edge(fa[u], z)) {
              out.found = found_result(G, named("C4"), {w, fa[u], u, z});
              return out;
            }
          } else {
            out.found = three_common(G, w, u, fa[u], fb[u], z);
            return out;
          }
        }
    }
  }
  return out;
}

}  // namespace

DetectionResult detect_c4_or_k4(const Graph& g, const DetectOptions& opt) {
  if (g.n() < fallback(opt)) return brute_force_detect_any(g, pats({"C4", "K4"}), true);
  require_dense(g, "detect_c4_or_k4");
  return run_rounds(g, k4_round);
}

// ---------------------------------------------------------------------------
// {C4, paw}

namespace {

// N(v) is a clique with at least two vertices; G connected.
DetectionResult paw_clique_neighborhood(const Graph& G, int v) {
  const auto& Nv = G.neighbors(v);
  int n = G.n();
  Bitset nb(n);
  for (int x : Nv) nb.set(x);
  std::size_t d = Nv.size();
  std::vector<char> in_S(n, 0);
  std::vector<int> S, T;
  for (int u = 0; u < n; ++u) {
    if (u == v || nb.test(u)) continue;
    std::size_t c = Bitset::count_and(G.row(u), nb);
    if (c > 0 && c < d) {
      int w = static_cast<int>(Bitset::first_and(G.row(u), nb));
      Bitset miss = nb - G.row(u);
      return found_result(G, named("paw"), {v, w, static_cast<int>(miss.first()), u});
    }
    if (c == d) {
      S.push_back(u);
      in_S[u] = 1;
    } else {
      T.push_back(u);
    }
  }
  for (int u : T)
    for (int s : G.neighbors(u))
      if (in_S[s]) return found_result(G, named("paw"), {u, s, Nv[0], Nv[1]});
  if (!T.empty()) throw InternalError("paw: component is not connected");
  for (int s : S)
    for (int s2 : G.neighbors(s))
      if (in_S[s2]) return found_result(G, named("paw"), {s, s2, Nv[0], v});
  std::vector<std::vector<int>> parts;
  for (int x : Nv) parts.push_back({x});
  std::vector<int> ind = S;
  ind.push_back(v);
  std::sort(ind.begin(), ind.end());
  parts.push_back(ind);
  return absent_result(G, {CertificateKind::CompleteMultipartite, parts});
}

// N(v) has an edge; G connected.
DetectionResult paw_edge_neighborhood(const Graph& G, int v) {
  const auto& Nv = G.neighbors(v);
  int n = G.n();
  Local l = sub(G, Nv);
  Graph lc = complement(l.g);
  auto [p, parts] = p3_scan(lc);
  if (p) return found_result(G, named("paw"), {v, l.to_old[(*p)[0]], l.to_old[(*p)[1]], l.to_old[(*p)[2]]});
  std::vector<std::vector<int>> big;
  std::vector<int> J;
  for (const auto& part : parts) {
    std::vector<int> vs;
    for (int x : part) vs.push_back(l.to_old[x]);
    if (vs.size() >= 2) big.push_back(vs);
    else J.push_back(vs[0]);
  }
  if (big.size() >= 2) return found_result(G, named("C4"), {big[0][0], big[1][0], big[0][1], big[1][1]});
  if (big.empty()) return paw_clique_neighborhood(G, v);
  const auto& Ipart = big[0];
  Bitset nb(n);
  for (int x : Nv) nb.set(x);
  for (int u = 0; u < n; ++u) {
    if (u == v || nb.test(u)) continue;
    std::size_t c = Bitset::count_and(G.row(u), nb);
    if (c == 0) continue;
    if (c == Nv.size()) return found_result(G, named("C4"), {u, Ipart[0], v, Ipart[1]});
    Bitset miss = nb - G.row(u);
    int j_adj = -1;
    for (int j : J)
      if (G.has_edge(u, j)) {
        j_adj = j;
        break;
      }
    if (j_adj >= 0) {
      int y = static_cast<int>(miss.first());
      return found_result(G, named("paw"), {v, j_adj, y, u});
    }
    int x = static_cast<int>(Bitset::first_and(G.row(u), nb));
    return found_result(G, named("paw"), {v, x, J[0], u});
  }
  std::vector<std::vector<int>> cert{Ipart, {v}};
  for (int j : J) cert.push_back({j});
  return absent_result(G, {CertificateKind::CompleteMultipartite, cert});
}

DetectionResult paw_component(const Graph& G) {
  int n = G.n();
  auto nc = noninduced_c4(G);
  int v = -1;
  if (nc.present()) {
    const auto& c = nc.found->vertices;
    if (G.has_edge(c[0], c[2])) v = c[0];
    else if (G.has_edge(c[1], c[3])) v = c[1];
    else return found_result(G, named("C4"), c);
  } else {
    // C4-free, so the neighborhood pair scans cost O(n^2) in total
    for (int w = 0; w < n && v < 0; ++w) {
      const auto& nb = G.neighbors(w);
      for (std::size_t i = 0; i < nb.size() && v < 0; ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
          if (G.has_edge(nb[i], nb[j])) {
            v = w;
            break;
          }
    }
    if (v < 0) return absent_result();  // no triangle, no C4
  }
  return paw_edge_neighborhood(G, v);
}

}  // namespace

DetectionResult detect_c4_or_paw(const Graph& g, const DetectOptions& opt) {
  if (g.n() < fallback(opt)) return brute_force_detect_any(g, pats({"C4", "paw"}), true);
  require_dense(g, "detect_c4_or_paw");
  auto comps = components(g);
  for (const auto& c : comps) {
    if (c.size() < 4) continue;
    Local l = sub(g, c);
    auto r = paw_component(l.g);
    if (r.present()) return lift(g, r, l.to_old);
    if (comps.size() == 1 && r.certificate) return absent_result(g, *r.certificate);
  }
  return absent_result();
}

// ---------------------------------------------------------------------------
// {C4, co-claw}

namespace {

std::optional<DetectionResult> coclaw_outside_edge(const Graph& G, const std::vector<int>& C, const Bitset& inC,
                                                   const std::vector<std::vector<int>>& Smiss, int u, int w) {
  const std::initializer_list<const char*> kPat = {"C4", "co-claw"};
  auto subset = [](const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  auto Su = Smiss[u], Sw = Smiss[w];
  if (!subset(Su, Sw) && !subset(Sw, Su)) {
    std::vector<int> d1, d2;
    std::set_difference(Su.begin(), Su.end(), Sw.begin(), Sw.end(), std::back_inserter(d1));
    std::set_difference(Sw.begin(), Sw.end(), Su.begin(), Su.end(), std::back_inserter(d2));
    return first_match(G, {{u, w, d1[0], d2[0]}}, kPat, "co-claw crossing sets");
  }
  if (!subset(Su, Sw)) {
    std::swap(u, w);
    std::swap(Su, Sw);
  }
  int n = G.n();
  auto outside_nonneighbor = [&](int c) {
    for (int z = 0; z < n; ++z)
      if (!inC.test(z) && !G.has_edge(z, c)) return z;
    return -1;
  };
  auto outside_neighbor = [&](int c) {
    for (int z : G.neighbors(c))
      if (!inC.test(z)) return z;
    return -1;
  };
  auto other_in_C = [&](std::initializer_list<int> avoid) {
    for (int c : C)
      if (std::find(avoid.begin(), avoid.end(), c) == avoid.end()) return c;
    return -1;
  };
  if (Su.size() == 1 && Sw.size() == 1) {
    int v = Su[0];
    int z = outside_neighbor(v);
    int v2 = -1;
    for (int c : C)
      if (c != v && !G.has_edge(c, z)) {
        v2 = c;
        break;
      }
    return first_match(G, {{v, z, u, v2}, {v, z, w, v2}, {v2, u, w, z}}, kPat, "co-claw case 1");
  }
  if (Su.size() == 2) {
    int v1 = Su[0], v2 = Su[1];
    int v3 = other_in_C({v1, v2});
    int z = outside_nonneighbor(v3);
    int va = G.has_edge(z, v1) ? v1 : v2;
    return first_match(G, {{va, v3, u, z}, {va, v3, w, z}, {u, w, v3, z}}, kPat, "co-claw case 2");
  }
  // |S(u)| = 1, |S(w)| = 2
  int v1 = Su[0];
  int v2 = Sw[0] == v1 ? Sw[1] : Sw[0];
  for (int z : G.neighbors(v1)) {
    if (inC.test(z)) continue;
    for (int v3 : Smiss[z])
      if (v3 != v2 && v3 != v1)
        return first_match(G, {{w, z, v1, v3}, {z, u, v3, v1}, {w, u, v3, z}}, kPat, "co-claw case 3");
  }
  int z1 = outside_neighbor(v1);
  int v3 = other_in_C({v1, v2});
  int z2 = outside_nonneighbor(v3);
  return first_match(G, {{z1, z2, v2, v1}, {z1, v1, v3, z2}}, kPat, "co-claw case 3b");
}

// One pass on G with no universal vertex. Returns a pattern, "absent", or a
// list of clique vertices that lie in no pattern and can be dropped.
struct CoclawPass {
  std::optional<DetectionResult> result;
  std::vector<int> drop;
};

CoclawPass coclaw_pass(const Graph& G) {
  const std::initializer_list<const char*> kPat = {"C4", "co-claw"};
  int n = G.n();
  CoclawPass out;
  auto tc = tri_c4_core(G);
  if (!tc.present() || tc.found->pattern == "C4") {
    out.result = tc;
    return out;
  }
  auto C = grow_clique(G, tc.found->vertices);
  Bitset inC(n);
  for (int c : C) inC.set(c);
  std::vector<std::vector<int>> Smiss(n);
  for (int u = 0; u < n; ++u) {
    if (inC.test(u)) continue;
    Bitset miss = inC - G.row(u);
    for (std::size_t c = miss.first(); c != Bitset::npos && Smiss[u].size() < 3; c = miss.next(c))
      Smiss[u].push_back(static_cast<int>(c));
    if (Smiss[u].size() >= 3) {
      out.result = first_match(G, {{Smiss[u][0], Smiss[u][1], Smiss[u][2], u}}, kPat, "co-claw non-neighbors");
      return out;
    }
  }
  std::vector<int> lonely;
  for (int c : C)
    if (G.degree(c) == static_cast<int>(C.size()) - 1) lonely.push_back(c);
  if (!lonely.empty()) {
    std::vector<int> rest;
    for (int u = 0; u < n; ++u)
      if (!inC.test(u)) rest.push_back(u);
    Local l = sub(G, rest);
    auto r = tri_c4_core(l.g);
    if (r.present()) {
      std::vector<int> vs;
      for (int v : r.found->vertices) vs.push_back(l.to_old[v]);
      if (vs.size() == 3) vs.push_back(lonely[0]);
      out.result = first_match(G, {vs}, kPat, "co-claw lonely vertex");
      return out;
    }
    out.drop = lonely;
    return out;
  }
  for (int u = 0; u < n; ++u) {
    if (inC.test(u)) continue;
    for (int w : G.neighbors(u))
      if (!inC.test(w)) {
        out.result = *coclaw_outside_edge(G, C, inC, Smiss, u, w);
        return out;
      }
  }
  // Split graph. The only co-claw left is a triangle {u, c1, c2} with u
  // outside C plus an outside z that misses exactly c1 and c2.
  std::vector<int> rest;
  for (int u = 0; u < n; ++u)
    if (!inC.test(u)) rest.push_back(u);
  std::vector<int> miss_count(n, 0);
  std::map<std::pair<int, int>, int> miss_pair;
  for (int u : rest) {
    for (int c : Smiss[u]) ++miss_count[c];
    if (Smiss[u].size() == 2) ++miss_pair[{Smiss[u][0], Smiss[u][1]}];
  }
  for (int z : rest) {
    if (Smiss[z].size() != 2) continue;
    int c1 = Smiss[z][0], c2 = Smiss[z][1];
    int both = static_cast<int>(rest.size()) - miss_count[c1] - miss_count[c2] + miss_pair[{c1, c2}];
    if (both == 0) continue;
    for (int u : rest)
      if (G.has_edge(u, c1) && G.has_edge(u, c2)) {
        out.result = first_match(G, {{u, c1, c2, z}}, kPat, "co-claw split graph");
        return out;
      }
  }
  out.result = absent_result(G, {CertificateKind::Split, {C, rest}});
  return out;
}

}  // namespace

DetectionResult detect_c4_or_coclaw(const Graph& g, const DetectOptions& opt) {
  if (g.n() < fallback(opt)) return brute_force_detect_any(g, pats({"C4", "co-claw"}), true);
  require_dense(g, "detect_c4_or_coclaw");
  std::vector<int> alive(g.n());
  std::iota(alive.begin(), alive.end(), 0);
  std::vector<int> universal;
  bool whole = true;  // alive is V minus universal vertices only
  while (true) {
    Local l0 = sub(g, alive);
    std::vector<int> keep;
    for (int v = 0; v < l0.g.n(); ++v) {
      if (l0.g.degree(v) == l0.g.n() - 1) {
        if (whole) universal.push_back(l0.to_old[v]);
        continue;
      }
      keep.push_back(l0.to_old[v]);
    }
    if (keep.size() < 4) {
      if (!whole) return absent_result();
      // at most three vertices left plus universal ones: a clique-plus-few split
      break;
    }
    Local l = sub(g, keep);
    auto pass = coclaw_pass(l.g);
    if (pass.result) {
      if (pass.result->present()) return lift(g, *pass.result, l.to_old);
      if (whole && pass.result->certificate) {
        auto cert = *pass.result->certificate;
        for (auto& part : cert.parts)
          for (auto& v : part) v = l.to_old[v];
        cert.parts[0].insert(cert.parts[0].end(), universal.begin(), universal.end());
        std::sort(cert.parts[0].begin(), cert.parts[0].end());
        return absent_result(g, cert);
      }
      return absent_result();
    }
    std::vector<char> drop(l.g.n(), 0);
    for (int v : pass.drop) drop[v] = 1;
    alive.clear();
    for (int v = 0; v < l.g.n(); ++v)
      if (!drop[v]) alive.push_back(l.to_old[v]);
    whole = false;
  }
  return absent_result();
}

}  // namespace pf
