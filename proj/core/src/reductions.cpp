#include "patternforge/reductions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "patternforge/errors.hpp"
#include "patternforge/random.hpp"

namespace pf {

std::string to_string(ReductionKind k) {
  switch (k) {
    case ReductionKind::Psi:
      return "psi";
    case ReductionKind::Core:
      return "core";
    case ReductionKind::PathCycle:
      return "pathcycle";
    case ReductionKind::Set:
      return "set";
  }
  return "?";
}

ReductionKind reduction_kind_from_string(const std::string& s) {
  if (s == "psi") return ReductionKind::Psi;
  if (s == "core") return ReductionKind::Core;
  if (s == "pathcycle") return ReductionKind::PathCycle;
  if (s == "set") return ReductionKind::Set;
  throw InputError("unknown reduction kind '" + s + "'");
}

namespace {

// Adds edges between part a (host copies listed in `va`) and part b
// (`vb`): a matching on equal host vertices, or the host edges.
void join_parts(GraphBuilder& b, const std::vector<int>& host_of, const std::vector<int>& va,
                const std::vector<int>& vb, bool matching, const Graph& g, std::uint64_t& work) {
  if (matching) {
    // both lists are sorted by host vertex
    std::size_t i = 0, j = 0;
    while (i < va.size() && j < vb.size()) {
      ++work;
      int x = host_of[va[i]], y = host_of[vb[j]];
      if (x == y) {
        b.add_edge(va[i], vb[j]);
        ++i;
        ++j;
      } else if (x < y) {
        ++i;
      } else {
        ++j;
      }
    }
    return;
  }
  // position of each host vertex in part b
  std::vector<int> pos_b(g.n(), -1);
  for (int v : vb) pos_b[host_of[v]] = v;
  for (int u : va) {
    for (int w : g.neighbors(host_of[u])) {
      ++work;
      if (pos_b[w] >= 0) b.add_edge(u, pos_b[w]);
    }
  }
}

void check_minor_for(const Pattern& h, const MinorFunction& f) {
  if (!(f.pattern.graph == h.graph)) throw InputError("minor function belongs to a different pattern");
  if (!is_minor_function(f)) throw InputError("invalid minor function");
  for (int x : f.f)
    if (x < 0) throw InputError("minor function must cover every pattern vertex");
}

}  // namespace

ReductionInstance build_psi_reduction(const Graph& g, const Pattern& h, const MinorFunction& f) {
  check_minor_for(h, f);
  int n = g.n(), k = h.size();
  ReductionInstance inst;
  inst.params.kind = ReductionKind::Psi;
  inst.params.pattern = h;
  inst.params.source_n = n;
  inst.params.t = f.t;
  inst.params.minor = f;

  GraphBuilder b(n * k);
  std::vector<int> host_of(n * k);
  std::vector<std::vector<int>> part(k);
  inst.out.part_of.resize(n * k);
  inst.origin.resize(n * k);
  for (int i = 0; i < k; ++i)
    for (int w = 0; w < n; ++w) {
      int v = i * n + w;
      host_of[v] = w;
      part[i].push_back(v);
      inst.out.part_of[v] = i;
      inst.origin[v] = {i, w};
    }
  for (auto [u, v] : h.graph.edges())
    join_parts(b, host_of, part[u], part[v], f.f[u] == f.f[v], g, inst.params.work);
  inst.out.graph = b.build();
  inst.out.k = k;
  return inst;
}

std::vector<int> extract_clique_psi(const ReductionInstance& inst, const std::vector<int>& copy) {
  const Pattern& h = inst.params.pattern;
  int k = h.size();
  if (!inst.params.minor) throw InputError("instance carries no minor function");
  const MinorFunction& mf = *inst.params.minor;
  if (static_cast<int>(copy.size()) != k) throw InputError("copy has wrong size");
  std::vector<int> at(k, -1);
  for (int v : copy) {
    if (v < 0 || v >= inst.out.graph.n()) throw InputError("copy vertex out of range");
    int p = inst.out.part_of[v];
    if (at[p] >= 0) throw InputError("copy is not colorful");
    at[p] = v;
  }
  for (auto [a, b] : h.graph.edges())
    if (!inst.out.graph.has_edge(at[a], at[b])) throw InputError("copy is not a copy of the pattern");

  std::vector<int> w(mf.t, kSentinel);
  for (int i = 0; i < k; ++i) {
    int gv = inst.origin[at[i]].g_vertex;
    int blk = mf.f[i];
    if (w[blk] == kSentinel) w[blk] = gv;
    if (w[blk] != gv) throw InternalError("extract_clique_psi: block maps to two host vertices");
  }
  return w;
}

int default_color_coding_rounds(int c, int n) {
  double r = std::pow(static_cast<double>(c), c) * (std::log(std::max(n, 1)) + std::log(100.0));
  return static_cast<int>(std::ceil(r));
}

ReductionInstance build_core_instance(const Graph& g, const Pattern& h, const CoreResult& core,
                                      const CCovering& cov, const std::vector<int>& set_coloring,
                                      const std::vector<int>& host_coloring) {
  int n = g.n(), k = h.size();
  int c = core.core.size();
  if (static_cast<int>(host_coloring.size()) != n) throw InputError("host coloring has wrong size");
  std::vector<std::vector<int>> classes(c);
  for (int w = 0; w < n; ++w) {
    if (host_coloring[w] < 0 || host_coloring[w] >= c) throw InputError("host color out of range");
    classes[host_coloring[w]].push_back(w);
  }

  ReductionInstance inst;
  inst.params.kind = ReductionKind::Core;
  inst.params.pattern = h;
  inst.params.source_n = n;
  inst.params.t = c;
  inst.params.core = core.core;
  inst.params.covering = cov;
  inst.params.set_coloring = set_coloring;
  inst.params.host_coloring = host_coloring;

  std::vector<std::vector<int>> part(k);
  std::vector<int> host_of;
  int next = 0;
  for (int v = 0; v < k; ++v) {
    if (set_coloring[v] >= 0) {
      for (int w : classes[set_coloring[v]]) {
        part[v].push_back(next++);
        host_of.push_back(w);
        inst.origin.push_back({v, w});
        inst.out.part_of.push_back(v);
      }
    } else {
      part[v].push_back(next++);
      host_of.push_back(kSentinel);
      inst.origin.push_back({v, kSentinel});
      inst.out.part_of.push_back(v);
    }
  }
  GraphBuilder b(next);
  for (auto [u, v] : h.graph.edges()) {
    bool iu = set_coloring[u] >= 0, iv = set_coloring[v] >= 0;
    if (iu && iv) {
      join_parts(b, host_of, part[u], part[v], set_coloring[u] == set_coloring[v], g, inst.params.work);
    } else {
      for (int x : part[u])
        for (int y : part[v]) {
          ++inst.params.work;
          b.add_edge(x, y);
        }
    }
  }
  inst.out.graph = b.build();
  inst.out.k = k;
  return inst;
}

namespace {

struct CorePlan {
  CoreResult core;
  CCovering cov;
  std::vector<int> set_coloring;  // by pattern vertex, -1 outside the first set
};

CorePlan plan_core(const Pattern& h) {
  if (h.size() > 12) throw CapacityError("core reduction: pattern exceeds cap 12");
  CorePlan p;
  p.core = compute_core(h);
  p.cov = min_C_covering(h, p.core.core);
  p.set_coloring.assign(h.size(), -1);
  if (p.cov.sets.empty()) throw InternalError("core reduction: pattern has no copy of its core");
  const auto& s1 = p.cov.sets[0];
  auto sub = induced_subgraph(h.graph, s1);
  std::vector<int> col = p.cov.colorings[0];
  // The forward direction needs the coloring of the first set to be a
  // homomorphism into the core, with color i read as core vertex i.
  if (!is_homomorphism(sub.graph, p.core.core.graph, col)) {
    auto hom = find_homomorphism(sub.graph, p.core.core.graph);
    if (!hom || !is_C_coloring(sub.graph, p.core.core, hom->map))
      throw InternalError("core reduction: no homomorphic C-coloring of the first covering set");
    col = hom->map;
    p.cov.colorings[0] = col;
  }
  for (std::size_t i = 0; i < s1.size(); ++i) p.set_coloring[s1[i]] = col[i];
  return p;
}

std::size_t run_core(const Graph& g, const Pattern& h, const CoreMode& mode, ReductionKind kind,
                     const std::function<bool(const ReductionInstance&)>& visit) {
  CorePlan plan = plan_core(h);
  int n = g.n(), c = plan.core.core.size();
  std::size_t count = 0;
  auto emit = [&](const std::vector<int>& coloring) {
    auto inst = build_core_instance(g, h, plan.core, plan.cov, plan.set_coloring, coloring);
    inst.params.kind = kind;
    ++count;
    return visit(inst);
  };
  if (mode.exhaustive) {
    double total = std::pow(static_cast<double>(c), n);
    if (total > 1e7) throw CapacityError("core reduction: c^n colorings exceeds cap 1e7");
    std::vector<int> col(n, 0);
    while (true) {
      if (!emit(col)) return count;
      int i = 0;
      while (i < n && ++col[i] == c) col[i++] = 0;
      if (i == n) return count;
    }
  }
  int rounds = mode.rounds ? *mode.rounds : default_color_coding_rounds(c, n);
  if (rounds <= 0) throw InputError("core reduction: rounds must be positive");
  Rng rng(mode.seed);
  std::vector<int> col(n);
  for (int r = 0; r < rounds; ++r) {
    for (auto& x : col) x = static_cast<int>(rng.below(static_cast<std::uint64_t>(c)));
    if (!emit(col)) break;
  }
  return count;
}

}  // namespace

std::size_t for_each_core_instance(const Graph& g, const Pattern& h, const CoreMode& mode,
                                   const std::function<bool(const ReductionInstance&)>& visit) {
  return run_core(g, h, mode, ReductionKind::Core, visit);
}

std::vector<ReductionInstance> build_core_reduction(const Graph& g, const Pattern& h, const CoreMode& mode) {
  std::vector<ReductionInstance> out;
  for_each_core_instance(g, h, mode, [&](const ReductionInstance& inst) {
    out.push_back(inst);
    return true;
  });
  return out;
}

std::size_t for_each_set_instance(const Graph& g, const std::vector<Pattern>& s, const CoreMode& mode,
                                  const std::function<bool(const ReductionInstance&)>& visit) {
  auto rep = choose_set_representative(s);
  return run_core(g, rep.h, mode, ReductionKind::Set, visit);
}

std::optional<PathCycleShape> complement_path_cycle_shape(const Pattern& h) {
  Graph c = complement(h.graph);
  int k = c.n();
  if (k < 2) return std::nullopt;
  for (int v = 0; v < k; ++v)
    if (c.degree(v) > 2) return std::nullopt;
  PathCycleShape shape;
  int start;
  if (c.m() == static_cast<std::size_t>(k - 1)) {
    shape.kind = PathOrCycle::Path;
    start = -1;
    for (int v = 0; v < k && start < 0; ++v)
      if (c.degree(v) == 1) start = v;
    if (start < 0) return std::nullopt;
  } else if (c.m() == static_cast<std::size_t>(k) && k >= 3) {
    shape.kind = PathOrCycle::Cycle;
    start = 0;
  } else {
    return std::nullopt;
  }
  std::vector<bool> seen(k, false);
  int prev = -1, cur = start;
  while (cur >= 0) {
    shape.order.push_back(cur);
    seen[cur] = true;
    int nxt = -1;
    for (int w : c.neighbors(cur))
      if (w != prev && !seen[w]) {
        nxt = w;
        break;
      }
    prev = cur;
    cur = nxt;
  }
  if (static_cast<int>(shape.order.size()) != k) return std::nullopt;  // disconnected
  return shape;
}

PathCycleReduction build_pathcycle_reduction(const Graph& g, const Pattern& h) {
  auto shape = complement_path_cycle_shape(h);
  if (!shape) throw InputError("pathcycle: pattern is not the complement of a path or cycle");
  int k = h.size();
  if (k < 4) throw InputError("pathcycle: pattern needs at least 4 vertices");
  if (k > 12) throw CapacityError("pathcycle: pattern exceeds cap 12");
  if (shape->kind == PathOrCycle::Cycle && k % 2 == 1)
    throw InputError("pathcycle: odd cycle complements are cores; use the psi reduction");

  auto cm = max_clique_minor(h);
  MinorFunction mf = cm.witness;
  int v1 = shape->order.front(), vk = shape->order.back();
  int a = mf.f[v1], b = mf.f[vk];
  int shrunk_blocks;
  if (a >= 0 && b >= 0) {
    mf = relabel_blocks_last(mf, a, b);
    shrunk_blocks = a == b ? 1 : 2;
  } else if (a >= 0 || b >= 0) {
    int x = a >= 0 ? a : b;
    mf = relabel_blocks_last(mf, x, x);
    shrunk_blocks = 1;
  } else {
    shrunk_blocks = 0;
  }
  int t = mf.t, tp = t - shrunk_blocks;

  int n = g.n();
  ReductionInstance inst;
  inst.params.kind = ReductionKind::PathCycle;
  inst.params.pattern = h;
  inst.params.source_n = n;
  inst.params.t = tp;
  inst.params.minor = mf;
  inst.params.path_order = shape->order;

  auto regular = [&](int v) { return mf.f[v] >= 0 && mf.f[v] < tp; };
  std::vector<std::vector<int>> part(k);
  std::vector<int> host_of;
  int next = 0;
  for (int v = 0; v < k; ++v) {
    if (regular(v)) {
      for (int w = 0; w < n; ++w) {
        part[v].push_back(next++);
        host_of.push_back(w);
        inst.origin.push_back({v, w});
        inst.out.part_of.push_back(v);
      }
    } else {
      part[v].push_back(next++);
      host_of.push_back(kSentinel);
      inst.origin.push_back({v, kSentinel});
      inst.out.part_of.push_back(v);
    }
  }
  GraphBuilder bld(next);
  for (auto [u, v] : h.graph.edges()) {
    if (regular(u) && regular(v)) {
      join_parts(bld, host_of, part[u], part[v], mf.f[u] == mf.f[v], g, inst.params.work);
    } else {
      for (int x : part[u])
        for (int y : part[v]) {
          ++inst.params.work;
          bld.add_edge(x, y);
        }
    }
  }
  inst.out.graph = bld.build();
  inst.out.k = k;
  return {std::move(inst), tp};
}

SetRepresentative choose_set_representative(const std::vector<Pattern>& s) {
  int q = static_cast<int>(s.size());
  if (q == 0) throw InputError("choose_set_representative: empty pattern set");
  if (q > 16) throw CapacityError("choose_set_representative: more than 16 patterns");
  for (const auto& p : s)
    if (p.size() > 12) throw CapacityError("choose_set_representative: pattern exceeds cap 12");

  std::vector<std::vector<bool>> reach(q, std::vector<bool>(q, false));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) reach[i][j] = i == j || find_homomorphism(s[i].graph, s[j].graph).has_value();
  auto direct = reach;
  for (int m = 0; m < q; ++m)
    for (int i = 0; i < q; ++i)
      for (int j = 0; j < q; ++j)
        if (reach[i][m] && reach[m][j]) reach[i][j] = true;

  std::vector<int> comp;
  for (int i = 0; i < q && comp.empty(); ++i) {
    std::vector<int> members;
    for (int j = 0; j < q; ++j)
      if (reach[i][j] && reach[j][i]) members.push_back(j);
    bool source = true;
    for (int x = 0; x < q && source; ++x) {
      if (std::find(members.begin(), members.end(), x) != members.end()) continue;
      for (int y : members)
        if (direct[x][y]) source = false;
    }
    if (source) comp = members;
  }
  if (comp.empty()) throw InternalError("choose_set_representative: no source component");

  std::vector<CoreResult> cores;
  for (int j : comp) cores.push_back(compute_core(s[j]));
  for (std::size_t i = 1; i < cores.size(); ++i)
    if (!is_isomorphic(cores[0].core.graph, cores[i].core.graph))
      throw InternalError("choose_set_representative: cores in a component differ");

  std::size_t best = 0, best_r = static_cast<std::size_t>(-1);
  for (std::size_t i = 0; i < comp.size(); ++i) {
    auto cov = min_C_covering(s[comp[i]], cores[i].core);
    if (cov.sets.size() < best_r) {
      best_r = cov.sets.size();
      best = i;
    }
  }
  return {s[comp[best]], cores[best].core, static_cast<std::size_t>(comp[best])};
}

void Hypergraph4P3U::add_edge(HyperVertex a, HyperVertex b, HyperVertex c) {
  Hyperedge e{a, b, c};
  std::sort(e.begin(), e.end());
  for (auto& x : e)
    if (x.part < 0 || x.part > 3 || x.index < 0 || x.index >= sizes[x.part])
      throw InputError("hyperedge endpoint " + std::to_string(x.part) + ":" + std::to_string(x.index) +
                       " out of range");
  if (e[0].part == e[1].part || e[1].part == e[2].part) throw InputError("hyperedge repeats a part");
  edges.insert(e);
}

bool Hypergraph4P3U::has_edge(HyperVertex a, HyperVertex b, HyperVertex c) const {
  Hyperedge e{a, b, c};
  std::sort(e.begin(), e.end());
  return edges.count(e) > 0;
}

HyperC4Reduction build_hyperclique_c4_reduction(const Hypergraph4P3U& hg) {
  const auto& sz = hg.sizes;
  for (int s : sz)
    if (s <= 0) throw InputError("hc4: every part must be nonempty");
  std::array<int, 5> off{};
  for (int i = 0; i < 4; ++i) off[i + 1] = off[i] + sz[i] * sz[(i + 1) % 4];
  auto id = [&](int band, int x, int y) { return off[band] + x * sz[(band + 1) % 4] + y; };

  HyperC4Reduction r;
  r.origin.resize(off[4]);
  GraphBuilder b(off[4]);
  for (int i = 0; i < 4; ++i) {
    int nx = sz[i], ny = sz[(i + 1) % 4];
    for (int x = 0; x < nx; ++x)
      for (int y = 0; y < ny; ++y) r.origin[id(i, x, y)] = {i, x, y};
    for (int y = 0; y < ny; ++y)
      for (int x = 0; x < nx; ++x)
        for (int x2 = x + 1; x2 < nx; ++x2) b.add_edge(id(i, x, y), id(i, x2, y));
  }
  for (const auto& e : hg.edges) {
    for (auto& v : e)
      if (v.part < 0 || v.part > 3 || v.index < 0 || v.index >= sz[v.part]) throw InputError("hc4: malformed hyperedge");
    // the missing part p; the triple runs p+1, p+2, p+3 around the cycle
    int missing = 0 + 1 + 2 + 3 - e[0].part - e[1].part - e[2].part;
    int i = (missing + 1) % 4;
    std::array<int, 4> idx{};
    for (auto& v : e) idx[v.part] = v.index;
    int x = idx[i], y = idx[(i + 1) % 4], y2 = idx[(i + 2) % 4];
    b.add_edge(id(i, x, y), id((i + 1) % 4, y, y2));
  }
  r.out = b.build();
  return r;
}

std::array<int, 4> extract_hyperclique(const HyperC4Reduction& red, const std::vector<int>& copy,
                                       const Hypergraph4P3U* hg) {
  if (copy.size() != 4) throw InputError("extract_hyperclique: copy must have 4 vertices");
  for (int v : copy)
    if (v < 0 || v >= red.out.n()) throw InputError("extract_hyperclique: vertex out of range");
  for (int i = 0; i < 4; ++i) {
    int deg = 0;
    for (int j = 0; j < 4; ++j) {
      if (i != j && copy[i] == copy[j]) throw InputError("extract_hyperclique: repeated vertex");
      if (i != j && red.out.has_edge(copy[i], copy[j])) ++deg;
    }
    if (deg != 2) throw InputError("extract_hyperclique: not an induced C4");
  }
  // 2-regular on 4 vertices is C4 (a triangle would leave a vertex of degree 0)
  std::array<int, 4> at{-1, -1, -1, -1};
  for (int v : copy) {
    int band = red.origin[v].band;
    if (at[band] >= 0) throw InternalError("extract_hyperclique: induced C4 misses a band");
    at[band] = v;
  }
  std::array<int, 4> a{};
  for (int i = 0; i < 4; ++i) {
    a[i] = red.origin[at[i]].x;
    if (red.origin[at[i]].y != red.origin[at[(i + 1) % 4]].x)
      throw InternalError("extract_hyperclique: consecutive bands disagree");
    if (!red.out.has_edge(at[i], at[(i + 1) % 4])) throw InternalError("extract_hyperclique: missing band edge");
  }
  if (hg) {
    for (int i = 0; i < 4; ++i)
      if (!hg->has_edge({i, a[i]}, {(i + 1) % 4, a[(i + 1) % 4]}, {(i + 2) % 4, a[(i + 2) % 4]}))
        throw InternalError("extract_hyperclique: triple missing from the hypergraph");
  }
  return a;
}

std::optional<std::array<int, 4>> find_hyperclique(const Hypergraph4P3U& hg) {
  const auto& s = hg.sizes;
  for (int a = 0; a < s[0]; ++a)
    for (int b = 0; b < s[1]; ++b) {
      for (int c = 0; c < s[2]; ++c) {
        if (!hg.has_edge({0, a}, {1, b}, {2, c})) continue;
        for (int d = 0; d < s[3]; ++d)
          if (hg.has_edge({1, b}, {2, c}, {3, d}) && hg.has_edge({0, a}, {2, c}, {3, d}) &&
              hg.has_edge({0, a}, {1, b}, {3, d}))
            return std::array<int, 4>{a, b, c, d};
      }
    }
  return std::nullopt;
}

}  // namespace pf
