#include "patternforge/minors.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "patternforge/errors.hpp"
#include "patternforge/homcore.hpp"

namespace pf {

namespace {

using Mask = std::uint32_t;

bool connected_mask(const std::vector<Mask>& adj, Mask set) {
  if (!set) return false;
  Mask seen = set & (~set + 1), frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask x = frontier; x; x &= x - 1) next |= adj[std::countr_zero(x)];
    next &= set & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == set;
}

std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<int> comp(g.n(), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.n(); ++s) {
    if (comp[s] >= 0) continue;
    out.emplace_back();
    std::vector<int> stack{s};
    comp[s] = static_cast<int>(out.size()) - 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (int w : g.neighbors(v))
        if (comp[w] < 0) {
          comp[w] = comp[s];
          stack.push_back(w);
        }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

// First restricted-growth string (lexicographic) with exactly t blocks that
// forms a K_t minor.
std::optional<std::vector<int>> search_rgs(const Graph& g, int t) {
  int n = g.n();
  if (t <= 0 || t > n) return std::nullopt;
  auto adj = small_masks(g);
  std::vector<int> a(n, 0);
  std::vector<Mask> block(t, 0);

  auto valid = [&]() {
    std::vector<Mask> nb(t, 0);
    for (int b = 0; b < t; ++b) {
      if (!connected_mask(adj, block[b])) return false;
      for (Mask x = block[b]; x; x &= x - 1) nb[b] |= adj[std::countr_zero(x)];
    }
    for (int b = 0; b < t; ++b)
      for (int c = b + 1; c < t; ++c)
        if (!(nb[b] & block[c])) return false;
    return true;
  };

  std::function<bool(int, int)> go = [&](int i, int used) -> bool {
    if (n - i < t - used) return false;
    if (i == n) return used == t && valid();
    int limit = std::min(used + 1, t);
    for (int b = 0; b < limit; ++b) {
      a[i] = b;
      block[b] |= Mask{1} << i;
      if (go(i + 1, std::max(used, b + 1))) return true;
      block[b] &= ~(Mask{1} << i);
    }
    return false;
  };
  if (!go(0, 0)) return std::nullopt;
  return a;
}

}  // namespace

std::vector<std::vector<int>> MinorFunction::blocks() const {
  std::vector<std::vector<int>> out(t);
  for (int v = 0; v < static_cast<int>(f.size()); ++v)
    if (f[v] >= 0) out[f[v]].push_back(v);
  return out;
}

bool is_minor_function(const MinorFunction& mf) {
  const Graph& g = mf.pattern.graph;
  if (static_cast<int>(mf.f.size()) != g.n() || mf.t < 0) return false;
  for (int x : mf.f)
    if (x < -1 || x >= mf.t) return false;
  auto bl = mf.blocks();
  for (const auto& b : bl) {
    if (b.empty()) return false;
    if (!connected_mask(small_masks(induced_subgraph(g, b).graph), (Mask{1} << b.size()) - 1)) return false;
  }
  for (int i = 0; i < mf.t; ++i)
    for (int j = i + 1; j < mf.t; ++j) {
      bool touch = false;
      for (int u : bl[i])
        for (int v : bl[j]) touch = touch || g.has_edge(u, v);
      if (!touch) return false;
    }
  return true;
}

std::vector<int> max_clique_set(const Graph& g) {
  int n = g.n();
  if (n == 0) return {};
  if (!g.dense()) throw CapacityError("max_clique_set: graph too large for dense rows");
  std::vector<int> best, cur;
  // Greedy coloring bound on the candidate set.
  std::function<void(Bitset)> expand = [&](Bitset cand) {
    std::vector<int> order, bound;
    {
      Bitset rest = cand;
      int color = 0;
      while (rest.any()) {
        ++color;
        Bitset q = rest;
        while (q.any()) {
          int v = static_cast<int>(q.first());
          q.reset(v);
          q -= g.row(v);
          rest.reset(v);
          order.push_back(v);
          bound.push_back(color);
        }
      }
    }
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (cur.size() + bound[i] <= best.size()) return;
      int v = order[i];
      cur.push_back(v);
      Bitset next = cand & g.row(v);
      if (next.none()) {
        if (cur.size() > best.size()) best = cur;
      } else {
        expand(next);
      }
      cur.pop_back();
      cand.reset(v);
    }
  };
  Bitset all(n);
  all.set_all();
  expand(all);
  std::sort(best.begin(), best.end());
  return best;
}

int max_clique(const Pattern& h) {
  if (h.size() > 20) throw CapacityError("max_clique: " + std::to_string(h.size()) + " vertices exceeds cap 20");
  return static_cast<int>(max_clique_set(h.graph).size());
}

std::optional<MinorFunction> find_Kt_minor_function(const Pattern& h, int t) {
  if (h.size() > 12)
    throw CapacityError("find_Kt_minor_function: " + std::to_string(h.size()) + " vertices exceeds cap 12");
  auto a = search_rgs(h.graph, t);
  if (!a) return std::nullopt;
  return MinorFunction{h, t, *a};
}

CliqueMinor max_clique_minor(const Pattern& h) {
  const Graph& g = h.graph;
  if (g.n() > 12) throw CapacityError("max_clique_minor: " + std::to_string(g.n()) + " vertices exceeds cap 12");
  CliqueMinor best{0, {h, 0, std::vector<int>(g.n(), -1)}};
  for (const auto& comp : components(g)) {
    auto sub = induced_subgraph(g, comp);
    int nc = sub.graph.n();
    int lo = std::max(1, max_clique({sub.graph, std::nullopt}));
    int hi = 1;
    while (hi + 1 <= nc && static_cast<std::size_t>(hi + 1) * hi / 2 <= sub.graph.m()) ++hi;
    if (hi <= best.eta) continue;
    for (int t = hi; t >= lo && t > best.eta; --t) {
      if (auto a = search_rgs(sub.graph, t)) {
        std::vector<int> f(g.n(), -1);
        for (int i = 0; i < nc; ++i) f[sub.new_to_old[i]] = (*a)[i];
        best = {t, {h, t, f}};
        break;
      }
    }
  }
  return best;
}

int eta_path_cycle_formula(PathOrCycle kind, int k) {
  bool path = kind == PathOrCycle::Path;
  if (k < (path ? 2 : 3)) throw InputError("eta_path_cycle_formula: k=" + std::to_string(k) + " too small");
  if (k == 2) return 1;               // two isolated vertices
  if (k == 3) return path ? 2 : 1;    // edge plus vertex / three isolated vertices
  if (k == 4) return 2;
  if (k == 5 && path) return 3;
  int t = k / 4, r = k % 4;
  switch (r) {
    case 0:
      return 3 * t;
    case 1:
      return path ? 3 * t + 1 : 3 * t;
    case 2:
      return 3 * t + 1;
    default:
      return 3 * t + 2;
  }
}

int core_clique_lower_bound(int k, int w) {
  if (k < 0 || w < 0) throw InputError("core_clique_lower_bound: negative argument");
  // smallest s with 2s^2 >= k + 2w, and smallest s with 1.95 s^2 >= k
  long long a = 0, b = 0;
  while (2 * a * a < k + 2LL * w) ++a;
  while (195 * b * b < 100LL * k) ++b;
  return static_cast<int>(std::max(a, b));
}

int core_clique_lower_bound(const Pattern& h) {
  if (h.size() > 16) throw CapacityError("core_clique_lower_bound: more than 16 vertices");
  if (!is_core(h)) throw InputError("core_clique_lower_bound: pattern is not a core");
  return core_clique_lower_bound(h.size(), static_cast<int>(max_clique_set(h.graph).size()));
}

int induced_si_bound(int k) {
  if (k < 0) throw InputError("induced_si_bound: negative k");
  // smallest s with (1.39 s)^4 >= k, i.e. (139 s)^4 >= k * 100^4
  __int128 target = static_cast<__int128>(k) * 100000000;
  long long s = 0;
  while (true) {
    __int128 x = static_cast<__int128>(139) * s;
    if (x * x * x * x >= target) return static_cast<int>(s);
    ++s;
  }
}

MinorFunction relabel_blocks_last(const MinorFunction& mf, int a, int b) {
  if (a < 0 || b < 0 || a >= mf.t || b >= mf.t) throw InputError("relabel_blocks_last: block out of range");
  std::vector<int> perm(mf.t, -1);
  int next = 0;
  for (int i = 0; i < mf.t; ++i)
    if (i != a && i != b) perm[i] = next++;
  if (a == b) {
    perm[a] = mf.t - 1;
  } else {
    perm[a] = mf.t - 2;
    perm[b] = mf.t - 1;
  }
  MinorFunction out = mf;
  for (auto& x : out.f)
    if (x >= 0) x = perm[x];
  return out;
}

}  // namespace pf
