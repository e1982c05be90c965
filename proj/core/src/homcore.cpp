#include "patternforge/homcore.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <unordered_map>

#include "patternforge/errors.hpp"

namespace pf {

namespace {

using Mask = std::uint32_t;

void check_cap(const Graph& g, int cap, const char* what) {
  if (g.n() > cap)
    throw CapacityError(std::string(what) + ": " + std::to_string(g.n()) + " vertices exceeds cap " +
                        std::to_string(cap));
}

std::vector<int> degree_order(const Graph& g) {
  std::vector<int> order(g.n());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  return order;
}

// Is g properly colorable with k colors?
bool colorable(const std::vector<Mask>& adj, const std::vector<int>& order, int k) {
  int n = static_cast<int>(adj.size());
  if (n == 0) return true;
  if (k <= 0) return false;
  std::vector<int> color(n, -1);
  std::function<bool(int, int)> go = [&](int i, int used) -> bool {
    if (i == n) return true;
    int v = order[i];
    Mask forbidden = 0;
    for (Mask x = adj[v]; x; x &= x - 1) {
      int u = std::countr_zero(x);
      if (color[u] >= 0) forbidden |= 1u << color[u];
    }
    int limit = std::min(k, used + 1);
    for (int c = 0; c < limit; ++c) {
      if ((forbidden >> c) & 1u) continue;
      color[v] = c;
      if (go(i + 1, std::max(used, c + 1))) return true;
    }
    color[v] = -1;
    return false;
  };
  return go(0, 0);
}

}  // namespace

bool is_homomorphism(const Graph& h, const Graph& c, const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != h.n()) return false;
  for (int x : map)
    if (x < 0 || x >= c.n()) return false;
  for (auto [u, v] : h.edges())
    if (!c.has_edge(map[u], map[v])) return false;
  return true;
}

std::optional<Homomorphism> find_homomorphism(const Graph& h, const Graph& c, const std::vector<int>& fixed) {
  check_cap(h, 16, "find_homomorphism source");
  check_cap(c, 16, "find_homomorphism target");
  int n = h.n();
  if (n == 0) return Homomorphism{};
  if (c.n() == 0) return std::nullopt;
  auto hm = small_masks(h), cm = small_masks(c);
  Mask all = c.n() == 32 ? ~Mask{0} : (Mask{1} << c.n()) - 1;

  std::vector<int> map(n, -1);
  if (!fixed.empty()) {
    if (static_cast<int>(fixed.size()) != n) throw InputError("find_homomorphism: pin vector size mismatch");
    for (int v = 0; v < n; ++v) {
      if (fixed[v] >= c.n()) throw InputError("find_homomorphism: pin out of range");
      map[v] = fixed[v];
    }
    for (auto [u, v] : h.edges())
      if (map[u] >= 0 && map[v] >= 0 && !((cm[map[u]] >> map[v]) & 1u)) return std::nullopt;
  }

  std::vector<int> order;
  for (int v : degree_order(h))
    if (map[v] < 0) order.push_back(v);
  int free_count = static_cast<int>(order.size());

  // Candidate set of v given the current partial map.
  auto candidates = [&](int v) {
    Mask cand = all;
    for (Mask x = hm[v]; x; x &= x - 1) {
      int u = std::countr_zero(x);
      if (map[u] >= 0) cand &= cm[map[u]];
    }
    return cand;
  };

  std::function<bool(int)> go = [&](int i) -> bool {
    if (i == free_count) return true;
    int v = order[i];
    for (Mask cand = candidates(v); cand; cand &= cand - 1) {
      map[v] = std::countr_zero(cand);
      // forward check: unassigned neighbors keep a nonempty domain
      bool ok = true;
      for (Mask x = hm[v]; x && ok; x &= x - 1) {
        int u = std::countr_zero(x);
        if (map[u] < 0 && candidates(u) == 0) ok = false;
      }
      if (ok && go(i + 1)) return true;
    }
    map[v] = -1;
    return false;
  };
  for (int v : order)
    if (candidates(v) == 0) return std::nullopt;
  if (!go(0)) return std::nullopt;
  return Homomorphism{map};
}

CoreResult compute_core(const Pattern& h) {
  const Graph& g = h.graph;
  check_cap(g, 16, "compute_core");
  int n = g.n();
  if (n == 0) return {h, {}, {}};

  // Shrink greedily to learn the core size.
  std::vector<int> s(n);
  std::iota(s.begin(), s.end(), 0);
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t i = 0; i < s.size() && !progress; ++i) {
      std::vector<int> rest = s;
      rest.erase(rest.begin() + static_cast<long>(i));
      auto sub = induced_subgraph(g, rest);
      if (auto hom = find_homomorphism(g, sub.graph)) {
        std::vector<int> image;
        for (int x : hom->map) image.push_back(sub.new_to_old[x]);
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        s = image;
        progress = true;
      }
    }
  }
  int c = static_cast<int>(s.size());
  std::size_t core_edges = induced_subgraph(g, s).graph.m();

  // Lexicographically smallest retract of that size.
  std::vector<int> comb(c);
  std::iota(comb.begin(), comb.end(), 0);
  while (true) {
    auto sub = induced_subgraph(g, comb);
    if (sub.graph.m() == core_edges) {
      std::vector<int> pins(n, -1);
      for (int i = 0; i < c; ++i) pins[comb[i]] = i;
      if (auto hom = find_homomorphism(g, sub.graph, pins)) {
        Pattern core{sub.graph, std::nullopt};
        if (c == n) core.name = h.name;
        return {core, comb, *hom};
      }
    }
    int i = c - 1;
    while (i >= 0 && comb[i] == n - c + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < c; ++j) comb[j] = comb[j - 1] + 1;
  }
  throw InternalError("compute_core: no retract of the core size found");
}

bool is_core(const Pattern& h) {
  const Graph& g = h.graph;
  check_cap(g, 16, "is_core");
  // Any map to a proper subgraph lands inside some h - v.
  for (int v = 0; v < g.n(); ++v) {
    std::vector<int> rest;
    for (int u = 0; u < g.n(); ++u)
      if (u != v) rest.push_back(u);
    if (find_homomorphism(g, induced_subgraph(g, rest).graph)) return false;
  }
  return true;
}

int chromatic_number(const Pattern& h) {
  const Graph& g = h.graph;
  check_cap(g, 16, "chromatic_number");
  if (g.n() == 0) return 0;
  auto adj = small_masks(g);
  auto order = degree_order(g);
  int k = 1;
  while (!colorable(adj, order, k)) ++k;
  return k;
}

bool is_color_critical(const Pattern& h) {
  const Graph& g = h.graph;
  check_cap(g, 14, "is_color_critical");
  int chi = chromatic_number(h);
  for (int v = 0; v < g.n(); ++v) {
    std::vector<int> rest;
    for (int u = 0; u < g.n(); ++u)
      if (u != v) rest.push_back(u);
    if (chromatic_number({induced_subgraph(g, rest).graph, std::nullopt}) >= chi) return false;
  }
  return true;
}

namespace {

std::vector<Mask> copy_masks(const Graph& f, const Graph& c) {
  check_cap(f, 16, "subgraph_copies host");
  check_cap(c, 16, "subgraph_copies pattern");
  std::vector<Mask> out;
  int k = c.n();
  if (k == 0 || k > f.n()) return out;
  auto fm = small_masks(f), cm = small_masks(c);
  auto order = degree_order(c);
  std::vector<int> map(k, -1);
  std::vector<int> pos(k);
  for (int i = 0; i < k; ++i) pos[order[i]] = i;
  Mask all = (Mask{1} << f.n()) - 1;
  std::function<void(int, Mask)> go = [&](int i, Mask used) {
    if (i == k) {
      out.push_back(used);
      return;
    }
    int v = order[i];
    Mask cand = all & ~used;
    for (Mask x = cm[v]; x; x &= x - 1) {
      int u = std::countr_zero(x);
      if (pos[u] < i) cand &= fm[map[u]];
    }
    for (; cand; cand &= cand - 1) {
      int w = std::countr_zero(cand);
      map[v] = w;
      go(i + 1, used | (Mask{1} << w));
    }
    map[v] = -1;
  };
  go(0, 0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> mask_to_vector(Mask m) {
  std::vector<int> v;
  for (; m; m &= m - 1) v.push_back(std::countr_zero(m));
  return v;
}

bool rainbow(const std::vector<Mask>& copies, const std::vector<int>& col) {
  for (Mask m : copies) {
    Mask seen = 0;
    for (Mask x = m; x; x &= x - 1) {
      Mask bit = Mask{1} << col[std::countr_zero(x)];
      if (seen & bit) return false;
      seen |= bit;
    }
  }
  return true;
}

}  // namespace

std::vector<std::vector<int>> subgraph_copies(const Graph& f, const Graph& c) {
  std::vector<std::vector<int>> out;
  for (Mask m : copy_masks(f, c)) out.push_back(mask_to_vector(m));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_C_coloring(const Graph& f, const Pattern& c, const std::vector<int>& coloring) {
  if (static_cast<int>(coloring.size()) != f.n()) return false;
  for (int x : coloring)
    if (x < 0 || x >= c.size()) return false;
  return rainbow(copy_masks(f, c.graph), coloring);
}

std::optional<std::vector<int>> find_C_coloring(const Graph& f, const Pattern& c) {
  int n = f.n(), k = c.size();
  auto copies = copy_masks(f, c.graph);
  if (copies.empty()) return std::vector<int>(n, 0);
  if (k > 32) return std::nullopt;

  if (auto hom = find_homomorphism(f, c.graph); hom && rainbow(copies, hom->map)) return hom->map;

  // Backtrack over vertices that lie in some copy, most-constrained first.
  std::vector<int> load(n, 0);
  for (Mask m : copies)
    for (Mask x = m; x; x &= x - 1) ++load[std::countr_zero(x)];
  std::vector<int> order;
  for (int v = 0; v < n; ++v)
    if (load[v] > 0) order.push_back(v);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return load[a] > load[b]; });
  std::vector<std::vector<Mask>> touching(n);
  for (Mask m : copies)
    for (Mask x = m; x; x &= x - 1) touching[std::countr_zero(x)].push_back(m);

  std::vector<int> col(n, -1);
  std::function<bool(int, int)> go = [&](int i, int used) -> bool {
    if (i == static_cast<int>(order.size())) return true;
    int v = order[i];
    Mask forbidden = 0;
    for (Mask m : touching[v])
      for (Mask x = m & ~(Mask{1} << v); x; x &= x - 1) {
        int u = std::countr_zero(x);
        if (col[u] >= 0) forbidden |= Mask{1} << col[u];
      }
    int limit = std::min(k, used + 1);
    for (int cc = 0; cc < limit; ++cc) {
      if ((forbidden >> cc) & 1u) continue;
      col[v] = cc;
      if (go(i + 1, std::max(used, cc + 1))) return true;
    }
    col[v] = -1;
    return false;
  };
  if (!go(0, 0)) return std::nullopt;
  for (auto& x : col)
    if (x < 0) x = 0;
  return col;
}

CCovering min_C_covering(const Pattern& h, const Pattern& c) {
  check_cap(h.graph, 12, "min_C_covering");
  auto copies = copy_masks(h.graph, c.graph);
  if (copies.size() > 64)
    throw CapacityError("min_C_covering: " + std::to_string(copies.size()) + " copies exceeds cap 64");
  CCovering cov{c, {}, {}};
  if (copies.empty()) return cov;

  std::unordered_map<Mask, std::optional<std::vector<int>>> memo;
  auto coloring_of = [&](Mask set) -> const std::optional<std::vector<int>>& {
    auto it = memo.find(set);
    if (it != memo.end()) return it->second;
    auto sub = induced_subgraph(h.graph, mask_to_vector(set));
    return memo.emplace(set, find_C_coloring(sub.graph, c)).first->second;
  };

  int q = static_cast<int>(copies.size());
  std::vector<Mask> groups;
  std::function<bool(int, int)> assign = [&](int i, int r) -> bool {
    if (i == q) return true;
    Mask cm = copies[i];
    for (Mask g : groups)
      if ((g | cm) == g) return assign(i + 1, r);  // already inside a set
    // indices, not references: the recursion may grow `groups`
    for (std::size_t j = 0; j < groups.size(); ++j) {
      Mask old = groups[j];
      if (!coloring_of(old | cm)) continue;
      groups[j] = old | cm;
      if (assign(i + 1, r)) return true;
      groups[j] = old;
    }
    if (static_cast<int>(groups.size()) < r && coloring_of(cm)) {
      groups.push_back(cm);
      if (assign(i + 1, r)) return true;
      groups.pop_back();
    }
    return false;
  };
  for (int r = 1; r <= q; ++r) {
    groups.clear();
    if (assign(0, r)) break;
  }
  std::sort(groups.begin(), groups.end(), [](Mask a, Mask b) { return mask_to_vector(a) < mask_to_vector(b); });
  for (Mask g : groups) {
    cov.sets.push_back(mask_to_vector(g));
    cov.colorings.push_back(*coloring_of(g));
  }
  return cov;
}

bool is_C_covering(const Pattern& h, const CCovering& cov) {
  if (cov.sets.size() != cov.colorings.size()) return false;
  std::vector<Mask> setmasks;
  for (std::size_t i = 0; i < cov.sets.size(); ++i) {
    Mask m = 0;
    for (int v : cov.sets[i]) m |= Mask{1} << v;
    setmasks.push_back(m);
    auto sub = induced_subgraph(h.graph, cov.sets[i]);
    if (!is_C_coloring(sub.graph, cov.core, cov.colorings[i])) return false;
  }
  for (Mask cp : copy_masks(h.graph, cov.core.graph)) {
    bool inside = false;
    for (Mask s : setmasks) inside = inside || (cp & s) == cp;
    if (!inside) return false;
  }
  return true;
}

}  // namespace pf
