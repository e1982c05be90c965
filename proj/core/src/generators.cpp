#include "patternforge/generators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "patternforge/errors.hpp"
#include "patternforge/random.hpp"

namespace pf {

namespace {

void check_p(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("probability must lie in [0,1]");
}

void add_gnp_edges(GraphBuilder& b, int n, double p, Rng& rng) {
  if (p <= 0.0 || n < 2) return;
  if (p >= 1.0) {
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    return;
  }
  // Batagelj-Brandes: walk pairs (v, w), w < v, skipping geometrically.
  double lq = std::log(1.0 - p);
  long long v = 1, w = -1;
  while (v < n) {
    double r = rng.uniform01();
    w += 1 + static_cast<long long>(std::floor(std::log(1.0 - r) / lq));
    while (w >= v && v < n) {
      w -= v;
      ++v;
    }
    if (v < n) b.add_edge(static_cast<int>(w), static_cast<int>(v));
  }
}

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

}  // namespace

Graph gnp(int n, double p, std::uint64_t seed) {
  if (n < 0) throw InputError("gnp: negative n");
  check_p(p);
  Rng rng(seed);
  GraphBuilder b(n);
  add_gnp_edges(b, n, p, rng);
  return b.build();
}

Graph planted_clique(int n, int t, double p, std::uint64_t seed) {
  if (n < 0 || t < 0 || t > n) throw InputError("planted-clique: need 0 <= t <= n");
  check_p(p);
  Rng rng(seed);
  GraphBuilder b(n);
  add_gnp_edges(b, n, p, rng);
  for (int u = 0; u < t; ++u)
    for (int v = u + 1; v < t; ++v) b.add_edge(u, v);
  return b.build();
}

Graph c4free(int n, std::uint64_t seed) {
  if (n < 0) throw InputError("c4free: negative n");
  int q = 2;
  while (2LL * (q * q + q + 1) < n || !is_prime(q)) ++q;
  // normalized homogeneous coordinates of PG(2, q)
  std::vector<std::array<int, 3>> pts;
  for (int y = 0; y < q; ++y)
    for (int z = 0; z < q; ++z) pts.push_back({1, y, z});
  for (int z = 0; z < q; ++z) pts.push_back({0, 1, z});
  pts.push_back({0, 0, 1});
  int N = static_cast<int>(pts.size());

  Rng rng(seed);
  std::vector<int> pick(2 * N);
  std::iota(pick.begin(), pick.end(), 0);
  rng.shuffle(pick.begin(), pick.end());
  pick.resize(n);  // pick[new] = old, old < N is a point, else a line
  std::vector<int> where(2 * N, -1);
  for (int i = 0; i < n; ++i) where[pick[i]] = i;

  GraphBuilder b(n);
  for (int pi = 0; pi < N; ++pi) {
    if (where[pi] < 0) continue;
    for (int li = 0; li < N; ++li) {
      if (where[N + li] < 0) continue;
      const auto& p = pts[pi];
      const auto& l = pts[li];
      if ((p[0] * l[0] + p[1] * l[1] + p[2] * l[2]) % q == 0) b.add_edge(where[pi], where[N + li]);
    }
  }
  return b.build();
}

Hypergraph4P3U hg_random(const std::array<int, 4>& sizes, double p, std::uint64_t seed) {
  check_p(p);
  for (int s : sizes)
    if (s <= 0) throw InputError("hg-random: parts must be nonempty");
  Rng rng(seed);
  Hypergraph4P3U hg;
  hg.sizes = sizes;
  // one draw per triple type, missing part m = 3, 2, 1, 0
  for (int m = 3; m >= 0; --m) {
    std::array<int, 3> ps;
    int j = 0;
    for (int i = 0; i < 4; ++i)
      if (i != m) ps[j++] = i;
    for (int a = 0; a < sizes[ps[0]]; ++a)
      for (int b = 0; b < sizes[ps[1]]; ++b)
        for (int c = 0; c < sizes[ps[2]]; ++c)
          if (rng.bernoulli(p)) hg.add_edge({ps[0], a}, {ps[1], b}, {ps[2], c});
  }
  return hg;
}

PlantedHypergraph hg_planted(const std::array<int, 4>& sizes, double p, std::uint64_t seed) {
  PlantedHypergraph out;
  out.hg = hg_random(sizes, p, seed);
  Rng rng(mix_seed(seed, 1));
  for (int i = 0; i < 4; ++i) out.planted[i] = static_cast<int>(rng.below(static_cast<std::uint64_t>(sizes[i])));
  const auto& a = out.planted;
  for (int m = 0; m < 4; ++m) {
    std::array<HyperVertex, 3> v;
    int j = 0;
    for (int i = 0; i < 4; ++i)
      if (i != m) v[j++] = {i, a[i]};
    out.hg.add_edge(v[0], v[1], v[2]);
  }
  return out;
}

namespace {

std::vector<std::vector<int>> invariant(const Graph& g) {
  std::vector<std::vector<int>> inv;
  for (int v = 0; v < g.n(); ++v) {
    std::vector<int> row{g.degree(v)};
    std::vector<int> nd;
    for (int w : g.neighbors(v)) nd.push_back(g.degree(w));
    std::sort(nd.begin(), nd.end());
    row.insert(row.end(), nd.begin(), nd.end());
    inv.push_back(row);
  }
  std::sort(inv.begin(), inv.end());
  return inv;
}

}  // namespace

std::vector<Graph> all_graphs(int n) {
  if (n < 0 || n > 8) throw CapacityError("all_graphs: n must lie in [0, 8]");
  std::vector<Graph> cur{Graph(0)};
  for (int k = 1; k <= n; ++k) {
    std::map<std::vector<std::vector<int>>, std::vector<Graph>> buckets;
    std::vector<Graph> next;
    for (const auto& g : cur) {
      auto edges = g.edges();
      for (unsigned nb = 0; nb < (1u << (k - 1)); ++nb) {
        auto e = edges;
        for (int v = 0; v < k - 1; ++v)
          if ((nb >> v) & 1u) e.emplace_back(v, k - 1);
        Graph h = graph_from_edges(k, e);
        auto& bucket = buckets[invariant(h)];
        bool seen = false;
        for (const auto& r : bucket)
          if (is_isomorphic(r, h)) {
            seen = true;
            break;
          }
        if (!seen) {
          bucket.push_back(h);
          next.push_back(h);
        }
      }
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace pf
