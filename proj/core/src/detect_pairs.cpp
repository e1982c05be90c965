#include <algorithm>
#include <array>
#include <functional>
#include <numeric>

#include "detect_util.hpp"
#include "patternforge/detectors.hpp"
#include "patternforge/errors.hpp"

namespace pf {

using namespace detail;

namespace {

// Adjacency in g or in its complement, without building the complement.
struct View {
  const Graph& g;
  bool comp;

  bool adj(int u, int v) const { return u != v && g.has_edge(u, v) != comp; }
  int deg(int v) const { return comp ? g.n() - 1 - g.degree(v) : g.degree(v); }
  // First `limit` view-neighbors of v in ascending order.
  std::vector<int> nbrs(int v, std::size_t limit) const {
    std::vector<int> out;
    if (!comp) {
      for (int w : g.neighbors(v)) {
        if (out.size() >= limit) break;
        out.push_back(w);
      }
      return out;
    }
    const auto& nb = g.neighbors(v);
    std::size_t j = 0;
    for (int w = 0; w < g.n() && out.size() < limit; ++w) {
      while (j < nb.size() && nb[j] < w) ++j;
      if (w == v || (j < nb.size() && nb[j] == w)) continue;
      out.push_back(w);
    }
    return out;
  }
};

int edges_among(const Graph& g, const std::vector<int>& vs) {
  int e = 0;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) e += g.has_edge(vs[i], vs[j]);
  return e;
}

}  // namespace

// ---------------------------------------------------------------------------
// K4 or I4

DetectionResult detect_k4_or_i4(const Graph& g) {
  int n = g.n();
  if (n < 31) throw InputError("detect_k4_or_i4: needs at least 31 vertices, got " + std::to_string(n));
  const int v = 0;
  View h{g, 2 * g.degree(v) < n - 1};
  auto X = h.nbrs(v, static_cast<std::size_t>(n));  // at least 15 vertices
  auto emit = [&](std::vector<int> vs) {
    const Pattern& p = named(edges_among(g, vs) == 0 ? "I4" : "K4");
    return found_result(g, p, std::move(vs));
  };
  // six vertices of X hold a view-triangle or a view-independent triple
  std::array<int, 3> tri{-1, -1, -1}, ind{-1, -1, -1};
  for (int a = 0; a < 6 && tri[0] < 0; ++a)
    for (int b = a + 1; b < 6 && tri[0] < 0; ++b)
      for (int c = b + 1; c < 6 && tri[0] < 0; ++c) {
        bool ab = h.adj(X[a], X[b]), ac = h.adj(X[a], X[c]), bc = h.adj(X[b], X[c]);
        if (ab && ac && bc) tri = {X[a], X[b], X[c]};
        else if (!ab && !ac && !bc && ind[0] < 0) ind = {X[a], X[b], X[c]};
      }
  if (tri[0] >= 0) return emit({v, tri[0], tri[1], tri[2]});
  if (ind[0] < 0) throw InternalError("detect_k4_or_i4: six vertices with no triangle and no independent triple");
  std::array<std::vector<int>, 3> hit;
  for (int x : X) {
    if (x == ind[0] || x == ind[1] || x == ind[2]) continue;
    bool any = false;
    for (int k = 0; k < 3; ++k)
      if (h.adj(x, ind[k])) {
        any = true;
        if (hit[k].size() < 4) hit[k].push_back(x);
      }
    if (!any) return emit({ind[0], ind[1], ind[2], x});
  }
  for (int k = 0; k < 3; ++k) {
    if (hit[k].size() < 4) continue;
    const auto& y = hit[k];
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (h.adj(y[i], y[j])) return emit({v, ind[k], y[i], y[j]});
    return emit(y);
  }
  throw InternalError("detect_k4_or_i4: no triple vertex has four neighbors in N(v)");
}

// ---------------------------------------------------------------------------
// pairs of 3-vertex patterns

namespace {

DetectionResult triangle_search(const Graph& g, const Pattern& h, bool comp) {
  if (comp) {
    Graph gc = complement(g);
    auto r = triangle_search(gc, named("K3"), false);
    if (!r.present()) return r;
    return found_result(g, h, r.found->vertices);
  }
  for (int u = 0; u < g.n(); ++u)
    for (int v : g.neighbors(u)) {
      if (v < u) continue;
      if (g.dense()) {
        std::size_t w = Bitset::first_and(g.row(u), g.row(v));
        if (w != Bitset::npos) return found_result(g, h, {u, v, static_cast<int>(w)});
      } else {
        const auto& a = g.neighbors(u);
        const auto& b = g.neighbors(v);
        std::vector<int> common;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
        if (!common.empty()) return found_result(g, h, {u, v, common[0]});
      }
    }
  return absent_result();
}

// {K3, co-P3} in the view (or {I3, P3} in g when the view is the complement).
DetectionResult triangle_or_edge_plus_vertex(const Graph& g, bool comp, const std::function<DetectionResult(std::vector<int>)>& emit) {
  int n = g.n();
  View h{g, comp};
  // Three view-neighbors of v, or three view non-neighbors when v has
  // fewer than 3 (n > 7 leaves at least 5). A view edge among them is a
  // triangle with v in the first case and an edge plus v in the second.
  int v = 0;
  auto three = h.deg(v) >= 3 ? h.nbrs(v, 3) : View{g, !comp}.nbrs(v, 3);
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      if (h.adj(three[a], three[b])) return emit({v, three[a], three[b]});
  // otherwise three is view-independent; grow it to a maximal one
  std::vector<int> S;
  std::vector<char> inS(n, 0);
  for (int x : three) {
    S.push_back(x);
    inS[x] = 1;
  }
  for (int x = 0; x < n; ++x) {
    if (inS[x]) continue;
    bool free = true;
    for (int s : S)
      if (h.adj(x, s)) {
        free = false;
        break;
      }
    if (free) {
      S.push_back(x);
      inS[x] = 1;
    }
  }
  // every other vertex sees part of S; seeing only part is a view co-P3
  std::size_t rest_deg = 0;
  std::vector<int> rest;
  for (int x = 0; x < n; ++x) {
    if (inS[x]) continue;
    int in = -1, out = -1;
    for (int s : S) {
      if (h.adj(x, s)) in = s;
      else out = s;
      if (in >= 0 && out >= 0) return emit({x, in, out});
    }
    rest.push_back(x);
    rest_deg += static_cast<std::size_t>(h.deg(x));
  }
  // now every rest vertex sees all of S, so an edge inside rest closes a
  // view triangle with any vertex of S
  if (rest_deg > rest.size() * S.size()) {
    for (int x : rest) {
      if (h.deg(x) <= static_cast<int>(S.size())) continue;
      for (int y : rest)
        if (h.adj(x, y)) return emit({S[0], x, y});
    }
    throw InternalError("3-node pair: degree surplus without an edge outside S");
  }
  // view is complete bipartite (S, rest)
  std::sort(S.begin(), S.end());
  std::vector<std::vector<int>> parts{S};
  if (!rest.empty()) parts.push_back(rest);
  return absent_result(g, {comp ? CertificateKind::DisjointCliques : CertificateKind::CompleteMultipartite, parts});
}

}  // namespace

DetectionResult detect_pair_3node(const Graph& g, const Pattern& h1, const Pattern& h2, const DetectOptions& opt) {
  if (h1.size() != 3 || h2.size() != 3) throw InputError("detect_pair_3node: both patterns need 3 vertices");
  int n = g.n();
  if (n < std::max(opt.brute_force_below, 8)) return brute_force_detect_any(g, {h1, h2}, true);
  int e1 = static_cast<int>(h1.graph.m()), e2 = static_cast<int>(h2.graph.m());
  auto emit = [&](std::vector<int> vs) {
    int e = edges_among(g, vs);
    if (e == e1) return found_result(g, h1, std::move(vs));
    if (e == e2) return found_result(g, h2, std::move(vs));
    throw InternalError("3-node pair: chosen triple matches neither pattern");
  };
  int lo = std::min(e1, e2), hi = std::max(e1, e2);
  const Pattern& hlo = e1 <= e2 ? h1 : h2;

  if (lo == hi) {
    switch (lo) {
      case 0:
        return triangle_search(g, hlo, true);
      case 1: {
        auto r = p3_structure(g, true);
        if (r.present()) return found_result(g, hlo, r.found->vertices);
        return r;
      }
      case 2: {
        auto r = p3_structure(g, false);
        if (r.present()) return found_result(g, hlo, r.found->vertices);
        return r;
      }
      default:
        return triangle_search(g, hlo, false);
    }
  }
  if (hi - lo == 1) {
    if (hi == 3) {  // {K3, P3}: a vertex of degree >= 2
      for (int z = 0; z < n; ++z)
        if (g.degree(z) >= 2) return emit({z, g.neighbors(z)[0], g.neighbors(z)[1]});
      std::vector<std::vector<int>> parts;
      std::vector<char> seen(n, 0);
      for (int z = 0; z < n; ++z) {
        if (seen[z]) continue;
        seen[z] = 1;
        std::vector<int> p{z};
        if (g.degree(z) == 1) {
          p.push_back(g.neighbors(z)[0]);
          seen[p[1]] = 1;
        }
        parts.push_back(p);
      }
      return absent_result(g, {CertificateKind::DisjointCliques, parts});
    }
    if (hi == 2) {  // {P3, co-P3}: a vertex with a neighbor and a non-neighbor
      for (int z = 0; z < n; ++z)
        if (g.degree(z) >= 1 && g.degree(z) <= n - 2) {
          int x = g.neighbors(z)[0];
          int y = View{g, true}.nbrs(z, 1)[0];
          return emit({z, x, y});
        }
      std::vector<std::vector<int>> parts;
      if (g.m() == 0) {
        for (int z = 0; z < n; ++z) parts.push_back({z});
      } else {
        parts.emplace_back(n);
        std::iota(parts[0].begin(), parts[0].end(), 0);
      }
      return absent_result(g, {CertificateKind::DisjointCliques, parts});
    }
    // {co-P3, I3}: a vertex with two non-neighbors
    for (int z = 0; z < n; ++z)
      if (g.degree(z) <= n - 3) {
        auto nn = View{g, true}.nbrs(z, 2);
        return emit({z, nn[0], nn[1]});
      }
    std::vector<std::vector<int>> parts;
    std::vector<char> seen(n, 0);
    for (int z = 0; z < n; ++z) {
      if (seen[z]) continue;
      seen[z] = 1;
      std::vector<int> p{z};
      if (g.degree(z) == n - 2) {
        int y = View{g, true}.nbrs(z, 1)[0];
        p.push_back(y);
        seen[y] = 1;
      }
      parts.push_back(p);
    }
    return absent_result(g, {CertificateKind::CompleteMultipartite, parts});
  }
  if (lo == 0 && hi == 3) {
    // {K3, I3}: three neighbors (or non-neighbors) of one vertex
    int v = 0;
    bool comp = g.degree(v) < 3;
    auto three = View{g, comp}.nbrs(v, 3);
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b)
        if (g.has_edge(three[a], three[b]) != comp) return emit({v, three[a], three[b]});
    return emit({three[0], three[1], three[2]});
  }
  // {K3, co-P3}, or {I3, P3} through the complement
  return triangle_or_edge_plus_vertex(g, hi != 3, emit);
}

// ---------------------------------------------------------------------------
// {H, co-H} for 4-vertex H

namespace {

struct Family {
  const char* a;
  const char* b;  // complement of a (same as a for P4)
};

Graph view_graph(const Graph& g, bool comp) { return comp ? complement(g) : g; }

// The Ramsey witness as a clique of the view.
std::pair<bool, std::vector<int>> ramsey_clique(const Graph& g) {
  auto r = detect_k4_or_i4(g);
  return {r.found->pattern == "I4", r.found->vertices};
}

DetectionResult diamond_pair(const Graph& g) {
  const std::initializer_list<const char*> kPat = {"diamond", "co-diamond"};
  int n = g.n();
  auto [comp, k4] = ramsey_clique(g);
  Graph H = view_graph(g, comp);
  auto C = grow_clique(H, k4);
  Bitset inC(n);
  for (int c : C) inC.set(c);
  std::vector<int> out;
  for (int u = 0; u < n; ++u) {
    if (inC.test(u)) continue;
    out.push_back(u);
    if (Bitset::count_and(H.row(u), inC) >= 2) {
      Bitset in = H.row(u) & inC;
      Bitset miss = inC - H.row(u);
      int x = static_cast<int>(in.first());
      int y = static_cast<int>(in.next(x));
      return first_match(g, {{u, x, y, static_cast<int>(miss.first())}}, kPat, "diamond pair: two clique neighbors");
    }
  }
  // outside vertices see at most one clique vertex
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      int u = out[i], w = out[j];
      if (H.has_edge(u, w)) continue;
      std::vector<int> free;
      for (int c : C)
        if (!H.has_edge(c, u) && !H.has_edge(c, w)) {
          free.push_back(c);
          if (free.size() == 2) break;
        }
      return first_match(g, {{u, w, free[0], free[1]}}, kPat, "diamond pair: outside non-edge");
    }
  Bitset inOut(n);
  for (int u : out) inOut.set(u);
  for (int c : C) {
    std::size_t k = Bitset::count_and(H.row(c), inOut);
    if (k >= 2 && k < out.size()) {
      Bitset in = H.row(c) & inOut;
      Bitset miss = inOut - H.row(c);
      int x = static_cast<int>(in.first());
      int y = static_cast<int>(in.next(x));
      return first_match(g, {{c, x, y, static_cast<int>(miss.first())}}, kPat, "diamond pair: clique vertex");
    }
  }
  return absent_result();
}

DetectionResult paw_pair(const Graph& g) {
  const std::initializer_list<const char*> kPat = {"paw", "co-paw"};
  int n = g.n();
  for (bool comp : {false, true}) {
    Graph H = view_graph(g, comp);
    auto comps = components(H);
    if (comps.size() < 2) continue;
    auto r = p3_structure(H, false);
    if (r.present()) {
      std::vector<int> vs = r.found->vertices;
      for (const auto& c : comps)
        if (!std::binary_search(c.begin(), c.end(), vs[0])) {
          vs.push_back(c[0]);
          break;
        }
      return first_match(g, {vs}, kPat, "paw pair: disconnected");
    }
    auto cert = *r.certificate;
    if (comp) cert.kind = CertificateKind::CompleteMultipartite;
    return absent_result(g, cert);
  }
  auto [comp, k4] = ramsey_clique(g);
  Graph H = view_graph(g, comp);
  auto C = grow_clique(H, k4);
  int t = static_cast<int>(C.size());
  Bitset inC(n);
  for (int c : C) inC.set(c);
  std::vector<int> pos(n, -1);
  for (int i = 0; i < t; ++i) pos[C[i]] = i;
  std::vector<int> S, T;
  std::vector<int> missing(n, -1);
  for (int u = 0; u < n; ++u) {
    if (inC.test(u)) continue;
    int d = static_cast<int>(Bitset::count_and(H.row(u), inC));
    Bitset miss = inC - H.row(u);
    if (d >= 1 && d <= t - 2) {
      int x = static_cast<int>(Bitset::first_and(H.row(u), inC));
      int w1 = static_cast<int>(miss.first());
      int w2 = static_cast<int>(miss.next(w1));
      return first_match(g, {{u, x, w1, w2}}, kPat, "paw pair: partial clique neighbor");
    }
    if (d == 0) {
      S.push_back(u);
    } else {
      T.push_back(u);
      missing[u] = pos[miss.first()];
    }
  }
  for (int s : S)
    for (int u : T)
      if (H.has_edge(s, u)) {
        int a = -1, b = -1;
        for (int c : C)
          if (pos[c] != missing[u]) {
            if (a < 0) a = c;
            else if (b < 0) b = c;
          }
        return first_match(g, {{s, u, a, b}}, kPat, "paw pair: S-T edge");
      }
  if (!S.empty()) throw InternalError("paw pair: view graph is not connected");
  for (std::size_t i = 0; i < T.size(); ++i)
    for (std::size_t j = i + 1; j < T.size(); ++j) {
      int u = T[i], w = T[j];
      int mu = missing[u], mw = missing[w];
      if (mu == mw && H.has_edge(u, w)) {
        int other = C[(mu + 1) % t];
        return first_match(g, {{u, w, C[mu], other}}, kPat, "paw pair: edge inside T_i");
      }
      if (mu != mw && !H.has_edge(u, w)) {
        int z = 0;
        while (z == mu || z == mw) ++z;
        return first_match(g, {{C[mu], C[z], u, w}}, kPat, "paw pair: non-edge across T_i, T_j");
      }
    }
  std::vector<std::vector<int>> parts(t);
  for (int i = 0; i < t; ++i) parts[i].push_back(C[i]);
  for (int u : T) parts[missing[u]].push_back(u);
  for (auto& p : parts) std::sort(p.begin(), p.end());
  return absent_result(g, {comp ? CertificateKind::DisjointCliques : CertificateKind::CompleteMultipartite, parts});
}

DetectionResult claw_pair(const Graph& g) {
  const std::initializer_list<const char*> kPat = {"claw", "co-claw"};
  int n = g.n();
  // a vertex with 3 <= d(v) <= n - 4
  for (int v = 0; v < n; ++v) {
    int d = g.degree(v);
    if (d < 3 || d > n - 4) continue;
    View h{g, 2 * d < n - 1};
    auto N = h.nbrs(v, static_cast<std::size_t>(n));
    auto M = View{g, !h.comp}.nbrs(v, static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < M.size(); ++i)
      for (std::size_t j = i + 1; j < M.size(); ++j) {
        int u = M[i], w = M[j];
        if (h.adj(u, w)) continue;
        std::vector<int> miss_u, miss_w;
        for (int z : N) {
          bool zu = h.adj(z, u), zw = h.adj(z, w);
          if (zu && zw) return first_match(g, {{z, u, w, v}}, kPat, "claw pair: common neighbor");
          if (!zu) miss_u.push_back(z);
          if (!zw) miss_w.push_back(z);
        }
        int x = miss_u.size() >= 3 ? u : w;
        const auto& z = miss_u.size() >= 3 ? miss_u : miss_w;
        return first_match(g, {{z[0], z[1], v, x}, {z[0], z[2], v, x}, {z[1], z[2], v, x}, {v, z[0], z[1], z[2]}}, kPat,
                           "claw pair: three missed neighbors");
      }
    return first_match(g, {{M[0], M[1], M[2], v}}, kPat, "claw pair: clique of non-neighbors");
  }
  // every vertex has degree <= 2 or >= n - 3
  int low = 0;
  for (int v = 0; v < n; ++v) low += g.degree(v) <= 2;
  bool comp = 2 * low < n;  // in the view, low vertices are the majority
  View h{g, comp};
  auto is_low = [&](int v) { return h.deg(v) <= 2; };
  for (int v = 0; v < n; ++v) {
    if (is_low(v)) continue;
    auto N = h.nbrs(v, static_cast<std::size_t>(n));
    int u = -1;
    for (int x : N)
      if (is_low(x)) {
        u = x;
        break;
      }
    if (u < 0) throw InternalError("claw pair: high vertex without a low neighbor");
    std::vector<int> z;
    for (int x : N)
      if (x != u && !h.adj(x, u) && z.size() < 3) z.push_back(x);
    return first_match(g, {{v, u, z[0], z[1]}, {v, u, z[0], z[2]}, {v, u, z[1], z[2]}, {z[0], z[1], z[2], u}}, kPat,
                       "claw pair: high vertex");
  }
  // view has maximum degree 2: no claw; a triangle is a whole component
  for (int v = 0; v < n; ++v) {
    auto N = h.nbrs(v, 2);
    if (N.size() == 2 && h.adj(N[0], N[1])) {
      int x = 0;
      while (x == v || x == N[0] || x == N[1]) ++x;
      return first_match(g, {{v, N[0], N[1], x}}, kPat, "claw pair: triangle component");
    }
  }
  return absent_result();
}

// {C4, 2K2}

struct CliqueSplit {
  std::vector<int> C;
  Bitset inC;
  std::vector<int> S, T;
  std::vector<int> miss;  // for T: the clique vertex it misses
};

CliqueSplit split_by_clique(const Graph& H, std::vector<int> C) {
  int n = H.n();
  CliqueSplit cs{std::move(C), Bitset(n), {}, {}, std::vector<int>(n, -1)};
  for (int c : cs.C) cs.inC.set(c);
  for (int u = 0; u < n; ++u) {
    if (cs.inC.test(u)) continue;
    Bitset m = cs.inC - H.row(u);
    if (m.count() == 1) {
      cs.T.push_back(u);
      cs.miss[u] = static_cast<int>(m.first());
    } else {
      cs.S.push_back(u);
    }
  }
  return cs;
}

// C, S, T as in split_by_clique with S and T independent.
DetectionResult c4_main(const Graph& g, const Graph& H, const CliqueSplit& cs, bool comp) {
  const std::initializer_list<const char*> kPat = {"C4", "2K2"};
  int n = H.n();
  const auto& C = cs.C;
  Bitset inT(n);
  for (int u : cs.T) inT.set(u);
  auto missing_of = [&](int v, std::size_t k) {
    std::vector<int> out;
    Bitset m = cs.inC - H.row(v);
    for (std::size_t c = m.first(); c != Bitset::npos && out.size() < k; c = m.next(c)) out.push_back(static_cast<int>(c));
    return out;
  };
  std::vector<std::vector<int>> NT(n);
  for (int v : cs.S) {
    Bitset nt = H.row(v) & inT;
    for (std::size_t w = nt.first(); w != Bitset::npos && NT[v].size() < 3; w = nt.next(w))
      NT[v].push_back(static_cast<int>(w));
  }
  for (int v : cs.S) {
    const auto& nt = NT[v];
    if (nt.size() >= 3) {
      auto cm = missing_of(v, 2);
      std::vector<std::vector<int>> cand;
      for (int c : cm)
        for (std::size_t i = 0; i < 3; ++i)
          for (std::size_t j = i + 1; j < 3; ++j) cand.push_back({v, nt[i], c, nt[j]});
      return first_match(g, cand, kPat, "c4 pair: three T neighbors");
    }
    if (nt.size() == 2) {
      auto cm = missing_of(v, 3);
      if (cm.size() >= 3) {
        std::vector<std::vector<int>> cand;
        for (int c : cm) cand.push_back({v, nt[0], c, nt[1]});
        return first_match(g, cand, kPat, "c4 pair: two T neighbors, three misses");
      }
    }
  }
  int d2 = -1;
  for (int v : cs.S)
    if (NT[v].size() == 2) {
      d2 = v;
      break;
    }
  if (d2 >= 0 && cs.T.size() >= 3) {
    int v = d2;
    auto cm = missing_of(v, 2);
    int w1 = NT[v][0], w2 = NT[v][1];
    int u = -1;
    for (int x : cs.T)
      if (x != w1 && x != w2) {
        u = x;
        break;
      }
    std::vector<std::vector<int>> cand;
    for (int c : cm) cand.push_back({v, w1, c, w2});
    for (int c : cm)
      for (int w : {w1, w2}) cand.push_back({w, v, u, c});
    return first_match(g, cand, kPat, "c4 pair: two T neighbors, |T| >= 3");
  }
  std::vector<char> removed(n, 0);
  bool exact = true;  // no vertex removed, so a certificate covers all of V
  if (d2 >= 0) {
    // |T| = 2 and T = N_T(d2)
    int v = d2;
    for (int x : cs.S)
      if (x != v && NT[x].size() == 2) return first_match(g, {{v, cs.T[0], x, cs.T[1]}}, kPat, "c4 pair: two D2 vertices");
    int t1 = cs.T[0], t2 = cs.T[1];
    int c1 = cs.miss[t1], c2 = cs.miss[t2];
    // a miss of v that both T vertices see closes a C4
    for (int c : missing_of(v, 2))
      if (c != c1 && c != c2) return first_match(g, {{c, t1, v, t2}}, kPat, "c4 pair: D2 vertex, shared clique vertex");
    // now v misses exactly c1 != c2; a 2K2 through v uses the edge v-t and
    // the edge from the miss of t into S
    for (auto [t, c] : {std::pair{t1, c1}, std::pair{t2, c2}})
      for (int s : H.neighbors(c))
        if (!cs.inC.test(s) && !inT.test(s) && s != v && !H.has_edge(s, t))
          return first_match(g, {{v, t, c, s}}, kPat, "c4 pair: 2K2 through D2 vertex");
    removed[v] = 1;
    exact = false;
  }
  // every remaining S vertex has at most one T neighbor
  int v = -1;
  for (int x : cs.S)
    if (!removed[x] && NT[x].size() == 1) {
      v = x;
      break;
    }
  if (v < 0) {
    if (!exact) return absent_result();
    std::vector<int> rest = cs.S;
    rest.insert(rest.end(), cs.T.begin(), cs.T.end());
    std::sort(rest.begin(), rest.end());
    return absent_result(g, comp ? Certificate{CertificateKind::Split, {rest, C}}
                                 : Certificate{CertificateKind::Split, {C, rest}});
  }
  int w = NT[v][0];
  int c = cs.miss[w];
  if (H.has_edge(v, c)) {
    int c2 = missing_of(v, 1)[0];
    return first_match(g, {{w, v, c, c2}}, kPat, "c4 pair: D1 vertex sees the miss");
  }
  for (int w2 : cs.T)
    if (cs.miss[w2] != c) return first_match(g, {{c, w2, w, v}}, kPat, "c4 pair: T vertex sees the miss");
  for (int x : cs.S) {
    if (removed[x] || x == v) continue;
    if (NT[x].size() == 1 && NT[x][0] != w) return first_match(g, {{v, w, x, NT[x][0]}}, kPat, "c4 pair: two D1 edges");
    if (H.has_edge(x, c)) {
      if (NT[x].size() == 1) {
        int c2 = missing_of(x, 1)[0];
        return first_match(g, {{w, x, c, c2}}, kPat, "c4 pair: D1 vertex sees the miss");
      }
      return first_match(g, {{x, c, v, w}}, kPat, "c4 pair: S vertex sees the miss");
    }
  }
  if (!exact) return absent_result();
  std::vector<int> K, R;
  for (int x : C)
    if (x != c) K.push_back(x);
  K.push_back(w);
  for (int x = 0; x < n; ++x)
    if (!cs.inC.test(x) && x != w) R.push_back(x);
  R.push_back(c);
  std::sort(K.begin(), K.end());
  std::sort(R.begin(), R.end());
  return absent_result(g, comp ? Certificate{CertificateKind::Split, {R, K}} : Certificate{CertificateKind::Split, {K, R}});
}

DetectionResult c4_pair(const Graph& g) {
  const std::initializer_list<const char*> kPat = {"C4", "2K2"};
  auto [comp, k4] = ramsey_clique(g);
  Graph H = view_graph(g, comp);
  auto C = grow_clique(H, k4);
  while (true) {
    auto cs = split_by_clique(H, C);
    int n = H.n();
    Bitset inS(n), inT(n);
    for (int u : cs.S) inS.set(u);
    for (int u : cs.T) inT.set(u);
    // step 2: S independent
    for (int u : cs.S) {
      std::size_t x = Bitset::first_and(H.row(u), inS);
      if (x == Bitset::npos) continue;
      int v = static_cast<int>(x);
      Bitset mu = cs.inC - H.row(u), mv = cs.inC - H.row(v);
      Bitset both = mu & mv;
      if (both.count() >= 2) {
        int c1 = static_cast<int>(both.first());
        int c2 = static_cast<int>(both.next(c1));
        return first_match(g, {{u, v, c1, c2}}, kPat, "c4 pair: edge in S, common misses");
      }
      int a = static_cast<int>((mu - mv).first());
      int b = static_cast<int>((mv - mu).first());
      return first_match(g, {{u, b, a, v}}, kPat, "c4 pair: edge in S");
    }
    // step 3: edges inside T
    int eu = -1, ev = -1;
    for (int u : cs.T) {
      Bitset nt = H.row(u) & inT;
      for (std::size_t x = nt.first(); x != Bitset::npos; x = nt.next(x)) {
        int v = static_cast<int>(x);
        if (cs.miss[u] != cs.miss[v])
          return first_match(g, {{u, v, cs.miss[u], cs.miss[v]}}, kPat, "c4 pair: T edge, different misses");
        if (eu < 0) {
          eu = u;
          ev = v;
        }
      }
    }
    if (eu < 0) return c4_main(g, H, cs, comp);
    int z = cs.miss[eu];
    for (int w : cs.T)
      if (cs.miss[w] != z) return first_match(g, {{z, w, eu, ev}}, kPat, "c4 pair: T edge, other miss");
    // step 4: every T vertex misses z; swap z for the edge and regrow
    std::vector<int> seed;
    for (int c : C)
      if (c != z) seed.push_back(c);
    seed.push_back(eu);
    seed.push_back(ev);
    C = grow_clique(H, seed);
  }
}

// A P4 has a middle edge bc, a in N(b) - N[c], d in N(c) - N[b], ad not an edge.
DetectionResult p4_search(const Graph& g) {
  int n = g.n();
  for (int b = 0; b < n; ++b)
    for (int c : g.neighbors(b)) {
      if (c < b) continue;
      Bitset A = g.row(b) - g.row(c);
      A.reset(c);
      Bitset D = g.row(c) - g.row(b);
      D.reset(b);
      if (A.none() || D.none()) continue;
      std::size_t dc = D.count();
      for (std::size_t a = A.first(); a != Bitset::npos; a = A.next(a)) {
        const Bitset& ra = g.row(static_cast<int>(a));
        if (Bitset::count_and(ra, D) < dc) {
          Bitset free = D - ra;
          return found_result(g, named("P4"), {static_cast<int>(a), b, c, static_cast<int>(free.first())});
        }
      }
    }
  return absent_result();
}

const Family kFamilies[] = {{"K4", "I4"}, {"diamond", "co-diamond"}, {"paw", "co-paw"},
                            {"claw", "co-claw"}, {"C4", "2K2"}, {"P4", "P4"}};

const Family* family_of(const Pattern& h) {
  for (const auto& f : kFamilies)
    if (is_isomorphic(h.graph, named(f.a).graph) || is_isomorphic(h.graph, named(f.b).graph)) return &f;
  return nullptr;
}

}  // namespace

DetectionResult detect_h_or_complement(const Graph& g, const Pattern& h, const DetectOptions& opt) {
  if (h.size() != 4) throw InputError("detect_h_or_complement: pattern needs 4 vertices");
  const Family* f = family_of(h);
  if (!f) throw InputError("detect_h_or_complement: pattern must be K4, diamond, paw, claw, C4, P4 or a complement");
  std::string a = f->a;
  auto brute = [&]() {
    if (a == "P4") return brute_force_detect(g, named("P4"), true);
    return brute_force_detect_any(g, {named(f->a), named(f->b)}, true);
  };
  int n = g.n();
  int floor = opt.brute_force_below;
  if (a == "P4") {
    if (n < floor) return brute();
    require_dense(g, "detect_h_or_complement");
    return p4_search(g);
  }
  if (a == "claw") {
    if (n < std::max(floor, 11)) return brute();
    return claw_pair(g);
  }
  if (n < std::max(floor, 31)) return brute();
  if (a == "K4") return detect_k4_or_i4(g);
  require_dense(g, "detect_h_or_complement");
  if (a == "diamond") return diamond_pair(g);
  if (a == "paw") return paw_pair(g);
  return c4_pair(g);
}

DetectionResult detect_c4_or_triangleH(const Graph& g, const Pattern& h, const DetectOptions& opt) {
  if (h.size() != 4) throw InputError("detect_c4_or_triangleH: pattern needs 4 vertices");
  for (const char* name : {"K4", "diamond", "paw", "co-claw"}) {
    if (!is_isomorphic(h.graph, named(name).graph)) continue;
    std::string s = name;
    if (s == "K4") return detect_c4_or_k4(g, opt);
    if (s == "diamond") return detect_c4_or_diamond(g, opt);
    if (s == "paw") return detect_c4_or_paw(g, opt);
    return detect_c4_or_coclaw(g, opt);
  }
  throw InputError("detect_c4_or_triangleH: pattern must be K4, diamond, paw or co-claw");
}

}  // namespace pf
