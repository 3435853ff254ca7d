#pragma once

// Brute-force reference implementations. They share only Graph with the
// library and recompute everything from adjacency matrices and bitmasks.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "egdecomp/graph.hpp"

namespace oracle {

using egd::Graph;
using egd::Vertex;

using Mask = std::uint64_t;

inline std::vector<std::vector<bool>> adjacency_matrix(const Graph &g) {
  std::vector<std::vector<bool>> a(g.n(), std::vector<bool>(g.n(), false));
  for (const auto &e : g.edges())
    a[e.u][e.v] = a[e.v][e.u] = true;
  return a;
}

inline Mask vertex_mask(const egd::VertexSet &s) {
  Mask m = 0;
  for (auto v : s.to_vector())
    m |= Mask{1} << v;
  return m;
}

/// Vertices outside U adjacent to U through an edge not in `removed` (edge mask).
inline Mask neighbourhood(const Graph &g, Mask U, Mask removed) {
  Mask out = 0;
  for (std::size_t e = 0; e < g.m(); ++e) {
    if (removed >> e & 1)
      continue;
    Vertex a = g.edge(static_cast<egd::EdgeId>(e)).u, b = g.edge(static_cast<egd::EdgeId>(e)).v;
    bool ia = U >> a & 1, ib = U >> b & 1;
    if (ia && !ib)
      out |= Mask{1} << b;
    if (ib && !ia)
      out |= Mask{1} << a;
  }
  return out;
}

/// Calls f(mask) for every subset of {0..bits-1} of size <= k.
inline void for_each_subset_upto(std::size_t bits, std::size_t k,
                                 const std::function<bool(Mask)> &f) {
  std::vector<std::size_t> idx;
  std::function<bool(std::size_t, Mask)> rec = [&](std::size_t from, Mask cur) -> bool {
    if (!f(cur))
      return false;
    if (idx.size() == k)
      return true;
    for (std::size_t i = from; i < bits; ++i) {
      idx.push_back(i);
      bool go = rec(i + 1, cur | (Mask{1} << i));
      idx.pop_back();
      if (!go)
        return false;
    }
    return true;
  };
  rec(0, 0);
}

/// min over all F subset of E(G), |F| <= budget, of |N_{G-F}(U)|.
inline std::size_t min_survivors_all_F(const Graph &g, Mask U, std::size_t budget) {
  std::size_t best = g.n();
  for_each_subset_upto(g.m(), budget, [&](Mask F) {
    best = std::min<std::size_t>(best, std::popcount(neighbourhood(g, U, F)));
    return true;
  });
  return best;
}

struct Params {
  double epsilon;
  double s;
  double denom;
};

inline std::size_t threshold(const Params &p, std::size_t u) {
  return static_cast<std::size_t>(std::ceil(p.epsilon * static_cast<double>(u) / p.denom - 1e-9));
}

inline std::size_t budget(const Params &p, std::size_t u, std::size_t m) {
  double b = p.s * static_cast<double>(u);
  if (b >= static_cast<double>(m))
    return m;
  return static_cast<std::size_t>(std::floor(b + 1e-9));
}

/**
   Direct double loop: every U with 1 <= |U| <= 2n/3, every F among U's
   boundary edges with |F| <= budget. Returns the first failing U (by size,
   then mask), or nullopt for an expander.
 */
inline std::optional<Mask> reference_violation(const Graph &g, const Params &p) {
  const std::size_t n = g.n();
  const std::size_t kmax = (2 * n) / 3;
  std::vector<std::pair<std::size_t, Mask>> order;
  for (Mask U = 1; U < (Mask{1} << n); ++U) {
    std::size_t u = std::popcount(U);
    if (u <= kmax)
      order.emplace_back(u, U);
  }
  std::sort(order.begin(), order.end());
  for (auto [u, U] : order) {
    std::vector<std::size_t> boundary;
    for (std::size_t e = 0; e < g.m(); ++e) {
      auto ed = g.edge(static_cast<egd::EdgeId>(e));
      if ((U >> ed.u & 1) != (U >> ed.v & 1))
        boundary.push_back(e);
    }
    const std::size_t b = std::min(budget(p, u, g.m()), boundary.size());
    const std::size_t need = threshold(p, u);
    bool bad = false;
    for_each_subset_upto(boundary.size(), b, [&](Mask local) {
      Mask F = 0;
      for (std::size_t i = 0; i < boundary.size(); ++i)
        if (local >> i & 1)
          F |= Mask{1} << boundary[i];
      if (static_cast<std::size_t>(std::popcount(neighbourhood(g, U, F))) < need) {
        bad = true;
        return false;
      }
      return true;
    });
    if (bad)
      return U;
  }
  return std::nullopt;
}

/// All simple x-y paths with internal vertices in V (mask) and length <= ell, as edge masks.
inline std::vector<Mask> simple_paths(const Graph &g, Vertex x, Vertex y, Mask V, std::size_t ell) {
  auto a = adjacency_matrix(g);
  std::vector<Mask> out;
  std::vector<Vertex> path{x};
  Mask used_v = Mask{1} << x;
  std::function<void(Vertex, Mask)> rec = [&](Vertex v, Mask edges) {
    if (path.size() - 1 >= ell)
      return;
    for (Vertex w = 0; w < g.n(); ++w) {
      if (!a[v][w] || (used_v >> w & 1))
        continue;
      Mask e = edges | (Mask{1} << *g.find_edge(v, w));
      if (w == y) {
        out.push_back(e);
        continue;
      }
      if (!(V >> w & 1))
        continue;
      used_v |= Mask{1} << w;
      path.push_back(w);
      rec(w, e);
      path.pop_back();
      used_v &= ~(Mask{1} << w);
    }
  };
  rec(x, 0);
  return out;
}

/// Whether the pairs admit pairwise edge-disjoint paths (exhaustive).
inline bool routable(const Graph &g, const std::vector<std::pair<Vertex, Vertex>> &pairs, Mask V,
                     std::size_t ell) {
  std::vector<std::vector<Mask>> cand;
  for (auto [x, y] : pairs)
    cand.push_back(simple_paths(g, x, y, V, ell));
  std::function<bool(std::size_t, Mask)> rec = [&](std::size_t i, Mask used) {
    if (i == pairs.size())
      return true;
    for (Mask p : cand[i])
      if (!(p & used) && rec(i + 1, used | p))
        return true;
    return false;
  };
  return rec(0, 0);
}

/// Longest simple cycle length (0 if acyclic); exponential, small graphs only.
inline std::size_t longest_cycle(const Graph &g) {
  auto a = adjacency_matrix(g);
  std::size_t best = 0;
  const std::size_t n = g.n();
  std::vector<bool> on(n, false);
  std::function<void(Vertex, Vertex, std::size_t)> rec = [&](Vertex start, Vertex v,
                                                            std::size_t len) {
    for (Vertex w = start; w < n; ++w) {
      if (!a[v][w])
        continue;
      if (w == start && len >= 3)
        best = std::max(best, len);
      if (w == start || on[w])
        continue;
      on[w] = true;
      rec(start, w, len + 1);
      on[w] = false;
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    on[s] = true;
    rec(s, s, 1);
    on[s] = false;
  }
  return best;
}

/// Edge multiset check by endpoint pairs: every edge of g exactly once.
inline bool exact_partition(const Graph &g, const std::vector<std::vector<Vertex>> &cycles,
                            const std::vector<std::pair<Vertex, Vertex>> &singles) {
  std::map<std::pair<Vertex, Vertex>, int> count;
  for (const auto &e : g.edges())
    count[{e.u, e.v}] = 0;
  auto hit = [&](Vertex a, Vertex b) {
    auto key = std::make_pair(std::min(a, b), std::max(a, b));
    auto it = count.find(key);
    if (it == count.end())
      return false;
    ++it->second;
    return true;
  };
  for (const auto &c : cycles) {
    if (c.size() < 3 || std::set<Vertex>(c.begin(), c.end()).size() != c.size())
      return false;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!hit(c[i], c[(i + 1) % c.size()]))
        return false;
  }
  for (auto [a, b] : singles)
    if (!hit(a, b))
      return false;
  return std::all_of(count.begin(), count.end(), [](const auto &kv) { return kv.second == 1; });
}

/// Iterated logarithm via natural logs.
inline std::size_t iterated_log_reference(std::size_t n) {
  std::size_t k = 0;
  double x = static_cast<double>(n);
  while (x > 1.0) {
    x = std::log(x) / std::log(2.0);
    ++k;
  }
  return k;
}

} // namespace oracle
