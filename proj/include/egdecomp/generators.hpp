#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include "graph.hpp"
#include "random.hpp"

namespace egd {

/// Edges of G(n, p) in order of increasing larger endpoint (geometric skips).
inline std::vector<std::pair<Vertex, Vertex>> gnp_pairs(std::size_t n, double p, Rng &rng) {
  std::vector<std::pair<Vertex, Vertex>> out;
  if (n < 2 || p <= 0.0)
    return out;
  if (p >= 1.0) {
    for (Vertex v = 1; v < n; ++v)
      for (Vertex w = 0; w < v; ++w)
        out.emplace_back(w, v);
    return out;
  }
  const double lq = std::log1p(-p);
  std::int64_t v = 1, w = -1;
  const auto nn = static_cast<std::int64_t>(n);
  while (v < nn) {
    double r = rng.uniform01();
    w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / lq));
    while (w >= v && v < nn) {
      w -= v;
      ++v;
    }
    if (v < nn)
      out.emplace_back(static_cast<Vertex>(w), static_cast<Vertex>(v));
  }
  return out;
}

inline Graph gen_gnp(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0))
    throw InputError("gen_gnp: p must lie in [0, 1]");
  Rng rng(derive_seed(seed, 0x6e70));
  return Graph(n, gnp_pairs(n, p, rng));
}

/// K_{2k+1, n-2k-1}: A = 0..2k, B = the rest.
inline Graph gen_gallai_bipartite(std::size_t k, std::size_t n) {
  const std::size_t a = 2 * k + 1;
  if (n < a + 1)
    throw InputError("gen_gallai_bipartite: need n >= 2k + 2");
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(a * (n - a));
  for (Vertex x = 0; x < a; ++x)
    for (Vertex y = static_cast<Vertex>(a); y < n; ++y)
      edges.emplace_back(x, y);
  return Graph(n, edges);
}

/**
   Fewest pieces any decomposition of K_{2k+1, n-2k-1} can have:
   |B| + (|A||B| - |B|) / (2|A|), rounded up.
 */
inline std::uint64_t gallai_lower_bound(std::size_t k, std::size_t n) {
  const std::uint64_t a = 2 * k + 1;
  if (n < a + 1)
    throw InputError("gallai_lower_bound: need n >= 2k + 2");
  const std::uint64_t b = n - a;
  const std::uint64_t num = 2 * a * b + (a * b - b);
  return (num + 2 * a - 1) / (2 * a);
}

/**
   G(n, p) made even by deleting a T-join of the odd vertices inside a
   breadth-first spanning forest.
 */
inline Graph gen_eulerian(std::size_t n, double p, std::uint64_t seed) {
  Graph g = gen_gnp(n, p, seed);
  std::vector<std::uint8_t> odd(n, 0);
  for (Vertex v = 0; v < n; ++v)
    odd[v] = g.degree(v) % 2;
  std::vector<std::uint8_t> drop(g.m(), 0), seen(n, 0);
  std::vector<EdgeId> parent_edge(n, 0);
  std::vector<Vertex> order;
  for (Vertex r = 0; r < n; ++r) {
    if (seen[r])
      continue;
    seen[r] = 1;
    std::size_t head = order.size();
    order.push_back(r);
    parent_edge[r] = static_cast<EdgeId>(g.m());
    while (head < order.size()) {
      Vertex x = order[head++];
      for (const auto &inc : g.adj(x))
        if (!seen[inc.to]) {
          seen[inc.to] = 1;
          parent_edge[inc.to] = inc.edge;
          order.push_back(inc.to);
        }
    }
  }
  for (std::size_t i = order.size(); i-- > 0;) {
    Vertex v = order[i];
    if (!odd[v] || parent_edge[v] == g.m())
      continue;
    drop[parent_edge[v]] = 1;
    odd[v] = 0;
    odd[g.other(parent_edge[v], v)] ^= 1;
  }
  std::vector<std::pair<Vertex, Vertex>> keep;
  for (EdgeId e = 0; e < g.m(); ++e)
    if (!drop[e])
      keep.emplace_back(g.edge(e).u, g.edge(e).v);
  return Graph(n, keep);
}

/// Uniform-ish random d-regular graph by repeated stub pairing.
inline Graph gen_random_regular(std::size_t n, std::size_t d, std::uint64_t seed) {
  if ((n * d) % 2 || d >= n)
    throw InputError("gen_random_regular: need n*d even and d < n");
  Rng rng(derive_seed(seed, 0x7265));
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::set<std::pair<Vertex, Vertex>> edges;
    std::vector<Vertex> stubs;
    for (Vertex v = 0; v < n; ++v)
      for (std::size_t i = 0; i < d; ++i)
        stubs.push_back(v);
    bool stuck = false;
    while (!stubs.empty() && !stuck) {
      rng.shuffle(stubs);
      std::vector<Vertex> rest;
      bool progress = false;
      for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
        Vertex a = std::min(stubs[i], stubs[i + 1]), b = std::max(stubs[i], stubs[i + 1]);
        if (a != b && edges.emplace(a, b).second) {
          progress = true;
        } else {
          rest.push_back(a);
          rest.push_back(b);
        }
      }
      if (!progress) {
        bool any = false;
        for (std::size_t i = 0; i < rest.size() && !any; ++i)
          for (std::size_t j = i + 1; j < rest.size() && !any; ++j) {
            Vertex a = std::min(rest[i], rest[j]), b = std::max(rest[i], rest[j]);
            any = a != b && !edges.count({a, b});
          }
        stuck = !any;
      }
      stubs.swap(rest);
    }
    if (!stuck)
      return Graph(n, std::vector<std::pair<Vertex, Vertex>>(edges.begin(), edges.end()));
  }
  throw InputError("gen_random_regular: pairing did not converge");
}

} // namespace egd
