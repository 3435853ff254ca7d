#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "egdecomp/egdecomp.hpp"

namespace th {

using egd::EdgeSubset;
using egd::Graph;
using egd::Vertex;
using egd::VertexSet;

inline Graph cycle_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < n; ++i)
    e.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return Graph(n, e);
}

inline Graph path_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i + 1 < n; ++i)
    e.emplace_back(i, i + 1);
  return Graph(n, e);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      e.emplace_back(a, b);
  return Graph(n, e);
}

/// Centre 0, leaves 1..k.
inline Graph star_graph(std::size_t k) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 1; i <= k; ++i)
    e.emplace_back(0, i);
  return Graph(k + 1, e);
}

/// Left side 0..a-1, right side a..a+b-1.
inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex x = 0; x < a; ++x)
    for (Vertex y = 0; y < b; ++y)
      e.emplace_back(x, static_cast<Vertex>(a + y));
  return Graph(a + b, e);
}

inline VertexSet vset(const Graph &g, std::initializer_list<std::uint32_t> ids) {
  return VertexSet::of(g.n(), ids);
}

inline EdgeSubset eset(const Graph &g, std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
  EdgeSubset s(g.m());
  for (auto [a, b] : pairs)
    s.insert(*g.find_edge(a, b));
  return s;
}

inline EdgeSubset none(const Graph &g) { return EdgeSubset(g.m()); }

/// Connected G(n, p) sample: resampled until connected (n >= 1).
inline Graph connected_gnp(std::size_t n, double p, std::uint64_t seed) {
  for (std::uint64_t a = 0;; ++a) {
    Graph g = egd::gen_gnp(n, p, egd::derive_seed(seed, 0xc0, a));
    std::size_t k = 0;
    egd::components(g, &k);
    if (k <= 1)
      return g;
  }
}

} // namespace th
