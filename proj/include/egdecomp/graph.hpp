#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "core.hpp"

namespace egd {

struct Edge {
  Vertex u;
  Vertex v;
};

struct Incidence {
  Vertex to;
  EdgeId edge;
};

/**
   Immutable simple undirected graph. Edge ids follow construction order;
   endpoints are stored with u < v. Adjacency is kept sorted by neighbour id
   so every traversal order is a function of the edge set alone.
 */
class Graph {
public:
  Graph() = default;

  /**
     Throws InputError on loops, parallel edges or ids >= n.

     Time complexity: O(n + m log m)
   */
  Graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>> &edges) : n_(n) {
    if (n > std::numeric_limits<Vertex>::max())
      throw InputError("too many vertices");
    edges_.reserve(edges.size());
    std::vector<std::size_t> deg(n, 0);
    for (const auto &[a, b] : edges) {
      if (a >= n || b >= n)
        throw InputError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                         ") has an endpoint outside 0.." + std::to_string(n ? n - 1 : 0));
      if (a == b)
        throw InputError("self-loop at vertex " + std::to_string(a));
      edges_.push_back(a < b ? Edge{a, b} : Edge{b, a});
      ++deg[a];
      ++deg[b];
    }
    offset_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v)
      offset_[v + 1] = offset_[v] + deg[v];
    adj_.resize(offset_[n]);
    std::vector<std::size_t> pos(offset_.begin(), offset_.end() - 1);
    for (EdgeId e = 0; e < edges_.size(); ++e) {
      adj_[pos[edges_[e].u]++] = {edges_[e].v, e};
      adj_[pos[edges_[e].v]++] = {edges_[e].u, e};
    }
    for (std::size_t v = 0; v < n; ++v) {
      auto first = adj_.begin() + static_cast<std::ptrdiff_t>(offset_[v]);
      auto last = adj_.begin() + static_cast<std::ptrdiff_t>(offset_[v + 1]);
      std::sort(first, last, [](const Incidence &x, const Incidence &y) { return x.to < y.to; });
      for (auto it = first; it != last && it + 1 != last; ++it)
        if (it->to == (it + 1)->to)
          throw InputError("parallel edge between " + std::to_string(v) + " and " +
                           std::to_string(it->to));
    }
  }

  std::size_t n() const { return n_; }
  std::size_t m() const { return edges_.size(); }
  const Edge &edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge> &edges() const { return edges_; }

  std::span<const Incidence> adj(Vertex v) const {
    return {adj_.data() + offset_[v], offset_[v + 1] - offset_[v]};
  }
  std::size_t degree(Vertex v) const { return offset_[v + 1] - offset_[v]; }

  Vertex other(EdgeId e, Vertex v) const {
    return edges_[e].u == v ? edges_[e].v : edges_[e].u;
  }

  /// Time complexity: O(log deg(a))
  std::optional<EdgeId> find_edge(Vertex a, Vertex b) const {
    if (a >= n_ || b >= n_)
      return std::nullopt;
    auto row = adj(a);
    auto it = std::lower_bound(row.begin(), row.end(), b,
                               [](const Incidence &x, Vertex t) { return x.to < t; });
    if (it != row.end() && it->to == b)
      return it->edge;
    return std::nullopt;
  }

  std::vector<std::pair<Vertex, Vertex>> edge_pairs() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edges_.size());
    for (const auto &e : edges_)
      out.emplace_back(e.u, e.v);
    return out;
  }

  /// FNV-1a over n and the edge list in id order.
  std::uint64_t fingerprint() const {
    std::uint64_t h = 1469598103934665603ULL;
    auto feed = [&h](std::uint64_t x) {
      for (int i = 0; i < 8; ++i) {
        h ^= (x >> (8 * i)) & 0xff;
        h *= 1099511628211ULL;
      }
    };
    feed(n_);
    feed(edges_.size());
    for (const auto &e : edges_) {
      feed(e.u);
      feed(e.v);
    }
    return h;
  }

  bool is_eulerian() const {
    for (Vertex v = 0; v < n_; ++v)
      if (degree(v) % 2)
        return false;
    return true;
  }

  void check_vertex(Vertex v) const {
    if (v >= n_)
      throw InputError("vertex " + std::to_string(v) + " out of range");
  }

  void require(const VertexSet &s, const char *name) const {
    if (s.universe() != n_)
      throw InputError(std::string(name) + ": vertex set universe does not match graph");
  }
  void require(const EdgeSubset &s, const char *name) const {
    if (s.universe() != m() && s.universe() != 0)
      throw InputError(std::string(name) + ": edge set universe does not match graph");
  }

private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offset_{0};
  std::vector<Incidence> adj_;
};

/// v_0..v_k with edges[i] joining v_i and v_{i+1}.
struct Path {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;
  std::size_t length() const { return edges.size(); }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
};

/// Cyclic sequence; edges[i] joins vertices[i] and vertices[(i+1) % k].
struct Cycle {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;
  std::size_t length() const { return edges.size(); }
};

inline bool check_path(const Graph &g, const Path &p, std::string *why = nullptr) {
  auto fail = [&](const std::string &msg) {
    if (why)
      *why = msg;
    return false;
  };
  if (p.vertices.empty() || p.vertices.size() != p.edges.size() + 1)
    return fail("path vertex/edge counts inconsistent");
  std::vector<Vertex> seen(p.vertices);
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    return fail("path repeats a vertex");
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (p.edges[i] >= g.m())
      return fail("path edge id out of range");
    const Edge &e = g.edge(p.edges[i]);
    Vertex a = p.vertices[i], b = p.vertices[i + 1];
    if (!((e.u == a && e.v == b) || (e.u == b && e.v == a)))
      return fail("path edge " + std::to_string(p.edges[i]) + " does not join " +
                  std::to_string(a) + " and " + std::to_string(b));
  }
  return true;
}

inline bool check_cycle(const Graph &g, const Cycle &c, std::string *why = nullptr) {
  auto fail = [&](const std::string &msg) {
    if (why)
      *why = msg;
    return false;
  };
  const std::size_t k = c.vertices.size();
  if (k < 3 || c.edges.size() != k)
    return fail("cycle shorter than 3 or inconsistent");
  std::vector<Vertex> seen(c.vertices);
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    return fail("cycle repeats a vertex");
  for (std::size_t i = 0; i < k; ++i) {
    if (c.edges[i] >= g.m())
      return fail("cycle edge id out of range");
    const Edge &e = g.edge(c.edges[i]);
    Vertex a = c.vertices[i], b = c.vertices[(i + 1) % k];
    if (!((e.u == a && e.v == b) || (e.u == b && e.v == a)))
      return fail("cycle edge " + std::to_string(c.edges[i]) + " does not join " +
                  std::to_string(a) + " and " + std::to_string(b));
  }
  return true;
}

inline Path path_from_vertices(const Graph &g, const std::vector<Vertex> &vs) {
  Path p;
  p.vertices = vs;
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    auto e = g.find_edge(vs[i], vs[i + 1]);
    if (!e)
      throw InputError("no edge between " + std::to_string(vs[i]) + " and " +
                       std::to_string(vs[i + 1]));
    p.edges.push_back(*e);
  }
  return p;
}

inline Cycle cycle_from_vertices(const Graph &g, const std::vector<Vertex> &vs) {
  Cycle c;
  c.vertices = vs;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    Vertex a = vs[i], b = vs[(i + 1) % vs.size()];
    auto e = g.find_edge(a, b);
    if (!e)
      throw InputError("no edge between " + std::to_string(a) + " and " + std::to_string(b));
    c.edges.push_back(*e);
  }
  return c;
}

/**
   Turn a walk into a path with the same ends: scan left to right and, at the
   first vertex seen twice, delete the closed segment between its two
   occurrences; repeat until no vertex repeats.
 */
inline Path shortcut_walk(const std::vector<Vertex> &vertices, const std::vector<EdgeId> &edges) {
  Path out;
  std::unordered_map<Vertex, std::size_t> pos;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    Vertex v = vertices[i];
    auto it = pos.find(v);
    if (it != pos.end()) {
      std::size_t keep = it->second;
      for (std::size_t j = keep + 1; j < out.vertices.size(); ++j)
        pos.erase(out.vertices[j]);
      out.vertices.resize(keep + 1);
      out.edges.resize(keep);
    } else {
      if (i > 0)
        out.edges.push_back(edges[i - 1]);
      pos.emplace(v, out.vertices.size());
      out.vertices.push_back(v);
    }
  }
  return out;
}

/**
   A graph materialised from a vertex/edge selection of a host, with maps
   from local ids back to host ids.
 */
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_host_vertex;
  std::vector<EdgeId> to_host_edge;

  Path lift(const Path &p) const {
    Path out;
    for (Vertex v : p.vertices)
      out.vertices.push_back(to_host_vertex[v]);
    for (EdgeId e : p.edges)
      out.edges.push_back(to_host_edge[e]);
    return out;
  }
  Cycle lift(const Cycle &c) const {
    Cycle out;
    for (Vertex v : c.vertices)
      out.vertices.push_back(to_host_vertex[v]);
    for (EdgeId e : c.edges)
      out.edges.push_back(to_host_edge[e]);
    return out;
  }
};

/// Same vertex ids as the host; edges in ascending host id order.
inline Subgraph edge_subgraph(const Graph &host, const EdgeSubset &edges) {
  Subgraph s;
  std::vector<std::pair<Vertex, Vertex>> list;
  for (EdgeId e = 0; e < host.m(); ++e)
    if (edges.contains(e)) {
      list.emplace_back(host.edge(e).u, host.edge(e).v);
      s.to_host_edge.push_back(e);
    }
  s.to_host_vertex.resize(host.n());
  for (Vertex v = 0; v < host.n(); ++v)
    s.to_host_vertex[v] = v;
  s.graph = Graph(host.n(), list);
  return s;
}

/**
   Vertices of `vertices` relabelled 0.. in ascending host order, keeping the
   selected edges (each must have both ends inside `vertices`).
 */
inline Subgraph extract(const Graph &host, const VertexSet &vertices, const EdgeSubset &edges) {
  Subgraph s;
  std::vector<Vertex> local(host.n(), std::numeric_limits<Vertex>::max());
  for (Vertex v = 0; v < host.n(); ++v)
    if (vertices.contains(v)) {
      local[v] = static_cast<Vertex>(s.to_host_vertex.size());
      s.to_host_vertex.push_back(v);
    }
  std::vector<std::pair<Vertex, Vertex>> list;
  for (EdgeId e = 0; e < host.m(); ++e)
    if (edges.contains(e)) {
      const Edge &ed = host.edge(e);
      if (local[ed.u] == std::numeric_limits<Vertex>::max() ||
          local[ed.v] == std::numeric_limits<Vertex>::max())
        throw InputError("extract: edge leaves the vertex selection");
      list.emplace_back(local[ed.u], local[ed.v]);
      s.to_host_edge.push_back(e);
    }
  s.graph = Graph(s.to_host_vertex.size(), list);
  return s;
}

/// Drops isolated vertices, relabelling the rest in ascending order.
inline Subgraph without_isolated(const Graph &g) {
  VertexSet keep(g.n());
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.degree(v) > 0)
      keep.insert(v);
  return extract(g, keep, EdgeSubset::full(g.m()));
}

/**
   B^i_{G-F}(U, V): vertices of V reachable from U by a path of length at
   most i whose internal vertices lie in V, avoiding F. Start vertices
   outside V are used but not reported.

   Time complexity: O(n + m)
 */
inline VertexSet ball(const Graph &g, const VertexSet &U, const VertexSet &V, std::size_t i,
                      const EdgeSubset &F) {
  g.require(U, "ball U");
  g.require(V, "ball V");
  g.require(F, "ball F");
  constexpr std::size_t unseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.n(), unseen);
  std::deque<Vertex> queue;
  for (Vertex u = 0; u < g.n(); ++u)
    if (U.contains(u)) {
      dist[u] = 0;
      queue.push_back(u);
    }
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    if (dist[x] >= i)
      continue;
    if (dist[x] > 0 && !V.contains(x))
      continue;
    for (const auto &inc : g.adj(x)) {
      if (F.contains(inc.edge) || dist[inc.to] != unseen)
        continue;
      dist[inc.to] = dist[x] + 1;
      queue.push_back(inc.to);
    }
  }
  VertexSet out(g.n());
  for (Vertex v = 0; v < g.n(); ++v)
    if (dist[v] != unseen && V.contains(v))
      out.insert(v);
  return out;
}

inline VertexSet ball(const Graph &g, const VertexSet &U, const VertexSet &V, std::size_t i) {
  return ball(g, U, V, i, EdgeSubset());
}

/// N_{G-F}(U): vertices outside U with a neighbour in U.
inline VertexSet neighborhood(const Graph &g, const VertexSet &U, const EdgeSubset &F) {
  g.require(U, "neighborhood U");
  g.require(F, "neighborhood F");
  VertexSet out(g.n());
  for (Vertex u = 0; u < g.n(); ++u) {
    if (!U.contains(u))
      continue;
    for (const auto &inc : g.adj(u))
      if (!U.contains(inc.to) && !F.contains(inc.edge))
        out.insert(inc.to);
  }
  return out;
}

inline VertexSet neighborhood(const Graph &g, const VertexSet &U) {
  return neighborhood(g, U, EdgeSubset());
}

/// N_{G-F,d}(U): vertices outside U with at least d neighbours in U.
inline VertexSet robust_neighborhood(const Graph &g, const VertexSet &U, const EdgeSubset &F,
                                     std::size_t d) {
  g.require(U, "robust_neighborhood U");
  g.require(F, "robust_neighborhood F");
  if (d < 1)
    throw InputError("robust_neighborhood: d must be at least 1");
  std::vector<std::size_t> cnt(g.n(), 0);
  for (Vertex u = 0; u < g.n(); ++u) {
    if (!U.contains(u))
      continue;
    for (const auto &inc : g.adj(u))
      if (!U.contains(inc.to) && !F.contains(inc.edge))
        ++cnt[inc.to];
  }
  VertexSet out(g.n());
  for (Vertex v = 0; v < g.n(); ++v)
    if (cnt[v] >= d)
      out.insert(v);
  return out;
}

/// Component label per vertex (labels in order of smallest member), edges in
/// `skip` ignored.
inline std::vector<std::uint32_t> components(const Graph &g, const EdgeSubset &skip,
                                             std::size_t *count = nullptr) {
  constexpr auto none = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> label(g.n(), none);
  std::vector<Vertex> stack;
  std::uint32_t next = 0;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (label[s] != none)
      continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (const auto &inc : g.adj(x))
        if (!skip.contains(inc.edge) && label[inc.to] == none) {
          label[inc.to] = next;
          stack.push_back(inc.to);
        }
    }
    ++next;
  }
  if (count)
    *count = next;
  return label;
}

inline std::vector<std::uint32_t> components(const Graph &g, std::size_t *count = nullptr) {
  return components(g, EdgeSubset(), count);
}

} // namespace egd
