#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace egd {

namespace detail {

/// One cycle of a multigraph walk: vertices[i] -- edges[i] -- vertices[i+1 mod L].
struct RawCycle {
  std::vector<Vertex> vertices;
  std::vector<std::uint32_t> edges;
};

/**
   Splits an even-degree multigraph into simple cycles. A stack holds the
   current simple walk; the top steps to a neighbour off the stack when one
   is among the first `window` unused incidences, otherwise it closes a
   cycle at the stack neighbour lowest on the stack, which is popped off.
 */
inline std::vector<RawCycle>
stack_walk_cycles(std::size_t n, const std::vector<std::pair<Vertex, Vertex>> &ends,
                  std::size_t window = 64) {
  struct Slot {
    Vertex to;
    std::uint32_t edge;
    std::uint32_t side;
  };
  std::vector<std::vector<Slot>> adj(n);
  std::vector<std::array<std::uint32_t, 2>> where(ends.size());
  for (std::uint32_t e = 0; e < ends.size(); ++e) {
    auto [a, b] = ends[e];
    where[e][0] = static_cast<std::uint32_t>(adj[a].size());
    adj[a].push_back({b, e, 0});
    where[e][1] = static_cast<std::uint32_t>(adj[b].size());
    adj[b].push_back({a, e, 1});
  }
  for (Vertex v = 0; v < n; ++v)
    if (adj[v].size() % 2)
      throw AssertionFailure("stack walk needs even degrees; vertex " + std::to_string(v));
  auto remove = [&](std::uint32_t e) {
    for (int side = 0; side < 2; ++side) {
      Vertex v = side == 0 ? ends[e].first : ends[e].second;
      auto &list = adj[v];
      std::uint32_t at = where[e][side];
      const Slot moved = list.back();
      list[at] = moved;
      list.pop_back();
      if (at < list.size())
        where[moved.edge][moved.side] = at;
    }
  };
  constexpr auto off = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> pos(n, off);
  std::vector<Vertex> stack;
  std::vector<std::uint32_t> trail;
  std::vector<RawCycle> out;
  for (Vertex start = 0; start < n; ++start) {
    while (!adj[start].empty()) {
      stack.assign(1, start);
      trail.clear();
      pos[start] = 0;
      while (!stack.empty()) {
        Vertex v = stack.back();
        auto &list = adj[v];
        if (list.empty()) {
          if (stack.size() != 1)
            throw AssertionFailure("stack walk stranded at vertex " + std::to_string(v));
          pos[v] = off;
          stack.pop_back();
          break;
        }
        std::size_t pick = 0;
        bool extend = false;
        std::uint32_t best = off;
        const std::size_t lim = std::min(window, list.size());
        for (std::size_t i = 0; i < lim; ++i) {
          if (pos[list[i].to] == off) {
            pick = i;
            extend = true;
            break;
          }
          if (pos[list[i].to] < best) {
            best = pos[list[i].to];
            pick = i;
          }
        }
        if (!extend && lim < list.size()) {
          for (std::size_t i = lim; i < list.size(); ++i)
            if (pos[list[i].to] == off) {
              pick = i;
              extend = true;
              break;
            }
        }
        const Slot s = list[pick];
        remove(s.edge);
        if (extend) {
          pos[s.to] = static_cast<std::uint32_t>(stack.size());
          stack.push_back(s.to);
          trail.push_back(s.edge);
          continue;
        }
        const std::uint32_t at = pos[s.to];
        RawCycle c;
        c.vertices.assign(stack.begin() + at, stack.end());
        c.edges.assign(trail.begin() + at, trail.end());
        c.edges.push_back(s.edge);
        out.push_back(std::move(c));
        for (std::size_t i = at + 1; i < stack.size(); ++i)
          pos[stack[i]] = off;
        stack.resize(at + 1);
        trail.resize(at);
      }
    }
  }
  return out;
}

} // namespace detail

enum class SpreadMode { Euler, PathsOnly };

struct SpreadDecomposition {
  std::vector<Path> paths;
  std::vector<Cycle> cycles;
  /// PathsOnly: false when some cycle could not be split within the budget.
  bool feasible = true;
  std::size_t unsplit_cycles = 0;
};

/// How many path ends sit at each vertex.
inline std::vector<std::size_t> endpoint_multiplicity(std::size_t n, const std::vector<Path> &paths) {
  std::vector<std::size_t> mult(n, 0);
  for (const auto &p : paths)
    if (p.length() > 0) {
      ++mult[p.front()];
      ++mult[p.back()];
    }
  return mult;
}

/**
   Paths and cycles partitioning E(g) with every vertex an end of at most
   two paths.

   Euler mode: odd vertices of each component are paired in ascending order
   by virtual edges, the even multigraph is split into simple cycles, and
   each cycle through virtual edges is cut at them into paths. Every odd
   vertex ends exactly one path, so #paths = #odd / 2.

   PathsOnly mode: additionally cuts each cycle at two vertices that end no
   path yet; cycles without two such vertices stay and `feasible` is false.
 */
inline SpreadDecomposition well_spread_path_cycle_decompose(const Graph &g,
                                                            SpreadMode mode = SpreadMode::Euler) {
  SpreadDecomposition out;
  const std::size_t n = g.n(), m = g.m();
  std::vector<std::pair<Vertex, Vertex>> ends;
  ends.reserve(m + n / 2);
  for (const auto &e : g.edges())
    ends.emplace_back(e.u, e.v);
  std::size_t ncomp = 0;
  auto comp = components(g, &ncomp);
  std::vector<std::optional<Vertex>> waiting(ncomp);
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) % 2 == 0)
      continue;
    auto &w = waiting[comp[v]];
    if (w) {
      ends.emplace_back(*w, v);
      w.reset();
    } else {
      w = v;
    }
  }
  for (auto &raw : detail::stack_walk_cycles(n, ends)) {
    const std::size_t L = raw.edges.size();
    std::size_t first_virtual = L;
    for (std::size_t i = 0; i < L; ++i)
      if (raw.edges[i] >= m) {
        first_virtual = i;
        break;
      }
    if (first_virtual == L) {
      Cycle c;
      c.vertices = std::move(raw.vertices);
      c.edges.assign(raw.edges.begin(), raw.edges.end());
      out.cycles.push_back(std::move(c));
      continue;
    }
    Path cur;
    for (std::size_t k = 1; k <= L; ++k) {
      std::size_t i = (first_virtual + k) % L;
      Vertex at = raw.vertices[i];
      if (cur.vertices.empty())
        cur.vertices.push_back(at);
      if (raw.edges[i] >= m) {
        out.paths.push_back(std::move(cur));
        cur = Path();
        continue;
      }
      cur.edges.push_back(raw.edges[i]);
      cur.vertices.push_back(raw.vertices[(i + 1) % L]);
    }
  }
  if (mode == SpreadMode::PathsOnly) {
    auto mult = endpoint_multiplicity(n, out.paths);
    std::vector<Cycle> kept;
    for (auto &c : out.cycles) {
      const std::size_t L = c.vertices.size();
      std::optional<std::size_t> a;
      for (std::size_t i = 0; i < L && !a; ++i)
        if (mult[c.vertices[i]] == 0)
          a = i;
      std::optional<std::size_t> b;
      std::size_t spread = 0;
      if (a)
        for (std::size_t i = 0; i < L; ++i) {
          if (i == *a || mult[c.vertices[i]] != 0)
            continue;
          std::size_t d = (i + L - *a) % L;
          d = std::min(d, L - d);
          if (d > spread) {
            spread = d;
            b = i;
          }
        }
      if (!b) {
        out.feasible = false;
        ++out.unsplit_cycles;
        kept.push_back(std::move(c));
        continue;
      }
      auto arc = [&](std::size_t from, std::size_t to) {
        Path p;
        for (std::size_t i = from;; i = (i + 1) % L) {
          p.vertices.push_back(c.vertices[i]);
          if (i == to)
            break;
          p.edges.push_back(c.edges[i]);
        }
        return p;
      };
      out.paths.push_back(arc(*a, *b));
      out.paths.push_back(arc(*b, *a));
      mult[c.vertices[*a]] += 2;
      mult[c.vertices[*b]] += 2;
    }
    out.cycles = std::move(kept);
  }
  return out;
}

/// Simple cycles exactly covering E(g); every degree must be even.
inline std::vector<Cycle> eulerian_cycle_decompose(const Graph &g) {
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.degree(v) % 2)
      throw InputError("eulerian_cycle_decompose: vertex " + std::to_string(v) +
                       " has odd degree " + std::to_string(g.degree(v)));
  std::vector<Cycle> out;
  for (auto &raw : detail::stack_walk_cycles(g.n(), g.edge_pairs())) {
    Cycle c;
    c.vertices = std::move(raw.vertices);
    c.edges.assign(raw.edges.begin(), raw.edges.end());
    out.push_back(std::move(c));
  }
  return out;
}

struct LongCycleKnobs {
  double y_fraction = 1.0 / 3;
};

struct LongCycleResult {
  std::optional<Cycle> cycle;
  std::size_t path_length = 0; ///< |P| at the snapshot
  std::size_t x = 0, y = 0, z = 0;
  /// Y, when it separates X from Z.
  std::optional<VertexSet> separator;
  std::string reason;
};

namespace detail {

/// Edge filter: nullptr keeps every edge.
inline bool alive(const std::vector<std::uint8_t> *mask, EdgeId e) { return !mask || (*mask)[e]; }

inline LongCycleResult long_cycle_dfs(const Graph &g, const std::vector<std::uint8_t> *mask,
                                      const LongCycleKnobs &k) {
  LongCycleResult r;
  const std::size_t n = g.n();
  enum : std::uint8_t { Unexplored, OnPath, Removed };
  std::vector<std::uint8_t> state(n, Unexplored);
  std::vector<std::size_t> cursor(n, 0);
  std::vector<Vertex> P;
  std::vector<EdgeId> Pe; // Pe[i] joins P[i] and P[i+1]
  std::size_t u_count = n, r_count = 0;
  Vertex next_root = 0;
  while (u_count != r_count) {
    if (P.empty()) {
      while (state[next_root] != Unexplored)
        ++next_root;
      state[next_root] = OnPath;
      P.push_back(next_root);
      --u_count;
      continue;
    }
    Vertex v = P.back();
    auto adj = g.adj(v);
    bool pushed = false;
    while (cursor[v] < adj.size()) {
      const auto &inc = adj[cursor[v]++];
      if (state[inc.to] == Unexplored && alive(mask, inc.edge)) {
        state[inc.to] = OnPath;
        P.push_back(inc.to);
        Pe.push_back(inc.edge);
        --u_count;
        pushed = true;
        break;
      }
    }
    if (!pushed) {
      state[v] = Removed;
      ++r_count;
      P.pop_back();
      if (!Pe.empty() && !P.empty())
        Pe.pop_back();
    }
  }
  const std::size_t L = P.size();
  r.path_length = L;
  if (L < 3) {
    r.reason = "path at the snapshot has fewer than 3 vertices";
    return r;
  }
  const std::size_t third = (L + 2) / 3;
  auto ysize = static_cast<std::size_t>(std::floor(k.y_fraction * static_cast<double>(L)));
  ysize = std::max<std::size_t>(1, std::min(ysize, L - 2 * third));
  const std::size_t xs = (L - ysize) / 2;
  r.x = xs;
  r.y = ysize;
  r.z = L - xs - ysize;
  std::vector<std::int64_t> where(n, -1);
  for (std::size_t i = 0; i < L; ++i)
    where[P[i]] = static_cast<std::int64_t>(i);
  auto part = [&](Vertex v) -> int {
    std::int64_t i = where[v];
    if (i < 0)
      return -1;
    auto u = static_cast<std::size_t>(i);
    return u < xs ? 0 : (u < xs + ysize ? 1 : 2);
  };
  constexpr auto none = std::numeric_limits<EdgeId>::max();
  std::vector<EdgeId> parent(n, none);
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<Vertex> queue;
  for (std::size_t i = 0; i < xs; ++i) {
    seen[P[i]] = 1;
    queue.push_back(P[i]);
  }
  std::optional<Vertex> hit;
  for (std::size_t h = 0; h < queue.size() && !hit; ++h) {
    Vertex w = queue[h];
    for (const auto &inc : g.adj(w)) {
      if (seen[inc.to] || part(inc.to) == 1 || !alive(mask, inc.edge))
        continue;
      seen[inc.to] = 1;
      parent[inc.to] = inc.edge;
      if (part(inc.to) == 2) {
        hit = inc.to;
        break;
      }
      queue.push_back(inc.to);
    }
  }
  if (!hit) {
    VertexSet Y(n);
    for (std::size_t i = xs; i < xs + ysize; ++i)
      Y.insert(P[i]);
    r.separator = std::move(Y);
    r.reason = "Y separates X from Z";
    return r;
  }
  // Q from z back to its source in X
  std::vector<Vertex> qv{*hit};
  std::vector<EdgeId> qe;
  for (Vertex c = *hit; parent[c] != none;) {
    EdgeId e = parent[c];
    qe.push_back(e);
    c = g.other(e, c);
    qv.push_back(c);
  }
  const auto i = static_cast<std::size_t>(where[qv.back()]);
  const auto j = static_cast<std::size_t>(where[qv.front()]);
  Cycle c;
  for (std::size_t t = i; t <= j; ++t) {
    c.vertices.push_back(P[t]);
    if (t < j)
      c.edges.push_back(Pe[t]);
  }
  for (std::size_t t = 1; t + 1 < qv.size(); ++t)
    c.vertices.push_back(qv[t]);
  c.edges.insert(c.edges.end(), qe.begin(), qe.end());
  r.cycle = std::move(c);
  return r;
}

/**
   Depth-first search returning the first back edge that closes a cycle of
   length >= min_len, preferring the shallowest stack ancestor per vertex.
 */
inline std::optional<Cycle> back_edge_cycle(const Graph &g, const std::vector<std::uint8_t> *mask,
                                            std::size_t min_len) {
  const std::size_t n = g.n();
  constexpr auto none = std::numeric_limits<EdgeId>::max();
  std::vector<std::uint8_t> state(n, 0); // 0 new, 1 on stack, 2 done
  std::vector<std::size_t> depth(n, 0), cursor(n, 0);
  std::vector<EdgeId> up(n, none);
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (state[root])
      continue;
    state[root] = 1;
    stack.assign(1, root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      if (cursor[v] == 0) {
        // on first visit, look for the deepest cycle through a back edge
        std::optional<std::pair<Vertex, EdgeId>> best;
        for (const auto &inc : g.adj(v)) {
          if (inc.edge == up[v] || state[inc.to] != 1 || !alive(mask, inc.edge))
            continue;
          if (!best || depth[inc.to] < depth[best->first])
            best = std::make_pair(inc.to, inc.edge);
        }
        if (best && depth[v] - depth[best->first] + 1 >= min_len) {
          Cycle c;
          for (Vertex x = v; x != best->first; x = g.other(up[x], x)) {
            c.vertices.push_back(x);
            c.edges.push_back(up[x]);
          }
          c.vertices.push_back(best->first);
          c.edges.push_back(best->second);
          return c;
        }
      }
      auto adj = g.adj(v);
      bool pushed = false;
      while (cursor[v] < adj.size()) {
        const auto &inc = adj[cursor[v]++];
        if (state[inc.to] == 0 && alive(mask, inc.edge)) {
          state[inc.to] = 1;
          depth[inc.to] = depth[v] + 1;
          up[inc.to] = inc.edge;
          stack.push_back(inc.to);
          pushed = true;
          break;
        }
      }
      if (!pushed) {
        state[v] = 2;
        stack.pop_back();
      }
    }
  }
  return std::nullopt;
}

} // namespace detail

/**
   Depth-first process with unexplored set U, path P and finished set R,
   stopped when |U| = |R|. P is cut into X, Y, Z; a shortest X-Z path in
   G - Y plus the P-segment between its ends is a cycle containing Y.
 */
inline LongCycleResult find_long_cycle_dfs(const Graph &g, const LongCycleKnobs &k = {}) {
  if (!(k.y_fraction > 0 && k.y_fraction < 1))
    throw InputError("find_long_cycle_dfs: Y fraction must lie in (0, 1)");
  return detail::long_cycle_dfs(g, nullptr, k);
}

struct PeelResult {
  std::vector<Cycle> cycles;
  /// Edges not on any peeled cycle.
  EdgeSubset residual;
  std::size_t from_dfs = 0;
  std::size_t from_back_edge = 0;
  /// Neither search finds another long enough cycle in the residual.
  bool maximal_for_search = false;

  /// The residual as a graph on the same vertex ids.
  Subgraph residual_graph(const Graph &g) const { return edge_subgraph(g, residual); }
};

/**
   Repeatedly removes a cycle of length >= min_len. Each round tries the
   long-cycle process then the back-edge search; once the former has come
   up empty the back-edge search goes first. Stops when both fail.
 */
inline PeelResult peel_long_cycles(const Graph &g, std::size_t min_len,
                                   const LongCycleKnobs &k = {}) {
  if (min_len < 3)
    throw InputError("peel_long_cycles: min_len must be at least 3");
  PeelResult out;
  std::vector<std::uint8_t> mask(g.m(), 1);
  bool dfs_first = true;
  auto via_dfs = [&]() -> std::optional<Cycle> {
    auto r = detail::long_cycle_dfs(g, &mask, k);
    if (r.cycle && r.cycle->length() >= min_len)
      return std::move(r.cycle);
    return std::nullopt;
  };
  auto via_back = [&] { return detail::back_edge_cycle(g, &mask, min_len); };
  std::size_t live = g.m();
  while (live >= min_len) {
    std::optional<Cycle> c;
    bool dfs_hit = false;
    if (dfs_first) {
      c = via_dfs();
      dfs_hit = c.has_value();
      if (!c) {
        dfs_first = false;
        c = via_back();
      }
    } else {
      c = via_back();
      if (!c) {
        c = via_dfs();
        dfs_hit = c.has_value();
      }
    }
    if (!c)
      break;
    (dfs_hit ? out.from_dfs : out.from_back_edge)++;
    for (EdgeId e : c->edges)
      mask[e] = 0;
    live -= c->length();
    out.cycles.push_back(std::move(*c));
  }
  out.maximal_for_search = true;
  out.residual = EdgeSubset(g.m());
  for (EdgeId e = 0; e < g.m(); ++e)
    if (mask[e])
      out.residual.insert(e);
  return out;
}

} // namespace egd
