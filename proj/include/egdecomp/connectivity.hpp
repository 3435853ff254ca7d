#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "expansion.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "random.hpp"

namespace egd {

/// Multiset of vertex pairs; every vertex may appear in at most t pairs.
struct PairBatch {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::size_t t = 2;

  void validate(const Graph &g) const {
    std::vector<std::size_t> mult(g.n(), 0);
    for (auto [x, y] : pairs) {
      g.check_vertex(x);
      g.check_vertex(y);
      if (x == y)
        throw InputError("pair (" + std::to_string(x) + "," + std::to_string(y) +
                         ") has equal ends");
      if (++mult[x] > t || ++mult[y] > t)
        throw InputError("pair batch exceeds multiplicity bound t = " + std::to_string(t));
    }
  }
};

/// One path per pair, in batch order.
struct RoutedPaths {
  std::vector<Path> paths;
  VertexSet through;
  std::size_t ell = 0;
};

/// Checks ends, through-set containment, length cap and edge-disjointness.
inline bool check_routed(const Graph &g, const PairBatch &b, const RoutedPaths &r,
                         std::string *why = nullptr) {
  auto fail = [&](const std::string &msg) {
    if (why)
      *why = msg;
    return false;
  };
  if (r.paths.size() != b.pairs.size())
    return fail("path count differs from pair count");
  std::vector<std::uint8_t> used(g.m(), 0);
  for (std::size_t i = 0; i < r.paths.size(); ++i) {
    const Path &p = r.paths[i];
    std::string w;
    if (!check_path(g, p, &w))
      return fail("path " + std::to_string(i) + ": " + w);
    auto [x, y] = b.pairs[i];
    if (!((p.front() == x && p.back() == y) || (p.front() == y && p.back() == x)))
      return fail("path " + std::to_string(i) + " does not join its pair");
    if (p.length() > r.ell)
      return fail("path " + std::to_string(i) + " longer than ell");
    for (std::size_t j = 1; j + 1 < p.vertices.size(); ++j)
      if (!r.through.contains(p.vertices[j]))
        return fail("path " + std::to_string(i) + " leaves the through-set");
    for (EdgeId e : p.edges)
      if (used[e]++)
        return fail("paths share edge " + std::to_string(e));
  }
  return true;
}

/**
   Reusable breadth-first search for shortest paths through V of bounded
   length, skipping blocked edges. Stamps avoid clearing per query.
 */
class PathFinder {
public:
  explicit PathFinder(const Graph &g) : g_(g), stamp_(g.n(), 0), parent_(g.n(), 0) {}

  /// blocked(e) -> bool; returns nullopt if no such path exists.
  template <class Blocked>
  std::optional<Path> shortest(Vertex x, Vertex y, const VertexSet &V, std::size_t ell,
                               Blocked &&blocked) {
    if (x == y || ell == 0)
      return std::nullopt;
    ++round_;
    if (round_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      round_ = 1;
    }
    queue_.clear();
    depth_.clear();
    stamp_[x] = round_;
    queue_.push_back(x);
    depth_.push_back(0);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      Vertex w = queue_[head];
      std::size_t dw = depth_[head];
      if (dw >= ell || (w != x && !V.contains(w)))
        continue;
      for (const auto &inc : g_.adj(w)) {
        if (stamp_[inc.to] == round_ || blocked(inc.edge))
          continue;
        stamp_[inc.to] = round_;
        parent_[inc.to] = inc.edge;
        if (inc.to == y)
          return build(x, y);
        queue_.push_back(inc.to);
        depth_.push_back(dw + 1);
      }
    }
    return std::nullopt;
  }

private:
  Path build(Vertex x, Vertex y) const {
    Path p;
    Vertex cur = y;
    p.vertices.push_back(cur);
    while (cur != x) {
      EdgeId e = parent_[cur];
      p.edges.push_back(e);
      cur = g_.other(e, cur);
      p.vertices.push_back(cur);
    }
    std::reverse(p.vertices.begin(), p.vertices.end());
    std::reverse(p.edges.begin(), p.edges.end());
    return p;
  }

  const Graph &g_;
  std::vector<std::uint32_t> stamp_;
  std::vector<EdgeId> parent_;
  std::vector<Vertex> queue_;
  std::vector<std::size_t> depth_;
  std::uint32_t round_ = 0;
};

enum class RouteStrategy { Greedy, MatchingOracle };
enum class OracleStatus { NotRun, Feasible, Infeasible, Unknown };

struct RouteOptions {
  RouteStrategy strategy = RouteStrategy::Greedy;
  std::uint64_t seed = 1;
  std::size_t max_orders = 8;
  bool escalate = false;
  std::size_t candidate_cap = 10000;
  std::size_t node_cap = 2000000;
  std::size_t oracle_max_n = 64;
  std::size_t oracle_max_ell = 12;
  /// Restrict routing to these edges (universe 0: all edges allowed).
  EdgeSubset allowed;
};

struct RouteResult {
  bool ok = false;
  std::vector<std::optional<Path>> paths;
  std::vector<std::size_t> stuck;
  std::size_t orders_tried = 0;
  OracleStatus oracle = OracleStatus::NotRun;

  RoutedPaths routed(const VertexSet &V, std::size_t ell) const {
    RoutedPaths r{{}, V, ell};
    for (const auto &p : paths)
      if (p)
        r.paths.push_back(*p);
    return r;
  }
};

namespace detail {

inline void enumerate_paths(const Graph &g, Vertex x, Vertex y, const VertexSet &V,
                            std::size_t ell, const EdgeSubset &allowed, std::size_t cap,
                            std::vector<Path> &out, bool &capped) {
  Path cur;
  cur.vertices.push_back(x);
  std::vector<std::uint8_t> on(g.n(), 0);
  on[x] = 1;
  auto rec = [&](auto &&self, Vertex w) -> void {
    if (capped)
      return;
    for (const auto &inc : g.adj(w)) {
      if (on[inc.to] || (allowed.universe() && !allowed.contains(inc.edge)))
        continue;
      if (inc.to == y) {
        Path p = cur;
        p.vertices.push_back(y);
        p.edges.push_back(inc.edge);
        out.push_back(std::move(p));
        if (out.size() > cap) {
          capped = true;
          return;
        }
        continue;
      }
      if (cur.edges.size() + 1 >= ell || !V.contains(inc.to))
        continue;
      on[inc.to] = 1;
      cur.vertices.push_back(inc.to);
      cur.edges.push_back(inc.edge);
      self(self, inc.to);
      cur.vertices.pop_back();
      cur.edges.pop_back();
      on[inc.to] = 0;
      if (capped)
        return;
    }
  };
  if (ell > 0)
    rec(rec, x);
}

inline RouteResult matching_oracle(const Graph &g, const PairBatch &b, const VertexSet &V,
                                   std::size_t ell, const RouteOptions &opt) {
  RouteResult r;
  r.paths.assign(b.pairs.size(), std::nullopt);
  if (g.n() > opt.oracle_max_n || ell > opt.oracle_max_ell) {
    r.oracle = OracleStatus::Unknown;
    for (std::size_t i = 0; i < b.pairs.size(); ++i)
      r.stuck.push_back(i);
    return r;
  }
  std::vector<std::vector<Path>> cand(b.pairs.size());
  for (std::size_t i = 0; i < b.pairs.size(); ++i) {
    bool capped = false;
    enumerate_paths(g, b.pairs[i].first, b.pairs[i].second, V, ell, opt.allowed,
                    opt.candidate_cap, cand[i], capped);
    if (capped) {
      r.oracle = OracleStatus::Unknown;
      for (std::size_t j = 0; j < b.pairs.size(); ++j)
        r.stuck.push_back(j);
      return r;
    }
    std::stable_sort(cand[i].begin(), cand[i].end(),
                     [](const Path &a, const Path &c) { return a.length() < c.length(); });
    if (cand[i].empty()) {
      r.oracle = OracleStatus::Infeasible;
      r.stuck.push_back(i);
      return r;
    }
  }
  std::vector<std::size_t> order(b.pairs.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t c) {
    return cand[a].size() < cand[c].size();
  });
  std::vector<std::uint8_t> used(g.m(), 0);
  std::vector<std::size_t> choice(b.pairs.size(), 0);
  std::size_t nodes = 0;
  bool out_of_budget = false;
  auto rec = [&](auto &&self, std::size_t depth) -> bool {
    if (depth == order.size())
      return true;
    if (++nodes > opt.node_cap) {
      out_of_budget = true;
      return false;
    }
    std::size_t i = order[depth];
    for (std::size_t c = 0; c < cand[i].size(); ++c) {
      const Path &p = cand[i][c];
      bool free = std::none_of(p.edges.begin(), p.edges.end(), [&](EdgeId e) { return used[e]; });
      if (!free)
        continue;
      for (EdgeId e : p.edges)
        used[e] = 1;
      choice[i] = c;
      if (self(self, depth + 1))
        return true;
      for (EdgeId e : p.edges)
        used[e] = 0;
      if (out_of_budget)
        return false;
    }
    return false;
  };
  if (rec(rec, 0)) {
    r.ok = true;
    r.oracle = OracleStatus::Feasible;
    for (std::size_t i = 0; i < b.pairs.size(); ++i)
      r.paths[i] = cand[i][choice[i]];
    return r;
  }
  r.oracle = out_of_budget ? OracleStatus::Unknown : OracleStatus::Infeasible;
  for (std::size_t i = 0; i < b.pairs.size(); ++i)
    r.stuck.push_back(i);
  return r;
}

} // namespace detail

/**
   Edge-disjoint paths through V of length <= ell, one per pair.

   Greedy: pairs in seeded random order, each takes a shortest available
   path; other orders are tried up to max_orders and the attempt routing
   the most pairs is kept. MatchingOracle: exact backtracking over all
   candidate paths (capped). With escalate, a failed greedy run falls back
   to the oracle.
 */
inline RouteResult route_pairs(const Graph &g, const PairBatch &b, const VertexSet &V,
                               std::size_t ell, const RouteOptions &opt = {}) {
  b.validate(g);
  g.require(V, "route_pairs V");
  g.require(opt.allowed, "route_pairs allowed");
  if (opt.strategy == RouteStrategy::MatchingOracle)
    return detail::matching_oracle(g, b, V, ell, opt);

  RouteResult best;
  best.paths.assign(b.pairs.size(), std::nullopt);
  std::size_t best_count = 0;
  bool have_best = false;
  PathFinder finder(g);
  std::vector<std::uint8_t> used(g.m(), 0);
  const bool restricted = opt.allowed.universe() != 0;
  const std::size_t orders = std::max<std::size_t>(1, opt.max_orders);
  std::size_t tried = 0;
  for (std::size_t attempt = 0; attempt < orders; ++attempt) {
    ++tried;
    std::vector<std::size_t> order(b.pairs.size());
    for (std::size_t i = 0; i < order.size(); ++i)
      order[i] = i;
    Rng rng(derive_seed(opt.seed, 0x0de7, attempt));
    rng.shuffle(order);
    std::fill(used.begin(), used.end(), 0);
    RouteResult cur;
    cur.paths.assign(b.pairs.size(), std::nullopt);
    std::size_t count = 0;
    for (std::size_t i : order) {
      auto p = finder.shortest(b.pairs[i].first, b.pairs[i].second, V, ell, [&](EdgeId e) {
        return used[e] || (restricted && !opt.allowed.contains(e));
      });
      if (!p)
        continue;
      for (EdgeId e : p->edges)
        used[e] = 1;
      cur.paths[i] = std::move(p);
      ++count;
    }
    if (!have_best || count > best_count) {
      best = std::move(cur);
      best_count = count;
      have_best = true;
    }
    if (best_count == b.pairs.size())
      break;
  }
  best.orders_tried = tried;
  best.ok = best_count == b.pairs.size();
  best.stuck.clear();
  for (std::size_t i = 0; i < b.pairs.size(); ++i)
    if (!best.paths[i])
      best.stuck.push_back(i);
  if (!best.ok && opt.escalate) {
    auto exact = detail::matching_oracle(g, b, V, ell, opt);
    best.oracle = exact.oracle;
    if (exact.ok) {
      exact.orders_tried = tried;
      return exact;
    }
  }
  return best;
}

/**
   Grows balls of radius ceil(2 ell log n) through V around both ends of each
   pair; the first pair whose balls meet yields a path via the meeting
   vertex, shortcut to a simple path.
 */
inline std::optional<std::pair<std::size_t, Path>>
connect_one_pair_of_batch(const Graph &g, const std::vector<std::pair<Vertex, Vertex>> &pairs,
                          const VertexSet &V, std::size_t ell) {
  g.require(V, "connect_one_pair_of_batch V");
  const double lgn = std::max(1.0, lg(static_cast<double>(g.n())));
  const auto radius =
      static_cast<std::size_t>(std::ceil(2.0 * static_cast<double>(ell) * lgn - 1e-9));
  constexpr auto unseen = std::numeric_limits<std::size_t>::max();
  auto grow = [&](Vertex src, std::vector<std::size_t> &dist, std::vector<EdgeId> &par) {
    dist.assign(g.n(), unseen);
    par.assign(g.n(), 0);
    std::vector<Vertex> queue{src};
    dist[src] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      Vertex w = queue[h];
      if (dist[w] >= radius || (w != src && !V.contains(w)))
        continue;
      for (const auto &inc : g.adj(w))
        if (dist[inc.to] == unseen) {
          dist[inc.to] = dist[w] + 1;
          par[inc.to] = inc.edge;
          queue.push_back(inc.to);
        }
    }
  };
  std::vector<std::size_t> dx, dy;
  std::vector<EdgeId> px, py;
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    auto [x, y] = pairs[j];
    g.check_vertex(x);
    g.check_vertex(y);
    if (x == y)
      throw InputError("connect_one_pair_of_batch: pair with equal ends");
    grow(x, dx, px);
    grow(y, dy, py);
    std::optional<Vertex> meet;
    for (Vertex w = 0; w < g.n(); ++w) {
      if (!V.contains(w) || dx[w] == unseen || dy[w] == unseen)
        continue;
      if (!meet || dx[w] + dy[w] < dx[*meet] + dy[*meet])
        meet = w;
    }
    if (!meet)
      continue;
    std::vector<Vertex> wv;
    std::vector<EdgeId> we;
    for (Vertex c = *meet; c != x; c = g.other(px[c], c)) {
      wv.push_back(c);
      we.push_back(px[c]);
    }
    wv.push_back(x);
    std::reverse(wv.begin(), wv.end());
    std::reverse(we.begin(), we.end());
    for (Vertex c = *meet; c != y;) {
      EdgeId e = py[c];
      we.push_back(e);
      c = g.other(e, c);
      wv.push_back(c);
    }
    return std::make_pair(j, shortcut_walk(wv, we));
  }
  return std::nullopt;
}

struct Template {
  Graph graph;
  /// First ceil(n/6) ids.
  VertexSet through;
  std::size_t attempts = 0;
  std::size_t max_degree = 0;
  bool within_cap = false;
};

/// G(n, p) resampled until the maximum degree is at most `degree_cap`.
inline Template make_template(std::size_t n, double p, std::uint64_t seed, std::size_t degree_cap,
                              std::size_t max_attempts = 64) {
  if (n < 2)
    throw InputError("make_template: need n >= 2");
  p = std::clamp(p, 0.0, 1.0);
  Template t;
  for (std::size_t a = 0; a < std::max<std::size_t>(1, max_attempts); ++a) {
    Rng rng(derive_seed(seed, 0x7e3, a));
    t.graph = Graph(n, gnp_pairs(n, p, rng));
    t.attempts = a + 1;
    t.max_degree = 0;
    for (Vertex v = 0; v < n; ++v)
      t.max_degree = std::max(t.max_degree, t.graph.degree(v));
    if (t.max_degree <= degree_cap) {
      t.within_cap = true;
      break;
    }
  }
  t.through = VertexSet(n);
  for (Vertex v = 0; v < (n + 5) / 6; ++v)
    t.through.insert(v);
  return t;
}

struct SkeletonKnobs {
  double template_p = 0.1;
  std::size_t template_degree_cap = 64;
  std::size_t ell_route = 8;
  std::size_t ell_template = 8;
  std::size_t t = 2;
  std::size_t edge_budget = std::numeric_limits<std::size_t>::max();
  std::size_t serve_orders = 4;
};

/**
   Sparse routing substrate: every template edge ab is realised by an
   edge-disjoint a-b path through V in the host (its replacement path).
 */
struct Skeleton {
  EdgeSubset edges;
  VertexSet through;
  SkeletonKnobs knobs;
  Graph template_graph;
  std::size_t template_attempts = 0;
  /// Indexed by template edge id; oriented from its lower to its higher end.
  std::vector<std::optional<Path>> replacement;
  std::size_t routed = 0;
  std::size_t failed = 0;
  bool budget_hit = false;
};

/**
   Routes each template edge (seeded order) as a shortest through-V path of
   length <= ell_route in `allowed` edges of g, disjoint from earlier ones.
   Template edges that cannot be routed within the budget stay unrealised.
 */
inline Skeleton build_skeleton(const Graph &g, const VertexSet &V, const SkeletonKnobs &k,
                               std::uint64_t seed, const EdgeSubset &allowed = EdgeSubset()) {
  g.require(V, "build_skeleton V");
  g.require(allowed, "build_skeleton allowed");
  Skeleton sk;
  sk.knobs = k;
  sk.through = V;
  sk.edges = EdgeSubset(g.m());
  if (g.n() < 2) {
    sk.template_graph = Graph(g.n(), {});
    return sk;
  }
  Template tp = make_template(g.n(), k.template_p, derive_seed(seed, 1), k.template_degree_cap);
  sk.template_graph = std::move(tp.graph);
  sk.template_attempts = tp.attempts;
  sk.replacement.assign(sk.template_graph.m(), std::nullopt);
  std::vector<EdgeId> order(sk.template_graph.m());
  for (EdgeId e = 0; e < order.size(); ++e)
    order[e] = e;
  Rng rng(derive_seed(seed, 2));
  rng.shuffle(order);
  const bool restricted = allowed.universe() != 0;
  PathFinder finder(g);
  for (EdgeId te : order) {
    const Edge &ab = sk.template_graph.edge(te);
    auto p = finder.shortest(ab.u, ab.v, V, k.ell_route, [&](EdgeId e) {
      return sk.edges.contains(e) || (restricted && !allowed.contains(e));
    });
    if (!p) {
      ++sk.failed;
      continue;
    }
    if (sk.edges.size() + p->length() > k.edge_budget) {
      sk.budget_hit = true;
      ++sk.failed;
      continue;
    }
    for (EdgeId e : p->edges)
      sk.edges.insert(e);
    sk.replacement[te] = std::move(p);
    ++sk.routed;
  }
  return sk;
}

/**
   Serves a batch with the skeleton: route in the template through V, swap
   each template edge for its replacement path, shortcut the walk; pairs the
   template cannot serve are routed directly inside the free skeleton edges.
   `free_edges` (skeleton edges still available) is updated.
 */
inline RouteResult route_via_skeleton(const Graph &g, const Skeleton &sk, const PairBatch &b,
                                      EdgeSubset &free_edges, std::uint64_t seed) {
  b.validate(g);
  RouteResult out;
  out.paths.assign(b.pairs.size(), std::nullopt);
  const std::size_t cap = sk.knobs.ell_template * sk.knobs.ell_route;

  if (sk.template_graph.n() == g.n() && sk.template_graph.m() > 0) {
    EdgeSubset realised(sk.template_graph.m());
    for (EdgeId te = 0; te < sk.template_graph.m(); ++te)
      if (sk.replacement[te]) {
        bool ok = std::all_of(sk.replacement[te]->edges.begin(), sk.replacement[te]->edges.end(),
                              [&](EdgeId e) { return free_edges.contains(e); });
        if (ok)
          realised.insert(te);
      }
    RouteOptions ro;
    ro.seed = derive_seed(seed, 3);
    ro.max_orders = sk.knobs.serve_orders;
    ro.allowed = realised;
    PairBatch tb{b.pairs, std::max(b.t, std::size_t{1})};
    auto tr = route_pairs(sk.template_graph, tb, sk.through, sk.knobs.ell_template, ro);
    for (std::size_t i = 0; i < b.pairs.size(); ++i) {
      if (!tr.paths[i])
        continue;
      const Path &tp = *tr.paths[i];
      std::vector<Vertex> wv{tp.vertices.front()};
      std::vector<EdgeId> we;
      for (std::size_t j = 0; j < tp.edges.size(); ++j) {
        const Path &rep = *sk.replacement[tp.edges[j]];
        if (rep.front() == tp.vertices[j]) {
          wv.insert(wv.end(), rep.vertices.begin() + 1, rep.vertices.end());
          we.insert(we.end(), rep.edges.begin(), rep.edges.end());
        } else {
          wv.insert(wv.end(), rep.vertices.rbegin() + 1, rep.vertices.rend());
          we.insert(we.end(), rep.edges.rbegin(), rep.edges.rend());
        }
      }
      Path p = shortcut_walk(wv, we);
      if (p.length() > cap)
        continue;
      out.paths[i] = std::move(p);
    }
    for (const auto &p : out.paths)
      if (p)
        for (EdgeId e : p->edges)
          free_edges.erase(e);
  }

  PathFinder finder(g);
  for (std::size_t i = 0; i < b.pairs.size(); ++i) {
    if (out.paths[i])
      continue;
    auto p = finder.shortest(b.pairs[i].first, b.pairs[i].second, sk.through, cap,
                             [&](EdgeId e) { return !free_edges.contains(e); });
    if (!p)
      continue;
    for (EdgeId e : p->edges)
      free_edges.erase(e);
    out.paths[i] = std::move(p);
  }
  for (std::size_t i = 0; i < b.pairs.size(); ++i)
    if (!out.paths[i])
      out.stuck.push_back(i);
  out.ok = out.stuck.empty();
  out.orders_tried = 1;
  return out;
}

struct SubsetExpansionKnobs {
  double tau = 4;
  std::size_t radius = 0; ///< 0: ceil(log n)
  double through_p = 1.0 / 3;
  double adversarial_budget = 1.0; ///< |F| <= factor |U|; 0 disables F
};

struct SubsetExpansionStats {
  std::size_t trials = 0;
  std::size_t skipped = 0; ///< empty core
  std::size_t successes = 0;
  /// (|U|, |F|) -> (trials, successes)
  std::map<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>> buckets;
  double rate() const {
    std::size_t done = trials - skipped;
    return done ? static_cast<double>(successes) / static_cast<double>(done) : 0.0;
  }
};

/**
   Monte-Carlo: V random with probability through_p, U the well-expanding
   core of a random subset, F the worst frontier for budget |U|; success
   when the ball of the given radius around U through V in G-F covers more
   than half of V.
 */
inline SubsetExpansionStats verify_random_subset_expansion(const Graph &g, const ExpanderParams &p,
                                                           std::size_t trials,
                                                           const SubsetExpansionKnobs &k,
                                                           std::uint64_t seed) {
  p.validate();
  SubsetExpansionStats st;
  const std::size_t n = g.n();
  const std::size_t kmax = max_subset_size(n);
  const std::size_t radius =
      k.radius ? k.radius
               : static_cast<std::size_t>(std::max(1.0, std::ceil(lg(static_cast<double>(n)))));
  for (std::size_t t = 0; t < trials; ++t) {
    ++st.trials;
    Rng rng(derive_seed(seed, 0x4a1, t));
    if (kmax == 0) {
      ++st.skipped;
      continue;
    }
    VertexSet V(n);
    for (Vertex v = 0; v < n; ++v)
      if (rng.bernoulli(k.through_p))
        V.insert(v);
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v)
      all[v] = v;
    rng.shuffle(all);
    std::size_t size = 1 + rng.below(kmax);
    VertexSet U0(n);
    for (std::size_t i = 0; i < size; ++i)
      U0.insert(all[i]);
    VertexSet U = extract_well_expanding_core(g, U0, k.tau);
    if (U.empty()) {
      ++st.skipped;
      continue;
    }
    EdgeSubset F(g.m());
    if (k.adversarial_budget > 0) {
      auto b = static_cast<std::size_t>(k.adversarial_budget * static_cast<double>(U.size()));
      F = worst_case_frontier(g, U, b).F;
    }
    VertexSet B = ball(g, U, V, radius, F);
    bool ok = 2 * B.size() > V.size();
    st.successes += ok;
    auto &bucket = st.buckets[{U.size(), F.size()}];
    ++bucket.first;
    bucket.second += ok;
  }
  return st;
}

} // namespace egd
