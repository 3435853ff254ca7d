#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "graph.hpp"
#include "random.hpp"

namespace egd {

/// Base-2 logarithm, 0 for n <= 1.
inline double lg(double n) { return n <= 1.0 ? 0.0 : std::log2(n); }

enum class Denominator { LogSquared, Constant };

/**
   (epsilon, s) expansion contract: every U with 1 <= |U| <= 2n/3 keeps
   |N_{G-F}(U)| >= epsilon |U| / denom(n) for all F with |F| <= s |U|.
 */
struct ExpanderParams {
  double epsilon = 1.0 / 32;
  double s = 1.0;
  Denominator denominator = Denominator::LogSquared;
  double denominator_constant = 1.0;

  /// LogSquared: max(1, log^2 n).
  double denom(std::size_t n) const {
    if (denominator == Denominator::Constant)
      return denominator_constant;
    return std::max(1.0, lg(static_cast<double>(n)) * lg(static_cast<double>(n)));
  }

  /// ceil(epsilon |U| / denom(n)); a neighbourhood below this violates.
  std::size_t threshold(std::size_t n, std::size_t u) const {
    double x = epsilon * static_cast<double>(u) / denom(n);
    return static_cast<std::size_t>(std::ceil(x - 1e-9));
  }

  /// floor(s |U|), clamped to m so huge s stays finite.
  std::size_t budget(std::size_t u, std::size_t m) const {
    double b = s * static_cast<double>(u);
    if (!(b < static_cast<double>(m)))
      return m;
    return static_cast<std::size_t>(std::floor(b + 1e-9));
  }

  void validate() const {
    if (!(epsilon > 0.0 && epsilon <= 1.0))
      throw InputError("epsilon must lie in (0, 1]");
    if (!(s >= 0.0))
      throw InputError("s must be nonnegative");
    if (denominator == Denominator::Constant && !(denominator_constant > 0.0))
      throw InputError("denominator constant must be positive");
  }
};

inline std::size_t max_subset_size(std::size_t n) { return (2 * n) / 3; }

struct Frontier {
  EdgeSubset F;
  VertexSet survivors;
};

/**
   Minimises |N_{G-F}(U)| over |F| <= budget: removing a neighbour costs all
   of its edges into U, so neighbours are deleted cheapest first (ties by
   lowest id) while the budget lasts.

   Time complexity: O(vol(U) + |N(U)| log |N(U)|)
 */
inline Frontier worst_case_frontier(const Graph &g, const VertexSet &U, std::size_t budget) {
  g.require(U, "worst_case_frontier U");
  std::vector<std::size_t> cost(g.n(), 0);
  std::vector<Vertex> nbrs;
  for (Vertex u = 0; u < g.n(); ++u) {
    if (!U.contains(u))
      continue;
    for (const auto &inc : g.adj(u))
      if (!U.contains(inc.to) && cost[inc.to]++ == 0)
        nbrs.push_back(inc.to);
  }
  std::sort(nbrs.begin(), nbrs.end(), [&](Vertex a, Vertex b) {
    return cost[a] != cost[b] ? cost[a] < cost[b] : a < b;
  });
  Frontier out{EdgeSubset(g.m()), VertexSet(g.n())};
  std::size_t left = budget, i = 0;
  for (; i < nbrs.size() && cost[nbrs[i]] <= left; ++i) {
    Vertex v = nbrs[i];
    left -= cost[v];
    for (const auto &inc : g.adj(v))
      if (U.contains(inc.to))
        out.F.insert(inc.edge);
  }
  for (; i < nbrs.size(); ++i)
    out.survivors.insert(nbrs[i]);
  return out;
}

struct Violation {
  VertexSet U;
  EdgeSubset F;
  std::size_t survivors = 0;
  std::size_t threshold = 0;
};

struct ExpanderVerdict {
  bool is_expander = true;
  /// True only for exhaustive verdicts.
  bool certified = false;
  std::optional<Violation> violation;
  std::size_t subsets_checked = 0;
};

/// Re-evaluates a witness from scratch.
inline bool confirm_violation(const Graph &g, const ExpanderParams &p, const Violation &v,
                              std::string *why = nullptr) {
  auto fail = [&](const char *msg) {
    if (why)
      *why = msg;
    return false;
  };
  if (v.U.universe() != g.n() || v.F.universe() != g.m())
    return fail("witness universes do not match the graph");
  const std::size_t u = v.U.size();
  if (u < 1 || u > max_subset_size(g.n()))
    return fail("|U| outside 1..2n/3");
  if (static_cast<double>(v.F.size()) > p.s * static_cast<double>(u) + 1e-9)
    return fail("|F| exceeds s|U|");
  std::size_t left = neighborhood(g, v.U, v.F).size();
  if (left >= p.threshold(g.n(), u))
    return fail("neighbourhood meets the threshold");
  return true;
}

enum class CertifyMode { Exhaustive, Heuristic };

struct CertifyOptions {
  std::size_t exhaustive_cap = 20;
  std::size_t heuristic_seeds = 2;
  std::uint64_t seed = 1;
};

namespace detail {

inline Violation make_violation(const Graph &g, const ExpanderParams &p, const VertexSet &U) {
  auto fr = worst_case_frontier(g, U, p.budget(U.size(), g.m()));
  Violation v{U, std::move(fr.F), fr.survivors.size(), p.threshold(g.n(), U.size())};
  return v;
}

/**
   All U of size 1..2n/3 in order (size, bitmask value); returns the first
   violating mask.
 */
inline std::optional<std::uint32_t> exhaustive_first_violation(const Graph &g,
                                                               const ExpanderParams &p,
                                                               std::size_t &checked) {
  const std::size_t n = g.n();
  std::vector<std::uint32_t> adj(n, 0);
  for (const auto &e : g.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  const std::size_t kmax = max_subset_size(n);
  std::vector<std::size_t> bucket(n + 1);
  for (std::size_t k = 1; k <= kmax; ++k) {
    const std::size_t thr = p.threshold(n, k);
    const std::size_t budget = p.budget(k, g.m());
    const std::uint32_t last = (n == 32) ? 0xffffffffu : ((1u << n) - 1);
    std::uint32_t mask = (k == 32) ? 0xffffffffu : ((1u << k) - 1);
    while (true) {
      ++checked;
      std::uint32_t nb = 0;
      for (std::uint32_t rest = mask; rest; rest &= rest - 1)
        nb |= adj[std::countr_zero(rest)];
      nb &= ~mask;
      std::size_t surv = static_cast<std::size_t>(std::popcount(nb));
      if (budget > 0 && surv > 0) {
        std::fill(bucket.begin(), bucket.end(), 0);
        for (std::uint32_t rest = nb; rest; rest &= rest - 1)
          ++bucket[static_cast<std::size_t>(std::popcount(adj[std::countr_zero(rest)] & mask))];
        std::size_t left = budget;
        for (std::size_t c = 1; c <= n && surv > 0; ++c) {
          std::size_t take = std::min(bucket[c], left / c);
          surv -= take;
          left -= take * c;
          if (take < bucket[c])
            break;
        }
      }
      if (surv < thr)
        return mask;
      if (mask == (last & ~((1u << (n - k)) - 1)) || mask == last)
        break;
      // next subset of the same popcount (Gosper)
      std::uint32_t c = mask & (~mask + 1);
      std::uint32_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
  return std::nullopt;
}

/// Worst-case survivor count for a membership vector, with a per-call scratch.
struct Evaluator {
  const Graph &g;
  std::vector<std::size_t> cost;
  std::vector<Vertex> touched;
  explicit Evaluator(const Graph &graph) : g(graph), cost(graph.n(), 0) {}

  std::size_t survivors(const std::vector<std::uint8_t> &inU, const std::vector<Vertex> &members,
                        std::size_t budget) {
    touched.clear();
    for (Vertex u : members)
      for (const auto &inc : g.adj(u))
        if (!inU[inc.to] && cost[inc.to]++ == 0)
          touched.push_back(inc.to);
    std::vector<std::size_t> costs;
    costs.reserve(touched.size());
    for (Vertex v : touched) {
      costs.push_back(cost[v]);
      cost[v] = 0;
    }
    std::sort(costs.begin(), costs.end());
    std::size_t left = budget, i = 0;
    while (i < costs.size() && costs[i] <= left)
      left -= costs[i++];
    return costs.size() - i;
  }
};

inline std::optional<Violation> heuristic_violation(const Graph &g, const ExpanderParams &p,
                                                    const CertifyOptions &opt) {
  const std::size_t n = g.n();
  const std::size_t kmax = max_subset_size(n);
  if (kmax == 0)
    return std::nullopt;
  auto as_set = [&](const std::vector<Vertex> &members) {
    return VertexSet::of(n, members);
  };

  // disconnected: the smallest component has no neighbours at all
  std::size_t ncomp = 0;
  auto label = components(g, &ncomp);
  if (ncomp > 1) {
    std::vector<std::size_t> size(ncomp, 0);
    for (auto l : label)
      ++size[l];
    std::size_t best = 0;
    for (std::size_t c = 1; c < ncomp; ++c)
      if (size[c] < size[best])
        best = c;
    std::vector<Vertex> members;
    for (Vertex v = 0; v < n; ++v)
      if (label[v] == best)
        members.push_back(v);
    if (members.size() <= kmax && p.threshold(n, members.size()) > 0)
      return make_violation(g, p, as_set(members));
  }

  // singletons: each neighbour costs one edge
  for (Vertex v = 0; v < n; ++v) {
    std::size_t b = p.budget(1, g.m());
    std::size_t surv = g.degree(v) > b ? g.degree(v) - b : 0;
    if (surv < p.threshold(n, 1))
      return make_violation(g, p, VertexSet::of(n, {v}));
  }

  std::vector<Vertex> seeds;
  {
    Vertex lo = 0;
    for (Vertex v = 1; v < n; ++v)
      if (g.degree(v) < g.degree(lo))
        lo = v;
    seeds.push_back(lo);
    Rng rng(derive_seed(opt.seed, 0x5eed));
    for (std::size_t i = 0; i < opt.heuristic_seeds && seeds.size() < n; ++i) {
      Vertex c = static_cast<Vertex>(rng.below(n));
      if (std::find(seeds.begin(), seeds.end(), c) == seeds.end())
        seeds.push_back(c);
    }
  }

  Evaluator eval(g);
  std::vector<std::uint8_t> inU(n, 0);

  // breadth-first sweeps
  for (Vertex s : seeds) {
    std::fill(inU.begin(), inU.end(), 0);
    std::vector<Vertex> members{s};
    inU[s] = 1;
    std::size_t layer_begin = 0;
    while (members.size() <= kmax) {
      if (eval.survivors(inU, members, p.budget(members.size(), g.m())) <
          p.threshold(n, members.size()))
        return make_violation(g, p, as_set(members));
      std::size_t layer_end = members.size();
      for (std::size_t i = layer_begin; i < layer_end; ++i)
        for (const auto &inc : g.adj(members[i]))
          if (!inU[inc.to]) {
            inU[inc.to] = 1;
            members.push_back(inc.to);
          }
      if (members.size() == layer_end)
        break;
      layer_begin = layer_end;
    }
  }

  // greedy growth: absorb the frontier vertex with most edges into U
  std::vector<std::size_t> cnt(n, 0);
  for (Vertex s : seeds) {
    std::fill(inU.begin(), inU.end(), 0);
    std::fill(cnt.begin(), cnt.end(), 0);
    std::set<std::pair<std::int64_t, Vertex>> frontier;
    std::vector<Vertex> members;
    std::size_t boundary = 0;
    Vertex next = s;
    while (members.size() < kmax) {
      Vertex v = next;
      if (cnt[v] > 0) {
        frontier.erase({-static_cast<std::int64_t>(cnt[v]), v});
        boundary -= cnt[v];
      }
      inU[v] = 1;
      members.push_back(v);
      for (const auto &inc : g.adj(v)) {
        Vertex w = inc.to;
        if (inU[w])
          continue;
        if (cnt[w] > 0)
          frontier.erase({-static_cast<std::int64_t>(cnt[w]), w});
        ++cnt[w];
        ++boundary;
        frontier.insert({-static_cast<std::int64_t>(cnt[w]), w});
      }
      const std::size_t k = members.size();
      const std::size_t budget = p.budget(k, g.m());
      const std::size_t thr = p.threshold(n, k);
      bool maybe = boundary <= budget;
      if (!maybe) {
        std::size_t lower = frontier.size() > budget ? frontier.size() - budget : 1;
        maybe = std::max<std::size_t>(lower, 1) < thr;
      }
      if (maybe && eval.survivors(inU, members, budget) < thr)
        return make_violation(g, p, as_set(members));
      if (frontier.empty())
        break;
      next = frontier.begin()->second;
    }
  }
  return std::nullopt;
}

} // namespace detail

/**
   Exhaustive mode enumerates every U (n <= cap) and is a certificate.
   Heuristic mode searches components, singletons, breadth-first sweeps and
   greedy growth from low-degree and random seeds; "no violation found" is
   not a certificate.
 */
inline ExpanderVerdict certify_expander(const Graph &g, const ExpanderParams &p, CertifyMode mode,
                                        const CertifyOptions &opt = {}) {
  p.validate();
  ExpanderVerdict v;
  if (mode == CertifyMode::Exhaustive) {
    if (g.n() > opt.exhaustive_cap || g.n() > 30)
      throw CapacityError("exhaustive certification limited to n <= " +
                          std::to_string(std::min<std::size_t>(opt.exhaustive_cap, 30)) +
                          ", got n = " + std::to_string(g.n()));
    v.certified = true;
    if (g.n() < 2)
      return v;
    auto mask = detail::exhaustive_first_violation(g, p, v.subsets_checked);
    if (mask) {
      VertexSet U(g.n());
      for (Vertex i = 0; i < g.n(); ++i)
        if ((*mask >> i) & 1u)
          U.insert(i);
      v.is_expander = false;
      v.violation = detail::make_violation(g, p, U);
    }
    return v;
  }
  auto found = detail::heuristic_violation(g, p, opt);
  if (found) {
    v.is_expander = false;
    v.violation = std::move(found);
  }
  return v;
}

/// Exhaustive when n fits under the cap, heuristic otherwise.
inline ExpanderVerdict certify_auto(const Graph &g, const ExpanderParams &p,
                                    const CertifyOptions &opt = {}) {
  if (g.n() <= opt.exhaustive_cap && g.n() <= 30) {
    auto h = certify_expander(g, p, CertifyMode::Heuristic, opt);
    if (!h.is_expander)
      return h;
    return certify_expander(g, p, CertifyMode::Exhaustive, opt);
  }
  return certify_expander(g, p, CertifyMode::Heuristic, opt);
}

enum class DichotomyCase { WellExpanding, RobustNeighborhood, Neither };

struct DichotomyOutcome {
  DichotomyCase which = DichotomyCase::Neither;
  std::size_t neighborhood_size = 0;
  /// s|U| / (2d)
  double well_expanding_bound = 0;
  VertexSet robust;
  /// ceil(epsilon |U| / denom(n))
  std::size_t robust_bound = 0;
};

/**
   For |U| <= 2n/3, |F| <= s|U|/2 and 0 < d <= s, either
   |N_{G-F}(U)| >= s|U|/(2d) or |N_{G-F,d}(U)| >= epsilon|U|/denom(n) holds on
   an (epsilon, s)-expander. Reports the first that holds, or Neither.
 */
inline DichotomyOutcome check_dichotomy(const Graph &g, const ExpanderParams &p,
                                        const VertexSet &U, const EdgeSubset &F, std::size_t d) {
  p.validate();
  g.require(U, "check_dichotomy U");
  g.require(F, "check_dichotomy F");
  const double u = static_cast<double>(U.size());
  if (3 * U.size() > 2 * g.n())
    throw InputError("check_dichotomy: |U| exceeds 2n/3");
  if (static_cast<double>(F.size()) > p.s * u / 2 + 1e-9)
    throw InputError("check_dichotomy: |F| exceeds s|U|/2");
  if (d == 0 || static_cast<double>(d) > p.s + 1e-9)
    throw InputError("check_dichotomy: need 0 < d <= s");
  DichotomyOutcome out;
  out.neighborhood_size = neighborhood(g, U, F).size();
  out.well_expanding_bound = p.s * u / (2.0 * static_cast<double>(d));
  out.robust = robust_neighborhood(g, U, F, d);
  out.robust_bound = p.threshold(g.n(), U.size());
  if (static_cast<double>(out.neighborhood_size) * 2.0 * static_cast<double>(d) >= p.s * u)
    out.which = DichotomyCase::WellExpanding;
  else if (out.robust.size() >= out.robust_bound)
    out.which = DichotomyCase::RobustNeighborhood;
  return out;
}

struct StarKnobs {
  std::size_t star_count_target = 1;
  std::size_t leaves = 4;
  std::size_t d_min = 2;
  std::size_t delta_max = 8;
};

struct Star {
  Vertex center;
  std::vector<Vertex> leaves;
  std::vector<EdgeId> edges;
};

enum class StarsOrBipartiteCase { Stars, Bipartite };

struct StarsOrBipartite {
  StarsOrBipartiteCase which = StarsOrBipartiteCase::Bipartite;
  std::vector<Star> stars;
  /// Bipartite case: edges of H between U and X.
  EdgeSubset H;
  VertexSet X;
  /// Bipartite case with X empty.
  bool degenerate = false;
};

/**
   Phase one collects vertex-disjoint stars (centre in U, `leaves` leaves
   outside U, edges of G-F) greedily in ascending id order. If that reaches
   the target the stars are returned; otherwise every vertex outside U, in
   ascending order, is attached by d_min edges into U whenever the U-side
   degrees of H stay within delta_max.
 */
inline StarsOrBipartite find_stars_or_bipartite(const Graph &g, const ExpanderParams &p,
                                                const VertexSet &U, const EdgeSubset &F,
                                                const StarKnobs &k) {
  g.require(U, "find_stars_or_bipartite U");
  g.require(F, "find_stars_or_bipartite F");
  if (3 * U.size() > 2 * g.n())
    throw InputError("find_stars_or_bipartite: |U| exceeds 2n/3");
  if (static_cast<double>(F.size()) > p.s * static_cast<double>(U.size()) / 4 + 1e-9)
    throw InputError("find_stars_or_bipartite: |F| exceeds s|U|/4");
  StarsOrBipartite out;
  out.H = EdgeSubset(g.m());
  out.X = VertexSet(g.n());

  std::vector<std::uint8_t> leaf_used(g.n(), 0);
  if (k.leaves > 0) {
    for (Vertex c = 0; c < g.n(); ++c) {
      if (!U.contains(c))
        continue;
      Star st{c, {}, {}};
      for (const auto &inc : g.adj(c)) {
        if (st.leaves.size() == k.leaves)
          break;
        if (U.contains(inc.to) || F.contains(inc.edge) || leaf_used[inc.to])
          continue;
        st.leaves.push_back(inc.to);
        st.edges.push_back(inc.edge);
      }
      if (st.leaves.size() == k.leaves) {
        for (Vertex l : st.leaves)
          leaf_used[l] = 1;
        out.stars.push_back(std::move(st));
      }
    }
  }
  if (!out.stars.empty() && out.stars.size() >= k.star_count_target) {
    out.which = StarsOrBipartiteCase::Stars;
    return out;
  }
  out.stars.clear();
  out.which = StarsOrBipartiteCase::Bipartite;
  std::vector<std::size_t> hdeg(g.n(), 0);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (U.contains(v) || k.d_min == 0)
      continue;
    std::vector<Incidence> room;
    for (const auto &inc : g.adj(v))
      if (U.contains(inc.to) && !F.contains(inc.edge) && hdeg[inc.to] < k.delta_max)
        room.push_back(inc);
    if (room.size() < k.d_min)
      continue;
    std::stable_sort(room.begin(), room.end(), [&](const Incidence &a, const Incidence &b) {
      return hdeg[a.to] < hdeg[b.to];
    });
    for (std::size_t i = 0; i < k.d_min; ++i) {
      ++hdeg[room[i].to];
      out.H.insert(room[i].edge);
    }
    out.X.insert(v);
  }
  out.degenerate = out.X.empty();
  return out;
}

/// Structural check of a StarsOrBipartite result against its knobs.
inline bool check_stars_or_bipartite(const Graph &g, const VertexSet &U, const EdgeSubset &F,
                                     const StarKnobs &k, const StarsOrBipartite &r,
                                     std::string *why = nullptr) {
  auto fail = [&](const char *msg) {
    if (why)
      *why = msg;
    return false;
  };
  if (r.which == StarsOrBipartiteCase::Stars) {
    std::vector<std::uint8_t> used(g.n(), 0);
    for (const auto &st : r.stars) {
      if (!U.contains(st.center))
        return fail("star centre outside U");
      if (st.leaves.size() < k.leaves || st.edges.size() != st.leaves.size())
        return fail("star has too few leaves");
      if (used[st.center]++)
        return fail("stars overlap");
      for (std::size_t i = 0; i < st.leaves.size(); ++i) {
        Vertex l = st.leaves[i];
        if (U.contains(l))
          return fail("star leaf inside U");
        if (used[l]++)
          return fail("stars overlap");
        EdgeId e = st.edges[i];
        if (F.contains(e) || g.other(e, st.center) != l ||
            (g.edge(e).u != st.center && g.edge(e).v != st.center))
          return fail("star edge invalid or in F");
      }
    }
    return true;
  }
  std::vector<std::size_t> deg(g.n(), 0);
  for (EdgeId e = 0; e < g.m(); ++e) {
    if (!r.H.contains(e))
      continue;
    if (F.contains(e))
      return fail("H uses an edge of F");
    Vertex a = g.edge(e).u, b = g.edge(e).v;
    bool ok = (U.contains(a) && r.X.contains(b)) || (U.contains(b) && r.X.contains(a));
    if (!ok)
      return fail("H edge not between U and X");
    ++deg[a];
    ++deg[b];
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    if (r.X.contains(v) && deg[v] < k.d_min)
      return fail("X vertex below d_min");
    if (U.contains(v) && deg[v] > k.delta_max)
      return fail("U vertex above delta_max");
  }
  return true;
}

/**
   Greedy single-vertex growth of U' inside U, accepting v whenever
   |N(U' + v)| >= (|U'| + 1) tau, until no single addition qualifies.
 */
inline VertexSet extract_well_expanding_core(const Graph &g, const VertexSet &U, double tau) {
  g.require(U, "extract_well_expanding_core U");
  VertexSet core(g.n());
  std::vector<std::size_t> into(g.n(), 0); // neighbours inside the core
  std::size_t nsize = 0;
  bool grew = true;
  while (grew) {
    grew = false;
    for (Vertex v = 0; v < g.n(); ++v) {
      if (!U.contains(v) || core.contains(v))
        continue;
      std::size_t candidate = nsize - (into[v] > 0 ? 1 : 0);
      for (const auto &inc : g.adj(v))
        if (!core.contains(inc.to) && into[inc.to] == 0)
          ++candidate;
      if (static_cast<double>(candidate) + 1e-9 <
          static_cast<double>(core.size() + 1) * tau)
        continue;
      core.insert(v);
      nsize = candidate;
      for (const auto &inc : g.adj(v))
        ++into[inc.to];
      grew = true;
    }
  }
  return core;
}

} // namespace egd
