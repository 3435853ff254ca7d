#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "expansion.hpp"
#include "graph.hpp"
#include "random.hpp"

namespace egd {

/// A vertex/edge selection of the host graph.
struct ExpanderPart {
  VertexSet vertices;
  EdgeSubset edges;
  /// Exhaustively certified (part small enough); otherwise heuristic only.
  bool certified = false;
};

struct AlmostDecomposition {
  std::vector<ExpanderPart> parts;
  EdgeSubset removed;
  std::size_t violations = 0;
  std::size_t max_depth = 0;
  std::size_t vertex_total = 0;
  bool vertex_bound_ok = true;  ///< sum of part sizes <= 2n
  bool removed_bound_ok = true; ///< |removed| <= 4 s n log n
};

/**
   Recursive splitting: while a part has a violating (U, F), replace it by
   G1 = G[U + N_{G-F}(U)] - F and G2 = G - U - E(G1) - F, and move F to the
   removed set. Violations are searched heuristically first and
   exhaustively for parts under the cap.
 */
inline AlmostDecomposition almost_decompose_into_expanders(const Graph &g, const ExpanderParams &p,
                                                           const CertifyOptions &opt = {}) {
  p.validate();
  AlmostDecomposition out;
  out.removed = EdgeSubset(g.m());
  struct Item {
    VertexSet vertices;
    EdgeSubset edges;
    std::size_t depth;
  };
  std::vector<Item> stack;
  stack.push_back({VertexSet::full(g.n()), EdgeSubset::full(g.m()), 0});
  std::uint64_t step = 0;
  while (!stack.empty()) {
    Item it = std::move(stack.back());
    stack.pop_back();
    out.max_depth = std::max(out.max_depth, it.depth);
    Subgraph sub = extract(g, it.vertices, it.edges);
    const Graph &h = sub.graph;
    CertifyOptions local = opt;
    local.seed = derive_seed(opt.seed, 0xad, step++);
    std::optional<Violation> viol;
    bool certified = false;
    if (h.n() >= 2) {
      auto heur = certify_expander(h, p, CertifyMode::Heuristic, local);
      if (!heur.is_expander) {
        viol = std::move(heur.violation);
      } else if (h.n() <= opt.exhaustive_cap && h.n() <= 30) {
        auto ex = certify_expander(h, p, CertifyMode::Exhaustive, local);
        certified = ex.is_expander;
        if (!ex.is_expander)
          viol = std::move(ex.violation);
      }
    } else {
      certified = true;
    }
    if (!viol) {
      out.parts.push_back({std::move(it.vertices), std::move(it.edges), certified});
      continue;
    }
    ++out.violations;
    const VertexSet &U = viol->U;
    const EdgeSubset &F = viol->F;
    VertexSet N = neighborhood(h, U, F);
    VertexSet v1(g.n()), v2(g.n());
    EdgeSubset e1(g.m()), e2(g.m());
    for (Vertex v = 0; v < h.n(); ++v) {
      if (U.contains(v) || N.contains(v))
        v1.insert(sub.to_host_vertex[v]);
      if (!U.contains(v))
        v2.insert(sub.to_host_vertex[v]);
    }
    for (EdgeId e = 0; e < h.m(); ++e) {
      const Edge &ed = h.edge(e);
      EdgeId host = sub.to_host_edge[e];
      if (F.contains(e)) {
        out.removed.insert(host);
        continue;
      }
      bool in1a = U.contains(ed.u) || N.contains(ed.u);
      bool in1b = U.contains(ed.v) || N.contains(ed.v);
      if (in1a && in1b)
        e1.insert(host);
      else
        e2.insert(host);
    }
    if (v1.size() == h.n() && e1.size() == h.m()) {
      // no progress possible: keep the part whole
      out.parts.push_back({std::move(it.vertices), std::move(it.edges), false});
      continue;
    }
    stack.push_back({std::move(v2), std::move(e2), it.depth + 1});
    stack.push_back({std::move(v1), std::move(e1), it.depth + 1});
  }
  for (const auto &part : out.parts)
    out.vertex_total += part.vertices.size();
  out.vertex_bound_ok = out.vertex_total <= 2 * g.n();
  out.removed_bound_ok = static_cast<double>(out.removed.size()) <=
                         4.0 * p.s * static_cast<double>(g.n()) * lg(static_cast<double>(g.n())) +
                             1e-9;
  return out;
}

struct SplitOptions {
  std::size_t retry_cap = 32;
  bool verify = true;
  CertifyOptions certify;
};

struct SplitResult {
  std::vector<EdgeSubset> parts;
  std::size_t attempts = 0;
  bool verified = false;
  /// Parameters each part was checked against: (epsilon/4, s').
  ExpanderParams relaxed;
  std::optional<std::size_t> failing_part;
  /// Violation in the failing class; F holds host edge ids.
  std::optional<Violation> witness;
};

/// (epsilon/4, sqrt(s epsilon) / (8 k log n)).
inline ExpanderParams relaxed_split_params(const ExpanderParams &p, std::size_t k, std::size_t n) {
  ExpanderParams r = p;
  r.epsilon = p.epsilon / 4;
  const double logn = std::max(1.0, lg(static_cast<double>(n)));
  r.s = std::sqrt(p.s * p.epsilon) / (8.0 * static_cast<double>(k) * logn);
  if (!std::isfinite(r.s))
    r.s = static_cast<double>(std::max<std::size_t>(1, n * n));
  return r;
}

/**
   Colours every edge uniformly with one of k colours and checks each colour
   class on all of V(G) against the relaxed parameters, resampling up to the
   retry cap. On failure the last sample is returned with its witness.
 */
inline SplitResult split_expander_edges(const Graph &g, const ExpanderParams &p, std::size_t k,
                                        std::uint64_t seed, const SplitOptions &opt = {}) {
  if (k == 0)
    throw InputError("split_expander_edges: k must be positive");
  p.validate();
  SplitResult r;
  r.relaxed = relaxed_split_params(p, k, g.n());
  const std::size_t tries = std::max<std::size_t>(1, opt.retry_cap);
  for (std::size_t attempt = 0; attempt < tries; ++attempt) {
    r.attempts = attempt + 1;
    Rng rng(derive_seed(seed, 0x5b17, attempt));
    r.parts.assign(k, EdgeSubset(g.m()));
    for (EdgeId e = 0; e < g.m(); ++e)
      r.parts[k == 1 ? 0 : rng.below(k)].insert(e);
    r.failing_part.reset();
    r.witness.reset();
    if (k == 1 || !opt.verify) {
      r.verified = k == 1;
      return r;
    }
    bool all = true;
    for (std::size_t i = 0; i < k && all; ++i) {
      Subgraph part = edge_subgraph(g, r.parts[i]);
      CertifyOptions co = opt.certify;
      co.seed = derive_seed(seed, attempt, i);
      auto verdict = certify_auto(part.graph, r.relaxed, co);
      if (!verdict.is_expander) {
        all = false;
        r.failing_part = i;
        if (verdict.violation) {
          Violation w;
          w.U = verdict.violation->U;
          w.F = EdgeSubset(g.m());
          for (EdgeId e = 0; e < part.graph.m(); ++e)
            if (verdict.violation->F.contains(e))
              w.F.insert(part.to_host_edge[e]);
          w.survivors = verdict.violation->survivors;
          w.threshold = verdict.violation->threshold;
          r.witness = std::move(w);
        }
      }
    }
    if (all) {
      r.verified = true;
      return r;
    }
  }
  return r;
}

} // namespace egd
