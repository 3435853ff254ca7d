#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "connectivity.hpp"
#include "decomposition.hpp"
#include "expander_decomposer.hpp"
#include "expansion.hpp"
#include "graph.hpp"
#include "paths_cycles.hpp"
#include "random.hpp"

namespace egd {

/// Least k >= 0 with log2 applied k times to n giving at most 1.
inline std::size_t log_star(std::size_t n) {
  std::size_t k = 0;
  for (double x = static_cast<double>(n); x > 1.0; x = std::log2(x))
    ++k;
  return k;
}

enum class Preset { Engineering, Paper };

/**
   Every knob of the pipeline. Zero-valued skeleton knobs are resolved per
   graph size by `resolve_skeleton`.
 */
struct PipelineConfig {
  Preset preset = Preset::Engineering;
  ExpanderParams expander;
  double tau = 4;
  std::size_t exhaustive_cap = 16;
  std::size_t heuristic_seeds = 2;
  std::size_t size_floor = 24;
  std::size_t split_retries = 4;
  bool split_verify = true;
  std::size_t tripartition_retries = 16;
  double template_degree = 16;
  std::size_t template_degree_cap = 0;
  std::size_t ell_route = 0;
  std::size_t ell_template = 0;
  std::size_t skeleton_edge_budget = 0; ///< 0: unlimited
  std::size_t serve_orders = 4;
  double y_fraction = 1.0 / 3;
  std::size_t peel_min_len = 0; ///< 0: max(3, ceil(average degree))
  std::size_t iteration_cap = 0; ///< 0: log*(n) + 2
  double degree_floor = 4;
  double c_long = 64;
  bool eulerian_finish = false;
  std::uint64_t seed = 1;

  static PipelineConfig engineering() { return {}; }

  static PipelineConfig paper() {
    PipelineConfig c;
    c.preset = Preset::Paper;
    c.size_floor = 4096;
    return c;
  }

  void validate() const {
    expander.validate();
    if (!(tau > 0) || size_floor == 0 || !(template_degree > 0) || !(degree_floor >= 0) ||
        !(y_fraction > 0 && y_fraction < 1) || !(c_long > 0))
      throw InputError("pipeline config: knobs must be positive");
  }

  /// The (epsilon, s) contract used for an n-vertex graph.
  ExpanderParams params_for(std::size_t n) const {
    ExpanderParams p = expander;
    if (preset == Preset::Paper)
      p.s = std::min(1e300, std::pow(std::max(1.0, lg(static_cast<double>(n))), 273.0));
    return p;
  }

  CertifyOptions certify_options(std::uint64_t s) const { return {exhaustive_cap, heuristic_seeds, s}; }
};

/// Skeleton knobs for an n-vertex graph.
inline SkeletonKnobs resolve_skeleton(const PipelineConfig &c, std::size_t n) {
  SkeletonKnobs k;
  const double nn = static_cast<double>(std::max<std::size_t>(n, 2));
  const double l = std::max(1.0, lg(nn));
  const auto up = [](double x) { return static_cast<std::size_t>(std::ceil(x - 1e-9)); };
  if (c.preset == Preset::Paper) {
    k.template_p = std::min(1.0, 150.0 * std::pow(l, 5) / nn);
    k.template_degree_cap = up(256.0 * std::pow(l, 5));
    k.ell_route = up(4.0 * std::pow(l, 5));
    k.ell_template = std::max<std::size_t>(1, up(l * l / 4));
  } else {
    k.template_p = std::min(1.0, c.template_degree / (nn - 1));
    k.template_degree_cap = up(1.5 * k.template_p * (nn - 1)) + 3;
    k.ell_route = 2 * up(l) + 2;
    k.ell_template = up(l) + 2;
  }
  if (c.template_degree_cap)
    k.template_degree_cap = c.template_degree_cap;
  if (c.ell_route)
    k.ell_route = c.ell_route;
  if (c.ell_template)
    k.ell_template = c.ell_template;
  if (c.skeleton_edge_budget)
    k.edge_budget = c.skeleton_edge_budget;
  k.serve_orders = c.serve_orders;
  return k;
}

namespace detail {

inline bool parse_bool(const std::string &v, const std::string &key, std::size_t line) {
  if (v == "1" || v == "true" || v == "yes" || v == "on")
    return true;
  if (v == "0" || v == "false" || v == "no" || v == "off")
    return false;
  throw InputError("config key '" + key + "' expects a boolean, got '" + v + "'", line);
}

inline double parse_double(const std::string &v, const std::string &key, std::size_t line) {
  std::size_t used = 0;
  double x = 0;
  try {
    x = std::stod(v, &used);
  } catch (const std::exception &) {
    used = 0;
  }
  if (used == 0 || used != v.size() || !std::isfinite(x))
    throw InputError("config key '" + key + "' expects a number, got '" + v + "'", line);
  return x;
}

inline std::size_t parse_count(const std::string &v, const std::string &key, std::size_t line) {
  if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos || v.size() > 18)
    throw InputError("config key '" + key + "' expects a count, got '" + v + "'", line);
  return static_cast<std::size_t>(std::stoull(v));
}

inline std::string trim(const std::string &s) {
  auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos)
    return "";
  auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

} // namespace detail

/// Sets one knob by name; unknown keys and bad values are input errors.
inline void apply_config_value(PipelineConfig &c, const std::string &key, const std::string &value,
                               std::size_t line = 0) {
  using namespace detail;
  const std::string &k = key;
  const std::string &v = value;
  if (k == "preset") {
    if (v == "paper" || v == "engineering") {
      auto seed = c.seed;
      c = v == "paper" ? PipelineConfig::paper() : PipelineConfig::engineering();
      c.seed = seed;
    } else {
      throw InputError("preset must be 'paper' or 'engineering'", line);
    }
  } else if (k == "epsilon") {
    c.expander.epsilon = parse_double(v, k, line);
  } else if (k == "s") {
    c.expander.s = parse_double(v, k, line);
  } else if (k == "denominator") {
    if (v == "log2" || v == "log_squared") {
      c.expander.denominator = Denominator::LogSquared;
    } else {
      c.expander.denominator = Denominator::Constant;
      c.expander.denominator_constant = parse_double(v, k, line);
    }
  } else if (k == "tau") {
    c.tau = parse_double(v, k, line);
  } else if (k == "exhaustive_cap") {
    c.exhaustive_cap = parse_count(v, k, line);
  } else if (k == "heuristic_seeds") {
    c.heuristic_seeds = parse_count(v, k, line);
  } else if (k == "size_floor") {
    c.size_floor = parse_count(v, k, line);
  } else if (k == "split_retries") {
    c.split_retries = parse_count(v, k, line);
  } else if (k == "split_verify") {
    c.split_verify = parse_bool(v, k, line);
  } else if (k == "tripartition_retries") {
    c.tripartition_retries = parse_count(v, k, line);
  } else if (k == "template_degree") {
    c.template_degree = parse_double(v, k, line);
  } else if (k == "template_degree_cap") {
    c.template_degree_cap = parse_count(v, k, line);
  } else if (k == "ell_route") {
    c.ell_route = parse_count(v, k, line);
  } else if (k == "ell_template") {
    c.ell_template = parse_count(v, k, line);
  } else if (k == "skeleton_edge_budget") {
    c.skeleton_edge_budget = parse_count(v, k, line);
  } else if (k == "serve_orders") {
    c.serve_orders = parse_count(v, k, line);
  } else if (k == "y_fraction") {
    c.y_fraction = parse_double(v, k, line);
  } else if (k == "peel_min_len") {
    c.peel_min_len = parse_count(v, k, line);
  } else if (k == "iteration_cap") {
    c.iteration_cap = parse_count(v, k, line);
  } else if (k == "degree_floor") {
    c.degree_floor = parse_double(v, k, line);
  } else if (k == "c_long") {
    c.c_long = parse_double(v, k, line);
  } else if (k == "eulerian_finish") {
    c.eulerian_finish = parse_bool(v, k, line);
  } else if (k == "seed") {
    c.seed = parse_count(v, k, line);
  } else {
    throw InputError("unknown config key '" + k + "'", line);
  }
}

/// "key = value" lines; '#' starts a comment.
inline void read_config(std::istream &in, PipelineConfig &c) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    std::string body = detail::trim(hash == std::string::npos ? line : line.substr(0, hash));
    if (body.empty())
      continue;
    auto eq = body.find('=');
    if (eq == std::string::npos)
      throw InputError("expected 'key = value', got '" + body + "'", lineno);
    apply_config_value(c, detail::trim(body.substr(0, eq)), detail::trim(body.substr(eq + 1)),
                       lineno);
  }
  c.validate();
}

inline nlohmann::json config_to_json(const PipelineConfig &c) {
  return {{"preset", c.preset == Preset::Paper ? "paper" : "engineering"},
          {"epsilon", c.expander.epsilon},
          {"s", c.expander.s},
          {"denominator", c.expander.denominator == Denominator::LogSquared
                              ? nlohmann::json("log2")
                              : nlohmann::json(c.expander.denominator_constant)},
          {"tau", c.tau},
          {"exhaustive_cap", c.exhaustive_cap},
          {"heuristic_seeds", c.heuristic_seeds},
          {"size_floor", c.size_floor},
          {"split_retries", c.split_retries},
          {"split_verify", c.split_verify},
          {"tripartition_retries", c.tripartition_retries},
          {"template_degree", c.template_degree},
          {"template_degree_cap", c.template_degree_cap},
          {"ell_route", c.ell_route},
          {"ell_template", c.ell_template},
          {"skeleton_edge_budget", c.skeleton_edge_budget},
          {"serve_orders", c.serve_orders},
          {"y_fraction", c.y_fraction},
          {"peel_min_len", c.peel_min_len},
          {"iteration_cap", c.iteration_cap},
          {"degree_floor", c.degree_floor},
          {"c_long", c.c_long},
          {"eulerian_finish", c.eulerian_finish},
          {"seed", c.seed}};
}

/// What happened inside one decompose_expander call.
struct ExpanderStats {
  bool fast_path = false;
  std::size_t split_attempts = 0;
  bool split_verified = false;
  std::size_t tripartition_attempts = 0;
  std::size_t skeleton_edges = 0;
  std::size_t skeleton_unrouted = 0;
  std::size_t open_paths = 0;
  std::size_t closed_paths = 0;
  std::size_t fallback_paths = 0;
  std::size_t leftover_skeleton_edges = 0;

  ExpanderStats &operator+=(const ExpanderStats &o) {
    fast_path = fast_path || o.fast_path;
    split_attempts += o.split_attempts;
    split_verified = split_verified || o.split_verified;
    tripartition_attempts += o.tripartition_attempts;
    skeleton_edges += o.skeleton_edges;
    skeleton_unrouted += o.skeleton_unrouted;
    open_paths += o.open_paths;
    closed_paths += o.closed_paths;
    fallback_paths += o.fallback_paths;
    leftover_skeleton_edges += o.leftover_skeleton_edges;
    return *this;
  }
};

namespace detail {

/// Euler-mode cycles go out as cycles, path edges as single edges.
inline void euler_fast_path(const Graph &g, Decomposition &d) {
  auto sp = well_spread_path_cycle_decompose(g, SpreadMode::Euler);
  for (auto &c : sp.cycles)
    d.cycles.push_back(std::move(c));
  for (const auto &p : sp.paths)
    d.single_edges.insert(d.single_edges.end(), p.edges.begin(), p.edges.end());
}

inline void finish(Decomposition &d, const Graph &g) {
  d.source = g.fingerprint();
  std::sort(d.single_edges.begin(), d.single_edges.end());
}

/// P followed by Q back to P's start, if that is a simple cycle.
inline std::optional<Cycle> close_path(const Graph &g, const Path &P, const Path &Q) {
  Cycle c;
  c.vertices = P.vertices;
  c.edges = P.edges;
  if (Q.front() == P.back() && Q.back() == P.front()) {
    c.vertices.insert(c.vertices.end(), Q.vertices.begin() + 1, Q.vertices.end() - 1);
    c.edges.insert(c.edges.end(), Q.edges.begin(), Q.edges.end());
  } else if (Q.front() == P.front() && Q.back() == P.back()) {
    c.vertices.insert(c.vertices.end(), Q.vertices.rbegin() + 1, Q.vertices.rend() - 1);
    c.edges.insert(c.edges.end(), Q.edges.rbegin(), Q.edges.rend());
  } else {
    return std::nullopt;
  }
  if (!check_cycle(g, c))
    return std::nullopt;
  return c;
}

} // namespace detail

/**
   Cycles and single edges of a (presumed) expander.

   The edges are split into three colour classes G_0..G_2 and the vertices
   into random thirds V_0..V_2. Skeleton i lives in G_i and routes through
   V_i. The remaining edges are sorted into H_i (edges inside V_{i+1} or
   between V_{i+1} and V_{i+2}), each H_i is cut into cycles and paths with
   spread ends, and every path is closed into a cycle by a path through V_i
   in skeleton i. Paths that cannot be closed and unused skeleton edges are
   emitted as single edges. Small graphs or starved thirds take the
   euler-mode fast path.
 */
inline Decomposition decompose_expander(const Graph &g0, const PipelineConfig &cfg,
                                        std::uint64_t seed, ExpanderStats *stats = nullptr) {
  cfg.validate();
  ExpanderStats st;
  Decomposition out;
  Subgraph core = without_isolated(g0);
  const Graph &g = core.graph;
  const std::size_t n = g.n();
  Decomposition local;
  auto done = [&]() {
    append_lifted(out, core, local);
    detail::finish(out, g0);
    if (stats)
      *stats += st;
    return out;
  };
  if (g.m() == 0)
    return done();
  if (n < cfg.size_floor) {
    st.fast_path = true;
    detail::euler_fast_path(g, local);
    return done();
  }

  std::vector<std::uint8_t> cls(n, 0);
  bool balanced = false;
  for (std::size_t a = 0; a < std::max<std::size_t>(1, cfg.tripartition_retries) && !balanced; ++a) {
    st.tripartition_attempts = a + 1;
    Rng rng(derive_seed(seed, 0x3a, a));
    std::size_t count[3] = {0, 0, 0};
    for (Vertex v = 0; v < n; ++v) {
      cls[v] = static_cast<std::uint8_t>(rng.below(3));
      ++count[cls[v]];
    }
    balanced = count[0] >= 2 && count[1] >= 2 && count[2] >= 2;
  }
  if (!balanced) {
    st.fast_path = true;
    detail::euler_fast_path(g, local);
    return done();
  }

  const ExpanderParams params = cfg.params_for(n);
  SplitOptions so;
  so.retry_cap = std::max<std::size_t>(1, cfg.split_retries);
  so.verify = cfg.split_verify;
  so.certify = cfg.certify_options(derive_seed(seed, 0x5b));
  auto split = split_expander_edges(g, params, 3, derive_seed(seed, 0x5c), so);
  st.split_attempts = split.attempts;
  st.split_verified = split.verified;

  const SkeletonKnobs knobs = resolve_skeleton(cfg, n);
  std::vector<Skeleton> sk;
  EdgeSubset in_skeleton(g.m());
  for (std::size_t i = 0; i < 3; ++i) {
    VertexSet Vi(n);
    for (Vertex v = 0; v < n; ++v)
      if (cls[v] == i)
        Vi.insert(v);
    sk.push_back(build_skeleton(g, Vi, knobs, derive_seed(seed, 0x5e, i), split.parts[i]));
    in_skeleton |= sk.back().edges;
    st.skeleton_edges += sk.back().edges.size();
    st.skeleton_unrouted += sk.back().failed;
  }

  std::vector<EdgeSubset> H(3, EdgeSubset(g.m()));
  for (EdgeId e = 0; e < g.m(); ++e) {
    if (in_skeleton.contains(e))
      continue;
    unsigned a = cls[g.edge(e).u], b = cls[g.edge(e).v];
    unsigned lower = a; // the class playing V_{i+1}
    if (a != b)
      lower = (b == (a + 1) % 3) ? a : b;
    H[(lower + 2) % 3].insert(e);
  }

  for (std::size_t i = 0; i < 3; ++i) {
    Subgraph hs = edge_subgraph(g, H[i]);
    auto sp = well_spread_path_cycle_decompose(hs.graph, SpreadMode::Euler);
    for (const auto &c : sp.cycles)
      local.cycles.push_back(hs.lift(c));
    std::vector<Path> open;
    PairBatch batch;
    batch.t = 2;
    for (const auto &p : sp.paths) {
      open.push_back(hs.lift(p));
      batch.pairs.emplace_back(open.back().front(), open.back().back());
    }
    st.open_paths += open.size();
    EdgeSubset free_edges = sk[i].edges;
    auto routed = route_via_skeleton(g, sk[i], batch, free_edges, derive_seed(seed, 0x5f, i));
    for (std::size_t j = 0; j < open.size(); ++j) {
      std::optional<Cycle> c;
      if (routed.paths[j])
        c = detail::close_path(g, open[j], *routed.paths[j]);
      if (c) {
        local.cycles.push_back(std::move(*c));
        ++st.closed_paths;
        continue;
      }
      if (routed.paths[j])
        for (EdgeId e : routed.paths[j]->edges)
          free_edges.insert(e);
      ++st.fallback_paths;
      local.single_edges.insert(local.single_edges.end(), open[j].edges.begin(),
                                open[j].edges.end());
    }
    for (EdgeId e : free_edges.to_vector())
      local.single_edges.push_back(e);
    st.leftover_skeleton_edges += free_edges.size();
  }
  return done();
}

struct GeneralStats {
  std::size_t parts = 0;
  std::size_t small_parts = 0;
  std::size_t large_parts = 0;
  std::size_t removed_edges = 0;
  std::size_t violations = 0;
  bool vertex_bound_ok = true;
  bool removed_bound_ok = true;
  ExpanderStats expander;
};

namespace detail {

inline void general_core(const Graph &g, const PipelineConfig &cfg, GeneralStats &st,
                         Decomposition &out) {
  auto ad = almost_decompose_into_expanders(g, cfg.params_for(g.n()),
                                            cfg.certify_options(derive_seed(cfg.seed, 0xa1)));
  st.parts += ad.parts.size();
  st.violations = ad.violations;
  st.vertex_bound_ok = ad.vertex_bound_ok;
  st.removed_bound_ok = ad.removed_bound_ok;
  st.removed_edges = ad.removed.size();
  for (std::size_t idx = 0; idx < ad.parts.size(); ++idx) {
    const auto &part = ad.parts[idx];
    if (part.edges.empty())
      continue;
    Subgraph sub = extract(g, part.vertices, part.edges);
    Decomposition d;
    if (sub.graph.n() < cfg.size_floor) {
      ++st.small_parts;
      euler_fast_path(sub.graph, d);
    } else {
      ++st.large_parts;
      d = decompose_expander(sub.graph, cfg, derive_seed(cfg.seed, 0xe7, idx), &st.expander);
    }
    append_lifted(out, sub, d);
  }
  for (EdgeId e : ad.removed.to_vector())
    out.single_edges.push_back(e);
}

} // namespace detail

/**
   Almost-decomposition into expanders; parts below the size floor take the
   euler-mode fast path, larger parts go through decompose_expander, removed
   edges become single edges. Components below the size floor skip the
   almost-decomposition and go straight to the fast path.
 */
inline Decomposition decompose_general(const Graph &g, const PipelineConfig &cfg,
                                       GeneralStats *stats = nullptr) {
  cfg.validate();
  GeneralStats st;
  Decomposition out;
  if (g.m() > 0) {
    std::size_t ncomp = 0;
    auto label = components(g, &ncomp);
    std::vector<std::size_t> size(ncomp, 0);
    for (Vertex v = 0; v < g.n(); ++v)
      ++size[label[v]];
    VertexSet small(g.n()), large(g.n());
    for (Vertex v = 0; v < g.n(); ++v)
      if (g.degree(v) > 0)
        (size[label[v]] < cfg.size_floor ? small : large).insert(v);
    EdgeSubset small_e(g.m()), large_e(g.m());
    for (EdgeId e = 0; e < g.m(); ++e)
      (small.contains(g.edge(e).u) ? small_e : large_e).insert(e);
    if (!small_e.empty()) {
      Subgraph sub = extract(g, small, small_e);
      Decomposition d;
      detail::euler_fast_path(sub.graph, d);
      ++st.parts;
      ++st.small_parts;
      append_lifted(out, sub, d);
    }
    if (!large_e.empty()) {
      Subgraph sub = extract(g, large, large_e);
      Decomposition d;
      detail::general_core(sub.graph, cfg, st, d);
      append_lifted(out, sub, d);
    }
  }
  detail::finish(out, g);
  if (stats)
    *stats = st;
  return out;
}

struct StepReport {
  double d_in = 0;
  double d_out = 0;
  std::size_t min_len = 0;
  std::size_t peeled_cycles = 0;
  std::size_t general_cycles = 0;
  std::size_t leftover_edges = 0;
  double ms_peel = 0;
  double ms_general = 0;
  GeneralStats general;
};

struct DensityStep {
  std::vector<Cycle> cycles;
  /// Edges of g on no returned cycle.
  EdgeSubset leftover;
  StepReport report;
};

namespace detail {

inline double average_degree(std::size_t m, std::size_t n) {
  return n ? 2.0 * static_cast<double>(m) / static_cast<double>(n) : 0.0;
}

inline double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace detail

/**
   Peels cycles of length >= max(3, ceil(d)) for the average degree d, then
   runs decompose_general on the rest; its single edges form the leftover.
 */
inline DensityStep density_step(const Graph &g, const PipelineConfig &cfg) {
  cfg.validate();
  DensityStep out;
  auto &r = out.report;
  r.d_in = detail::average_degree(g.m(), g.n());
  r.min_len = cfg.peel_min_len
                  ? std::max<std::size_t>(3, cfg.peel_min_len)
                  : std::max<std::size_t>(3, static_cast<std::size_t>(std::ceil(r.d_in - 1e-9)));
  auto t0 = std::chrono::steady_clock::now();
  auto peel = peel_long_cycles(g, r.min_len, LongCycleKnobs{cfg.y_fraction});
  r.ms_peel = detail::ms_since(t0);
  r.peeled_cycles = peel.cycles.size();
  out.cycles = std::move(peel.cycles);

  t0 = std::chrono::steady_clock::now();
  Subgraph rest = peel.residual_graph(g);
  Decomposition d = decompose_general(rest.graph, cfg, &r.general);
  r.ms_general = detail::ms_since(t0);
  r.general_cycles = d.cycles.size();
  for (const auto &c : d.cycles)
    out.cycles.push_back(rest.lift(c));
  out.leftover = EdgeSubset(g.m());
  for (EdgeId e : d.single_edges)
    out.leftover.insert(rest.to_host_edge[e]);
  r.leftover_edges = out.leftover.size();
  r.d_out = detail::average_degree(r.leftover_edges, g.n());
  return out;
}

struct RunReport {
  std::vector<StepReport> iterations;
  std::vector<double> degrees; ///< d_0, d_1, ...
  std::size_t iteration_cap = 0;
  std::string stop_reason;
  std::size_t finisher_cycles = 0;
  std::size_t finisher_singles = 0;
  bool finisher_eulerian = false;
  std::size_t cycles = 0;
  std::size_t single_edges = 0;
  std::size_t pieces = 0;
  double ms_total = 0;

  bool degrees_monotone() const {
    for (std::size_t i = 1; i < degrees.size(); ++i)
      if (degrees[i] > degrees[i - 1] + 1e-12)
        return false;
    return true;
  }
};

/**
   Repeats density_step on the leftover until its average degree is at most
   the floor, the iteration cap is hit, or an iteration makes no progress.
   With the finisher enabled, an even leftover is cut into cycles; an odd
   one gives up its euler-mode cycles and keeps path edges as singles.
 */
inline Decomposition decompose_logstar(const Graph &g, const PipelineConfig &cfg,
                                       RunReport *report = nullptr) {
  cfg.validate();
  auto t_start = std::chrono::steady_clock::now();
  RunReport rep;
  Decomposition out;
  rep.iteration_cap = cfg.iteration_cap ? cfg.iteration_cap : log_star(g.n()) + 2;
  EdgeSubset left = EdgeSubset::full(g.m());
  rep.degrees.push_back(detail::average_degree(left.size(), g.n()));
  rep.stop_reason = "degree floor";
  for (std::size_t it = 0;; ++it) {
    const double d = rep.degrees.back();
    if (d <= cfg.degree_floor || left.empty()) {
      rep.stop_reason = "degree floor";
      break;
    }
    if (it >= rep.iteration_cap) {
      rep.stop_reason = "iteration cap";
      break;
    }
    Subgraph sub = edge_subgraph(g, left);
    PipelineConfig step_cfg = cfg;
    step_cfg.seed = derive_seed(cfg.seed, 0x10, it);
    auto step = density_step(sub.graph, step_cfg);
    // average degree is measured against the host vertex count
    step.report.d_in = d;
    EdgeSubset next(g.m());
    for (EdgeId e : step.leftover.to_vector())
      next.insert(sub.to_host_edge[e]);
    for (const auto &c : step.cycles)
      out.cycles.push_back(sub.lift(c));
    step.report.d_out = detail::average_degree(next.size(), g.n());
    const bool progress = next.size() < left.size();
    rep.iterations.push_back(step.report);
    rep.degrees.push_back(step.report.d_out);
    left = std::move(next);
    if (!progress) {
      rep.stop_reason = "no progress";
      break;
    }
  }
  Subgraph rest = edge_subgraph(g, left);
  if (cfg.eulerian_finish && rest.graph.m() > 0) {
    Decomposition fin;
    rep.finisher_eulerian = rest.graph.is_eulerian();
    if (rep.finisher_eulerian) {
      fin.cycles = eulerian_cycle_decompose(rest.graph);
    } else {
      detail::euler_fast_path(rest.graph, fin);
    }
    rep.finisher_cycles = fin.cycles.size();
    rep.finisher_singles = fin.single_edges.size();
    append_lifted(out, rest, fin);
  } else {
    for (EdgeId e : left.to_vector())
      out.single_edges.push_back(e);
  }
  detail::finish(out, g);
  rep.cycles = out.cycles.size();
  rep.single_edges = out.single_edges.size();
  rep.pieces = out.pieces();
  rep.ms_total = detail::ms_since(t_start);
  if (report)
    *report = std::move(rep);
  return out;
}

inline nlohmann::json report_to_json(const RunReport &r, bool timings = true) {
  nlohmann::json its = nlohmann::json::array();
  for (const auto &s : r.iterations) {
    nlohmann::json j = {{"d_in", s.d_in},
                        {"d_out", s.d_out},
                        {"min_len", s.min_len},
                        {"peeled_cycles", s.peeled_cycles},
                        {"general_cycles", s.general_cycles},
                        {"leftover_edges", s.leftover_edges},
                        {"parts", s.general.parts},
                        {"small_parts", s.general.small_parts},
                        {"large_parts", s.general.large_parts},
                        {"removed_edges", s.general.removed_edges},
                        {"closed_paths", s.general.expander.closed_paths},
                        {"fallback_paths", s.general.expander.fallback_paths},
                        {"skeleton_edges", s.general.expander.skeleton_edges},
                        {"leftover_skeleton_edges", s.general.expander.leftover_skeleton_edges}};
    if (timings) {
      j["ms_peel"] = s.ms_peel;
      j["ms_general"] = s.ms_general;
    }
    its.push_back(std::move(j));
  }
  nlohmann::json out = {{"iterations", std::move(its)},
                        {"degrees", r.degrees},
                        {"degrees_monotone", r.degrees_monotone()},
                        {"iteration_cap", r.iteration_cap},
                        {"stop_reason", r.stop_reason},
                        {"finisher_cycles", r.finisher_cycles},
                        {"finisher_singles", r.finisher_singles},
                        {"finisher_eulerian", r.finisher_eulerian},
                        {"cycles", r.cycles},
                        {"single_edges", r.single_edges},
                        {"pieces", r.pieces}};
  if (timings)
    out["ms_total"] = r.ms_total;
  return out;
}

} // namespace egd
