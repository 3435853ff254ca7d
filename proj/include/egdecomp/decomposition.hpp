#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace egd {

/// Edge-disjoint cycles plus leftover single edges of one graph.
struct Decomposition {
  std::vector<Cycle> cycles;
  std::vector<EdgeId> single_edges;
  std::uint64_t source = 0;

  std::size_t pieces() const { return cycles.size() + single_edges.size(); }
};

struct ValidationReport {
  bool ok = true;
  std::size_t cycles = 0;
  std::size_t single_edges = 0;
  std::size_t pieces = 0;
  std::optional<std::string> first_violation;
};

/**
   Checks that the cycles and single edges cover every edge exactly once and
   that every cycle is simple with length >= 3. Throws InputError when the
   decomposition was produced for a different graph.
 */
inline ValidationReport validate_decomposition(const Graph &g, const Decomposition &d) {
  if (d.source != g.fingerprint())
    throw InputError("decomposition fingerprint does not match the graph");
  ValidationReport r;
  r.cycles = d.cycles.size();
  r.single_edges = d.single_edges.size();
  r.pieces = r.cycles + r.single_edges;
  auto fail = [&r](std::string msg) {
    if (r.ok) {
      r.ok = false;
      r.first_violation = std::move(msg);
    }
  };
  std::vector<std::uint8_t> covered(g.m(), 0);
  auto cover = [&](EdgeId e, const std::string &where) {
    if (e >= g.m()) {
      fail(where + ": edge id " + std::to_string(e) + " out of range");
      return;
    }
    if (covered[e]++)
      fail(where + ": edge " + std::to_string(g.edge(e).u) + "-" + std::to_string(g.edge(e).v) +
           " covered twice");
  };
  for (std::size_t i = 0; i < d.cycles.size(); ++i) {
    std::string why;
    if (!check_cycle(g, d.cycles[i], &why))
      fail("cycle " + std::to_string(i) + ": " + why);
    for (EdgeId e : d.cycles[i].edges)
      cover(e, "cycle " + std::to_string(i));
  }
  for (EdgeId e : d.single_edges)
    cover(e, "single edges");
  for (EdgeId e = 0; e < g.m(); ++e)
    if (!covered[e]) {
      fail("edge " + std::to_string(g.edge(e).u) + "-" + std::to_string(g.edge(e).v) +
           " not covered");
      break;
    }
  return r;
}

/// Re-expresses a decomposition of `sub.graph` in host ids.
inline void append_lifted(Decomposition &into, const Subgraph &sub, const Decomposition &part) {
  for (const auto &c : part.cycles)
    into.cycles.push_back(sub.lift(c));
  for (EdgeId e : part.single_edges)
    into.single_edges.push_back(sub.to_host_edge[e]);
}

} // namespace egd
