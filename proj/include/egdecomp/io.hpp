#pragma once

#include <cstdio>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "decomposition.hpp"

namespace egd {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

namespace detail {

inline std::string strip_comment(const std::string &line) {
  auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

inline bool blank(const std::string &s) {
  return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

/// Parses exactly two unsigned integers from a line or throws with its number.
inline std::pair<std::uint64_t, std::uint64_t> two_numbers(const std::string &text,
                                                           std::size_t lineno,
                                                           const char *what) {
  std::istringstream in(text);
  std::string a, b, extra;
  if (!(in >> a >> b) || (in >> extra))
    throw InputError(std::string("expected ") + what + ", got '" + text + "'", lineno);
  auto num = [&](const std::string &tok) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos ||
        tok.size() > 18)
      throw InputError(std::string("expected ") + what + ", got '" + text + "'", lineno);
    return std::stoull(tok);
  };
  return {num(a), num(b)};
}

inline std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

} // namespace detail

/**
   Edge-list text: header "n m", then m lines "u v". Blank lines and '#'
   comments are ignored. Errors carry the offending line number.
 */
inline Graph read_edge_list(std::istream &in) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::uint64_t n = 0, m = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::unordered_set<std::uint64_t> seen;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = detail::strip_comment(line);
    if (detail::blank(body))
      continue;
    if (!have_header) {
      auto [hn, hm] = detail::two_numbers(body, lineno, "header 'n m'");
      n = hn;
      m = hm;
      if (n > 0xfffffffeULL)
        throw InputError("vertex count too large", lineno);
      have_header = true;
      edges.reserve(m);
      continue;
    }
    auto [u, v] = detail::two_numbers(body, lineno, "edge 'u v'");
    if (edges.size() == m)
      throw InputError("more edge lines than the header's m = " + std::to_string(m), lineno);
    if (u >= n || v >= n)
      throw InputError("vertex id out of range 0.." + std::to_string(n ? n - 1 : 0), lineno);
    if (u == v)
      throw InputError("self-loop", lineno);
    if (u > v)
      std::swap(u, v);
    if (!seen.insert(u * (n + 1) + v).second)
      throw InputError("parallel edge " + std::to_string(u) + " " + std::to_string(v), lineno);
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!have_header)
    throw InputError("missing header 'n m'", lineno ? lineno : 1);
  if (edges.size() != m)
    throw InputError("header declares " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()),
                     lineno ? lineno : 1);
  return Graph(n, edges);
}

inline Graph parse_edge_list(const std::string &text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream &out, const Graph &g) {
  out << g.n() << ' ' << g.m() << '\n';
  for (const auto &e : g.edges())
    out << e.u << ' ' << e.v << '\n';
}

inline std::string to_edge_list(const Graph &g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

inline json decomposition_to_json(const Graph &g, const Decomposition &d,
                                  const std::vector<Path> *paths = nullptr) {
  json cycles = json::array();
  for (const auto &c : d.cycles)
    cycles.push_back(c.vertices);
  json edges = json::array();
  for (EdgeId e : d.single_edges)
    edges.push_back({g.edge(e).u, g.edge(e).v});
  json out;
  out["n"] = g.n();
  out["m"] = g.m();
  out["cycles"] = std::move(cycles);
  out["edges"] = std::move(edges);
  if (paths) {
    json ps = json::array();
    for (const auto &p : *paths)
      ps.push_back(p.vertices);
    out["paths"] = std::move(ps);
  }
  out["stats"] = {{"schema_version", kSchemaVersion},
                  {"cycles", d.cycles.size()},
                  {"single_edges", d.single_edges.size()},
                  {"paths", paths ? paths->size() : 0},
                  {"pieces", d.pieces()},
                  {"fingerprint", detail::hex64(d.source)}};
  return out;
}

/**
   Validates a decomposition JSON document. With a graph, pieces are resolved
   against it (fingerprint mismatch is an InputError). Without one, the
   pieces must form a simple graph with exactly m edges, each used once.
 */
inline ValidationReport validate_decomposition_json(const json &doc, const Graph *g) {
  ValidationReport bad;
  auto fail = [&bad](std::string msg) {
    bad.ok = false;
    bad.first_violation = std::move(msg);
    return bad;
  };
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("m") ||
      !doc.contains("cycles") || !doc.contains("edges"))
    throw InputError("decomposition JSON lacks n/m/cycles/edges");
  const std::uint64_t n = doc.at("n").get<std::uint64_t>();
  const std::uint64_t m = doc.at("m").get<std::uint64_t>();
  std::vector<std::vector<Vertex>> cycles;
  for (const auto &c : doc.at("cycles"))
    cycles.push_back(c.get<std::vector<Vertex>>());
  std::vector<std::pair<Vertex, Vertex>> singles;
  for (const auto &e : doc.at("edges")) {
    auto pr = e.get<std::vector<Vertex>>();
    if (pr.size() != 2)
      throw InputError("edge entry must have two endpoints");
    singles.emplace_back(pr[0], pr[1]);
  }
  bad.cycles = cycles.size();
  bad.single_edges = singles.size();
  bad.pieces = cycles.size() + singles.size();

  if (g) {
    if (g->n() != n || g->m() != m)
      throw InputError("decomposition n/m do not match the graph");
    if (doc.contains("stats") && doc["stats"].contains("fingerprint") &&
        doc["stats"]["fingerprint"].get<std::string>() != detail::hex64(g->fingerprint()))
      throw InputError("decomposition fingerprint does not match the graph");
    Decomposition d;
    d.source = g->fingerprint();
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      if (cycles[i].size() < 3)
        return fail("cycle " + std::to_string(i) + ": shorter than 3");
      for (Vertex v : cycles[i])
        if (v >= n)
          return fail("cycle " + std::to_string(i) + ": vertex out of range");
      for (std::size_t j = 0; j < cycles[i].size(); ++j)
        if (!g->find_edge(cycles[i][j], cycles[i][(j + 1) % cycles[i].size()]))
          return fail("cycle " + std::to_string(i) + ": uses a non-edge");
      d.cycles.push_back(cycle_from_vertices(*g, cycles[i]));
    }
    for (auto [a, b] : singles) {
      auto e = g->find_edge(a, b);
      if (!e)
        return fail("single edge " + std::to_string(a) + "-" + std::to_string(b) +
                    " is not an edge");
      d.single_edges.push_back(*e);
    }
    return validate_decomposition(*g, d);
  }

  std::set<std::pair<Vertex, Vertex>> used;
  auto add = [&](Vertex a, Vertex b, const std::string &where) -> bool {
    if (a >= n || b >= n || a == b) {
      fail(where + ": invalid edge " + std::to_string(a) + "-" + std::to_string(b));
      return false;
    }
    if (!used.emplace(std::min(a, b), std::max(a, b)).second) {
      fail(where + ": edge " + std::to_string(a) + "-" + std::to_string(b) + " covered twice");
      return false;
    }
    return true;
  };
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    const auto &c = cycles[i];
    if (c.size() < 3)
      return fail("cycle " + std::to_string(i) + ": shorter than 3");
    std::set<Vertex> distinct(c.begin(), c.end());
    if (distinct.size() != c.size())
      return fail("cycle " + std::to_string(i) + ": repeats a vertex");
    for (std::size_t j = 0; j < c.size(); ++j)
      if (!add(c[j], c[(j + 1) % c.size()], "cycle " + std::to_string(i)))
        return bad;
  }
  for (auto [a, b] : singles)
    if (!add(a, b, "single edges"))
      return bad;
  if (used.size() != m)
    return fail("pieces cover " + std::to_string(used.size()) + " edges, expected " +
                std::to_string(m));
  bad.ok = true;
  return bad;
}

inline json path_to_json(const Path &p) { return p.vertices; }

/// DOT text; with a decomposition, cycle i gets palette colour i and single
/// edges are drawn dashed grey.
inline std::string to_dot(const Graph &g, const Decomposition *d = nullptr) {
  static const char *palette[] = {"red",    "blue",      "darkgreen", "orange",  "purple",
                                  "brown",  "magenta",   "cyan4",     "gold3",   "navy",
                                  "maroon", "olivedrab", "teal",      "salmon4", "orchid4"};
  constexpr std::size_t P = sizeof palette / sizeof *palette;
  std::vector<std::string> attr(g.m());
  if (d) {
    for (std::size_t i = 0; i < d->cycles.size(); ++i)
      for (EdgeId e : d->cycles[i].edges)
        attr[e] = " [color=" + std::string(palette[i % P]) + ", label=\"c" +
                  std::to_string(i) + "\"]";
    for (EdgeId e : d->single_edges)
      attr[e] = " [color=gray, style=dashed]";
  }
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.degree(v) == 0)
      out << "  " << v << ";\n";
  for (EdgeId e = 0; e < g.m(); ++e)
    out << "  " << g.edge(e).u << " -- " << g.edge(e).v << attr[e] << ";\n";
  out << "}\n";
  return out.str();
}

} // namespace egd
