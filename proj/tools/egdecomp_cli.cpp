#include <cstdint>
#include <filesystem>
#include <optional>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "egdecomp/egdecomp.hpp"

namespace {

using egd::json;

const char *kManual = R"(SUBCOMMANDS
  gen FAMILY ARGS...      gnp N P | gallai K N | eulerian N P | regular N D |
                          family NAME N (a benchmark family); prints an edge list
  decompose [FILE]        cycles + single edges (decomposition JSON)
                          --mode logstar|general|expander, --eulerian-finish,
                          --report FILE (run report JSON), --dot FILE
  validate [FILE]         checks a decomposition JSON; with --graph FILE the
                          pieces are resolved against that graph
  certify [FILE]          (epsilon, s)-expander verdict; --mode auto|exhaustive|heuristic
  expanders [FILE]        almost-decomposition into expanders
  route [FILE]            edge-disjoint paths: --pairs 0:5,2:7 --ell L
                          [--through 1,2,3] [--strategy greedy|oracle] [--escalate]
  paths [FILE]            paths with spread ends plus cycles; --paths-only
  longcycle [FILE]        one long cycle, or with --min-len L peel all cycles of length >= L
  euler [FILE]            cycle decomposition of an even-degree graph
  bench                   scaling CSV: --families a,b --sizes 128,256 --seeds 1,2
                          [--out FILE] [--deterministic] [--repro-dir DIR]

INPUT
  Edge lists: header "n m", then m lines "u v"; '#' starts a comment.
  FILE omitted or "-" reads standard input.

CONFIG
  --preset engineering|paper, then --config FILE (key = value lines), then
  --seed; later sources win.

EXIT STATUS
  0 success, 1 assertion or validation failure, 2 malformed input or usage.
)";

std::string slurp(const std::string &file) {
  if (file.empty() || file == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(file);
  if (!in)
    throw egd::InputError("cannot open '" + file + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

egd::Graph read_graph(const std::string &file) { return egd::parse_edge_list(slurp(file)); }

void emit(const std::string &out, const std::string &text) {
  if (out.empty() || out == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(out);
  if (!f)
    throw egd::InputError("cannot write '" + out + "'");
  f << text;
}

std::vector<std::string> split_list(const std::string &s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      if (!cur.empty())
        out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  if (!cur.empty())
    out.push_back(cur);
  return out;
}

std::uint64_t to_count(const std::string &s, const std::string &what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 18)
    throw egd::InputError(what + ": expected a nonnegative integer, got '" + s + "'");
  return std::stoull(s);
}

double to_real(const std::string &s, const std::string &what) {
  std::size_t used = 0;
  double x = 0;
  try {
    x = std::stod(s, &used);
  } catch (const std::exception &) {
    used = 0;
  }
  if (used == 0 || used != s.size())
    throw egd::InputError(what + ": expected a number, got '" + s + "'");
  return x;
}

json cycle_json(const egd::Cycle &c) { return c.vertices; }

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"egdecomp: decompose graphs into cycles and single edges"};
  app.footer(kManual);
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 1;
  bool seed_given = false;
  std::string preset = "engineering", config_file;
  bool quiet = false;
  app.add_option("--seed", seed, "random seed")->each([&](const std::string &) { seed_given = true; });
  app.add_option("--preset", preset, "engineering or paper")
      ->check(CLI::IsMember({"engineering", "paper"}));
  app.add_option("--config", config_file, "key = value overrides");
  app.add_flag("--quiet", quiet, "no diagnostics on stderr");

  std::string file, out;

  auto *gen = app.add_subcommand("gen", "generate a graph");
  std::vector<std::string> gen_args;
  gen->add_option("args", gen_args, "FAMILY followed by its parameters")->required();
  gen->add_option("--out", out, "output file");

  auto *dec = app.add_subcommand("decompose", "decompose into cycles and single edges");
  std::string mode = "logstar", report_file, dot_file;
  bool euler_finish = false;
  dec->add_option("file", file, "edge list (default: stdin)");
  dec->add_option("--mode", mode)->check(CLI::IsMember({"logstar", "general", "expander"}));
  dec->add_flag("--eulerian-finish", euler_finish, "finish an even leftover with Euler cycles");
  dec->add_option("--report", report_file, "write the run report JSON here");
  dec->add_option("--dot", dot_file, "write a DOT rendering here");
  dec->add_option("--out", out, "output file");

  auto *val = app.add_subcommand("validate", "check a decomposition JSON");
  std::string graph_file;
  val->add_option("file", file, "decomposition JSON (default: stdin)");
  val->add_option("--graph", graph_file, "edge list to resolve the pieces against");

  auto *cert = app.add_subcommand("certify", "expander verdict");
  std::string cert_mode = "auto";
  std::optional<double> epsilon_flag, s_flag;
  cert->add_option("file", file);
  cert->add_option("--epsilon", epsilon_flag);
  cert->add_option("--s", s_flag);
  cert->add_option("--mode", cert_mode)->check(CLI::IsMember({"auto", "exhaustive", "heuristic"}));
  cert->add_option("--out", out);

  auto *exps = app.add_subcommand("expanders", "almost-decomposition into expanders");
  std::size_t split_k = 0;
  exps->add_option("file", file);
  exps->add_option("--epsilon", epsilon_flag);
  exps->add_option("--s", s_flag);
  exps->add_option("--split", split_k, "also split each part's edges into k classes");
  exps->add_option("--out", out);

  auto *route = app.add_subcommand("route", "edge-disjoint paths for a pair batch");
  std::string pairs_arg, through_arg, strategy = "greedy";
  std::size_t ell = 8, t_bound = 2;
  bool escalate = false;
  route->add_option("file", file);
  route->add_option("--pairs", pairs_arg, "file of 'u v' lines, or x:y,x:y,...")->required();
  route->add_option("--through", through_arg, "file or comma list of vertex ids (default: all)");
  route->add_option("--ell", ell, "length cap");
  route->add_option("--t", t_bound, "per-vertex multiplicity bound");
  route->add_option("--strategy", strategy)->check(CLI::IsMember({"greedy", "oracle"}));
  route->add_flag("--escalate", escalate, "fall back to the exact oracle");
  route->add_option("--out", out);

  auto *paths = app.add_subcommand("paths", "paths with spread ends plus cycles");
  bool paths_only = false;
  paths->add_option("file", file);
  paths->add_flag("--paths-only", paths_only);
  paths->add_option("--out", out);

  auto *lc = app.add_subcommand("longcycle", "long cycle search or peeling");
  std::size_t min_len = 0;
  lc->add_option("file", file);
  lc->add_option("--min-len", min_len, "peel every cycle of at least this length");
  lc->add_option("--out", out);

  auto *eul = app.add_subcommand("euler", "cycle decomposition of an even-degree graph");
  eul->add_option("file", file);
  eul->add_option("--out", out);

  auto *bench = app.add_subcommand("bench", "scaling benchmark CSV");
  std::string families_arg, sizes_arg, seeds_arg = "1,2,3,4,5", repro_dir;
  bool deterministic = false;
  bench->add_option("--families", families_arg);
  bench->add_option("--sizes", sizes_arg);
  bench->add_option("--seeds", seeds_arg);
  bench->add_option("--out", out);
  bench->add_option("--repro-dir", repro_dir);
  bench->add_flag("--deterministic", deterministic, "omit timings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  auto note = [&](const std::string &msg) {
    if (!quiet)
      std::cerr << msg << '\n';
  };

  try {
    egd::PipelineConfig cfg =
        preset == "paper" ? egd::PipelineConfig::paper() : egd::PipelineConfig::engineering();
    if (!config_file.empty()) {
      std::ifstream in(config_file);
      if (!in)
        throw egd::InputError("cannot open config '" + config_file + "'");
      egd::read_config(in, cfg);
    }
    if (seed_given)
      cfg.seed = seed;
    if (epsilon_flag)
      cfg.expander.epsilon = *epsilon_flag;
    if (s_flag)
      cfg.expander.s = *s_flag;
    cfg.validate();

    if (*gen) {
      const std::string &fam = gen_args[0];
      auto need = [&](std::size_t k) {
        if (gen_args.size() != k + 1)
          throw egd::InputError("gen " + fam + " expects " + std::to_string(k) + " parameters");
      };
      egd::Graph g;
      if (fam == "gnp") {
        need(2);
        g = egd::gen_gnp(to_count(gen_args[1], "n"), to_real(gen_args[2], "p"), cfg.seed);
      } else if (fam == "gallai") {
        need(2);
        g = egd::gen_gallai_bipartite(to_count(gen_args[1], "k"), to_count(gen_args[2], "n"));
      } else if (fam == "eulerian") {
        need(2);
        g = egd::gen_eulerian(to_count(gen_args[1], "n"), to_real(gen_args[2], "p"), cfg.seed);
      } else if (fam == "regular") {
        need(2);
        g = egd::gen_random_regular(to_count(gen_args[1], "n"), to_count(gen_args[2], "d"),
                                    cfg.seed);
      } else if (fam == "family") {
        need(2);
        g = egd::make_family_instance(gen_args[1], to_count(gen_args[2], "n"), cfg.seed);
      } else {
        throw egd::InputError("unknown generator '" + fam + "'");
      }
      emit(out, egd::to_edge_list(g));
      return 0;
    }

    if (*dec) {
      egd::Graph g = read_graph(file);
      if (euler_finish)
        cfg.eulerian_finish = true;
      egd::Decomposition d;
      json report;
      if (mode == "logstar") {
        egd::RunReport rep;
        d = egd::decompose_logstar(g, cfg, &rep);
        report = egd::report_to_json(rep);
      } else if (mode == "general") {
        egd::GeneralStats st;
        d = egd::decompose_general(g, cfg, &st);
        report = {{"parts", st.parts},
                  {"small_parts", st.small_parts},
                  {"large_parts", st.large_parts},
                  {"removed_edges", st.removed_edges}};
      } else {
        egd::ExpanderStats st;
        d = egd::decompose_expander(g, cfg, cfg.seed, &st);
        report = {{"fast_path", st.fast_path},
                  {"split_attempts", st.split_attempts},
                  {"split_verified", st.split_verified},
                  {"skeleton_edges", st.skeleton_edges},
                  {"open_paths", st.open_paths},
                  {"closed_paths", st.closed_paths},
                  {"fallback_paths", st.fallback_paths},
                  {"leftover_skeleton_edges", st.leftover_skeleton_edges}};
      }
      auto v = egd::validate_decomposition(g, d);
      if (!v.ok) {
        std::cerr << "error: invalid decomposition: " << v.first_violation.value_or("") << '\n';
        return 1;
      }
      emit(out, egd::decomposition_to_json(g, d).dump() + "\n");
      if (!report_file.empty()) {
        report["config"] = egd::config_to_json(cfg);
        report["mode"] = mode;
        emit(report_file, report.dump(2) + "\n");
      }
      if (!dot_file.empty())
        emit(dot_file, egd::to_dot(g, &d));
      note("decompose: n=" + std::to_string(g.n()) + " m=" + std::to_string(g.m()) +
           " cycles=" + std::to_string(d.cycles.size()) +
           " single_edges=" + std::to_string(d.single_edges.size()));
      return 0;
    }

    if (*val) {
      json doc;
      try {
        doc = json::parse(slurp(file));
      } catch (const json::parse_error &e) {
        throw egd::InputError(std::string("decomposition JSON: ") + e.what());
      }
      std::optional<egd::Graph> g;
      if (!graph_file.empty())
        g = read_graph(graph_file);
      egd::ValidationReport r;
      try {
        r = egd::validate_decomposition_json(doc, g ? &*g : nullptr);
      } catch (const json::exception &e) {
        throw egd::InputError(std::string("decomposition JSON: ") + e.what());
      }
      if (!r.ok) {
        std::cerr << "invalid: " << r.first_violation.value_or("") << '\n';
        return 1;
      }
      note("valid: cycles=" + std::to_string(r.cycles) +
           " single_edges=" + std::to_string(r.single_edges));
      return 0;
    }

    if (*cert) {
      egd::Graph g = read_graph(file);
      auto p = cfg.params_for(g.n());
      auto co = cfg.certify_options(cfg.seed);
      egd::ExpanderVerdict v;
      if (cert_mode == "auto")
        v = egd::certify_auto(g, p, co);
      else
        v = egd::certify_expander(g, p,
                                  cert_mode == "exhaustive" ? egd::CertifyMode::Exhaustive
                                                            : egd::CertifyMode::Heuristic,
                                  co);
      json j = {{"is_expander", v.is_expander},
                {"certified", v.certified},
                {"subsets_checked", v.subsets_checked},
                {"epsilon", p.epsilon},
                {"s", p.s}};
      if (v.violation)
        j["violation"] = {{"U", v.violation->U.to_vector()},
                          {"F", v.violation->F.to_vector()},
                          {"survivors", v.violation->survivors},
                          {"threshold", v.violation->threshold}};
      emit(out, j.dump() + "\n");
      return 0;
    }

    if (*exps) {
      egd::Graph g = read_graph(file);
      auto ad = egd::almost_decompose_into_expanders(g, cfg.params_for(g.n()),
                                                     cfg.certify_options(cfg.seed));
      auto pairs_of = [&](const egd::EdgeSubset &es) {
        json list = json::array();
        for (auto e : es.to_vector())
          list.push_back({g.edge(e).u, g.edge(e).v});
        return list;
      };
      json parts = json::array();
      for (std::size_t i = 0; i < ad.parts.size(); ++i) {
        const auto &part = ad.parts[i];
        json pj = {{"vertices", part.vertices.to_vector()},
                   {"edges", pairs_of(part.edges)},
                   {"certified", part.certified}};
        if (split_k > 0 && !part.edges.empty()) {
          egd::Subgraph sub = egd::extract(g, part.vertices, part.edges);
          auto sr = egd::split_expander_edges(sub.graph, cfg.params_for(sub.graph.n()), split_k,
                                              egd::derive_seed(cfg.seed, 0x5b, i));
          json classes = json::array();
          for (const auto &cls : sr.parts) {
            egd::EdgeSubset host(g.m());
            for (auto e : cls.to_vector())
              host.insert(sub.to_host_edge[e]);
            classes.push_back(pairs_of(host));
          }
          pj["split"] = {{"classes", std::move(classes)},
                         {"attempts", sr.attempts},
                         {"verified", sr.verified}};
        }
        parts.push_back(std::move(pj));
      }
      json j = {{"parts", std::move(parts)},
                {"removed", pairs_of(ad.removed)},
                {"violations", ad.violations},
                {"vertex_total", ad.vertex_total},
                {"vertex_bound_ok", ad.vertex_bound_ok},
                {"removed_bound_ok", ad.removed_bound_ok}};
      emit(out, j.dump() + "\n");
      return 0;
    }

    if (*route) {
      egd::Graph g = read_graph(file);
      egd::PairBatch b;
      b.t = t_bound;
      if (std::filesystem::is_regular_file(pairs_arg)) {
        std::istringstream in(slurp(pairs_arg));
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
          ++lineno;
          auto body = line.substr(0, line.find('#'));
          std::istringstream ls(body);
          std::string a, c, extra;
          if (!(ls >> a))
            continue;
          if (!(ls >> c) || (ls >> extra))
            throw egd::InputError("expected pair 'u v', got '" + line + "'", lineno);
          try {
            b.pairs.emplace_back(static_cast<egd::Vertex>(to_count(a, "pair")),
                                 static_cast<egd::Vertex>(to_count(c, "pair")));
          } catch (const egd::InputError &e) {
            throw egd::InputError(e.what(), lineno);
          }
        }
      } else {
        for (const auto &tok : split_list(pairs_arg)) {
          auto colon = tok.find(':');
          if (colon == std::string::npos)
            throw egd::InputError("pair '" + tok + "' must look like x:y");
          b.pairs.emplace_back(static_cast<egd::Vertex>(to_count(tok.substr(0, colon), "pair")),
                               static_cast<egd::Vertex>(to_count(tok.substr(colon + 1), "pair")));
        }
      }
      egd::VertexSet V = egd::VertexSet::full(g.n());
      if (!through_arg.empty()) {
        V = egd::VertexSet(g.n());
        std::vector<std::string> ids;
        if (std::filesystem::is_regular_file(through_arg)) {
          std::istringstream in(slurp(through_arg));
          std::string tok;
          while (in >> tok)
            ids.push_back(tok);
        } else {
          ids = split_list(through_arg);
        }
        for (const auto &tok : ids) {
          auto v = to_count(tok, "through");
          g.check_vertex(static_cast<egd::Vertex>(v));
          V.insert(static_cast<egd::Vertex>(v));
        }
      }
      egd::RouteOptions ro;
      ro.seed = cfg.seed;
      ro.escalate = escalate;
      ro.strategy = strategy == "oracle" ? egd::RouteStrategy::MatchingOracle
                                         : egd::RouteStrategy::Greedy;
      auto r = egd::route_pairs(g, b, V, ell, ro);
      static const char *oracle_names[] = {"not_run", "feasible", "infeasible", "unknown"};
      json ps = json::array();
      for (const auto &p : r.paths)
        ps.push_back(p ? json(p->vertices) : json(nullptr));
      json j = {{"ok", r.ok},
                {"paths", std::move(ps)},
                {"stuck", r.stuck},
                {"orders_tried", r.orders_tried},
                {"oracle", oracle_names[static_cast<int>(r.oracle)]}};
      emit(out, j.dump() + "\n");
      return 0;
    }

    if (*paths) {
      egd::Graph g = read_graph(file);
      auto sp = egd::well_spread_path_cycle_decompose(
          g, paths_only ? egd::SpreadMode::PathsOnly : egd::SpreadMode::Euler);
      egd::Decomposition d;
      d.source = g.fingerprint();
      d.cycles = sp.cycles;
      json j = egd::decomposition_to_json(g, d, &sp.paths);
      j["feasible"] = sp.feasible;
      emit(out, j.dump() + "\n");
      if (!sp.feasible)
        note("paths: " + std::to_string(sp.unsplit_cycles) +
             " cycles could not be split within the endpoint budget");
      return 0;
    }

    if (*lc) {
      egd::Graph g = read_graph(file);
      egd::LongCycleKnobs k{cfg.y_fraction};
      if (min_len > 0) {
        auto peel = egd::peel_long_cycles(g, min_len, k);
        egd::Decomposition d;
        d.source = g.fingerprint();
        d.cycles = peel.cycles;
        d.single_edges = peel.residual.to_vector();
        json j = egd::decomposition_to_json(g, d);
        j["min_len"] = min_len;
        j["from_dfs"] = peel.from_dfs;
        j["from_back_edge"] = peel.from_back_edge;
        emit(out, j.dump() + "\n");
        return 0;
      }
      auto r = egd::find_long_cycle_dfs(g, k);
      json j = {{"found", r.cycle.has_value()},
                {"path_length", r.path_length},
                {"x", r.x},
                {"y", r.y},
                {"z", r.z}};
      if (r.cycle) {
        j["cycle"] = cycle_json(*r.cycle);
        j["length"] = r.cycle->length();
      } else {
        j["reason"] = r.reason;
        if (r.separator)
          j["separator"] = r.separator->to_vector();
      }
      emit(out, j.dump() + "\n");
      return 0;
    }

    if (*eul) {
      egd::Graph g = read_graph(file);
      egd::Decomposition d;
      d.source = g.fingerprint();
      d.cycles = egd::eulerian_cycle_decompose(g);
      emit(out, egd::decomposition_to_json(g, d).dump() + "\n");
      return 0;
    }

    if (*bench) {
      std::vector<std::string> families =
          families_arg.empty() ? egd::bench_families() : split_list(families_arg);
      std::vector<std::size_t> sizes;
      if (sizes_arg.empty())
        sizes = egd::default_bench_sizes();
      for (const auto &s : split_list(sizes_arg))
        sizes.push_back(to_count(s, "sizes"));
      std::vector<std::uint64_t> seeds;
      for (const auto &s : split_list(seeds_arg))
        seeds.push_back(to_count(s, "seeds"));
      for (const auto &f : families)
        if (!egd::gallai_k(f) && f != "gnp_sparse" && f != "gnp_dense" && f != "eulerian")
          throw egd::InputError("unknown benchmark family '" + f + "'");
      egd::BenchOptions bo;
      bo.deterministic = deterministic;
      bo.repro_dir = repro_dir;
      auto rows = egd::bench_scaling(families, sizes, cfg, seeds, bo);
      std::ostringstream csv;
      egd::write_bench_csv(csv, rows, deterministic);
      emit(out, csv.str());
      int rc = 0;
      for (const auto &r : rows)
        for (const auto &v : r.violations) {
          std::cerr << "bench: " << r.family << " n=" << r.n << " seed=" << r.seed << ": " << v
                    << '\n';
          rc = 1;
        }
      return rc;
    }
  } catch (const egd::InputError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const egd::CapacityError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const egd::AssertionFailure &e) {
    std::cerr << "assertion failed: " << e.what() << '\n';
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
