#include <chrono>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "egdecomp/egdecomp.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace egd;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int id, const std::string &name, bool ok, const std::string &detail) {
  std::cout << "criterion " << std::setw(2) << id << " [" << (ok ? "PASS" : "FAIL") << "] " << name
            << ": " << detail << std::endl;
  if (!ok)
    ++failures;
}

std::string fmt(double x, int prec = 2) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(prec) << x;
  return os.str();
}

ExpanderParams params(double eps, double s) {
  ExpanderParams p;
  p.epsilon = eps;
  p.s = s;
  return p;
}

oracle::Params as_oracle(const ExpanderParams &p, std::size_t n) {
  return {p.epsilon, p.s, p.denom(n)};
}

VertexSet random_subset(const Graph &g, Rng &rng, std::size_t max_size) {
  VertexSet U(g.n());
  std::size_t want = 1 + rng.below(max_size);
  while (U.size() < want)
    U.insert(static_cast<Vertex>(rng.below(g.n())));
  return U;
}

std::vector<BenchRow> grid_rows;
double grid_seconds = 0;

void criterion_validity() {
  auto t0 = Clock::now();
  std::size_t valid = 0, total = 0;
  std::string first_error;
  try {
    grid_rows = bench_scaling(bench_families(), default_bench_sizes(), PipelineConfig::engineering(),
                              {1, 2, 3, 4, 5});
  } catch (const std::exception &e) {
    first_error = e.what();
  }
  grid_seconds = seconds_since(t0);
  // bench_scaling validates each output and throws on the first invalid one
  total = grid_rows.size();
  valid = first_error.empty() ? total : 0;
  bool ok = first_error.empty() && total >= 100 && grid_seconds < 600;
  report(1, "decomposition validity", ok,
         std::to_string(valid) + "/" + std::to_string(total) + " valid over " +
             std::to_string(bench_families().size()) + " families, " + fmt(grid_seconds, 1) + " s" +
             (first_error.empty() ? "" : ", error: " + first_error));
}

void criterion_worst_frontier() {
  std::size_t checks = 0, agree = 0;
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    Graph g = th::connected_gnp(3 + seed % 5, 0.3 + 0.1 * static_cast<double>(seed % 5), seed);
    Rng rng(derive_seed(seed, 0xf2));
    VertexSet U = random_subset(g, rng, g.n());
    for (std::size_t b = 0; b <= 4; ++b) {
      auto fr = worst_case_frontier(g, U, b);
      bool ok = fr.F.size() <= b && neighborhood(g, U, fr.F) == fr.survivors &&
                fr.survivors.size() == oracle::min_survivors_all_F(g, oracle::vertex_mask(U), b);
      ++checks;
      agree += ok;
    }
  }
  report(2, "worst-F oracle equivalence", agree == checks,
         std::to_string(agree) + "/" + std::to_string(checks) +
             " (graph, U, budget) triples on 500 connected graphs, n <= 7");
}

void criterion_certifier() {
  std::size_t graphs = 0, agree = 0, violations = 0, reverified = 0, non_expanders = 0;
  const double svals[] = {0.0, 0.25, 0.5};
  for (std::uint64_t seed = 1; graphs < 200; ++seed) {
    const std::size_t n = 4 + seed % 11;
    Graph g = gen_gnp(n, 0.25 + 0.05 * static_cast<double>(seed % 6), seed);
    if (g.m() > 64)
      continue;
    ++graphs;
    auto p = params(seed % 2 ? 1.0 / 32 : 0.5, svals[seed % 3]);
    auto v = certify_expander(g, p, CertifyMode::Exhaustive);
    auto ref = oracle::reference_violation(g, as_oracle(p, n));
    agree += v.is_expander == !ref.has_value();
    non_expanders += ref.has_value();
    if (v.violation) {
      ++violations;
      reverified += confirm_violation(g, p, *v.violation);
    }
  }
  report(3, "certifier soundness", agree == graphs && reverified == violations,
         std::to_string(agree) + "/" + std::to_string(graphs) + " verdicts agree (" +
             std::to_string(non_expanders) + " non-expanders), " + std::to_string(reverified) + "/" +
             std::to_string(violations) + " violations re-verify");
}

void criterion_theorem_properties() {
  const auto p = params(1.0 / 32, 2);
  std::size_t certified = 0, samples = 0, faults = 0;
  std::size_t core_checks = 0, core_expand_ok = 0, core_size_ok = 0;
  for (std::uint64_t seed = 1; certified < 40 && seed < 2000; ++seed) {
    Graph g = gen_gnp(8 + seed % 7, 0.5 + 0.05 * static_cast<double>(seed % 5), seed);
    if (!certify_expander(g, p, CertifyMode::Exhaustive).is_expander)
      continue;
    ++certified;
    const double denom = p.denom(g.n());
    Rng rng(derive_seed(seed, 0xd1));
    for (int t = 0; t < 300; ++t) {
      VertexSet U = random_subset(g, rng, max_subset_size(g.n()));
      std::size_t fmax = static_cast<std::size_t>(std::floor(p.s * static_cast<double>(U.size()) / 2));
      EdgeSubset F(g.m());
      std::size_t fk = std::min<std::size_t>(rng.below(fmax + 1), g.m());
      while (F.size() < fk)
        F.insert(static_cast<EdgeId>(rng.below(g.m())));
      std::size_t d = 1 + rng.below(2);
      auto out = check_dichotomy(g, p, U, F, d);
      ++samples;
      faults += out.which == DichotomyCase::Neither;
      if (t % 3 == 0) {
        double tau = 1.0 + static_cast<double>(rng.below(2));
        auto core = extract_well_expanding_core(g, U, tau);
        ++core_checks;
        core_expand_ok += core.is_subset_of(U) &&
                          static_cast<double>(neighborhood(g, core).size()) + 1e-9 >=
                              tau * static_cast<double>(core.size());
        core_size_ok += static_cast<double>(core.size()) + 1e-9 >=
                        p.epsilon * static_cast<double>(U.size()) / (3 * tau * denom);
      }
    }
  }
  bool ok = samples >= 10000 && faults == 0 && core_expand_ok == core_checks &&
            core_size_ok == core_checks;
  report(4, "dichotomy and core on certified expanders", ok,
         std::to_string(samples) + " dichotomy samples on " + std::to_string(certified) +
             " certified expanders, " + std::to_string(faults) + " faults; core " +
             std::to_string(core_expand_ok) + "/" + std::to_string(core_checks) + " expand, " +
             std::to_string(core_size_ok) + "/" + std::to_string(core_checks) + " large enough");
}

void criterion_endpoint_spread() {
  std::size_t ok = 0, max_mult = 0;
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    Graph g = gen_gnp(5 + seed % 120, 0.02 + 0.002 * static_cast<double>(seed % 100), seed);
    auto d = well_spread_path_cycle_decompose(g);
    std::size_t odd = 0;
    for (Vertex v = 0; v < g.n(); ++v)
      odd += g.degree(v) % 2;
    std::size_t worst = 0;
    for (auto m : endpoint_multiplicity(g.n(), d.paths))
      worst = std::max<std::size_t>(worst, m);
    std::vector<std::vector<Vertex>> cycles;
    for (const auto &c : d.cycles)
      cycles.push_back(c.vertices);
    std::size_t edges = 0;
    bool paths_ok = true;
    for (const auto &p : d.paths) {
      paths_ok = paths_ok && check_path(g, p);
      edges += p.length();
    }
    for (const auto &c : d.cycles) {
      paths_ok = paths_ok && check_cycle(g, c);
      edges += c.length();
    }
    max_mult = std::max(max_mult, worst);
    ok += worst <= 2 && d.paths.size() == odd / 2 && paths_ok && edges == g.m();
  }
  report(5, "endpoint spread", ok == 500,
         std::to_string(ok) + "/500 graphs with multiplicity <= 2 and #paths = #odd/2 (max " +
             std::to_string(max_mult) + ")");
}

void criterion_long_cycle() {
  const auto cfg = PipelineConfig::engineering();
  const auto p = params(1.0 / 32, 0);
  std::size_t instances = 0, returned = 0, valid = 0, long_enough = 0, small = 0, large = 0;
  std::size_t separated = 0;
  auto run = [&](const Graph &g) {
    ++instances;
    auto r = find_long_cycle_dfs(g, LongCycleKnobs{cfg.y_fraction});
    if (!r.cycle) {
      // no cycle counts against the length bound, not against validity
      separated += r.separator.has_value();
      return;
    }
    ++returned;
    if (!check_cycle(g, *r.cycle))
      return;
    ++valid;
    const double lgn = lg(static_cast<double>(g.n()));
    const double bound = static_cast<double>(g.n()) / (cfg.c_long * std::pow(lgn, 4));
    long_enough += static_cast<double>(r.cycle->length()) >= bound;
  };
  for (std::uint64_t seed = 1; small < 50 && seed < 5000; ++seed) {
    Graph g = gen_gnp(10 + seed % 11, 0.3, seed);
    if (g.m() == 0 || !certify_expander(g, p, CertifyMode::Exhaustive).is_expander)
      continue;
    ++small;
    run(g);
  }
  for (std::size_t n = 200; n <= 1000; n += 200)
    for (std::size_t d : {3u, 4u, 6u}) {
      if ((n * d) % 2)
        continue;
      Graph g = gen_random_regular(n, d, n + d);
      if (!certify_expander(g, p, CertifyMode::Heuristic).is_expander)
        continue;
      ++large;
      run(g);
    }
  bool ok = small >= 50 && valid == returned &&
            static_cast<double>(long_enough) >= 0.95 * static_cast<double>(instances);
  report(6, "long cycle at desk scale", ok,
         std::to_string(small) + " certified n <= 20 plus " + std::to_string(large) +
             " regular n in [200,1000]; valid " + std::to_string(valid) + "/" +
             std::to_string(returned) + " returned cycles, length bound " +
             std::to_string(long_enough) + "/" + std::to_string(instances) + " (" +
             std::to_string(separated) + " stopped at a separating Y)");
}

void criterion_gallai() {
  std::size_t rows = 0, above = 0, within2 = 0;
  std::map<std::string, std::map<std::size_t, double>> ratio;
  for (const auto &r : grid_rows) {
    auto k = gallai_k(r.family);
    if (!k)
      continue;
    ++rows;
    const auto bound = gallai_lower_bound(*k, r.n);
    above += r.pieces >= bound;
    within2 += r.pieces <= 2 * bound;
    ratio[r.family][r.n] = std::max(ratio[r.family][r.n],
                                    static_cast<double>(r.pieces) / static_cast<double>(bound));
  }
  std::string detail = std::to_string(above) + "/" + std::to_string(rows) + " at or above the bound, " +
                       std::to_string(within2) + "/" + std::to_string(rows) + " within 2x; worst ratios";
  for (const auto &[fam, by_n] : ratio) {
    detail += " " + fam + "{";
    bool first = true;
    for (const auto &[n, x] : by_n) {
      detail += (first ? "" : " ") + std::to_string(n) + ":" + fmt(x, 4);
      first = false;
    }
    detail += "}";
  }
  report(7, "Gallai lower bound", rows > 0 && above == rows && within2 == rows, detail);
}

void criterion_eulerian() {
  std::size_t instances = 0, clean = 0;
  for (const auto &r : grid_rows) {
    if (r.family != "eulerian")
      continue;
    ++instances;
    clean += r.singles == 0;
  }
  auto cfg = PipelineConfig::engineering();
  cfg.eulerian_finish = true;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Graph g = gen_eulerian(256, seed % 2 ? 0.1 : 0.3, seed);
    cfg.seed = seed;
    auto d = decompose_logstar(g, cfg);
    ++instances;
    clean += validate_decomposition(g, d).ok && d.single_edges.empty();
  }
  report(8, "Eulerian closure", clean == instances,
         std::to_string(clean) + "/" + std::to_string(instances) + " Eulerian inputs with zero single edges");
}

void criterion_scaling() {
  std::size_t rows = 0, under = 0;
  std::map<std::string, std::map<std::size_t, std::pair<double, int>>> ppn;
  for (const auto &r : grid_rows) {
    if (r.family != "gnp_sparse" && r.family != "gnp_dense")
      continue;
    ++rows;
    under += static_cast<double>(r.pieces) <= 32.0 * static_cast<double>(r.n);
    auto &cell = ppn[r.family][r.n];
    cell.first += r.pieces_per_n();
    ++cell.second;
  }
  std::string detail = std::to_string(under) + "/" + std::to_string(rows) +
                       " at most 32n; mean pieces/n (log*)";
  for (const auto &[fam, by_n] : ppn) {
    detail += " " + fam + "{";
    bool first = true;
    for (const auto &[n, cell] : by_n) {
      detail += (first ? "" : " ") + std::to_string(n) + ":" + fmt(cell.first / cell.second, 3) + "(" +
                std::to_string(log_star(n)) + ")";
      first = false;
    }
    detail += "}";
  }
  detail += "; grid " + fmt(grid_seconds, 1) + " s";
  report(9, "scaling smoke test", rows > 0 && under == rows && grid_seconds < 900, detail);
}

void criterion_determinism() {
  std::size_t runs = 0, same = 0;
  for (auto cfg : {PipelineConfig::engineering(), PipelineConfig::paper()})
    for (const auto &fam : bench_families())
      for (std::uint64_t seed : {1u, 2u}) {
        Graph g = make_family_instance(fam, 256, seed);
        cfg.seed = seed;
        cfg.eulerian_finish = fam == "eulerian";
        auto a = decomposition_to_json(g, decompose_logstar(g, cfg)).dump();
        auto b = decomposition_to_json(g, decompose_logstar(g, cfg)).dump();
        ++runs;
        same += a == b;
      }
  report(10, "determinism", same == runs,
         std::to_string(same) + "/" + std::to_string(runs) + " byte-identical decomposition JSON pairs");
}

} // namespace

int main() {
  auto t0 = Clock::now();
  criterion_validity();
  criterion_worst_frontier();
  criterion_certifier();
  criterion_theorem_properties();
  criterion_endpoint_spread();
  criterion_long_cycle();
  criterion_gallai();
  criterion_eulerian();
  criterion_scaling();
  criterion_determinism();
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << " in " << fmt(seconds_since(t0), 1) << " s" << std::endl;
  return failures == 0 ? 0 : 1;
}
