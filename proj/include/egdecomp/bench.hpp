#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "io.hpp"
#include "pipeline.hpp"

namespace egd {

/// gnp_sparse (p = 8/n), gnp_dense (p = 0.5), gallai1/2/5, eulerian (p = 16/n).
inline const std::vector<std::string> &bench_families() {
  static const std::vector<std::string> all = {"gnp_sparse", "gnp_dense", "gallai1",
                                               "gallai2",    "gallai5",   "eulerian"};
  return all;
}

inline const std::vector<std::size_t> &default_bench_sizes() {
  static const std::vector<std::size_t> sizes = {128, 256, 512, 1024, 2048};
  return sizes;
}

/// k of a "gallaiK" family name, if it is one.
inline std::optional<std::size_t> gallai_k(const std::string &family) {
  if (family.rfind("gallai", 0) != 0 || family.size() == 6)
    return std::nullopt;
  const std::string digits = family.substr(6);
  if (digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 6)
    return std::nullopt;
  return static_cast<std::size_t>(std::stoul(digits));
}

inline Graph make_family_instance(const std::string &family, std::size_t n, std::uint64_t seed) {
  const double nn = static_cast<double>(n);
  if (family == "gnp_sparse")
    return gen_gnp(n, n ? std::min(1.0, 8.0 / nn) : 0.0, seed);
  if (family == "gnp_dense")
    return gen_gnp(n, 0.5, seed);
  if (family == "eulerian")
    return gen_eulerian(n, n ? std::min(1.0, 16.0 / nn) : 0.0, seed);
  if (auto k = gallai_k(family))
    return gen_gallai_bipartite(*k, n);
  throw InputError("unknown benchmark family '" + family + "'");
}

struct BenchRow {
  std::string family;
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  std::size_t cycles = 0;
  std::size_t singles = 0;
  std::size_t pieces = 0;
  std::optional<std::uint64_t> lower_bound;
  double runtime_ms = 0;
  std::vector<std::string> violations;

  double pieces_per_n() const { return n ? static_cast<double>(pieces) / static_cast<double>(n) : 0; }
};

struct BenchOptions {
  /// Omit timings so identical seeds give identical CSV bytes.
  bool deterministic = false;
  /// Where failing instances are written; empty: the system temp directory.
  std::string repro_dir;
  double scaling_ceiling = 32;
};

/// Validity failure, carrying the repro file path.
class BenchFailure : public AssertionFailure {
public:
  BenchFailure(const std::string &what, std::string repro)
      : AssertionFailure(what + " (instance saved to " + repro + ")"), repro_(std::move(repro)) {}
  const std::string &repro() const { return repro_; }

private:
  std::string repro_;
};

/**
   Runs decompose_logstar (Eulerian finisher on) over the grid in
   (family, n, seed) order. Every output is validated; an invalid one
   throws BenchFailure after saving the instance. Family targets (Gallai
   bound, 2x bound, scaling ceiling, zero singles on Eulerian inputs) are
   recorded per row in `violations`.
 */
inline std::vector<BenchRow> bench_scaling(const std::vector<std::string> &families,
                                           const std::vector<std::size_t> &sizes,
                                           const PipelineConfig &cfg,
                                           const std::vector<std::uint64_t> &seeds,
                                           const BenchOptions &opt = {}) {
  std::vector<BenchRow> rows;
  for (const auto &family : families) {
    for (std::size_t n : sizes) {
      for (std::uint64_t seed : seeds) {
        Graph g = make_family_instance(family, n, seed);
        PipelineConfig c = cfg;
        c.seed = seed;
        c.eulerian_finish = true;
        auto t0 = std::chrono::steady_clock::now();
        Decomposition d = decompose_logstar(g, c);
        double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        auto v = validate_decomposition(g, d);
        if (!v.ok) {
          namespace fs = std::filesystem;
          fs::path dir = opt.repro_dir.empty() ? fs::temp_directory_path() : fs::path(opt.repro_dir);
          fs::create_directories(dir);
          fs::path file =
              dir / ("bench_fail_" + family + "_" + std::to_string(n) + "_" + std::to_string(seed) + ".txt");
          std::ofstream out(file);
          write_edge_list(out, g);
          throw BenchFailure(family + " n=" + std::to_string(n) + " seed=" + std::to_string(seed) +
                                 ": " + v.first_violation.value_or("invalid decomposition"),
                             file.string());
        }
        BenchRow r;
        r.family = family;
        r.n = n;
        r.m = g.m();
        r.seed = seed;
        r.cycles = d.cycles.size();
        r.singles = d.single_edges.size();
        r.pieces = d.pieces();
        r.runtime_ms = ms;
        if (auto k = gallai_k(family)) {
          r.lower_bound = gallai_lower_bound(*k, n);
          if (r.pieces < *r.lower_bound)
            r.violations.push_back("pieces below the Gallai lower bound");
          if (r.pieces > 2 * *r.lower_bound)
            r.violations.push_back("pieces above twice the Gallai lower bound");
        }
        if ((family == "gnp_sparse" || family == "gnp_dense") &&
            static_cast<double>(r.pieces) > opt.scaling_ceiling * static_cast<double>(n))
          r.violations.push_back("pieces above the scaling ceiling");
        if (family == "eulerian" && r.singles != 0)
          r.violations.push_back("single edges left on an Eulerian input");
        rows.push_back(std::move(r));
      }
    }
  }
  return rows;
}

inline void write_bench_csv(std::ostream &out, const std::vector<BenchRow> &rows,
                            bool deterministic = false) {
  out << "family,n,m,seed,cycles,singles,pieces,pieces_per_n,lower_bound,runtime_ms\n";
  for (const auto &r : rows) {
    std::ostringstream ppn;
    ppn << std::fixed << std::setprecision(4) << r.pieces_per_n();
    out << r.family << ',' << r.n << ',' << r.m << ',' << r.seed << ',' << r.cycles << ','
        << r.singles << ',' << r.pieces << ',' << ppn.str() << ',';
    if (r.lower_bound)
      out << *r.lower_bound;
    out << ',';
    if (!deterministic) {
      std::ostringstream ms;
      ms << std::fixed << std::setprecision(2) << r.runtime_ms;
      out << ms.str();
    }
    out << '\n';
  }
}

} // namespace egd
