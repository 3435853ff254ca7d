#include <gtest/gtest.h>

#include <cmath>
#include <iostream>
#include <sstream>

#include "helpers.hpp"

using namespace egd;

namespace {

/// Odd vertices each need a single edge, and a cycle uses at most 2|A| edges.
std::uint64_t gallai_floor(std::size_t k, std::size_t n) {
  const std::uint64_t a = 2 * k + 1, b = n - a;
  std::uint64_t best = UINT64_MAX;
  for (std::uint64_t singles = b; singles <= a * b; ++singles) {
    std::uint64_t rest = a * b - singles;
    best = std::min(best, singles + (rest + 2 * a - 1) / (2 * a));
  }
  return best;
}

std::string csv(const std::vector<BenchRow> &rows, bool det) {
  std::ostringstream os;
  write_bench_csv(os, rows, det);
  return os.str();
}

} // namespace

TEST(Generators, GnpExtremes) {
  Graph e = gen_gnp(20, 0.0, 1);
  EXPECT_EQ(e.m(), 0u);
  Graph k = gen_gnp(20, 1.0, 1);
  EXPECT_EQ(k.m(), 190u);
  EXPECT_THROW(gen_gnp(5, 1.5, 1), InputError);
}

TEST(Generators, GnpEdgeCountWithinThreeSigma) {
  const std::size_t n = 400;
  const double p = 0.05;
  const double pairs = n * (n - 1) / 2.0;
  const double mean = pairs * p, sigma = std::sqrt(pairs * p * (1 - p));
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Graph g = gen_gnp(n, p, seed);
    EXPECT_LE(std::abs(static_cast<double>(g.m()) - mean), 3 * sigma) << "seed " << seed;
  }
  EXPECT_EQ(gen_gnp(n, p, 3).edge_pairs(), gen_gnp(n, p, 3).edge_pairs());
}

TEST(Generators, GallaiGraph) {
  Graph g = gen_gallai_bipartite(1, 12);
  EXPECT_EQ(g.n(), 12u);
  EXPECT_EQ(g.m(), 27u);
  for (Vertex v = 0; v < 3; ++v)
    EXPECT_EQ(g.degree(v), 9u);
  for (Vertex v = 3; v < 12; ++v)
    EXPECT_EQ(g.degree(v), 3u);
  for (EdgeId e = 0; e < g.m(); ++e)
    EXPECT_TRUE((g.edge(e).u < 3) != (g.edge(e).v < 3));
  EXPECT_EQ(gallai_lower_bound(1, 12), 12u);
  for (std::size_t k : {1u, 2u, 5u})
    for (std::size_t n : {2 * k + 2, std::size_t{40}, std::size_t{129}})
      EXPECT_EQ(gallai_lower_bound(k, n), gallai_floor(k, n)) << k << ' ' << n;
  EXPECT_THROW(gen_gallai_bipartite(2, 5), InputError);
}

TEST(Generators, EulerianHasEvenDegrees) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Graph g = gen_eulerian(50 + seed, 0.1, seed);
    EXPECT_TRUE(g.is_eulerian());
  }
  Graph k = gen_eulerian(9, 1.0, 1);
  EXPECT_EQ(k.m(), 36u);
}

TEST(Generators, RandomRegular) {
  Graph g = gen_random_regular(60, 5, 3);
  for (Vertex v = 0; v < g.n(); ++v)
    EXPECT_EQ(g.degree(v), 5u);
  EXPECT_THROW(gen_random_regular(7, 3, 1), InputError);
}

TEST(Families, NamesAndInstances) {
  EXPECT_EQ(gallai_k("gallai5"), 5u);
  EXPECT_FALSE(gallai_k("gallai"));
  EXPECT_FALSE(gallai_k("gnp_dense"));
  for (const auto &f : bench_families())
    EXPECT_NO_THROW(make_family_instance(f, 64, 1)) << f;
  EXPECT_THROW(make_family_instance("petersen", 10, 1), InputError);
}

TEST(Bench, EmptySizeListGivesHeaderOnly) {
  auto rows = bench_scaling(bench_families(), {}, PipelineConfig::engineering(), {1});
  EXPECT_TRUE(rows.empty());
  EXPECT_EQ(csv(rows, false), "family,n,m,seed,cycles,singles,pieces,pieces_per_n,lower_bound,runtime_ms\n");
}

TEST(Bench, SmallGridIsValid) {
  auto rows = bench_scaling(bench_families(), {64, 128}, PipelineConfig::engineering(), {1, 2});
  ASSERT_EQ(rows.size(), bench_families().size() * 4);
  for (const auto &r : rows) {
    std::cout << r.family << " n=" << r.n << " pieces=" << r.pieces << " pieces/n=" << r.pieces_per_n()
              << '\n';
    if (auto k = gallai_k(r.family)) {
      ASSERT_TRUE(r.lower_bound);
      EXPECT_GE(r.pieces, *r.lower_bound);
      EXPECT_EQ(*r.lower_bound, gallai_floor(*k, r.n));
    } else {
      EXPECT_FALSE(r.lower_bound);
    }
    if (r.family == "eulerian") {
      EXPECT_EQ(r.singles, 0u);
    }
    EXPECT_EQ(r.cycles + r.singles, r.pieces);
  }
}

TEST(Bench, DeterministicCsvIsReproducible) {
  std::vector<std::string> fams = {"gnp_sparse", "gallai2", "eulerian"};
  BenchOptions opt;
  opt.deterministic = true;
  auto a = bench_scaling(fams, {96}, PipelineConfig::engineering(), {3, 4}, opt);
  auto b = bench_scaling(fams, {96}, PipelineConfig::engineering(), {3, 4}, opt);
  EXPECT_EQ(csv(a, true), csv(b, true));
  std::string text = csv(a, true);
  std::istringstream lines(text);
  std::string line;
  std::getline(lines, line);
  while (std::getline(lines, line))
    EXPECT_EQ(line.back(), ',') << line;
}
