#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "egdecomp/egdecomp.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

fs::path scratch() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("egd_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path &p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Runs a shell pipeline where `$EGD` names the CLI.
Run sh(const std::string &pipeline) {
  fs::path out = scratch() / "stdout", err = scratch() / "stderr";
  std::string cmd = "EGD='" + std::string(EGD_CLI_PATH) + "'; (" + pipeline + ") >'" + out.string() +
                    "' 2>'" + err.string() + "'";
  int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

fs::path write_file(const std::string &name, const std::string &text) {
  fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p;
}

} // namespace

TEST(Cli, GenerateDecomposeValidate) {
  auto r = sh("$EGD gen gnp 16 0.5 --seed 7 | $EGD decompose --seed 7 | $EGD validate");
  EXPECT_EQ(r.code, 0) << r.err;
}

TEST(Cli, DecomposeOutputMatchesLibrary) {
  auto g = egd::gen_gnp(40, 0.3, 5);
  fs::path in = write_file("g.txt", egd::to_edge_list(g));
  auto r = sh("$EGD decompose --seed 5 --quiet '" + in.string() + "'");
  ASSERT_EQ(r.code, 0) << r.err;
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["n"], 40);
  EXPECT_EQ(doc["m"], g.m());
  EXPECT_TRUE(egd::validate_decomposition_json(doc, &g).ok);
  auto cfg = egd::PipelineConfig::engineering();
  cfg.seed = 5;
  EXPECT_EQ(doc.dump(), egd::decomposition_to_json(g, egd::decompose_logstar(g, cfg)).dump());
}

TEST(Cli, MalformedLineIsAnInputError) {
  fs::path in = write_file("bad.txt", "3 2\n0 1\na b\n");
  auto r = sh("$EGD decompose '" + in.string() + "'");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
}

TEST(Cli, EdgelessInput) {
  fs::path in = write_file("empty.txt", "5 0\n");
  auto r = sh("$EGD decompose --quiet '" + in.string() + "'");
  ASSERT_EQ(r.code, 0) << r.err;
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_TRUE(doc["cycles"].empty());
  EXPECT_TRUE(doc["edges"].empty());
}

TEST(Cli, RoundTripOverFamilies) {
  for (std::string fam : {"gnp_sparse", "gnp_dense", "gallai2", "eulerian"}) {
    auto r = sh("$EGD gen family " + fam + " 48 --seed 3 > '" + (scratch() / "f.txt").string() +
                "' && $EGD decompose --eulerian-finish --quiet '" + (scratch() / "f.txt").string() +
                "' | $EGD validate --graph '" + (scratch() / "f.txt").string() + "'");
    EXPECT_EQ(r.code, 0) << fam << ": " << r.err;
  }
}

TEST(Cli, ValidateRejectsTamperedDocument) {
  auto g = egd::gen_gnp(20, 0.4, 2);
  auto d = egd::decompose_logstar(g, egd::PipelineConfig::engineering());
  auto doc = egd::decomposition_to_json(g, d);
  ASSERT_FALSE(doc["edges"].empty());
  doc["edges"].push_back(doc["edges"][0]);
  fs::path j = write_file("t.json", doc.dump());
  fs::path gf = write_file("t.txt", egd::to_edge_list(g));
  auto r = sh("$EGD validate --graph '" + gf.string() + "' '" + j.string() + "'");
  EXPECT_NE(r.code, 0);
}

TEST(Cli, UnknownConfigKey) {
  fs::path c = write_file("c.cfg", "tau = 2\nbogus = 1\n");
  auto r = sh("$EGD gen gnp 8 0.5 | $EGD --config '" + c.string() + "' decompose");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("bogus"), std::string::npos) << r.err;
}

TEST(Cli, BenchDeterministicCsv) {
  std::string cmd = "$EGD bench --families gallai1,eulerian --sizes 32 --seeds 1 --deterministic";
  auto a = sh(cmd);
  auto b = sh(cmd);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("family,n,m,seed", 0), 0u);
}

TEST(Cli, SmallerTools) {
  auto r = sh("$EGD gen eulerian 20 0.4 --seed 2 | $EGD euler");
  EXPECT_EQ(r.code, 0) << r.err;
  r = sh("printf '3 2\\n0 1\\n1 2\\n' | $EGD euler");
  EXPECT_EQ(r.code, 2);
  r = sh("printf '4 4\\n0 1\\n1 2\\n2 3\\n3 0\\n' | $EGD route --pairs 0:2 --ell 2");
  EXPECT_EQ(r.code, 0) << r.err;
  r = sh("printf '4 6\\n0 1\\n0 2\\n0 3\\n1 2\\n1 3\\n2 3\\n' | $EGD certify --mode exhaustive");
  EXPECT_EQ(r.code, 0) << r.err;
}
