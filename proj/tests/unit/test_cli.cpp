#include <gtest/gtest.h>

#include <sstream>

#include "commands.hpp"
#include "oramsey/io.hpp"

namespace oramsey {
namespace {

namespace fs = std::filesystem;

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  CliResult r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("oramsey_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    write_file(p, text);
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(Cli, ValidateReportsTheAnalysis) {
  const std::string g = file("g.txt", "kind = rn\nn = 3\nR = [(0,1), (1,2)]\nN = [(0,2)]\norder = [0, 1, 2]\n");
  const CliResult r = run({"validate", g});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.out, "OK rn n=3 |R|=2 |N|=1 good=false ell_rn_max=2\nbad quasicycle: 0 1 2\n");
}

TEST_F(Cli, ValidateRejectsBadFiles) {
  const CliResult overlap =
      run({"validate", file("a.txt", "kind = rn\nn = 2\nR = [(0,1)]\nN = [(0,1)]\norder = [0, 1]\n")});
  EXPECT_EQ(overlap.code, cli::kExitFails);
  EXPECT_EQ(overlap.out.rfind("INVALID NotDisjoint", 0), 0u) << overlap.out;
  const CliResult open = run({"validate", file("b.txt", "kind = poset\nn = 3\nR = [(0,1), (1,2)]\norder = [0, 1, 2]\n")});
  EXPECT_EQ(open.code, cli::kExitFails);
  EXPECT_NE(open.out.find("NotTransitive"), std::string::npos);
}

TEST_F(Cli, GenerateThenValidate) {
  EXPECT_EQ(run({"generate", "chain", "3", "-o", path("c3.txt")}).code, 0);
  EXPECT_EQ(run({"validate", path("c3.txt")}).out, "OK poset n=3 |R|=3\n");
  EXPECT_EQ(run({"generate", "antichain", "2"}).out, "kind = poset\nn = 2\nR = []\norder = [0, 1]\n");
  EXPECT_NE(run({"generate", "star", "2"}).code, 0);
}

TEST_F(Cli, ArrowHoldsAndFails) {
  for (int k : {2, 3, 5, 6}) {
    run({"generate", "chain", std::to_string(k), "-o", path("c" + std::to_string(k) + ".txt")});
  }
  const CliResult holds = run({"arrow", path("c6.txt"), path("c3.txt"), path("c2.txt")});
  EXPECT_EQ(holds.code, cli::kExitOk);
  EXPECT_EQ(holds.out, "HOLDS\n");
  const std::string ce = path("ce.txt");
  const CliResult fails = run({"arrow", path("c5.txt"), path("c3.txt"), path("c2.txt"), "--counterexample", ce});
  EXPECT_EQ(fails.code, cli::kExitFails);
  EXPECT_EQ(fails.out, "FAILS\ncounterexample: " + ce + " (10 copies)\n");
  const Document doc = load_document(ce);
  ASSERT_TRUE(doc.coloring);
  EXPECT_EQ(doc.coloring->size(), 10u);
  EXPECT_FALSE(find_monochromatic(chain(5), *doc.coloring, chain(3), chain(2)));

  const CliResult limited = run({"arrow", path("c6.txt"), path("c3.txt"), path("c2.txt"), "--max-nodes", "1"});
  EXPECT_EQ(limited.code, cli::kExitResource);
  EXPECT_EQ(limited.out.rfind("UNKNOWN", 0), 0u);
}

TEST_F(Cli, ArrowOnAntichains) {
  run({"generate", "antichain", "2", "-o", path("a2.txt")});
  run({"generate", "chain", "1", "-o", path("p.txt")});
  const CliResult r = run({"arrow", path("a2.txt"), path("a2.txt"), path("p.txt"), "--counterexample", path("ce.txt")});
  EXPECT_EQ(r.code, cli::kExitFails);
  const Document doc = load_document(path("ce.txt"));
  EXPECT_NE(doc.coloring->colors()[0], doc.coloring->colors()[1]);
}

TEST_F(Cli, TowerAndFinish) {
  run({"generate", "chain", "1", "-o", path("A.txt")});
  run({"generate", "chain", "2", "-o", path("B.txt")});
  const std::string out = path("tower");
  const CliResult t = run({"tower", "--A", path("A.txt"), "--B", path("B.txt"), "--ell-max", "3", "--out", out});
  ASSERT_EQ(t.code, cli::kExitOk) << t.out << t.err;
  const Manifest m = Manifest::parse(read_file(fs::path(out) / "manifest.txt"));
  EXPECT_EQ(m.get("lambda"), "3");
  EXPECT_EQ(m.get("reached"), "3");
  EXPECT_EQ(m.get("stage.3.reused"), "true");
  EXPECT_EQ(m.get("conditionally_correct"), "false");
  EXPECT_TRUE(fs::exists(fs::path(out) / "C_2.txt"));
  EXPECT_TRUE(fs::exists(fs::path(out) / "h_2.txt"));

  const CliResult f = run({"finish", out});
  ASSERT_EQ(f.code, cli::kExitOk) << f.err;
  EXPECT_NE(f.out.find("OK poset n=3 |R|=3 closure_added=0"), std::string::npos);
  EXPECT_NE(f.out.find("copies of B intact: all (3 of 3, 3 after closure)"), std::string::npos);
  EXPECT_EQ(*load_document(fs::path(out) / "C.txt").poset, chain(3));

  // A tampered stage is caught by its digest.
  write_file(fs::path(out) / "C_2.txt", serialize(chain(3), "C_2") + "# edited\n");
  EXPECT_EQ(run({"finish", out}).code, cli::kExitFails);
}

TEST_F(Cli, AssumedWitnessIsConditional) {
  run({"generate", "chain", "1", "-o", path("A.txt")});
  run({"generate", "chain", "2", "-o", path("B.txt")});
  run({"generate", "chain", "3", "-o", path("W.txt")});
  const std::string out = path("tower");
  const CliResult t = run({"tower", "--A", path("A.txt"), "--B", path("B.txt"), "--ell-max", "2", "--out", out,
                     "--oracle", "assume", "--witness", path("W.txt")});
  ASSERT_EQ(t.code, cli::kExitOk) << t.err;
  const Manifest m = Manifest::parse(read_file(fs::path(out) / "manifest.txt"));
  EXPECT_EQ(m.get("conditionally_correct"), "true");
  EXPECT_EQ(m.get("certification"), "assumed");
  EXPECT_EQ(m.get("reached"), "2");
  EXPECT_FALSE(m.get("stage.3"));
}

TEST_F(Cli, TruncatedTowerCannotFinish) {
  run({"generate", "chain", "1", "-o", path("A.txt")});
  run({"generate", "chain", "2", "-o", path("B.txt")});
  const std::string out = path("tower");
  const CliResult t = run({"tower", "--A", path("A.txt"), "--B", path("B.txt"), "--ell-max", "3", "--out", out,
                     "--always-construct", "--max-vertices", "10"});
  EXPECT_EQ(t.code, cli::kExitResource);
  EXPECT_NE(t.out.find("truncated at C_3: ResourceExceeded"), std::string::npos) << t.out;
  const CliResult f = run({"finish", out});
  EXPECT_EQ(f.code, cli::kExitFails);
  EXPECT_NE(f.err.find("TowerTooShort"), std::string::npos);
  EXPECT_NE(f.err.find("lambda = |X(C_2)| = 3"), std::string::npos) << f.err;
}

TEST_F(Cli, ExportDot) {
  run({"generate", "antichain", "2", "-o", path("a2.txt")});
  const CliResult r = run({"export-dot", path("a2.txt")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("[style=dashed]"), std::string::npos);
  EXPECT_EQ(run({"export-dot", path("a2.txt"), "-o", path("a2.dot")}).code, 0);
  EXPECT_EQ(read_file(path("a2.dot")), r.out);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_NE(run({}).code, 0);
  EXPECT_NE(run({"arrow", "only-one"}).code, 0);
  EXPECT_EQ(run({"validate", path("missing.txt")}).code, cli::kExitFails);
}

}  // namespace
}  // namespace oramsey
