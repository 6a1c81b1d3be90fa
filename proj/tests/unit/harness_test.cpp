#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "approach/error.hpp"
#include "approach/harness.hpp"
#include "approach/verify.hpp"

using namespace approach;
namespace fs = std::filesystem;

namespace {

class HarnessTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("approach_harness_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_ / "configs");
    setenv("APPROACH_OUTPUT_DIR", (dir_ / "out").c_str(), 1);
  }
  void TearDown() override {
    unsetenv("APPROACH_OUTPUT_DIR");
    fs::remove_all(dir_);
  }
  std::string write(const std::string& name, const std::string& text) {
    const auto p = dir_ / "configs" / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  fs::path dir_;
};

const char* kMinimal =
    "[scenario]\nname = example1\n[adversary]\nkind = constant\npoints = 1\n[run]\nhorizon = 1000\nseed = 4\n";

}  // namespace

TEST_F(HarnessTest, MinimalRunWritesCsv) {
  std::ostringstream out, err;
  ASSERT_EQ(cli_run(write("a.ini", kMinimal), out, err), 0) << err.str();
  const auto csv = dir_ / "out" / "example1_blocks_constant_s4.csv";
  ASSERT_TRUE(fs::exists(csv));
  const RunRecord r = read_csv_file(csv.string());
  EXPECT_EQ(r.columns.front(), "t");
  EXPECT_EQ(r.column("t").back(), 1000.0);
  EXPECT_EQ(r.get("seed"), "4");
  EXPECT_TRUE(fs::exists(dir_ / "out" / "example1_blocks_constant_s4.summary.txt"));
}

TEST_F(HarnessTest, RepeatedRunsAreByteIdentical) {
  const std::string text =
      "[scenario]\nname = example2\n[adversary]\nkind = random\n[run]\nhorizon = 3000\nseed = 2\nsampling = true\n"
      "metrics = phi_star;cav;phi_xstar\n";
  std::ostringstream out, err;
  ASSERT_EQ(cli_run(write("b.ini", text), out, err), 0) << err.str();
  const auto csv = dir_ / "out" / "example2_blocks_random_s2.csv";
  const std::string first = slurp(csv);
  ASSERT_EQ(cli_run(write("b.ini", text), out, err), 0);
  EXPECT_EQ(slurp(csv), first);
}

TEST_F(HarnessTest, BadKeyIsNamed) {
  std::ostringstream out, err;
  EXPECT_EQ(cli_run(write("c.ini", "[run]\nhorizon = 10\nsede = 1\n"), out, err), 2);
  EXPECT_NE(err.str().find("run.sede"), std::string::npos);
  std::ostringstream out2, err2;
  EXPECT_EQ(cli_run(write("d.ini", "[adversary]\nkind = constant\npoints = 7\n"), out2, err2), 2);
  EXPECT_NE(err2.str().find("adversary.points"), std::string::npos);
}

TEST_F(HarnessTest, SweepRunsEveryConfig) {
  write("one.ini", kMinimal);
  write("two.ini", std::string(kMinimal) + "output = second.csv\n");
  std::ostringstream out, err;
  ASSERT_EQ(cli_sweep((dir_ / "configs").string(), 2, out, err), 0) << err.str() << out.str();
  EXPECT_TRUE(fs::exists(dir_ / "out" / "second.csv"));
  EXPECT_TRUE(fs::exists(dir_ / "out" / "sweep_summary.txt"));
}

TEST_F(HarnessTest, BlackwellAndReport) {
  const std::string cfg = write(
      "bw.ini", "[scenario]\nname = example2_quadrant\n[adversary]\nkind = random\n[run]\nhorizon = 2000\n");
  std::ostringstream out, err;
  ASSERT_EQ(cli_blackwell(cfg, out, err), 0) << err.str();
  EXPECT_NE(out.str().find("worst inner-product violation"), std::string::npos);
  const auto csv = (dir_ / "out" / "example2_quadrant_blackwell_s1.csv").string();
  ASSERT_TRUE(fs::exists(csv));
  std::ostringstream rout, rerr;
  EXPECT_EQ(cli_report({csv}, 10.0, rout, rerr), 0) << rerr.str();
  EXPECT_TRUE(fs::exists(dir_ / "out" / "report.csv"));
}

TEST_F(HarnessTest, PrepareBuildsRequestedPieces) {
  RunConfig c;
  c.scenario = "example1";
  c.strategy = "constant";
  c.play = "0.25,0.75";
  c.adversary = "switching";
  c.anchor = "1";
  c.other = "0";
  const PreparedRun p = prepare(c);
  EXPECT_EQ(p.strategy->name(), "constant");
  EXPECT_EQ(p.adversary->name(), "switching");
  c.strategy = "bogus";
  EXPECT_THROW(prepare(c), ConfigError);
}

TEST(Verify, AllChecksPass) {
  VerifyOptions o;
  o.grid_1d = 201;
  o.grid_2d = 41;
  const VerifyReport r = verify_targets(o);
  for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << c.name << " error " << c.error;
  EXPECT_EQ(r.example1_grid.rows.size(), 201u);
}

TEST(Verify, CorruptedConstantFails) {
  VerifyOptions o;
  o.grid_1d = 101;
  o.grid_2d = 21;
  o.perturbation = 0.01;
  const VerifyReport r = verify_targets(o);
  EXPECT_FALSE(r.all_pass());
  std::ostringstream out, err;
  EXPECT_NE(cli_verify_targets(o, "", out, err), 0);
  EXPECT_NE(out.str().find("FAIL"), std::string::npos);
}
