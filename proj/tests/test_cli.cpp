#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string netlist(const std::string& name) { return (fs::path(LINKLOGIC_NETLIST_DIR) / name).string(); }

Result cli(const std::string& args) {
  // ctest runs cases in parallel, so each one gets its own stderr file.
  const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
  const auto err_file = fs::temp_directory_path() / (std::string("linklogic_cli_") + info->name() + ".err");
  const std::string cmd = std::string("\"") + LINKLOGIC_CLI + "\" " + args + " 2>\"" + err_file.string() + "\"";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = slurp(err_file);
  return r;
}

std::vector<nlohmann::json> records(const std::string& out) {
  std::vector<nlohmann::json> v;
  std::istringstream is(out);
  std::string line;
  while (std::getline(is, line)) v.push_back(nlohmann::json::parse(line));
  return v;
}

}  // namespace

TEST(Cli, RunCombinational) {
  const auto r = cli("run " + netlist("nand.lnl") + " --vector all --json-lines");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto recs = records(r.out);
  ASSERT_EQ(recs.size(), 4u);
  EXPECT_EQ(recs[0]["outputs"]["x"], "1");
  EXPECT_EQ(recs[3]["outputs"]["x"], "0");
}

TEST(Cli, RunSequentialTable) {
  const auto r = cli("run " + netlist("shift4.lnl") + " --cycles 4");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("0.75"), std::string::npos);
  EXPECT_NE(r.out.find("3.75"), std::string::npos);
}

TEST(Cli, TraceFileHasOneRecordPerLine) {
  const auto path = fs::temp_directory_path() / "linklogic_cli_trace.jsonl";
  const auto r = cli("run " + netlist("shift4.lnl") + " --cycles 1 --trace " + path.string());
  ASSERT_EQ(r.code, 0) << r.err;
  const auto recs = records(slurp(path));
  EXPECT_FALSE(recs.empty());
  for (const auto& rec : recs) EXPECT_TRUE(rec.contains("t") && rec.contains("element") && rec.contains("state"));
  fs::remove(path);
}

TEST(Cli, TruthTableOfFullAdder) {
  const auto r = cli("truth-table " + netlist("fulladder.lnl") + " --json-lines");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto recs = records(r.out);
  ASSERT_EQ(recs.size(), 8u);
  for (const auto& rec : recs) {
    int s = 0;
    for (const auto& [k, v] : rec["inputs"].items()) s += v.get<int>();
    EXPECT_EQ(rec["outputs"]["sum"].get<int>(), s % 2);
    EXPECT_EQ(rec["outputs"]["cout"].get<int>(), s >= 2 ? 1 : 0);
  }
}

TEST(Cli, CheckPassesAndFails) {
  const auto ok = cli("check " + netlist("shift4.lnl") + " --json-lines");
  ASSERT_EQ(ok.code, 0) << ok.err;
  const auto rec = records(ok.out).at(0);
  EXPECT_EQ(rec["result"], "PASS");
  EXPECT_LE(rec["isolation"].get<int>(), 2);

  const auto bad = cli("check " + netlist("shift4_badclock.lnl"));
  EXPECT_EQ(bad.code, 3);
  EXPECT_NE(bad.out.find("FAIL"), std::string::npos);
  EXPECT_NE(bad.err.find("kind=Validation line=2"), std::string::npos) << bad.err;
}

TEST(Cli, ReverseFredkin) {
  const auto r = cli("reverse " + netlist("fredkin.lnl") + " --outputs co=1,ao=1,bo=0 --json-lines");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rec = records(r.out).at(0);
  EXPECT_EQ(rec["inputs"]["c"], "1");
  EXPECT_EQ(rec["inputs"]["a"], "0");
  EXPECT_EQ(rec["inputs"]["b"], "1");
  const auto nand = cli("reverse " + netlist("nand.lnl") + " --outputs x=1");
  EXPECT_NE(nand.code, 0);
  EXPECT_NE(nand.err.find("kind=NotReversible"), std::string::npos) << nand.err;
}

TEST(Cli, EnergyDefaults) {
  const auto r = cli("energy mems --json-lines");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(records(r.out).at(0)["transistor_equivalents"].get<double>(), 2288.0);
  const auto d = cli("energy drag --freq 100e6 --json-lines");
  ASSERT_EQ(d.code, 0) << d.err;
  EXPECT_NEAR(records(d.out).at(0)["energy_per_joint_J"].get<double>() / 2.4e-27, 1.0, 0.01);
  const auto bad = cli("energy landauer --temperature=-3");
  EXPECT_EQ(bad.code, 3) << bad.err;
}

TEST(Cli, RenderWritesFrames) {
  const auto dir = fs::temp_directory_path() / "linklogic_cli_render_dir";
  fs::remove_all(dir);
  const auto r = cli("render " + netlist("shift4.lnl") + " --cycles 1 --reverse --out " + dir.string());
  ASSERT_EQ(r.code, 0) << r.err;
  std::size_t n = 0;
  for (const auto& e : fs::directory_iterator(dir)) n += e.path().extension() == ".svg";
  EXPECT_EQ(n, 21u);
  EXPECT_EQ(slurp(dir / "frame_0001.svg"), slurp(dir / "frame_0019.svg"));
  const auto lock = cli("render --lock 10 --out " + dir.string());
  ASSERT_EQ(lock.code, 0) << lock.err;
  EXPECT_EQ(slurp(lock.out.substr(0, lock.out.find('\n'))), slurp(fs::path(LINKLOGIC_GOLDEN_DIR) / "lock_10.svg"));
  fs::remove_all(dir);
}

TEST(Cli, Diagnostics) {
  const auto bad_file = fs::temp_directory_path() / "linklogic_cli_bad.lnl";
  std::ofstream(bad_file) << "dualrail A in\ngate nand g a=A b=Q x=X clock=0\n";
  const auto r = cli("run " + bad_file.string());
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("error: kind=UnknownName line=2"), std::string::npos) << r.err;
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
  fs::remove(bad_file);

  const auto missing = cli("run /nonexistent/x.lnl");
  EXPECT_EQ(missing.code, 5);
  EXPECT_NE(missing.err.find("kind=IoFailure"), std::string::npos) << missing.err;

  const auto usage = cli("frobnicate");
  EXPECT_EQ(usage.code, 2);
  EXPECT_NE(usage.err.find("kind=Usage"), std::string::npos) << usage.err;
}
