#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <sstream>

#include "linklogic/error.hpp"
#include "linklogic/gates/evaluate.hpp"
#include "linklogic/gates/library.hpp"
#include "linklogic/lnl/build.hpp"
#include "linklogic/lnl/document.hpp"
#include "linklogic/lnl/render.hpp"
#include "linklogic/lnl/run.hpp"
#include "linklogic/lnl/trace_io.hpp"
#include "support.hpp"

namespace lnl = linklogic::lnl;
namespace lg = linklogic::gates;
namespace fs = std::filesystem;
using lg::DualRailValue;

namespace {

const DualRailValue k0 = DualRailValue::zero();
const DualRailValue k1 = DualRailValue::one();

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string shipped(const std::string& name) { return slurp(fs::path(LINKLOGIC_NETLIST_DIR) / name); }

const char* kNand =
    "dualrail A in\n"
    "dualrail B in\n"
    "dualrail X out\n"
    "gate nand g1 a=A b=B x=X clock=0\n";

// Runs `f` and returns the library error it throws.
template <class F>
linklogic::Error error_of(F&& f) {
  try {
    f();
  } catch (const linklogic::Error& e) {
    return e;
  }
  ADD_FAILURE() << "no error thrown";
  return linklogic::Error(linklogic::ErrorKind::Validation, "none");
}

std::string fmt_geometry(linklogic::testing::Gen& gen) {
  std::ostringstream os;
  os.precision(17);
  os << "geometry L=" << gen.uniform(0.5, 2) << " k=" << gen.uniform(0.1, 3);
  if (gen.bit()) os << " r=" << gen.uniform(0.5, 2);
  os << " theta_on=" << gen.uniform(0.1, 1.2) << "\n";
  return os.str();
}

bool updating_goldens() { return std::getenv("LINKLOGIC_UPDATE_GOLDENS") != nullptr; }

void expect_golden(const fs::path& name, const std::string& content) {
  const auto path = fs::path(LINKLOGIC_GOLDEN_DIR) / name;
  if (updating_goldens()) {
    fs::create_directories(path.parent_path());
    std::ofstream(path, std::ios::binary) << content;
    return;
  }
  ASSERT_TRUE(fs::exists(path)) << path;
  EXPECT_TRUE(slurp(path) == content) << "differs from " << path;
}

}  // namespace

TEST(Parse, GateStatement) {
  const auto doc = lnl::parse(kNand);
  ASSERT_EQ(doc.statements.size(), 4u);
  const auto& g = std::get<lnl::GateDecl>(doc.statements[3].decl);
  EXPECT_EQ(g.kind, "nand");
  EXPECT_EQ(g.name, "g1");
  EXPECT_EQ(g.clock, 0);
  EXPECT_EQ(g.pins, (std::vector<std::pair<std::string, std::string>>{{"a", "A"}, {"b", "B"}, {"x", "X"}}));
  const auto built = lnl::build(doc);
  EXPECT_EQ(lg::evaluate(built.netlist, {{"A", k1}, {"B", k1}}, true).at("X"), k0);
}

TEST(Parse, CommentsAndBlankLinesAreIgnored) {
  const auto doc = lnl::parse("# header\n\n  dualrail A in   # trailing\n\t\n");
  ASSERT_EQ(doc.statements.size(), 1u);
  EXPECT_EQ(doc.statements[0].line, 3);
  EXPECT_EQ(doc.statements[0].col, 3);
}

TEST(Parse, UndeclaredRailIsUnknownNameWithLocation) {
  const auto e = error_of([] { lnl::parse("dualrail A in\ndualrail X out\ngate not n1 a=A x=Y clock=0\n"); });
  EXPECT_EQ(e.kind(), linklogic::ErrorKind::UnknownName);
  EXPECT_EQ(e.line(), 3);
  EXPECT_EQ(e.col(), 17);  // the x=Y pair
}

TEST(Parse, DuplicateNames) {
  auto e = error_of([] { lnl::parse("rail r\nrail r\n"); });
  EXPECT_EQ(e.kind(), linklogic::ErrorKind::DuplicateName);
  EXPECT_EQ(e.line(), 2);
  e = error_of([] { lnl::parse(std::string(kNand) + "gate nand g1 a=A b=B x=X clock=1\n"); });
  EXPECT_EQ(e.kind(), linklogic::ErrorKind::DuplicateName);
  EXPECT_EQ(e.line(), 5);
}

TEST(Parse, SecondDriverInOnePhaseIsForbiddenWiring) {
  const auto e = error_of([] {
    lnl::parse("rail a\nrail b\nrail y\nroute link r1 in=a out=y\nroute link r2 in=b out=y\n");
  });
  EXPECT_EQ(e.kind(), linklogic::ErrorKind::ForbiddenWiring);
  EXPECT_EQ(e.line(), 5);
}

TEST(Parse, SyntaxErrorsCarryColumns) {
  struct Case {
    const char* text;
    int line, col;
  };
  const Case cases[] = {
      {"frobnicate x\n", 1, 1},
      {"rail a\nlock l half0=a\n", 2, 15},
      {"rail a\nrail b\nlock l half0=a half0=b\n", 3, 16},
      {"dualrail A in\ngate nand g a=A b=A x=A clock=zero\n", 2, 31},
      {"dualrail A in\nvector v A=0,2\n", 2, 14},
      {"dualrail A sideways\n", 1, 12},
      {"gate mux m a=A clock=0\n", 1, 6},
      {"rail 9a\n", 1, 6},
      {"route bend r in=a out=b\n", 1, 7},
  };
  for (const auto& c : cases) {
    const auto e = error_of([&] { lnl::parse(c.text); });
    EXPECT_EQ(e.kind(), linklogic::ErrorKind::SyntaxError) << c.text;
    EXPECT_EQ(e.line(), c.line) << c.text;
    EXPECT_EQ(e.col(), c.col) << c.text;
  }
}

TEST(Parse, GatePinsMustMatchTheKind) {
  auto e = error_of([] { lnl::parse("dualrail A in\ndualrail X out\ngate not n a=A y=X clock=0\n"); });
  EXPECT_EQ(e.kind(), linklogic::ErrorKind::SyntaxError);
  EXPECT_EQ(e.col(), 16);
  e = error_of([] { lnl::parse("dualrail A in\ngate not n a=A clock=0\n"); });
  EXPECT_EQ(e.kind(), linklogic::ErrorKind::SyntaxError);
}

TEST(Build, ClockRules) {
  auto e = error_of([] { lnl::parse("dualrail i in\ndualrail o out\ncell c in=i out=o clock=0\n"); });
  EXPECT_EQ(e.kind(), linklogic::ErrorKind::Validation);
  e = error_of([] {
    lnl::parse("clock phases=4 rise=0.1 high=0.45 fall=0.1 low=0.35\nclock phases=4 rise=0.1 high=0.45 fall=0.1 low=0.35\n");
  });
  EXPECT_EQ(e.kind(), linklogic::ErrorKind::Validation);
  EXPECT_EQ(e.line(), 2);
  e = error_of([] { lnl::parse("clock phases=3 rise=0.1 high=0.45 fall=0.1 low=0.35\n"); });
  EXPECT_EQ(e.kind(), linklogic::ErrorKind::Validation);
  e = error_of([] { lnl::parse("clock phases=4 rise=0.1 high=0.45 fall=0.1 low=0.5\n"); });
  EXPECT_EQ(e.kind(), linklogic::ErrorKind::Validation);
}

TEST(Build, VectorsNameInputPorts) {
  auto e = error_of([] { lnl::parse(std::string(kNand) + "vector v A=1 Q=0\n"); });
  EXPECT_EQ(e.kind(), linklogic::ErrorKind::UnknownName);
  EXPECT_EQ(e.col(), 14);
  const auto built = lnl::build(lnl::parse(std::string(kNand) + "vector v A=1,0 B=1,1\n"));
  EXPECT_EQ(built.vector("v").at("A"), (std::vector<DualRailValue>{k1, k0}));
  EXPECT_THROW(built.vector("w"), linklogic::UnknownName);
}

TEST(Build, PrimitiveStatements) {
  const auto built = lnl::build(lnl::parse(
      "dualrail d in\ndualrail o out\n"
      "lock k0 half0=d.0 half1=o.1\nlock k1 half0=d.1 half1=o.0\nlock ko half0=o.0 half1=o.1\n"
      "balance b in=clk0 side0=o.1 side1=o.0\n"));
  EXPECT_EQ(built.netlist.locks().size(), 3u);
  EXPECT_EQ(built.netlist.balances().size(), 1u);
  EXPECT_EQ(lg::evaluate(built.netlist, {{"d", k1}}, true).at("o"), k1);
  EXPECT_EQ(lg::evaluate(built.netlist, {{"d", k0}}, true).at("o"), k0);
}

TEST(Build, GeometryOverrides) {
  const auto built = lnl::build(lnl::parse("geometry L=2 theta_on=0.5\n"));
  EXPECT_EQ(built.geometry.L, 2.0);
  EXPECT_EQ(built.geometry.r, 2.0);
  EXPECT_EQ(built.geometry.theta_on, 0.5);
  EXPECT_EQ(error_of([] { lnl::parse("geometry L=-1\n"); }).kind(), linklogic::ErrorKind::Validation);
}

TEST(RoundTrip, ShippedExamples) {
  for (const auto& entry : fs::directory_iterator(LINKLOGIC_NETLIST_DIR)) {
    if (entry.path().extension() != ".lnl") continue;
    const auto doc = lnl::parse(slurp(entry.path()));
    const auto text = lnl::serialize(doc);
    EXPECT_EQ(lnl::parse(text), doc) << entry.path();
    EXPECT_EQ(lnl::serialize(lnl::parse(text)), text) << entry.path();
  }
}

TEST(RoundTrip, GeneratedDocuments) {
  linklogic::testing::Gen gen(81);
  const auto kinds = lg::library_kinds();
  for (int trial = 0; trial < 100; ++trial) {
    std::string text;
    const int nin = gen.integer(1, 3);
    std::vector<std::string> avail;
    for (int i = 0; i < nin; ++i) {
      text += "dualrail in" + std::to_string(i) + " in\n";
      avail.push_back("in" + std::to_string(i));
    }
    const int ngates = gen.integer(1, 4);
    for (int g = 0; g < ngates; ++g) {
      const auto kind = kinds[static_cast<std::size_t>(gen.integer(0, static_cast<int>(kinds.size()) - 1))];
      std::string line = "gate " + std::string(lg::to_string(kind)) + " g" + std::to_string(g);
      for (const auto& p : lg::gate_inputs(kind))
        line += " " + p + "=" + avail[static_cast<std::size_t>(gen.integer(0, static_cast<int>(avail.size()) - 1))];
      for (const auto& p : lg::gate_outputs(kind)) {
        const std::string r = "w" + std::to_string(g) + "_" + p;
        text += "dualrail " + r + (gen.bit() ? " out" : "") + "\n";
        line += " " + p + "=" + r;
        avail.push_back(r);
      }
      line += " clock=" + std::to_string(g % 4);
      if (gen.bit()) line += " cell=" + std::to_string(gen.integer(0, 9));
      text += line + "\n";
    }
    text += "vector v";
    for (int i = 0; i < nin; ++i) {
      text += " in" + std::to_string(i) + "=";
      const int len = gen.integer(1, 4);
      for (int k = 0; k < len; ++k) text += std::string(k ? "," : "") + (gen.bit() ? "1" : (gen.bit() ? "0" : "b"));
    }
    text += "\n";
    text += fmt_geometry(gen);
    const auto doc = lnl::parse(text);
    EXPECT_EQ(lnl::parse(lnl::serialize(doc)), doc) << text;
  }
}

TEST(Shipped, FullAdderTable) {
  const auto built = lnl::build(lnl::parse(shipped("fulladder.lnl")));
  const auto t = lg::truth_table(built.netlist);
  ASSERT_EQ(t.rows.size(), 8u);
  for (const auto& r : t.rows) {
    const int s = r.in[0] + r.in[1] + r.in[2];
    EXPECT_EQ(r.out, (std::vector<bool>{s % 2 == 1, s >= 2}));
  }
}

TEST(Shipped, XorFromNandsMatchesXor) {
  const auto built = lnl::build(lnl::parse(shipped("xor_nand.lnl")));
  const auto t = lg::truth_table(built.netlist);
  for (const auto& r : t.rows) EXPECT_EQ(r.out[0], r.in[0] != r.in[1]);
}

TEST(Run, NandVector) {
  const auto built = lnl::build(lnl::parse(shipped("nand.lnl")));
  const auto res = lnl::run(built, built.vector("ones"), 1);
  ASSERT_EQ(res.rows.size(), 1u);
  EXPECT_EQ(res.rows[0].at("x"), k0);
  EXPECT_FALSE(res.sequential);
  const auto all = lnl::run(built, built.vector("all"), 1);
  ASSERT_EQ(all.rows.size(), 4u);
  EXPECT_EQ(all.rows[3].at("x"), k0);
  EXPECT_EQ(all.rows[0].at("x"), k1);
}

TEST(Run, ShiftRegisterDelaysTheStream) {
  const auto built = lnl::build(lnl::parse(shipped("shift4.lnl")));
  const auto res = lnl::run(built, built.vector("stream"), 5);
  ASSERT_TRUE(res.sequential);
  const auto& out = res.samples.at("out");
  const std::vector<DualRailValue> want{k1, k0, k1, k1};
  for (std::size_t c = 0; c < want.size(); ++c) {
    EXPECT_EQ(out[c].value, want[c]);
    EXPECT_DOUBLE_EQ(out[c].t, c + 0.75);
  }
  EXPECT_TRUE(out[4].value.is_blank());
}

TEST(Run, FailingClockStopsBeforeSimulation) {
  const auto built = lnl::build(lnl::parse(shipped("shift4_badclock.lnl")));
  const auto e = error_of([&] { lnl::run(built, built.vector("stream"), 4); });
  EXPECT_EQ(e.kind(), linklogic::ErrorKind::Validation);
  EXPECT_EQ(e.line(), 2);
}

TEST(Run, MissingVectorPortIsRejected) {
  const auto built = lnl::build(lnl::parse(kNand));
  EXPECT_THROW(lnl::run(built, {{"A", {k1}}}, 1), linklogic::ValidationError);
}

TEST(TraceIo, OneRecordPerElementPerFrame) {
  const auto built = lnl::build(lnl::parse(shipped("shift4.lnl")));
  const auto res = lnl::run(built, built.vector("stream"), 2);
  std::ostringstream os;
  lnl::write_trace_jsonl(os, res.trace);
  std::istringstream is(os.str());
  std::string line;
  std::size_t n = 0;
  double last_t = -1;
  while (std::getline(is, line)) {
    const auto rec = nlohmann::json::parse(line);
    ASSERT_EQ(rec.size(), 3u);
    EXPECT_GE(rec.at("t").get<double>(), last_t);
    last_t = rec.at("t").get<double>();
    EXPECT_FALSE(rec.at("element").get<std::string>().empty());
    EXPECT_FALSE(rec.at("state").get<std::string>().empty());
    ++n;
  }
  const auto& net = built.netlist;
  EXPECT_EQ(n, res.trace.frames.size() * (net.locks().size() + net.balances().size()));
}

TEST(Render, LockStatesMatchGoldens) {
  const linklogic::kinematics::LockGeometry g;
  expect_golden("lock_00.svg", lnl::render_lock_svg(g, false, false));
  expect_golden("lock_10.svg", lnl::render_lock_svg(g, true, false));
  expect_golden("lock_01.svg", lnl::render_lock_svg(g, false, true));
}

TEST(Render, HomeLockHasVerticalSideLinks) {
  const auto svg = lnl::render_lock_svg({}, false, false);
  // Side links are the only lines; each keeps its x coordinate.
  std::size_t pos = 0, lines = 0;
  while ((pos = svg.find("<line x1=\"", pos)) != std::string::npos) {
    const auto x1 = svg.substr(pos + 10, svg.find('"', pos + 10) - pos - 10);
    const auto px2 = svg.find("x2=\"", pos) + 4;
    const auto x2 = svg.substr(px2, svg.find('"', px2) - px2);
    EXPECT_EQ(x1, x2);
    ++lines;
    ++pos;
  }
  EXPECT_EQ(lines, 5u);  // four side links and the connecting link
  EXPECT_NE(svg.find("<polygon points=\"100.000,150.000 90.000,168.000 110.000,168.000\""), std::string::npos);
}

TEST(Render, RegisterTraceMatchesGoldensAndReadsBackwards) {
  const auto built = lnl::build(lnl::parse(shipped("shift4.lnl")));
  const auto res = lnl::run_and_reverse(built, built.vector("stream"), 1);
  const auto& frames = res.trace.frames;
  ASSERT_EQ(frames.size(), 2 * 10 + 1u);
  std::vector<std::string> svgs;
  for (const auto& f : frames) svgs.push_back(lnl::render_frame_svg(*res.trace.topology, f.state, built.geometry));
  for (std::size_t i = 0; i < svgs.size(); ++i) {
    EXPECT_EQ(svgs[i], svgs[svgs.size() - 1 - i]) << "frame " << i;
    std::ostringstream name;
    name << "shift4/frame_" << std::setw(4) << std::setfill('0') << i << ".svg";
    expect_golden(name.str(), svgs[i]);
  }
}

TEST(Render, WritesNumberedFilesDeterministically) {
  const auto built = lnl::build(lnl::parse(shipped("nand.lnl")));
  const auto res = lnl::run(built, built.vector("ones"), 1);
  const auto dir = fs::temp_directory_path() / "linklogic_render_test";
  fs::remove_all(dir);
  const auto a = lnl::render(res.trace, built.geometry, dir / "a");
  const auto b = lnl::render(res.trace, built.geometry, dir / "b");
  ASSERT_EQ(a.size(), res.trace.frames.size());
  EXPECT_EQ(a.front().filename(), "frame_0000.svg");
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(slurp(a[i]), slurp(b[i]));
  fs::remove_all(dir);
}

TEST(Render, Failures) {
  EXPECT_THROW(lnl::render({}, {}, "x"), std::invalid_argument);
  const auto built = lnl::build(lnl::parse(shipped("nand.lnl")));
  const auto res = lnl::run(built, built.vector("ones"), 1);
  const auto file = fs::temp_directory_path() / "linklogic_not_a_dir";
  std::ofstream(file) << "x";
  EXPECT_THROW(lnl::render(res.trace, built.geometry, file / "sub"), linklogic::IoFailure);
  fs::remove(file);
}
