#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "linklogic/error.hpp"
#include "linklogic/gates/dual_rail.hpp"
#include "linklogic/gates/evaluate.hpp"
#include "linklogic/gates/library.hpp"
#include "linklogic/gates/netlist.hpp"
#include "linklogic/gates/simulator.hpp"
#include "support.hpp"

namespace lg = linklogic::gates;
using lg::DualRailValue;
using lg::GateKind;

namespace {

const DualRailValue k0 = DualRailValue::zero();
const DualRailValue k1 = DualRailValue::one();
const DualRailValue kb = DualRailValue::blank();

// Boolean definitions written independently of the library.
std::vector<bool> reference(GateKind k, const std::vector<bool>& x) {
  switch (k) {
    case GateKind::kNand: return {!(x[0] && x[1])};
    case GateKind::kNor: return {!(x[0] || x[1])};
    case GateKind::kXor: return {x[0] != x[1]};
    case GateKind::kOr: return {x[0] || x[1]};
    case GateKind::kAnd: return {x[0] && x[1]};
    case GateKind::kXnor: return {x[0] == x[1]};
    case GateKind::kNot: return {!x[0]};
    case GateKind::kBuf: return {x[0]};
    case GateKind::kFredkin: return x[0] ? std::vector<bool>{true, x[2], x[1]} : x;
    case GateKind::kFullAdder: {
      const int s = x[0] + x[1] + x[2];
      return {s % 2 == 1, s >= 2};
    }
  }
  return {};
}

lg::PortValues ports(const std::vector<std::string>& names, const std::vector<bool>& bits) {
  lg::PortValues p;
  for (std::size_t i = 0; i < names.size(); ++i) p[names[i]] = DualRailValue::from_bit(bits[i]);
  return p;
}

}  // namespace

TEST(DualRail, Encoding) {
  EXPECT_EQ(DualRailValue::from_rails(0, 0), kb);
  EXPECT_EQ(DualRailValue::from_rails(1, 0), k0);
  EXPECT_EQ(DualRailValue::from_rails(0, 1), k1);
  EXPECT_THROW(DualRailValue::from_rails(1, 1), linklogic::ForbiddenState);
  EXPECT_THROW(DualRailValue::from_rails(2, 0), std::invalid_argument);
  EXPECT_EQ(k0.rail0(), 1);
  EXPECT_EQ(k1.rail1(), 1);
  EXPECT_EQ(DualRailValue::parse("b"), kb);
  EXPECT_THROW(kb.bit(), std::logic_error);
}

TEST(Netlist, RejectsDuplicateAndUnknownNames) {
  lg::Netlist n;
  n.add_rail("x");
  EXPECT_THROW(n.add_rail("x"), linklogic::DuplicateName);
  EXPECT_THROW(n.rail("nope"), linklogic::UnknownName);
  n.add_lock("l", n.rail("x"), n.add_rail("y"));
  EXPECT_THROW(n.add_lock("l", n.rail("x"), n.rail("y")), linklogic::DuplicateName);
}

TEST(Netlist, RejectsTwoDriversInOnePhase) {
  lg::Netlist n;
  const auto a = n.add_rail("a"), b = n.add_rail("b"), y = n.add_rail("y");
  n.add_route("r1", lg::RouteKind::kLink, {a}, {y});
  n.add_route("r2", lg::RouteKind::kLink, {b}, {y});
  EXPECT_THROW(n.validate(), linklogic::ForbiddenWiring);
}

TEST(Netlist, RejectsDrivenClockAndInputRails) {
  lg::Netlist n;
  const auto a = n.add_rail("a");
  n.add_route("r", lg::RouteKind::kLink, {a}, {n.clock_rail(0)});
  EXPECT_THROW(n.validate(), linklogic::ForbiddenWiring);

  lg::Netlist m;
  const auto in = m.add_dualrail("in");
  m.add_input("in", in);
  m.add_route("r", lg::RouteKind::kLink, {m.add_rail("z")}, {in.r0});
  EXPECT_THROW(m.validate(), linklogic::ForbiddenWiring);
}

TEST(Netlist, RejectsSharedPortRails) {
  lg::Netlist n;
  const auto p = n.add_dualrail("p");
  n.add_input("a", p);
  n.add_output("b", p);
  EXPECT_THROW(n.validate(), linklogic::ValidationError);
}

TEST(Netlist, InstantiatePrefixesAndBinds) {
  lg::Netlist top;
  const auto a = top.add_dualrail("A"), b = top.add_dualrail("B"), x = top.add_dualrail("X");
  top.add_input("A", a);
  top.add_input("B", b);
  top.add_output("X", x);
  top.instantiate(lg::build_gate(GateKind::kNand), "g1/", {{"a", a}, {"b", b}, {"x", x}}, 0, 3);
  EXPECT_TRUE(top.find_element(top.locks().front().name).has_value());
  EXPECT_FALSE(top.find_rail("g1/a.0").has_value());
  for (std::uint32_t i = 0; i < top.locks().size(); ++i) {
    EXPECT_EQ(top.locks()[i].name.rfind("g1/", 0), 0u);
    EXPECT_EQ(top.locks()[i].cell, 3);
  }
  EXPECT_NO_THROW(top.validate());
  EXPECT_EQ(lg::evaluate(top, {{"A", k1}, {"B", k1}}, true).at("X"), k0);
}

TEST(Topology, RejectsCombinationalLoop) {
  lg::Netlist n;
  const auto a = n.add_rail("a"), b = n.add_rail("b");
  n.add_route("f", lg::RouteKind::kLink, {a}, {b});
  n.add_route("g", lg::RouteKind::kLink, {b}, {a});
  EXPECT_NO_THROW(n.validate());
  EXPECT_THROW(lg::Topology{n}, linklogic::ValidationError);
}

TEST(Library, NamesRoundTrip) {
  EXPECT_EQ(lg::library_kinds().size(), 9u);
  for (auto k : lg::library_kinds()) EXPECT_EQ(lg::parse_gate_kind(lg::to_string(k)), k);
  EXPECT_FALSE(lg::parse_gate_kind("mux").has_value());
}

TEST(Library, EveryKindMatchesItsDefinition) {
  auto kinds = lg::library_kinds();
  kinds.push_back(GateKind::kBuf);
  for (auto k : kinds) {
    const auto net = lg::build_gate(k);
    const auto t = lg::truth_table(net);
    const std::size_t n = lg::gate_inputs(k).size();
    ASSERT_EQ(t.rows.size(), std::size_t{1} << n) << lg::to_string(k);
    for (std::size_t row = 0; row < t.rows.size(); ++row) {
      std::vector<bool> in;
      for (std::size_t i = 0; i < n; ++i) in.push_back((row >> (n - 1 - i)) & 1U);
      EXPECT_EQ(t.rows[row].in, in);
      EXPECT_EQ(t.rows[row].out, reference(k, in)) << lg::to_string(k) << " row " << row;
    }
  }
}

TEST(Library, GateExamples) {
  EXPECT_EQ(lg::evaluate(lg::build_gate(GateKind::kNand), {{"a", k1}, {"b", k1}}, true).at("x"), k0);
  EXPECT_EQ(lg::evaluate(lg::build_gate(GateKind::kNand), {{"a", k0}, {"b", k0}}, true).at("x"), k1);
  EXPECT_EQ(lg::evaluate(lg::build_gate(GateKind::kNot), {{"a", k1}}, true).at("x"), k0);
  const auto fa = lg::evaluate(lg::build_gate(GateKind::kFullAdder), {{"a", k1}, {"b", k1}, {"cin", k0}}, true);
  EXPECT_EQ(fa.at("sum"), k0);
  EXPECT_EQ(fa.at("cout"), k1);
  const auto f = lg::evaluate(lg::build_gate(GateKind::kFredkin), {{"c", k1}, {"a", k0}, {"b", k1}}, true);
  EXPECT_EQ(f.at("co"), k1);
  EXPECT_EQ(f.at("ao"), k1);
  EXPECT_EQ(f.at("bo"), k0);
}

TEST(Library, DerivedGatesUseSwappedRails) {
  // OR is NOR with its output rails exchanged, so the two netlists differ only
  // by the swap element.
  const auto nor = lg::build_gate(GateKind::kNor), orr = lg::build_gate(GateKind::kOr);
  EXPECT_EQ(orr.locks().size(), nor.locks().size());
  EXPECT_EQ(orr.balances().size(), nor.balances().size());
  const auto swaps = std::count_if(orr.routes().begin(), orr.routes().end(),
                                   [](const lg::RouteElement& r) { return r.kind == lg::RouteKind::kSwap; });
  EXPECT_GE(swaps, 1);
}

TEST(Evaluate, InactiveClockLeavesOutputsBlank) {
  for (auto k : lg::library_kinds()) {
    const auto net = lg::build_gate(k);
    lg::PortValues in;
    for (const auto& p : lg::gate_inputs(k)) in[p] = k1;
    for (const auto& [_, v] : lg::evaluate(net, in, false)) EXPECT_EQ(v, kb);
  }
}

TEST(Evaluate, BlankInputIsAScheduleViolation) {
  EXPECT_THROW(lg::evaluate(lg::build_gate(GateKind::kNand), {{"a", kb}, {"b", k1}}, true),
               linklogic::ScheduleViolation);
  EXPECT_THROW(lg::evaluate(lg::build_gate(GateKind::kNand), {{"a", k1}, {"zz", k1}}, true),
               linklogic::UnknownName);
}

TEST(Evaluate, NoForbiddenPairAndFullReturnToRest) {
  for (auto k : lg::library_kinds()) {
    const auto net = lg::build_gate(k);
    // Every internal dual rail x.0 / x.1.
    std::vector<lg::DualRailPort> pairs;
    for (lg::RailId r = 0; r < net.rail_count(); ++r) {
      const auto& name = net.rail_name(r);
      if (name.size() > 2 && name.substr(name.size() - 2) == ".0")
        if (auto o = net.find_rail(name.substr(0, name.size() - 2) + ".1")) pairs.push_back({r, *o});
    }
    const std::size_t n = net.inputs().size();
    for (std::size_t row = 0; row < (std::size_t{1} << n); ++row) {
      lg::Simulator sim(net);
      for (std::size_t i = 0; i < n; ++i) sim.set_input(i, DualRailValue::from_bit((row >> i) & 1U));
      for (int p : net.phases()) {
        sim.raise(p);
        for (const auto& pr : pairs) EXPECT_FALSE(sim.rail(pr.r0) && sim.rail(pr.r1));
      }
      for (int p : net.phases()) sim.lower(p);
      for (std::size_t i = 0; i < n; ++i) sim.clear_input(i);
      EXPECT_TRUE(sim.all_rails_idle()) << lg::to_string(k) << " row " << row;
    }
  }
}

TEST(Simulator, StrictBalanceWithBothSidesFree) {
  lg::Netlist n;
  const auto out = n.add_dualrail("o");
  n.add_output("o", out);
  n.add_balance("bal", n.clock_rail(0), out.r0, out.r1);
  lg::Simulator sim(n);
  try {
    sim.raise(0);
    FAIL() << "expected a schedule violation";
  } catch (const linklogic::ScheduleViolation& e) {
    EXPECT_NE(std::string(e.what()).find("BothSidesFree"), std::string::npos);
  }
  lg::Simulator bubble(n, lg::BlankPolicy::kBubble);
  EXPECT_NO_THROW(bubble.raise(0));
  EXPECT_EQ(bubble.output(0), kb);
}

TEST(Fredkin, ConservativePermutationAndInvolution) {
  const auto net = lg::build_gate(GateKind::kFredkin);
  const auto t = lg::truth_table(net);
  std::set<std::vector<bool>> outs;
  for (const auto& r : t.rows) {
    EXPECT_EQ(std::count(r.in.begin(), r.in.end(), true), std::count(r.out.begin(), r.out.end(), true));
    outs.insert(r.out);
    const auto once = lg::evaluate(net, ports({"c", "a", "b"}, r.in), true);
    lg::PortValues again_in{{"c", once.at("co")}, {"a", once.at("ao")}, {"b", once.at("bo")}};
    const auto twice = lg::evaluate(net, again_in, true);
    EXPECT_EQ(twice.at("co"), DualRailValue::from_bit(r.in[0]));
    EXPECT_EQ(twice.at("ao"), DualRailValue::from_bit(r.in[1]));
    EXPECT_EQ(twice.at("bo"), DualRailValue::from_bit(r.in[2]));
  }
  EXPECT_EQ(outs.size(), 8u);
}

TEST(Fredkin, ReverseRecoversInputs) {
  const auto net = lg::build_gate(GateKind::kFredkin);
  const auto in = lg::evaluate_reverse(net, {{"co", k1}, {"ao", k1}, {"bo", k0}});
  EXPECT_EQ(in.at("c"), k1);
  EXPECT_EQ(in.at("a"), k0);
  EXPECT_EQ(in.at("b"), k1);
  for (int row = 0; row < 8; ++row) {
    const auto x = ports({"c", "a", "b"}, {bool(row & 4), bool(row & 2), bool(row & 1)});
    EXPECT_EQ(lg::evaluate_reverse(net, lg::evaluate(net, x, true)), x);
  }
}

TEST(Reverse, IrreversibleGatesAreRejected) {
  EXPECT_THROW(lg::evaluate_reverse(lg::build_gate(GateKind::kNand), {{"x", k0}}), linklogic::NotReversible);
  // A buffer is a bijection, so it reverses; a missing output does not.
  EXPECT_EQ(lg::evaluate_reverse(lg::build_gate(GateKind::kBuf), {{"x", k0}}).at("a"), k0);
  EXPECT_THROW(lg::evaluate_reverse(lg::build_gate(GateKind::kBuf), {}), std::invalid_argument);
}

TEST(Universality, XorFromFourNands) {
  lg::Netlist top;
  const auto a = top.add_dualrail("a"), b = top.add_dualrail("b"), x = top.add_dualrail("x");
  const auto n = top.add_dualrail("n"), p = top.add_dualrail("p"), q = top.add_dualrail("q");
  top.add_input("a", a);
  top.add_input("b", b);
  top.add_output("x", x);
  const auto nand = lg::build_gate(GateKind::kNand);
  top.instantiate(nand, "g1/", {{"a", a}, {"b", b}, {"x", n}}, 0);
  top.instantiate(nand, "g2/", {{"a", a}, {"b", n}, {"x", p}}, 1);
  top.instantiate(nand, "g3/", {{"a", b}, {"b", n}, {"x", q}}, 1);
  top.instantiate(nand, "g4/", {{"a", p}, {"b", q}, {"x", x}}, 2);
  const auto composed = lg::truth_table(top), native = lg::truth_table(lg::build_gate(GateKind::kXor));
  ASSERT_EQ(composed.rows.size(), native.rows.size());
  for (std::size_t i = 0; i < native.rows.size(); ++i) EXPECT_EQ(composed.rows[i].out, native.rows[i].out);
}

TEST(Synthesis, RandomFunctionsAreRealised) {
  linklogic::testing::Gen gen(31);
  for (int trial = 0; trial < 40; ++trial) {
    const int nin = gen.integer(1, 4), nout = gen.integer(1, 3);
    std::vector<std::vector<bool>> table(std::size_t{1} << nin);
    for (auto& row : table)
      for (int j = 0; j < nout; ++j) row.push_back(gen.bit());
    std::vector<std::string> ins, outs;
    for (int i = 0; i < nin; ++i) ins.push_back("i" + std::to_string(i));
    for (int j = 0; j < nout; ++j) outs.push_back("o" + std::to_string(j));
    auto f = [&](const std::vector<bool>& x) {
      std::size_t idx = 0;
      for (bool b : x) idx = idx * 2 + b;
      return table[idx];
    };
    const bool swap = gen.bit();
    const auto t = lg::truth_table(lg::synthesize(ins, outs, f, {0, swap}));
    for (std::size_t row = 0; row < table.size(); ++row) {
      auto want = table[row];
      if (swap) want.flip();
      EXPECT_EQ(t.rows[row].out, want) << "trial " << trial << " row " << row;
    }
  }
}
