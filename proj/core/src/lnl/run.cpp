#include "linklogic/lnl/run.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <memory>

#include "linklogic/error.hpp"
#include "linklogic/gates/simulator.hpp"

namespace linklogic::lnl {

namespace {

void check_ports(const gates::Netlist& net, const Streams& vector) {
  for (const auto& p : net.inputs())
    if (!vector.count(p.name)) throw ValidationError(fmt::format("vector has no value for input '{}'", p.name));
  for (const auto& [name, _] : vector) net.input(name);
}

RunResult run_combinational(const BuiltDocument& doc, const Streams& vector) {
  const auto& net = doc.netlist;
  check_ports(net, vector);
  RunResult res;
  for (const auto& p : net.outputs()) res.outputs.push_back(p.name);

  std::size_t rows = 0;
  for (const auto& [_, s] : vector) rows = std::max(rows, s.size());
  auto topo = std::make_shared<const gates::Topology>(net);
  res.trace.topology = topo;
  gates::Simulator sim(topo, gates::BlankPolicy::kStrict);
  const auto phases = net.phases();
  res.trace.frames.push_back({0.0, "initial", sim.state()});
  // Events of row r sit at r + k/16.
  int k = 0;
  double t0 = 0.0;
  auto snap = [&](std::string label) {
    res.trace.frames.push_back({t0 + k++ / 16.0, std::move(label), sim.state()});
  };

  for (std::size_t row = 0; row < rows; ++row) {
    t0 = static_cast<double>(row);
    k = 0;
    for (std::size_t i = 0; i < net.inputs().size(); ++i) {
      const auto& s = vector.at(net.inputs()[i].name);
      const auto v = row < s.size() ? s[row] : gates::DualRailValue::blank();
      if (v.is_blank())
        throw ScheduleViolation(fmt::format("input '{}' is Blank in row {}", net.inputs()[i].name, row));
      sim.set_input(i, v);
    }
    snap("inputs set");
    for (int p : phases) {
      sim.raise(p);
      snap(fmt::format("raise {}", p));
    }
    gates::PortValues out;
    for (std::size_t j = 0; j < net.outputs().size(); ++j) out[net.outputs()[j].name] = sim.output(j);
    res.rows.push_back(std::move(out));
    for (auto it = phases.rbegin(); it != phases.rend(); ++it) {
      sim.lower(*it);
      snap(fmt::format("lower {}", *it));
    }
    for (std::size_t i = 0; i < net.inputs().size(); ++i) sim.clear_input(i);
    snap("inputs cleared");
  }
  return res;
}

RunResult run_sequential(const BuiltDocument& doc, const Streams& vector, std::size_t cycles, bool reverse) {
  const auto report = sequential::validate_clock(*doc.clock);
  if (!report.pass) throw ValidationError(fmt::format("clock program rejected: {}", report.failures.front()), doc.clock_line, 1);
  check_ports(doc.netlist, vector);
  RunResult res;
  res.sequential = true;
  for (const auto& p : doc.netlist.outputs()) res.outputs.push_back(p.name);

  sequential::Pipeline pipe(doc.netlist, gates::BlankPolicy::kBubble);
  for (const auto& [port, values] : vector) pipe.set_stream(port, values);
  const auto initial = pipe.sim().state();
  pipe.set_tracing(true);
  pipe.run_cycles(cycles);
  for (const auto& name : res.outputs) res.samples[name] = pipe.samples(name);
  if (reverse)
    while (pipe.events() > 0) pipe.unstep();
  res.trace = pipe.trace();
  res.trace.frames.insert(res.trace.frames.begin(), {0.0, "initial", initial});
  return res;
}

}  // namespace

RunResult run(const BuiltDocument& doc, const Streams& vector, std::size_t cycles) {
  if (doc.sequential) return run_sequential(doc, vector, cycles, false);
  return run_combinational(doc, vector);
}

RunResult run_and_reverse(const BuiltDocument& doc, const Streams& vector, std::size_t cycles) {
  if (!doc.sequential) throw ValidationError("reversal needs a clocked document");
  return run_sequential(doc, vector, cycles, true);
}

}  // namespace linklogic::lnl
