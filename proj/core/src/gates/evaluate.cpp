#include "linklogic/gates/evaluate.hpp"

#include <fmt/format.h>

#include <set>
#include <stdexcept>

#include "linklogic/error.hpp"
#include "linklogic/gates/simulator.hpp"

namespace linklogic::gates {

namespace {

void apply_inputs(Simulator& sim, const PortValues& inputs) {
  const auto& ports = sim.netlist().inputs();
  for (const auto& [name, _] : inputs) sim.netlist().input(name);  // UnknownName check
  for (std::size_t i = 0; i < ports.size(); ++i) {
    auto it = inputs.find(ports[i].name);
    if (it == inputs.end())
      throw std::invalid_argument(fmt::format("missing value for input '{}'", ports[i].name));
    if (it->second.is_blank())
      throw ScheduleViolation(fmt::format("input '{}' is Blank; the clock cannot be driven", ports[i].name));
    sim.set_input(i, it->second);
  }
}

PortValues read_outputs(const Simulator& sim) {
  PortValues out;
  const auto& ports = sim.netlist().outputs();
  for (std::size_t i = 0; i < ports.size(); ++i) out[ports[i].name] = sim.output(i);
  return out;
}

void run_phases(Simulator& sim) {
  for (int p : sim.netlist().phases()) sim.raise(p);
}

void unwind(Simulator& sim) {
  const auto phases = sim.netlist().phases();
  for (auto it = phases.rbegin(); it != phases.rend(); ++it) sim.lower(*it);
  for (std::size_t i = 0; i < sim.netlist().inputs().size(); ++i) sim.clear_input(i);
}

}  // namespace

PortValues evaluate(const Netlist& netlist, const PortValues& inputs, bool clock_active) {
  Simulator sim(netlist, BlankPolicy::kStrict);
  apply_inputs(sim, inputs);
  if (clock_active) run_phases(sim);
  return read_outputs(sim);
}

TruthTable truth_table(const Netlist& netlist) {
  const auto& ins = netlist.inputs();
  const auto& outs = netlist.outputs();
  if (ins.size() > 16) throw std::invalid_argument("truth_table: more than 16 inputs");
  TruthTable t;
  for (const auto& p : ins) t.inputs.push_back(p.name);
  for (const auto& p : outs) t.outputs.push_back(p.name);

  auto topo = std::make_shared<const Topology>(netlist);
  Simulator sim(topo, BlankPolicy::kStrict);
  const std::size_t n = ins.size();
  for (std::size_t row = 0; row < (std::size_t{1} << n); ++row) {
    sim.reset();
    TruthRow r;
    for (std::size_t i = 0; i < n; ++i) {
      const bool bit = (row >> (n - 1 - i)) & 1U;
      r.in.push_back(bit);
      sim.set_input(i, DualRailValue::from_bit(bit));
    }
    run_phases(sim);
    for (std::size_t j = 0; j < outs.size(); ++j) {
      const auto v = sim.output(j);
      if (v.is_blank())
        throw ScheduleViolation(fmt::format("output '{}' stayed Blank", outs[j].name));
      r.out.push_back(v.bit());
    }
    t.rows.push_back(std::move(r));
  }
  return t;
}

PortValues evaluate_reverse(const Netlist& netlist, const PortValues& outputs) {
  const auto& ins = netlist.inputs();
  const auto& outs = netlist.outputs();
  if (ins.size() != outs.size())
    throw NotReversible(fmt::format("{} inputs but {} outputs", ins.size(), outs.size()));
  const TruthTable table = truth_table(netlist);
  std::set<std::vector<bool>> seen;
  for (const auto& r : table.rows)
    if (!seen.insert(r.out).second) throw NotReversible("output map is not injective");

  std::vector<bool> want;
  for (const auto& p : outs) {
    auto it = outputs.find(p.name);
    if (it == outputs.end())
      throw std::invalid_argument(fmt::format("missing value for output '{}'", p.name));
    if (it->second.is_blank())
      throw std::invalid_argument(fmt::format("output '{}' is Blank", p.name));
    want.push_back(it->second.bit());
  }

  for (const auto& r : table.rows) {
    if (r.out != want) continue;
    PortValues in;
    for (std::size_t i = 0; i < ins.size(); ++i) in[ins[i].name] = DualRailValue::from_bit(r.in[i]);

    Simulator sim(netlist, BlankPolicy::kStrict);
    apply_inputs(sim, in);
    run_phases(sim);
    if (read_outputs(sim) != outputs) throw std::logic_error("reverse replay disagrees with table");
    unwind(sim);
    if (!sim.all_rails_idle()) throw ScheduleViolation("mechanism did not return to rest");
    return in;
  }
  throw std::logic_error("bijective table has no matching row");
}

}  // namespace linklogic::gates
