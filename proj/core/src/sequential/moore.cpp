#include "linklogic/sequential/moore.hpp"

#include <fmt/format.h>

#include "linklogic/gates/library.hpp"
#include "linklogic/sequential/shift_cell.hpp"

namespace linklogic::sequential {

using gates::DualRailValue;

MooreMachine::MooreMachine(gates::Netlist netlist, std::vector<std::string> state_rails)
    : pipeline_(netlist, gates::BlankPolicy::kBubble),
      state_{netlist.rail(state_rails.at(0)), netlist.rail(state_rails.at(1))} {}

MooreMachine MooreMachine::one_bit_memory(bool initial_state) {
  gates::Netlist net;
  const auto we = net.add_dualrail("we");
  const auto d = net.add_dualrail("d");
  const auto q = net.add_dualrail("q");
  net.add_input("d", d);
  net.add_input("we", we);
  net.add_output("q", q);

  const auto next = net.add_dualrail("next");
  const auto s1 = net.add_dualrail("s1");
  const auto s2 = net.add_dualrail("s2");
  const auto state = net.add_dualrail("state");
  const auto fb = net.add_dualrail("state.fb");
  const auto rd = net.add_dualrail("state.rd");

  const auto mux = gates::synthesize(
      {"we", "d", "s"}, {"x"},
      [](const std::vector<bool>& in) { return std::vector<bool>{in[0] ? in[1] : in[2]}; });
  net.instantiate(mux, "T/", {{"we", we}, {"d", d}, {"s", fb}, {"x", next}}, 0, 0);
  add_shift_cell(net, "S1", next, s1, 1, 1);
  add_shift_cell(net, "S2", s1, s2, 2, 2);
  add_shift_cell(net, "S3", s2, state, 3, 3);
  for (int r = 0; r < 2; ++r)
    net.add_route(fmt::format("state.copy{}", r), gates::RouteKind::kCopy, {state[r]},
                  {fb[r], rd[r]}, 3);
  net.instantiate(gates::build_gate(gates::GateKind::kBuf), "Q/", {{"a", rd}, {"x", q}}, 0, 4);

  MooreMachine m(std::move(net), {"state.0", "state.1"});
  m.step({{"d", DualRailValue::from_bit(initial_state)}, {"we", DualRailValue::one()}});
  return m;
}

DualRailValue MooreMachine::state() const { return pipeline_.sim().read(state_); }

gates::PortValues MooreMachine::step(const gates::PortValues& inputs) {
  pipeline_.push_inputs(inputs);
  std::vector<std::size_t> before;
  const auto& outs = pipeline_.netlist().outputs();
  for (std::size_t j = 0; j < outs.size(); ++j) before.push_back(pipeline_.samples(j).size());
  pipeline_.run_cycles(1);
  gates::PortValues out;
  for (std::size_t j = 0; j < outs.size(); ++j) {
    const auto& s = pipeline_.samples(j);
    out[outs[j].name] = s.size() > before[j] ? s[before[j]].value : DualRailValue::blank();
  }
  return out;
}

std::pair<MooreMachine, gates::PortValues> moore_step(MooreMachine machine,
                                                      const gates::PortValues& inputs) {
  auto out = machine.step(inputs);
  return {std::move(machine), std::move(out)};
}

}  // namespace linklogic::sequential
