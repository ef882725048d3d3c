#include "linklogic/lnl/trace_io.hpp"

#include <nlohmann/json.hpp>

#include "linklogic/gates/simulator.hpp"

namespace linklogic::lnl {

void write_trace_jsonl(std::ostream& os, const sequential::Trace& trace) {
  if (trace.frames.empty()) return;
  gates::Simulator sim(trace.topology, gates::BlankPolicy::kStrict);
  const auto& net = trace.topology->netlist();
  for (const auto& frame : trace.frames) {
    sim.restore(frame.state);
    auto emit = [&](gates::ElementRef e) {
      nlohmann::ordered_json rec;
      rec["t"] = frame.t;
      rec["element"] = net.element_name(e);
      rec["state"] = sim.element_state(e);
      os << rec.dump() << '\n';
    };
    for (std::uint32_t i = 0; i < net.locks().size(); ++i) emit({gates::ElementKind::kLock, i});
    for (std::uint32_t i = 0; i < net.balances().size(); ++i) emit({gates::ElementKind::kBalance, i});
  }
}

}  // namespace linklogic::lnl
