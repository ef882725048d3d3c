#include "linklogic/sequential/chain.hpp"

#include <fmt/format.h>

#include <stdexcept>

#include "linklogic/error.hpp"

namespace linklogic::sequential {

using gates::DualRailValue;

std::vector<ShiftCell> make_cells(std::size_t n) {
  std::vector<ShiftCell> cells(n);
  for (std::size_t k = 0; k < n; ++k) cells[k].phase = static_cast<int>(k % 4);
  return cells;
}

gates::Netlist build_chain(std::size_t n, int first_phase) {
  if (n == 0) throw std::invalid_argument("build_chain: need at least one cell");
  gates::Netlist net;
  const auto in = net.add_dualrail("in");
  net.add_input("in", in);
  auto prev = in;
  for (std::size_t k = 0; k < n; ++k) {
    const bool last = k + 1 == n;
    const auto out = net.add_dualrail(last ? std::string("out") : fmt::format("c{}", k));
    add_shift_cell(net, fmt::format("c{}", k), prev, out,
                   static_cast<int>((static_cast<std::size_t>(first_phase) + k) % 4),
                   static_cast<int>(k));
    prev = out;
  }
  net.add_output("out", prev);
  return net;
}

namespace {

void require_clock(const ClockProgram& clock) {
  const auto report = validate_clock(clock);
  if (!report.pass)
    throw ScheduleViolation(fmt::format("clock program rejected: {}", report.failures.front()));
}

}  // namespace

ShiftChain::ShiftChain(std::size_t cells, const ClockProgram& clock,
                       const std::vector<DualRailValue>& input_stream)
    : cells_(cells), pipeline_((require_clock(clock), build_chain(cells)), gates::BlankPolicy::kBubble) {
  pipeline_.set_stream("in", input_stream);
  const auto& net = pipeline_.netlist();
  for (std::size_t k = 0; k + 1 < cells; ++k) outs_.push_back(net.dualrail(fmt::format("c{}", k)));
  outs_.push_back(net.dualrail("out"));
}

void ShiftChain::forward(std::size_t events) { pipeline_.run_events(events); }

void ShiftChain::reverse(std::size_t events) {
  for (std::size_t i = 0; i < events; ++i) pipeline_.unstep();
}

DualRailValue ShiftChain::cell_value(std::size_t k) const { return pipeline_.sim().read(outs_.at(k)); }

std::size_t ShiftChain::occupied_cells() const {
  std::size_t n = 0;
  for (std::size_t k = 0; k < cells_; ++k) n += !cell_value(k).is_blank();
  return n;
}

ChainResult chain_simulate(const std::vector<ShiftCell>& cells, const ClockProgram& clock,
                           const std::vector<DualRailValue>& input_stream, std::size_t cycles) {
  if (cells.empty()) throw std::invalid_argument("chain_simulate: no cells");
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (cells[k].phase != static_cast<int>(k % 4))
      throw std::invalid_argument(fmt::format("cell {} has phase {}, expected {}", k, cells[k].phase, k % 4));
    if (!(cells[k] == ShiftCell{{}, {}, {}, cells[k].phase}))
      throw std::invalid_argument(fmt::format("cell {} does not start Blank", k));
  }
  ShiftChain chain(cells.size(), clock, input_stream);
  chain.pipeline().set_tracing(true);
  chain.forward(cycles * kEventsPerCycle);
  return {chain.pipeline().samples(0), chain.pipeline().trace()};
}

Trace chain_reverse(ShiftChain& chain, std::size_t events) {
  auto& p = chain.pipeline();
  p.set_tracing(true);
  const auto start = p.frames().size();
  chain.reverse(events);
  Trace t = p.trace();
  t.frames.erase(t.frames.begin(), t.frames.begin() + static_cast<long>(start));
  return t;
}

}  // namespace linklogic::sequential
