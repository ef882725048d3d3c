#pragma once

#include <vector>

#include "linklogic/sequential/clock.hpp"
#include "linklogic/sequential/pipeline.hpp"
#include "linklogic/sequential/shift_cell.hpp"

namespace linklogic::sequential {

// Blank cells with phases 0,1,2,3,0,...
std::vector<ShiftCell> make_cells(std::size_t n);

// Netlist of n cells: input port "in", output port "out", cell k named c<k>
// with output rails c<k>.0/.1 (the last cell drives "out").
gates::Netlist build_chain(std::size_t n, int first_phase = 0);

struct ChainResult {
  std::vector<Sample> outputs;  // one per rise of the last cell's phase
  Trace trace;
};

// Checks the clock first (ScheduleViolation when it fails), then runs the
// event schedule for `cycles` cycles. Blank cells simply stay down.
ChainResult chain_simulate(const std::vector<ShiftCell>& cells, const ClockProgram& clock,
                           const std::vector<gates::DualRailValue>& input_stream,
                           std::size_t cycles);

// A chain that can be stepped both ways.
class ShiftChain {
 public:
  ShiftChain(std::size_t cells, const ClockProgram& clock,
             const std::vector<gates::DualRailValue>& input_stream);

  void forward(std::size_t events);
  void reverse(std::size_t events);

  std::size_t size() const { return cells_; }
  gates::DualRailValue cell_value(std::size_t k) const;
  std::size_t occupied_cells() const;

  Pipeline& pipeline() { return pipeline_; }
  const Pipeline& pipeline() const { return pipeline_; }

 private:
  std::size_t cells_;
  Pipeline pipeline_;
  std::vector<gates::DualRailPort> outs_;
};

// Steps a chain backwards `events` times and returns the frames produced.
Trace chain_reverse(ShiftChain& chain, std::size_t events);

}  // namespace linklogic::sequential
