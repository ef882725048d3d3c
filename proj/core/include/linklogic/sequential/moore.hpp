#pragma once

#include <utility>

#include "linklogic/gates/evaluate.hpp"
#include "linklogic/sequential/pipeline.hpp"

namespace linklogic::sequential {

// Moore machine on a four-phase loop: the transition logic is the first
// stage (phase 0), three shift cells (phases 1-3) carry the next state round
// to it again, and the output logic reads the state on phase 0.
class MooreMachine {
 public:
  MooreMachine(gates::Netlist netlist, std::vector<std::string> state_rails);

  // Inputs d, we; output q. next = we ? d : state. The initial state is
  // written with one bootstrap cycle.
  static MooreMachine one_bit_memory(bool initial_state);

  // Current state (read from the last cell of the loop).
  gates::DualRailValue state() const;

  const Pipeline& pipeline() const { return pipeline_; }
  Pipeline& pipeline() { return pipeline_; }

  // One clock cycle. Returns the output of the state held when the cycle
  // started.
  gates::PortValues step(const gates::PortValues& inputs);

 private:
  Pipeline pipeline_;
  gates::DualRailPort state_;
};

std::pair<MooreMachine, gates::PortValues> moore_step(MooreMachine machine,
                                                      const gates::PortValues& inputs);

}  // namespace linklogic::sequential
