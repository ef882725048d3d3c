#pragma once

#include <map>
#include <string>
#include <vector>

#include "linklogic/gates/dual_rail.hpp"
#include "linklogic/gates/netlist.hpp"

namespace linklogic::gates {

using PortValues = std::map<std::string, DualRailValue>;

// Sets every input, then raises each clock phase in ascending order. Inputs
// must be Zero or One; a Blank input raises ScheduleViolation because the
// clock could not be driven.
PortValues evaluate(const Netlist& netlist, const PortValues& inputs, bool clock_active);

struct TruthRow {
  std::vector<bool> in;
  std::vector<bool> out;
};

struct TruthTable {
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::vector<TruthRow> rows;  // binary counting, first input as MSB
};

TruthTable truth_table(const Netlist& netlist);

// Recovers the inputs that produce `outputs`. Requires a bijective netlist
// (as many outputs as inputs, injective table); otherwise NotReversible. The
// recovered row is replayed forward and unwound to confirm the mechanism
// returns to rest.
PortValues evaluate_reverse(const Netlist& netlist, const PortValues& outputs);

}  // namespace linklogic::gates
