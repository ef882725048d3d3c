#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linklogic/gates/evaluate.hpp"
#include "linklogic/gates/netlist.hpp"
#include "linklogic/kinematics/lock_energy.hpp"
#include "linklogic/lnl/document.hpp"
#include "linklogic/sequential/clock.hpp"

namespace linklogic::lnl {

using Streams = std::map<std::string, std::vector<gates::DualRailValue>>;

struct BuiltDocument {
  gates::Netlist netlist;
  std::optional<sequential::ClockProgram> clock;
  int clock_line = 0;
  std::vector<std::pair<std::string, Streams>> vectors;
  kinematics::LockGeometry geometry;
  bool sequential = false;  // declares a clock

  const Streams& vector(const std::string& name) const;  // UnknownName
};

// Resolves names and wires the netlist. Errors carry the line and column of
// the offending statement or token.
BuiltDocument build(const NetlistDocument& doc);

}  // namespace linklogic::lnl
