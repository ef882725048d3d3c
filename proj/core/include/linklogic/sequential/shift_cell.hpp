#pragma once

#include <string>

#include "linklogic/gates/dual_rail.hpp"
#include "linklogic/gates/netlist.hpp"
#include "linklogic/primitives/balance.hpp"
#include "linklogic/primitives/lock.hpp"

namespace linklogic::sequential {

// Holding lock i pairs input rail i with the output rail of opposite sense, so
// the held value pins the balance side that would produce the wrong output.
// holding[i].input0 is input rail i; holding[i].input1 is output rail 1-i.
// Balance side 0 drives output rail 1 and side 1 drives output rail 0.
struct ShiftCell {
  primitives::LockState holding[2];
  primitives::LockState output;
  primitives::BalanceState balance;
  int phase = 0;

  gates::DualRailValue input() const;
  gates::DualRailValue value() const;  // output lock as a dual-rail value

  friend bool operator==(const ShiftCell& a, const ShiftCell& b) {
    return a.holding[0] == b.holding[0] && a.holding[1] == b.holding[1] &&
           a.output == b.output && a.balance == b.balance && a.phase == b.phase;
  }
};

struct CellEvent {
  enum class Kind { kSetInput, kClearInput, kRaise, kLower };
  Kind kind;
  gates::DualRailValue value{};

  static CellEvent set_input(gates::DualRailValue v) { return {Kind::kSetInput, v}; }
  static CellEvent clear_input() { return {Kind::kClearInput, {}}; }
  static CellEvent raise() { return {Kind::kRaise, {}}; }
  static CellEvent lower() { return {Kind::kLower, {}}; }
};

// Strict: raising a Blank cell is a ScheduleViolation.
ShiftCell cell_step(ShiftCell cell, const CellEvent& event);

// Adds the same structure to a netlist: locks <name>/h0, <name>/h1,
// <name>/out and balance <name>/bal on a fresh clock rail of `phase`.
void add_shift_cell(gates::Netlist& net, const std::string& name, gates::DualRailPort in,
                    gates::DualRailPort out, int phase, int cell = -1);

}  // namespace linklogic::sequential
