#include "linklogic/sequential/shift_cell.hpp"

#include <fmt/format.h>

#include "linklogic/error.hpp"

namespace linklogic::sequential {

using gates::DualRailValue;
namespace prim = linklogic::primitives;

DualRailValue ShiftCell::input() const {
  return DualRailValue::from_rails(holding[0].input0, holding[1].input0);
}

DualRailValue ShiftCell::value() const {
  return DualRailValue::from_rails(output.input0, output.input1);
}

namespace {

ShiftCell set_outputs(ShiftCell c, int out0, int out1) {
  c.holding[0] = prim::lock_set(c.holding[0], 1, out1);
  c.holding[1] = prim::lock_set(c.holding[1], 1, out0);
  if (!out0) c.output = prim::lock_set(c.output, 0, 0);
  if (!out1) c.output = prim::lock_set(c.output, 1, 0);
  if (out0) c.output = prim::lock_set(c.output, 0, 1);
  if (out1) c.output = prim::lock_set(c.output, 1, 1);
  return c;
}

}  // namespace

ShiftCell cell_step(ShiftCell c, const CellEvent& e) {
  try {
    switch (e.kind) {
      case CellEvent::Kind::kSetInput:
        c.holding[0] = prim::lock_set(c.holding[0], 0, e.value.rail0());
        c.holding[1] = prim::lock_set(c.holding[1], 0, e.value.rail1());
        return c;
      case CellEvent::Kind::kClearInput:
        c.holding[0] = prim::lock_set(c.holding[0], 0, 0);
        c.holding[1] = prim::lock_set(c.holding[1], 0, 0);
        return c;
      case CellEvent::Kind::kRaise: {
        if (c.balance.input == 1) return c;
        c.balance.side0_locked = prim::lock_is_locked(c.holding[0], 1) || c.output.input0 == 1;
        c.balance.side1_locked = prim::lock_is_locked(c.holding[1], 1) || c.output.input1 == 1;
        c.balance = prim::balance_actuate(c.balance);
        // Side 0 drives output rail 1, side 1 drives output rail 0.
        return set_outputs(c, c.balance.output1, c.balance.output0);
      }
      case CellEvent::Kind::kLower:
        c.balance = prim::balance_release(c.balance);
        return set_outputs(c, 0, 0);
    }
  } catch (const BothSidesFree& err) {
    throw ScheduleViolation(fmt::format("cell raised while Blank: {}", err.what()));
  } catch (const BothSidesLocked& err) {
    throw ScheduleViolation(fmt::format("cell raised with both sides held: {}", err.what()));
  } catch (const BindingViolation& err) {
    throw ScheduleViolation(fmt::format("cell event out of order: {}", err.what()));
  }
  return c;
}

void add_shift_cell(gates::Netlist& net, const std::string& name, gates::DualRailPort in,
                    gates::DualRailPort out, int phase, int cell) {
  const auto clk = net.clock_rail(phase);
  net.add_lock(name + "/h0", in.r0, out.r1, cell);
  net.add_lock(name + "/h1", in.r1, out.r0, cell);
  net.add_lock(name + "/out", out.r0, out.r1, cell);
  net.add_balance(name + "/bal", clk, out.r1, out.r0, cell);
}

}  // namespace linklogic::sequential
