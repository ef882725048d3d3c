#include "linklogic/primitives/balance.hpp"

#include <stdexcept>

#include "linklogic/error.hpp"

namespace linklogic::primitives {

BalanceState balance_settle(bool side0_locked, bool side1_locked, int input) {
  if (input != 0 && input != 1) throw std::invalid_argument("balance input must be 0 or 1");
  BalanceState s{input, side0_locked, side1_locked, 0, 0};
  if (input == 0) return s;
  if (!side0_locked && !side1_locked)
    throw BothSidesFree("balance actuated with both sides free");
  if (side0_locked && side1_locked)
    throw BothSidesLocked("balance actuated with both sides locked");
  (side0_locked ? s.output1 : s.output0) = 1;
  return s;
}

BalanceState balance_actuate(BalanceState state) {
  return balance_settle(state.side0_locked, state.side1_locked, 1);
}

BalanceState balance_release(BalanceState state) {
  state.input = 0;
  state.output0 = 0;
  state.output1 = 0;
  return state;
}

}  // namespace linklogic::primitives
