#pragma once

namespace linklogic::primitives {

// Freeing side s produces output s.
struct BalanceState {
  int input = 0;
  bool side0_locked = false;
  bool side1_locked = false;
  int output0 = 0;
  int output1 = 0;

  friend bool operator==(const BalanceState&, const BalanceState&) = default;
};

// Raises the input and routes it to the free side. Throws BothSidesFree or
// BothSidesLocked when the steering locks do not select exactly one side.
BalanceState balance_actuate(BalanceState state);

// Drops the input; always succeeds.
BalanceState balance_release(BalanceState state);

// State reached by applying `input` with the given lock pattern.
BalanceState balance_settle(bool side0_locked, bool side1_locked, int input);

}  // namespace linklogic::primitives
