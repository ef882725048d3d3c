#pragma once

namespace linklogic::primitives {

// Behavioural lock. The (1,1) state is rejected by every mutation.
struct LockState {
  int input0 = 0;
  int input1 = 0;

  friend bool operator==(const LockState&, const LockState&) = default;
};

// Throws BindingViolation when raising a side while the other is 1.
LockState lock_set(LockState state, int side, int value);

bool lock_is_locked(LockState state, int side);

}  // namespace linklogic::primitives
