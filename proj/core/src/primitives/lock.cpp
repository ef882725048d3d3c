#include "linklogic/primitives/lock.hpp"

#include <fmt/format.h>

#include <stdexcept>

#include "linklogic/error.hpp"

namespace linklogic::primitives {

namespace {

void check(LockState s) {
  if ((s.input0 != 0 && s.input0 != 1) || (s.input1 != 0 && s.input1 != 1))
    throw std::invalid_argument("lock inputs must be 0 or 1");
  if (s.input0 == 1 && s.input1 == 1) throw BindingViolation("lock state (1,1) is not possible");
}

void check_side(int side) {
  if (side != 0 && side != 1) throw std::invalid_argument("lock side must be 0 or 1");
}

}  // namespace

LockState lock_set(LockState state, int side, int value) {
  check(state);
  check_side(side);
  if (value != 0 && value != 1) throw std::invalid_argument("lock value must be 0 or 1");
  int& mine = side == 0 ? state.input0 : state.input1;
  const int other = side == 0 ? state.input1 : state.input0;
  if (value == 1 && other == 1)
    throw BindingViolation(fmt::format("cannot raise side {}: side {} is already 1", side, 1 - side));
  mine = value;
  return state;
}

bool lock_is_locked(LockState state, int side) {
  check(state);
  check_side(side);
  return (side == 0 ? state.input1 : state.input0) == 1;
}

}  // namespace linklogic::primitives
