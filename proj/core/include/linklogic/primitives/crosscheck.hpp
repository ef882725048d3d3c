#pragma once

#include <string>
#include <vector>

#include "linklogic/kinematics/lock_energy.hpp"
#include "linklogic/primitives/lock.hpp"

namespace linklogic::primitives {

struct CrosscheckItem {
  LockState state;
  std::string check;  // "reachable", "side0", "side1", "return"
  bool passed = false;
  std::string detail;
};

struct CrosscheckReport {
  std::vector<CrosscheckItem> items;

  bool passed() const;
  // Throws CrosscheckFailed naming the first diverging state.
  void raise_if_failed() const;
};

// Drives the explicit kinematic lock through the three behavioural states and
// compares what moves and what binds with lock_is_locked.
CrosscheckReport crosscheck_lock(const kinematics::LockGeometry& geom, int steps = 20);

}  // namespace linklogic::primitives
