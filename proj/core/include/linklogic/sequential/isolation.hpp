#pragma once

#include "linklogic/gates/simulator.hpp"
#include "linklogic/sequential/pipeline.hpp"

namespace linklogic::sequential {

// Largest number of distinct cells touched by one connected group of
// movable rails. Clock and input rails are stops; a rail held by a lock whose
// other half is raised cannot move and splits the group. Balances and routes
// couple their rails, locks do not.
int force_isolation(const gates::Simulator& sim);

// force_isolation at every frame of a trace; the largest value.
int max_force_isolation(const Trace& trace);

}  // namespace linklogic::sequential
