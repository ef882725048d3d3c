#pragma once

#include "linklogic/kinematics/lock_energy.hpp"
#include "linklogic/kinematics/mechanism.hpp"

namespace linklogic::kinematics {

// A mechanism together with a configuration that satisfies it.
struct Assembly {
  Mechanism mechanism;
  Configuration config;
};

// Parallelogram 4-bar: anchors at (0,0) and (width,0), vertical side links of
// length `side`, coupler of length `width`. The left side link's angle is the
// single driven coordinate. `lean` is the rightward lean of the sides.
Assembly four_bar(double side = 1.0, double width = 1.0, double lean = 0.0);

// Three side links on anchors (0,0), (1,0), (2,0) and a coupler of length 2.
// With `center_tilt` = 0 the centre link is parallel to the outer ones and the
// chain is mobile; otherwise the centre link is anchored so that it meets the
// coupler tilted by `center_tilt` at home and the chain is rigid.
Assembly five_bar_parallelogram(double lean = 0.0, double center_tilt = 0.0);

// 4-bar with sides 1.0 and 1.2 plus a rigid centre link; has no assembly.
// Returned configuration is only a guess.
Assembly inconsistent_chain();

// Two coupled parallelogram linkages. Driven coordinates: 0 = upper input,
// 1 = lower input (link angles; use lock_targets to convert from leans).
// Without the connecting link the two linkages are independent.
Assembly lock_mechanism(const LockGeometry& g, bool with_connecting_link = true);

// Analytic poses of lock_mechanism for the given leans. The connecting link,
// when present, is aligned with the spring endpoints.
Configuration lock_pose(const Mechanism& m, const LockGeometry& g, double theta0,
                        double theta1);

struct LockTargets {
  double upper;
  double lower;
};
LockTargets lock_targets(double theta0, double theta1);

// World positions of the two spring attachment points (upper, lower).
std::pair<Vec2, Vec2> lock_spring_points(const Mechanism& m, const Configuration& c);

}  // namespace linklogic::kinematics
