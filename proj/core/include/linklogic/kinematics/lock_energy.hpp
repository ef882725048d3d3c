#pragma once

#include <numbers>
#include <utility>

#include "linklogic/kinematics/mechanism.hpp"

namespace linklogic::kinematics {

struct LockGeometry {
  double L = 1.0;
  double k = 1.0;
  double r = 1.0;
  double theta_on = std::numbers::pi / 4;
  double theta0 = 0.0;
  double theta1 = 0.0;

  // Throws std::invalid_argument when an invariant is broken.
  void validate() const;
};

Vec2 lock_connecting_vector(double theta0, double theta1, double L);

double spring_energy(const LockGeometry& g);

// (dV/dtheta0, dV/dtheta1). Zero where the spring endpoints coincide.
std::pair<double, double> spring_gradient(const LockGeometry& g);

// |dV/dtheta1| / |dV/dtheta0| at (theta_active, eps).
double holding_advantage(const LockGeometry& g, double theta_active, double eps);

}  // namespace linklogic::kinematics
