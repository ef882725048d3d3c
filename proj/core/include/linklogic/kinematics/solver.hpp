#pragma once

#include <cstddef>
#include <map>

#include "linklogic/kinematics/mechanism.hpp"

namespace linklogic::kinematics {

struct SolverOptions {
  double tol = 1e-10;
  int max_iter = 100;
  // Largest pose change (length or radians) accepted between two drive
  // sub-steps before the path is declared discontinuous.
  double max_step_change = 0.5;
  double rank_threshold = 1e-8;
};

// Damped Gauss-Newton on the joint coincidence constraints. Driven
// coordinates are held at the values found in `guess`.
Configuration assemble(const Mechanism& m, const Configuration& guess,
                       const SolverOptions& opt = {});

// Targets are keyed by index into Mechanism::driven(). Coordinates without a
// target are held at their current value.
Configuration drive(const Mechanism& m, const Configuration& config,
                    const std::map<std::size_t, double>& targets, int steps,
                    const SolverOptions& opt = {});

// 3 * links - rank(joint Jacobian). Driven coordinates are not counted as
// constraints.
int mobility(const Mechanism& m, const Configuration& config,
             const SolverOptions& opt = {});

// Max-norm of the joint and driven constraint residuals.
double residual(const Mechanism& m, const Configuration& config,
                const std::vector<double>& driven_values);

}  // namespace linklogic::kinematics
