#include "linklogic/kinematics/lock_energy.hpp"

#include <fmt/format.h>

#include <cmath>
#include <stdexcept>

#include "linklogic/error.hpp"

namespace linklogic::kinematics {

void LockGeometry::validate() const {
  constexpr double half_pi = std::numbers::pi / 2;
  if (!(L > 0.0) || !(k > 0.0) || !(r > 0.0))
    throw std::invalid_argument("lock geometry: L, k and r must be positive");
  if (!(std::abs(theta0) <= half_pi) || !(std::abs(theta1) <= half_pi))
    throw std::invalid_argument("lock geometry: input angles must lie in [-pi/2, pi/2]");
  if (!std::isfinite(theta_on))
    throw std::invalid_argument("lock geometry: theta_on must be finite");
}

Vec2 lock_connecting_vector(double theta0, double theta1, double L) {
  return {L * (std::sin(theta0) - std::sin(theta1)),
          L * (std::cos(theta0) + std::cos(theta1) - 1.0)};
}

double spring_energy(const LockGeometry& g) {
  g.validate();
  const double d = lock_connecting_vector(g.theta0, g.theta1, g.L).norm() - g.r;
  return 0.5 * g.k * d * d;
}

std::pair<double, double> spring_gradient(const LockGeometry& g) {
  g.validate();
  const Vec2 delta = lock_connecting_vector(g.theta0, g.theta1, g.L);
  const double len = delta.norm();
  if (len == 0.0) return {0.0, 0.0};
  // dDelta/dtheta0 = L(cos t0, -sin t0), dDelta/dtheta1 = L(-cos t1, -sin t1)
  const double d0 = g.L * (delta.x * std::cos(g.theta0) - delta.y * std::sin(g.theta0));
  const double d1 = g.L * (-delta.x * std::cos(g.theta1) - delta.y * std::sin(g.theta1));
  const double scale = g.k * (len - g.r) / len;
  return {scale * d0, scale * d1};
}

double holding_advantage(const LockGeometry& g, double theta_active, double eps) {
  if (!(eps > 0.0) || eps > 0.05)
    throw std::invalid_argument(fmt::format("holding_advantage: eps {} outside (0, 0.05]", eps));
  LockGeometry at = g;
  at.theta0 = theta_active;
  at.theta1 = eps;
  const auto [g0, g1] = spring_gradient(at);
  if (std::abs(g0) < 1e-15 && std::abs(g1) < 1e-15)
    throw DegenerateAdvantage(
        fmt::format("both partials vanish at ({}, {})", theta_active, eps));
  if (theta_active < 0.1)
    throw std::invalid_argument(
        fmt::format("holding_advantage: active input {} below 0.1 rad", theta_active));
  return std::abs(g1) / std::abs(g0);
}

}  // namespace linklogic::kinematics
