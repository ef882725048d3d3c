#include "linklogic/kinematics/linkages.hpp"

#include <cmath>

namespace linklogic::kinematics {

namespace {

RigidLink bar(std::string id, Vec2 a, Vec2 b) { return RigidLink{std::move(id), {a, b}}; }

// Side link of length `len` whose tip sits at (0, len) in its frame.
Pose leaning(Vec2 base, double lean) { return Pose{base, -lean}; }

}  // namespace

Assembly four_bar(double side, double width, double lean) {
  std::vector<RigidLink> links{
      bar("left", {0, 0}, {0, side}),
      bar("right", {0, 0}, {0, side}),
      bar("coupler", {0, 0}, {width, 0}),
  };
  std::vector<Joint> joints{
      Joint::anchor("left", 0, {0, 0}),
      Joint::anchor("right", 0, {width, 0}),
      Joint::pin("left", 1, "coupler", 0),
      Joint::pin("right", 1, "coupler", 1),
  };
  Mechanism m(std::move(links), std::move(joints), {{"left", Axis::kAngle}});
  const Vec2 tip{side * std::sin(lean), side * std::cos(lean)};
  Configuration c{{leaning({0, 0}, lean), leaning({width, 0}, lean), Pose{tip, 0.0}}, 0.0};
  return {std::move(m), std::move(c)};
}

Assembly five_bar_parallelogram(double lean, double center_tilt) {
  const Vec2 center_anchor{1.0 - std::sin(center_tilt), 1.0 - std::cos(center_tilt)};
  std::vector<RigidLink> links{
      bar("left", {0, 0}, {0, 1}),
      bar("center", {0, 0}, {0, 1}),
      bar("right", {0, 0}, {0, 1}),
      RigidLink{"coupler", {{0, 0}, {1, 0}, {2, 0}}},
  };
  std::vector<Joint> joints{
      Joint::anchor("left", 0, {0, 0}),
      Joint::anchor("center", 0, center_anchor),
      Joint::anchor("right", 0, {2, 0}),
      Joint::pin("left", 1, "coupler", 0),
      Joint::pin("center", 1, "coupler", 1),
      Joint::pin("right", 1, "coupler", 2),
  };
  Mechanism m(std::move(links), std::move(joints), {{"left", Axis::kAngle}});
  const Vec2 tip{std::sin(lean), std::cos(lean)};
  Configuration c{{leaning({0, 0}, lean), leaning(center_anchor, lean + center_tilt),
                   leaning({2, 0}, lean), Pose{tip, 0.0}},
                  0.0};
  return {std::move(m), std::move(c)};
}

Assembly inconsistent_chain() {
  std::vector<RigidLink> links{
      bar("left", {0, 0}, {0, 1.0}),
      bar("right", {0, 0}, {0, 1.2}),
      RigidLink{"coupler", {{0, 0}, {0.5, 0}, {1, 0}}},
      bar("center", {0, 0}, {0, 1.0}),
  };
  std::vector<Joint> joints{
      Joint::anchor("left", 0, {0, 0}),
      Joint::anchor("right", 0, {1, 0}),
      Joint::anchor("center", 0, {0.5, 0}),
      Joint::pin("left", 1, "coupler", 0),
      Joint::pin("right", 1, "coupler", 2),
      Joint::pin("center", 1, "coupler", 1),
  };
  Mechanism m(std::move(links), std::move(joints), {{"left", Axis::kAngle}});
  Configuration c{{Pose{{0, 0}, 0}, Pose{{1, 0}, 0}, Pose{{0, 1}, 0}, Pose{{0.5, 0}, 0}}, 0.0};
  return {std::move(m), std::move(c)};
}

Assembly lock_mechanism(const LockGeometry& g, bool with_connecting_link) {
  const double L = g.L;
  std::vector<RigidLink> links{
      bar("upper_left", {0, 0}, {0, L}),
      bar("upper_right", {0, 0}, {0, L}),
      RigidLink{"upper_coupler", {{0, 0}, {2 * L, 0}, {L, -L}}},
      bar("lower_left", {0, 0}, {0, -L}),
      bar("lower_right", {0, 0}, {0, -L}),
      RigidLink{"lower_coupler", {{0, 0}, {2 * L, 0}, {L, L}}},
  };
  std::vector<Joint> joints{
      Joint::anchor("upper_left", 0, {0, 2 * L}),
      Joint::anchor("upper_right", 0, {2 * L, 2 * L}),
      Joint::pin("upper_left", 1, "upper_coupler", 0),
      Joint::pin("upper_right", 1, "upper_coupler", 1),
      Joint::anchor("lower_left", 0, {0, L}),
      Joint::anchor("lower_right", 0, {2 * L, L}),
      Joint::pin("lower_left", 1, "lower_coupler", 0),
      Joint::pin("lower_right", 1, "lower_coupler", 1),
  };
  if (with_connecting_link) {
    links.push_back(bar("connecting", {0, 0}, {0, g.r}));
    joints.push_back(Joint::pin("connecting", 0, "lower_coupler", 2));
    joints.push_back(Joint::pin("connecting", 1, "upper_coupler", 2));
  }
  Mechanism m(std::move(links), std::move(joints),
              {{"upper_left", Axis::kAngle}, {"lower_left", Axis::kAngle}});
  Configuration c = lock_pose(m, g, 0.0, 0.0);
  return {std::move(m), std::move(c)};
}

LockTargets lock_targets(double theta0, double theta1) { return {-theta0, theta1}; }

Configuration lock_pose(const Mechanism& m, const LockGeometry& g, double theta0,
                        double theta1) {
  const double L = g.L;
  const Vec2 up{L * std::sin(theta0), L * std::cos(theta0)};
  const Vec2 down{L * std::sin(theta1), -L * std::cos(theta1)};
  Configuration c;
  c.poses = {
      Pose{{0, 2 * L}, -theta0},
      Pose{{2 * L, 2 * L}, -theta0},
      Pose{Vec2{0, 2 * L} + up, 0.0},
      Pose{{0, L}, theta1},
      Pose{{2 * L, L}, theta1},
      Pose{Vec2{0, L} + down, 0.0},
  };
  if (m.links().size() > 6) {
    const Vec2 lower = c.poses[5].position + Vec2{L, L};
    const Vec2 upper = c.poses[2].position + Vec2{L, -L};
    const Vec2 d = upper - lower;
    c.poses.push_back(Pose{lower, std::atan2(-d.x, d.y)});
  }
  return c;
}

std::pair<Vec2, Vec2> lock_spring_points(const Mechanism& m, const Configuration& c) {
  return {world_point(m, c, 2, 2), world_point(m, c, 5, 2)};
}

}  // namespace linklogic::kinematics
