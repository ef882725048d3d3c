#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

namespace linklogic::kinematics {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend bool operator==(Vec2 a, Vec2 b) = default;

  double norm() const { return std::hypot(x, y); }
  bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

Vec2 rotate(Vec2 v, double angle);

struct RigidLink {
  std::string id;
  std::vector<Vec2> points;  // link-local frame
};

// Revolute joint. When anchored, link_b/point_b are unused and point_a of
// link_a is pinned to `ground`.
struct Joint {
  std::string link_a;
  std::size_t point_a = 0;
  std::string link_b;
  std::size_t point_b = 0;
  bool anchored = false;
  Vec2 ground{};

  static Joint pin(std::string a, std::size_t pa, std::string b, std::size_t pb);
  static Joint anchor(std::string a, std::size_t pa, Vec2 where);
};

enum class Axis { kX, kY, kAngle };

struct DrivenCoordinate {
  std::string link;
  Axis axis = Axis::kAngle;
};

// Validated, immutable link graph.
class Mechanism {
 public:
  Mechanism(std::vector<RigidLink> links, std::vector<Joint> joints,
            std::vector<DrivenCoordinate> driven = {});

  const std::vector<RigidLink>& links() const { return links_; }
  const std::vector<Joint>& joints() const { return joints_; }
  const std::vector<DrivenCoordinate>& driven() const { return driven_; }

  std::size_t link_index(const std::string& id) const;

  struct ResolvedJoint {
    std::size_t a, pa, b, pb;
    bool anchored;
    Vec2 ground;
  };
  struct ResolvedDriven {
    std::size_t link;
    Axis axis;
  };
  const std::vector<ResolvedJoint>& resolved_joints() const { return rjoints_; }
  const std::vector<ResolvedDriven>& resolved_driven() const { return rdriven_; }

 private:
  std::vector<RigidLink> links_;
  std::vector<Joint> joints_;
  std::vector<DrivenCoordinate> driven_;
  std::vector<ResolvedJoint> rjoints_;
  std::vector<ResolvedDriven> rdriven_;
};

struct Pose {
  Vec2 position{};
  double angle = 0.0;  // counter-clockwise, radians

  friend bool operator==(const Pose&, const Pose&) = default;
};

struct Configuration {
  std::vector<Pose> poses;  // indexed like Mechanism::links()
  double residual = 0.0;

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

Vec2 world_point(const Mechanism& m, const Configuration& c, std::size_t link,
                 std::size_t point);

double coordinate(const Pose& p, Axis axis);

}  // namespace linklogic::kinematics
