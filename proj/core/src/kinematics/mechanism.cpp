#include "linklogic/kinematics/mechanism.hpp"

#include <fmt/format.h>

#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace linklogic::kinematics {

Vec2 rotate(Vec2 v, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

Joint Joint::pin(std::string a, std::size_t pa, std::string b, std::size_t pb) {
  return Joint{std::move(a), pa, std::move(b), pb, false, {}};
}

Joint Joint::anchor(std::string a, std::size_t pa, Vec2 where) {
  return Joint{std::move(a), pa, {}, 0, true, where};
}

namespace {

void fail(const std::string& msg) { throw std::invalid_argument("mechanism: " + msg); }

}  // namespace

Mechanism::Mechanism(std::vector<RigidLink> links, std::vector<Joint> joints,
                     std::vector<DrivenCoordinate> driven)
    : links_(std::move(links)), joints_(std::move(joints)), driven_(std::move(driven)) {
  if (links_.empty()) fail("no links");
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < links_.size(); ++i) {
    const auto& l = links_[i];
    if (l.points.empty()) fail(fmt::format("link '{}' has no attachment points", l.id));
    for (std::size_t p = 0; p < l.points.size(); ++p) {
      if (!l.points[p].finite()) fail(fmt::format("link '{}' has a non-finite point", l.id));
      for (std::size_t q = 0; q < p; ++q)
        if ((l.points[p] - l.points[q]).norm() == 0.0)
          fail(fmt::format("link '{}' has coincident points {} and {}", l.id, q, p));
    }
    if (!index.emplace(l.id, i).second) fail(fmt::format("duplicate link id '{}'", l.id));
  }

  auto resolve = [&](const std::string& id, std::size_t point) {
    auto it = index.find(id);
    if (it == index.end()) fail(fmt::format("joint references unknown link '{}'", id));
    if (point >= links_[it->second].points.size())
      fail(fmt::format("joint references point {} of link '{}'", point, id));
    return it->second;
  };

  std::vector<std::vector<std::size_t>> adj(links_.size());
  std::vector<bool> grounded(links_.size(), false);
  for (const auto& j : joints_) {
    ResolvedJoint r{};
    r.a = resolve(j.link_a, j.point_a);
    r.pa = j.point_a;
    r.anchored = j.anchored;
    r.ground = j.ground;
    if (j.anchored) {
      if (!j.ground.finite()) fail("anchor position is not finite");
      grounded[r.a] = true;
    } else {
      r.b = resolve(j.link_b, j.point_b);
      r.pb = j.point_b;
      if (r.a == r.b) fail(fmt::format("joint connects link '{}' to itself", j.link_a));
      adj[r.a].push_back(r.b);
      adj[r.b].push_back(r.a);
    }
    rjoints_.push_back(r);
  }

  // Every link must reach ground through the joint graph.
  std::vector<bool> seen(links_.size(), false);
  std::queue<std::size_t> frontier;
  for (std::size_t i = 0; i < links_.size(); ++i)
    if (grounded[i]) {
      seen[i] = true;
      frontier.push(i);
    }
  if (frontier.empty()) fail("no anchored joint");
  while (!frontier.empty()) {
    auto i = frontier.front();
    frontier.pop();
    for (auto n : adj[i])
      if (!seen[n]) {
        seen[n] = true;
        frontier.push(n);
      }
  }
  for (std::size_t i = 0; i < links_.size(); ++i)
    if (!seen[i]) fail(fmt::format("link '{}' is not connected to ground", links_[i].id));

  for (const auto& d : driven_) {
    auto it = index.find(d.link);
    if (it == index.end()) fail(fmt::format("driven coordinate on unknown link '{}'", d.link));
    rdriven_.push_back({it->second, d.axis});
  }
}

std::size_t Mechanism::link_index(const std::string& id) const {
  for (std::size_t i = 0; i < links_.size(); ++i)
    if (links_[i].id == id) return i;
  throw std::invalid_argument("mechanism: unknown link '" + id + "'");
}

Vec2 world_point(const Mechanism& m, const Configuration& c, std::size_t link,
                 std::size_t point) {
  const auto& pose = c.poses.at(link);
  return pose.position + rotate(m.links().at(link).points.at(point), pose.angle);
}

double coordinate(const Pose& p, Axis axis) {
  switch (axis) {
    case Axis::kX: return p.position.x;
    case Axis::kY: return p.position.y;
    case Axis::kAngle: return p.angle;
  }
  return 0.0;
}

}  // namespace linklogic::kinematics
