#include "linklogic/kinematics/solver.hpp"

#include <fmt/format.h>

#include <Eigen/Dense>
#include <algorithm>
#include <stdexcept>

#include "linklogic/error.hpp"

namespace linklogic::kinematics {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

VectorXd pack(const Configuration& c) {
  VectorXd q(3 * c.poses.size());
  for (std::size_t i = 0; i < c.poses.size(); ++i) {
    q[3 * i] = c.poses[i].position.x;
    q[3 * i + 1] = c.poses[i].position.y;
    q[3 * i + 2] = c.poses[i].angle;
  }
  return q;
}

void unpack(const VectorXd& q, Configuration& c) {
  for (std::size_t i = 0; i < c.poses.size(); ++i)
    c.poses[i] = Pose{{q[3 * i], q[3 * i + 1]}, q[3 * i + 2]};
}

// Constraint system: two rows per joint, then one row per driven coordinate
// when `driven` is non-null.
struct System {
  const Mechanism& m;
  const std::vector<double>* driven;

  Eigen::Index rows() const {
    return static_cast<Eigen::Index>(2 * m.joints().size() +
                                     (driven ? driven->size() : 0));
  }

  VectorXd eval(const VectorXd& q) const {
    VectorXd f(rows());
    const auto& links = m.links();
    auto world = [&](std::size_t l, std::size_t p) {
      Vec2 local = links[l].points[p];
      Vec2 w = rotate(local, q[3 * l + 2]);
      return Vec2{q[3 * l] + w.x, q[3 * l + 1] + w.y};
    };
    Eigen::Index row = 0;
    for (const auto& j : m.resolved_joints()) {
      Vec2 a = world(j.a, j.pa);
      Vec2 b = j.anchored ? j.ground : world(j.b, j.pb);
      f[row++] = a.x - b.x;
      f[row++] = a.y - b.y;
    }
    if (driven) {
      const auto& rd = m.resolved_driven();
      for (std::size_t k = 0; k < rd.size(); ++k) {
        const auto base = static_cast<Eigen::Index>(3 * rd[k].link);
        double v = rd[k].axis == Axis::kX ? q[base]
                   : rd[k].axis == Axis::kY ? q[base + 1]
                                            : q[base + 2];
        f[row++] = v - (*driven)[k];
      }
    }
    return f;
  }

  MatrixXd jacobian(const VectorXd& q) const {
    const auto n = q.size();
    MatrixXd jac = MatrixXd::Zero(rows(), n);
    const auto& links = m.links();
    auto fill = [&](Eigen::Index row, std::size_t l, std::size_t p, double sign) {
      const auto base = static_cast<Eigen::Index>(3 * l);
      Vec2 d = rotate(links[l].points[p], q[base + 2] + 1.5707963267948966);
      jac(row, base) += sign;
      jac(row + 1, base + 1) += sign;
      jac(row, base + 2) += sign * d.x;
      jac(row + 1, base + 2) += sign * d.y;
    };
    Eigen::Index row = 0;
    for (const auto& j : m.resolved_joints()) {
      fill(row, j.a, j.pa, 1.0);
      if (!j.anchored) fill(row, j.b, j.pb, -1.0);
      row += 2;
    }
    if (driven) {
      for (const auto& d : m.resolved_driven()) {
        const auto base = static_cast<Eigen::Index>(3 * d.link);
        jac(row++, base + (d.axis == Axis::kX ? 0 : d.axis == Axis::kY ? 1 : 2)) = 1.0;
      }
    }
    return jac;
  }
};

std::vector<double> driven_values(const Mechanism& m, const Configuration& c) {
  std::vector<double> v;
  for (const auto& d : m.resolved_driven()) v.push_back(coordinate(c.poses[d.link], d.axis));
  return v;
}

void check_shape(const Mechanism& m, const Configuration& c) {
  if (c.poses.size() != m.links().size())
    throw std::invalid_argument(fmt::format("configuration has {} poses for {} links",
                                            c.poses.size(), m.links().size()));
}

Configuration solve(const Mechanism& m, const Configuration& guess,
                    const std::vector<double>& targets, const SolverOptions& opt) {
  System sys{m, &targets};
  VectorXd q = pack(guess);
  VectorXd f = sys.eval(q);
  for (int it = 0; it <= opt.max_iter; ++it) {
    const double res = f.cwiseAbs().maxCoeff();
    if (res <= opt.tol) {
      Configuration out = guess;
      unpack(q, out);
      out.residual = res;
      return out;
    }
    if (it == opt.max_iter) break;

    Eigen::CompleteOrthogonalDecomposition<MatrixXd> cod(sys.jacobian(q));
    cod.setThreshold(1e-9);
    const VectorXd step = cod.solve(-f);

    const double n0 = f.norm();
    double lambda = 1.0;
    bool accepted = false;
    for (int k = 0; k < 30; ++k) {
      VectorXd trial = q + lambda * step;
      VectorXd ft = sys.eval(trial);
      if (ft.norm() < n0) {
        q = std::move(trial);
        f = std::move(ft);
        accepted = true;
        break;
      }
      lambda *= 0.5;
    }
    if (!accepted)
      throw NoConvergence(fmt::format("residual stagnated at {:.3e} after {} iterations",
                                      res, it));
  }
  throw NoConvergence(fmt::format("residual {:.3e} above tolerance after {} iterations",
                                  f.cwiseAbs().maxCoeff(), opt.max_iter));
}

double pose_change(const Configuration& a, const Configuration& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.poses.size(); ++i) {
    d = std::max(d, (a.poses[i].position - b.poses[i].position).norm());
    d = std::max(d, std::abs(a.poses[i].angle - b.poses[i].angle));
  }
  return d;
}

}  // namespace

double residual(const Mechanism& m, const Configuration& config,
                const std::vector<double>& driven) {
  check_shape(m, config);
  if (driven.size() != m.driven().size())
    throw std::invalid_argument("driven value count does not match mechanism");
  System sys{m, &driven};
  return sys.eval(pack(config)).cwiseAbs().maxCoeff();
}

Configuration assemble(const Mechanism& m, const Configuration& guess,
                       const SolverOptions& opt) {
  check_shape(m, guess);
  return solve(m, guess, driven_values(m, guess), opt);
}

Configuration drive(const Mechanism& m, const Configuration& config,
                    const std::map<std::size_t, double>& targets, int steps,
                    const SolverOptions& opt) {
  check_shape(m, config);
  if (steps < 1) throw std::invalid_argument("drive: steps must be positive");
  const auto start = driven_values(m, config);
  auto finish = start;
  for (const auto& [index, value] : targets) {
    if (index >= finish.size())
      throw std::invalid_argument(fmt::format("drive: no driven coordinate {}", index));
    finish[index] = value;
  }
  if (residual(m, config, start) > 1e3 * opt.tol)
    throw std::invalid_argument("drive: starting configuration is not assembled");

  Configuration current = config;
  std::vector<double> target(start.size());
  for (int s = 1; s <= steps; ++s) {
    const double t = static_cast<double>(s) / steps;
    for (std::size_t k = 0; k < start.size(); ++k)
      target[k] = start[k] + (finish[k] - start[k]) * t;
    Configuration next;
    try {
      next = solve(m, current, target, opt);
    } catch (const NoConvergence& e) {
      throw BindingDetected(fmt::format("drive sub-step {}/{} failed: {}", s, steps, e.what()));
    }
    if (pose_change(current, next) > opt.max_step_change)
      throw BindingDetected(fmt::format("drive sub-step {}/{} jumped branches", s, steps));
    current = std::move(next);
  }
  return current;
}

int mobility(const Mechanism& m, const Configuration& config, const SolverOptions& opt) {
  check_shape(m, config);
  System sys{m, nullptr};
  const VectorXd q = pack(config);
  const auto n = static_cast<int>(q.size());
  if (sys.rows() == 0) return n;
  Eigen::JacobiSVD<MatrixXd> svd(sys.jacobian(q));
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s[0] == 0.0) return n;
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s[i] > opt.rank_threshold * s[0]) ++rank;
  return n - rank;
}

}  // namespace linklogic::kinematics
