#include "linklogic/primitives/crosscheck.hpp"

#include <fmt/format.h>

#include "linklogic/error.hpp"
#include "linklogic/kinematics/linkages.hpp"
#include "linklogic/kinematics/solver.hpp"

namespace linklogic::primitives {

namespace kin = linklogic::kinematics;

bool CrosscheckReport::passed() const {
  for (const auto& i : items)
    if (!i.passed) return false;
  return !items.empty();
}

void CrosscheckReport::raise_if_failed() const {
  for (const auto& i : items)
    if (!i.passed)
      throw CrosscheckFailed(fmt::format("state ({},{}) check '{}': {}", i.state.input0,
                                         i.state.input1, i.check, i.detail));
  if (items.empty()) throw CrosscheckFailed("no checks were run");
}

namespace {

std::map<std::size_t, double> targets_for(double theta0, double theta1) {
  const auto t = kin::lock_targets(theta0, theta1);
  return {{0, t.upper}, {1, t.lower}};
}

}  // namespace

CrosscheckReport crosscheck_lock(const kin::LockGeometry& geom, int steps) {
  CrosscheckReport report;
  geom.validate();
  const double on = geom.theta_on;

  kin::Assembly lock = kin::lock_mechanism(geom, true);
  kin::Configuration home;
  try {
    home = kin::assemble(lock.mechanism, lock.config);
  } catch (const Error& e) {
    report.items.push_back({{0, 0}, "reachable", false, fmt::format("assembly failed: {}", e.what())});
    return report;
  }

  const LockState states[] = {{0, 0}, {1, 0}, {0, 1}};
  for (const LockState st : states) {
    const double t0 = st.input0 ? on : 0.0;
    const double t1 = st.input1 ? on : 0.0;

    kin::Configuration at;
    try {
      at = kin::drive(lock.mechanism, home, targets_for(t0, t1), steps);
      report.items.push_back({st, "reachable", true, {}});
    } catch (const Error& e) {
      report.items.push_back({st, "reachable", false, e.what()});
      continue;
    }

    // Raising side s from here must bind exactly when the lock says so.
    for (int side = 0; side < 2; ++side) {
      if ((side == 0 ? st.input0 : st.input1) == 1) continue;
      const bool expect_locked = lock_is_locked(st, side);
      bool bound = false;
      std::string why;
      try {
        kin::drive(lock.mechanism, at,
                   targets_for(side == 0 ? on : t0, side == 1 ? on : t1), steps);
      } catch (const BindingDetected& e) {
        bound = true;
        why = e.what();
      }
      const bool ok = bound == expect_locked;
      report.items.push_back(
          {st, side == 0 ? "side0" : "side1", ok,
           ok ? std::string{}
              : fmt::format("kinematics {} but behaviour says {}", bound ? "binds" : "moves",
                            expect_locked ? "locked" : "free")});
    }

    try {
      auto back = kin::drive(lock.mechanism, at, targets_for(0.0, 0.0), steps);
      const auto d = kin::lock_spring_points(lock.mechanism, back);
      const auto h = kin::lock_spring_points(lock.mechanism, home);
      const double err = std::max((d.first - h.first).norm(), (d.second - h.second).norm());
      report.items.push_back({st, "return", err < 1e-8,
                              err < 1e-8 ? std::string{} : fmt::format("home offset {}", err)});
    } catch (const Error& e) {
      report.items.push_back({st, "return", false, e.what()});
    }
  }
  return report;
}

}  // namespace linklogic::primitives
