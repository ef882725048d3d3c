#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "linklogic/energy/energy.hpp"
#include "support.hpp"

namespace le = linklogic::energy;
using linklogic::testing::rel_close;

TEST(Drag, ReferenceValues) {
  const le::DragModel m;
  EXPECT_TRUE(rel_close(le::drag_energy_per_joint(m, 100e6), 2.4e-27, 0.01));
  EXPECT_TRUE(rel_close(le::drag_energy_per_joint(m, 1.0), 2.4e-35, 1e-12));
  EXPECT_TRUE(rel_close(le::drag_energy_per_op(m, 100e6), 2.4e-26, 1e-12));
  EXPECT_TRUE(rel_close(le::energy_time_product(m), 2.4e-34, 1e-12));
  // Same order of magnitude as "about 1e-34".
  EXPECT_NEAR(std::log10(le::energy_time_product(m)), -34, 0.5);
}

TEST(Drag, QuadraticInRotation) {
  le::DragModel m;
  const double base = le::energy_time_product(m);
  m.phi = 2.0;
  EXPECT_TRUE(rel_close(le::energy_time_product(m), 4 * base, 1e-12));
  le::DragModel one;
  one.joints_per_op = 1;
  EXPECT_TRUE(rel_close(le::energy_time_product(one), 2.4e-35, 1e-12));
}

TEST(Drag, FrequencyCancels) {
  const le::DragModel m;
  for (double f : {1.0, 1e3, 1e6, 1e8, 1e10})
    EXPECT_TRUE(rel_close(le::drag_energy_per_joint(m, f) / f, le::energy_time_product(m) / m.joints_per_op, 1e-12));
}

TEST(Drag, RejectsBadInputs) {
  EXPECT_THROW(le::drag_energy_per_joint({}, 0.0), std::invalid_argument);
  le::DragModel m;
  m.k_rd = -1;
  EXPECT_THROW(m.validate(), std::invalid_argument);
}

TEST(Inertia, ReferenceValues) {
  const auto r = le::inertial_analysis({});
  EXPECT_TRUE(rel_close(r.v_max, 6.28, 0.01));
  EXPECT_TRUE(rel_close(r.a_max, 3.95e9, 0.01));
  EXPECT_TRUE(rel_close(r.f_max, 3.56e-12, 0.01));
  EXPECT_NEAR(r.deflection, 2.7e-13, 0.05e-13);
  EXPECT_LT(r.deflection, 1e-12);
}

TEST(Inertia, ZeroAmplitude) {
  le::InertialModel m;
  m.A = 0;
  const auto r = le::inertial_analysis(m);
  EXPECT_EQ(r.v_max, 0);
  EXPECT_EQ(r.a_max, 0);
  EXPECT_EQ(r.f_max, 0);
  EXPECT_EQ(r.deflection, 0);
}

TEST(Inertia, ScalesLinearlyInAmplitudeQuadraticallyInFrequency) {
  const le::InertialModel base;
  const auto r0 = le::inertial_analysis(base);
  for (double sa : {0.5, 2.0, 3.0})
    for (double sf : {0.5, 2.0, 10.0}) {
      auto m = base;
      m.A *= sa;
      m.f *= sf;
      const auto r = le::inertial_analysis(m);
      EXPECT_TRUE(rel_close(r.v_max, r0.v_max * sa * sf, 1e-12));
      EXPECT_TRUE(rel_close(r.a_max, r0.a_max * sa * sf * sf, 1e-12));
      EXPECT_TRUE(rel_close(r.f_max, r0.f_max * sa * sf * sf, 1e-12));
      EXPECT_TRUE(rel_close(r.deflection, r0.deflection * sa * sf * sf, 1e-12));
    }
}

TEST(Landauer, RoomTemperature) {
  const auto r = le::landauer_context(300);
  EXPECT_TRUE(rel_close(r.kT, 4.1e-21, 0.02));
  EXPECT_TRUE(rel_close(r.kT, 4.14e-21, 0.001));
  EXPECT_TRUE(rel_close(r.kT_ln2, 2.87e-21, 0.001));
  EXPECT_TRUE(rel_close(le::drag_energy_per_joint({}, 100e6) / r.kT, 5.8e-7, 0.01));
  EXPECT_THROW(le::landauer_context(0), std::invalid_argument);
}

TEST(Mems, DieCount) {
  EXPECT_EQ(le::mems_density(0.028, 640e-6, 1070e-6, 2), 2288);
  EXPECT_TRUE(rel_close(2288, 2200, 0.05));
  EXPECT_EQ(le::mems_density(640e-6, 640e-6, 640e-6, 2), 2);
  const auto half = le::mems_density(0.014, 640e-6, 1070e-6, 2);
  EXPECT_NEAR(static_cast<double>(half), 2288 / 4.0, 2.0);
  EXPECT_THROW(le::mems_density(-1, 1, 1, 1), std::invalid_argument);
}
