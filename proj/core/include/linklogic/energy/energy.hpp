#pragma once

namespace linklogic::energy {

inline constexpr double kBoltzmann = 1.380649e-23;  // J/K

struct DragModel {
  double k_rd = 2.4e-35;  // J s rad^-2
  int joints_per_op = 10;
  double phi = 1.0;  // rad per operation

  void validate() const;
};

struct InertialModel {
  double m = 9e-22;         // kg
  double A = 10e-9;         // m
  double f = 100e6;         // Hz
  double k_lateral = 13.0;  // N/m

  void validate() const;  // A may be zero
};

struct InertialResult {
  double v_max;
  double a_max;
  double f_max;
  double deflection;
};

struct LandauerResult {
  double kT;
  double kT_ln2;
};

// One rotation of phi in time 1/f.
double drag_energy_per_joint(const DragModel& model, double f);
double drag_energy_per_op(const DragModel& model, double f);
double energy_time_product(const DragModel& model);
InertialResult inertial_analysis(const InertialModel& model);
LandauerResult landauer_context(double T);
long long mems_density(double die_side, double cell_w, double cell_h, long long per_cell);

}  // namespace linklogic::energy
