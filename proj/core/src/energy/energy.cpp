#include "linklogic/energy/energy.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace linklogic::energy {

namespace {

void positive(double v, const char* what) {
  if (!std::isfinite(v) || !(v > 0.0)) throw std::invalid_argument(std::string(what) + " must be positive");
}

}  // namespace

void DragModel::validate() const {
  positive(k_rd, "k_rd");
  positive(phi, "phi");
  if (joints_per_op < 1) throw std::invalid_argument("joints_per_op must be positive");
}

void InertialModel::validate() const {
  positive(m, "mass");
  positive(f, "frequency");
  positive(k_lateral, "k_lateral");
  if (!std::isfinite(A) || A < 0.0) throw std::invalid_argument("amplitude must be non-negative");
}

double drag_energy_per_joint(const DragModel& model, double f) {
  model.validate();
  positive(f, "frequency");
  return model.k_rd * model.phi * model.phi * f;
}

double drag_energy_per_op(const DragModel& model, double f) {
  return model.joints_per_op * drag_energy_per_joint(model, f);
}

double energy_time_product(const DragModel& model) {
  model.validate();
  return model.joints_per_op * model.k_rd * model.phi * model.phi;
}

InertialResult inertial_analysis(const InertialModel& model) {
  model.validate();
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const double v = two_pi * model.f * model.A;
  const double a = two_pi * two_pi * model.f * model.f * model.A;
  const double force = model.m * a;
  return {v, a, force, force / model.k_lateral};
}

LandauerResult landauer_context(double T) {
  positive(T, "temperature");
  const double kT = kBoltzmann * T;
  return {kT, kT * std::numbers::ln2};
}

long long mems_density(double die_side, double cell_w, double cell_h, long long per_cell) {
  positive(die_side, "die side");
  positive(cell_w, "cell width");
  positive(cell_h, "cell height");
  if (per_cell < 1) throw std::invalid_argument("transistors per cell must be positive");
  // Relative nudge keeps exact ratios such as die == cell from rounding down.
  const double cells = std::floor(die_side * die_side / (cell_w * cell_h) * (1.0 + 1e-12));
  return static_cast<long long>(cells) * per_cell;
}

}  // namespace linklogic::energy
