#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "linklogic/gates/dual_rail.hpp"

namespace linklogic::testing {

// Small seeded generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool bit() { return integer(0, 1) == 1; }

  std::vector<gates::DualRailValue> stream(std::size_t n) {
    std::vector<gates::DualRailValue> s;
    for (std::size_t i = 0; i < n; ++i) s.push_back(gates::DualRailValue::from_bit(bit()));
    return s;
  }

 private:
  std::mt19937_64 rng_;
};

// Spring energy of the lock written out from the endpoint positions.
inline double lock_energy_oracle(double t0, double t1, double L, double k, double r) {
  const double ux = L + L * std::sin(t0), uy = L + L * std::cos(t0);           // upper endpoint
  const double dx = L + L * std::sin(t1), dy = 2 * L - L * std::cos(t1);       // lower endpoint
  const double d = std::hypot(ux - dx, uy - dy) - r;
  return 0.5 * k * d * d;
}

inline bool rel_close(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

}  // namespace linklogic::testing
