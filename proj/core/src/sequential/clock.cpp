#include "linklogic/sequential/clock.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "linklogic/error.hpp"

namespace linklogic::sequential {

namespace {

double frac(double t) { return t - std::floor(t); }

}  // namespace

void ClockProgram::validate() const {
  for (double v : {rise, high, fall, low})
    if (!std::isfinite(v) || v < 0.0)
      throw std::invalid_argument("clock: waveform parts must be finite and non-negative");
  if (!(high > 0.0)) throw std::invalid_argument("clock: high must be positive");
  if (!(low > 0.0)) throw std::invalid_argument("clock: low must be positive");
  if (std::abs(rise + high + fall + low - 1.0) > 1e-9)
    throw std::invalid_argument(fmt::format("clock: parts sum to {}, not 1", rise + high + fall + low));
}

double ClockProgram::level(int phase, double t) const {
  const double u = frac(t - phase / 4.0);
  if (u < rise) return u / rise;
  if (u < rise + high) return 1.0;
  if (u < rise + high + fall) return 1.0 - (u - rise - high) / fall;
  return 0.0;
}

ClockReport validate_clock(const ClockProgram& p) {
  p.validate();
  ClockReport r;
  // Full-amplitude arcs [i/4 + rise, i/4 + rise + high] on the unit circle.
  double worst = 1.0;
  for (int i = 0; i < ClockProgram::kPhases; ++i) {
    const double a = i / 4.0 + p.rise;
    const double b = (i + 1) / 4.0 + p.rise;
    double shared = 0.0, gap = 1.0;
    for (int k = -1; k <= 1; ++k) {
      const double lo = std::max(a, b + k), hi = std::min(a + p.high, b + k + p.high);
      shared += std::max(0.0, hi - lo);
      gap = std::min(gap, std::max(0.0, lo - hi));
    }
    worst = std::min(worst, shared > 0.0 ? shared : -gap);
  }
  r.overlap = worst;
  r.dwell = p.low;
  if (!(r.overlap > 0.0))
    r.failures.push_back(fmt::format("adjacent phases never fully on together (overlap {:.4g})", r.overlap));
  if (!(r.dwell > 0.0)) r.failures.push_back("no fully inactive interval");
  r.pass = r.failures.empty();
  return r;
}

CamWaveform::CamWaveform(std::vector<double> radii, double phase_offset) : offset_(phase_offset) {
  if (radii.size() < 3) throw std::invalid_argument("cam profile needs at least 3 samples");
  for (double v : radii)
    if (!std::isfinite(v) || !(v > 0.0)) throw std::invalid_argument("cam radii must be positive");
  if (std::abs(radii.front() - radii.back()) > 1e-12 * std::max(1.0, radii.front()))
    throw NonPeriodicProfile(fmt::format("profile starts at {} but ends at {}", radii.front(), radii.back()));
  if (!std::isfinite(phase_offset)) throw std::invalid_argument("cam phase offset must be finite");
  const auto [mn, mx] = std::minmax_element(radii.begin(), radii.end());
  const double lo = *mn, span = *mx - *mn;
  norm_.reserve(radii.size());
  for (double v : radii) norm_.push_back(span > 0.0 ? (v - lo) / span : 0.0);
}

double CamWaveform::operator()(double t) const {
  const double n = static_cast<double>(norm_.size() - 1);
  const double x = frac(t - offset_) * n;
  auto i = static_cast<std::size_t>(std::floor(x));
  if (i >= norm_.size() - 1) i = norm_.size() - 2;
  const double w = x - static_cast<double>(i);
  return norm_[i] + (norm_[i + 1] - norm_[i]) * w;
}

CamWaveform cam_waveform(const std::vector<double>& radii, double phase_offset) {
  return CamWaveform(radii, phase_offset);
}

std::vector<double> trapezoid_profile(const ClockProgram& program, int samples, double base_radius,
                                      double lift) {
  if (samples < 2) throw std::invalid_argument("trapezoid_profile: need at least 2 samples");
  std::vector<double> r(static_cast<std::size_t>(samples) + 1);
  for (int i = 0; i < samples; ++i)
    r[static_cast<std::size_t>(i)] = base_radius + lift * program.level(0, double(i) / samples);
  r.back() = r.front();
  return r;
}

}  // namespace linklogic::sequential
