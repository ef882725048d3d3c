#pragma once

#include <string>
#include <vector>

namespace linklogic::sequential {

// Four trapezoid phases; phase i is delayed by i/4 of a cycle. Each phase
// starts its rise at its offset.
struct ClockProgram {
  double rise = 0.1;
  double high = 0.45;
  double fall = 0.1;
  double low = 0.35;

  static constexpr int kPhases = 4;

  // Throws std::invalid_argument unless the parts sum to 1, high > 0, low > 0
  // and rise, fall >= 0.
  void validate() const;

  // Amplitude of `phase` at cycle time t (any real t; periodic).
  double level(int phase, double t) const;
};

struct ClockReport {
  bool pass = false;
  // Smallest common full-amplitude time of adjacent phases; negative values
  // are the gap between them.
  double overlap = 0.0;
  // Time each phase spends fully inactive.
  double dwell = 0.0;
  std::vector<std::string> failures;
};

ClockReport validate_clock(const ClockProgram& program);

// Follower displacement of a cam. `radii` samples one revolution at N+1 equal
// steps and must close on itself; displacement is normalised to [0,1].
class CamWaveform {
 public:
  CamWaveform(std::vector<double> radii, double phase_offset);

  double operator()(double t) const;
  double phase_offset() const { return offset_; }

 private:
  std::vector<double> norm_;
  double offset_;
};

CamWaveform cam_waveform(const std::vector<double>& radii, double phase_offset);

// Cam profile whose follower reproduces phase 0 of `program` at `samples`
// steps per revolution.
std::vector<double> trapezoid_profile(const ClockProgram& program, int samples,
                                      double base_radius = 1.0, double lift = 0.25);

}  // namespace linklogic::sequential
