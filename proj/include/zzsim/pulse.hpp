#pragma once

#include <utility>
#include <vector>

namespace zzsim {

// Flat-top frequency trajectory for qubit a with cosine ramps. The hold
// time equals the full width at half maximum of the excursion exactly:
// the half-maximum crossings sit at the ramp midpoints, so
// FWHM = (hold - ramp) + ramp = hold. Positive overshoot pushes the
// plateau past the interaction frequency, away from the parking point.
struct PulseSpec {
  double parking_frequency_ghz = 0.0;
  double interaction_frequency_ghz = 0.0;
  double overshoot_mhz = 0.0;
  double hold_ns = 0.0;  // FWHM of the frequency excursion
  double ramp_ns = 2.5;
  double time_step_ns = 0.01;
  double padding_ns = 1.0;

  double total_duration_ns() const { return hold_ns + ramp_ns + 2.0 * padding_ns; }
  double target_frequency_ghz() const;  // plateau value, overshoot included
  void validate() const;                // throws config_error
};

// Frequency at time t in [0, total_duration]; throws std::domain_error
// outside the pulse window.
double frequency_at(const PulseSpec& pulse, double t_ns);

// Uniform samples at time_step spacing, both endpoints included.
std::vector<std::pair<double, double>> sample_pulse(const PulseSpec& pulse);

}  // namespace zzsim
