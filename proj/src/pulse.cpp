#include "zzsim/pulse.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "zzsim/errors.hpp"

namespace zzsim {

double PulseSpec::target_frequency_ghz() const {
  const double direction =
      interaction_frequency_ghz >= parking_frequency_ghz ? 1.0 : -1.0;
  return interaction_frequency_ghz + direction * overshoot_mhz * 1e-3;
}

void PulseSpec::validate() const {
  if (!(parking_frequency_ghz > 0.0) || !(interaction_frequency_ghz > 0.0)) {
    throw config_error("pulse frequencies must be positive");
  }
  if (ramp_ns < 0.0) throw config_error("ramp must be non-negative");
  if (hold_ns < ramp_ns) {
    throw config_error("hold must be at least the ramp duration");
  }
  if (!(time_step_ns > 0.0)) throw config_error("time step must be positive");
  if (padding_ns < 0.0) throw config_error("padding must be non-negative");
}

double frequency_at(const PulseSpec& pulse, double t_ns) {
  const double total = pulse.total_duration_ns();
  if (t_ns < 0.0 || t_ns > total) {
    throw std::domain_error("time outside the pulse window");
  }
  const double pad = pulse.padding_ns;
  const double ramp = pulse.ramp_ns;
  const double hold = pulse.hold_ns;
  double s = 0.0;
  if (t_ns <= pad || t_ns >= pad + hold + ramp) {
    s = 0.0;
  } else if (t_ns < pad + ramp) {
    s = ramp > 0.0
            ? 0.5 * (1.0 - std::cos(std::numbers::pi * (t_ns - pad) / ramp))
            : 1.0;
  } else if (t_ns <= pad + hold) {
    s = 1.0;
  } else {
    s = 0.5 * (1.0 + std::cos(std::numbers::pi * (t_ns - pad - hold) / ramp));
  }
  return pulse.parking_frequency_ghz +
         (pulse.target_frequency_ghz() - pulse.parking_frequency_ghz) * s;
}

std::vector<std::pair<double, double>> sample_pulse(const PulseSpec& pulse) {
  pulse.validate();
  const double total = pulse.total_duration_ns();
  const int steps = int(std::round(total / pulse.time_step_ns));
  std::vector<std::pair<double, double>> samples;
  samples.reserve(steps + 1);
  for (int i = 0; i <= steps; ++i) {
    const double t = std::min(i * pulse.time_step_ns, total);
    samples.emplace_back(t, frequency_at(pulse, t));
  }
  return samples;
}

}  // namespace zzsim
