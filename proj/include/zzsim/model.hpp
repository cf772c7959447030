#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace zzsim {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double two_pi = 6.283185307179586476925286766559;

// One anharmonic oscillator. Configuration is in linear frequency units
// (GHz for the mode frequency, MHz for the anharmonicity); negative
// anharmonicity models a transmon, positive a C-shunt flux qubit.
struct ModeSpec {
  double frequency_ghz = 0.0;
  double anharmonicity_mhz = 0.0;
  int levels = 3;
};

struct DirectCoupling {
  double g_mhz = 0.0;
};

struct ResonatorCoupling {
  double resonator_frequency_ghz = 6.5;
  double g_a_mhz = 60.0;
  double g_b_mhz = 60.0;
  int resonator_levels = 3;
};

using CouplingSpec = std::variant<DirectCoupling, ResonatorCoupling>;

// Two modes plus a coupling topology. The detuning Delta = nu_a - nu_b is
// always derived, never stored.
struct DeviceSpec {
  ModeSpec mode_a;
  ModeSpec mode_b;
  CouplingSpec coupling = DirectCoupling{};

  bool has_resonator() const {
    return std::holds_alternative<ResonatorCoupling>(coupling);
  }
  double detuning_mhz() const {
    return (mode_a.frequency_ghz - mode_b.frequency_ghz) * 1e3;
  }
  std::vector<int> level_dims() const;
  int hilbert_dimension() const;
  void validate() const;  // throws config_error on invariant violations
};

// Linear-index contract over bare product states: mode a is most
// significant, the resonator (when present) least significant.
struct BareBasis {
  std::vector<int> dims;

  explicit BareBasis(std::vector<int> d) : dims(std::move(d)) {}
  explicit BareBasis(const DeviceSpec& device) : dims(device.level_dims()) {}

  int dimension() const;
  int index_of(std::span<const int> occupations) const;
  std::vector<int> occupations_of(int index) const;
  int total_excitation(int index) const;
};

// Truncated annihilation operator: element (n-1, n) = sqrt(n).
Matrix lowering_operator(int levels);

// nu*n + (alpha/2)*n*(n-1), in GHz.
double bare_energy(const ModeSpec& mode, int n);

// Sum of bare mode energies for a bare product state, in GHz.
double bare_state_energy(const DeviceSpec& device, int bare_index);

// Full system Hamiltonian in angular units (rad/ns). The optional override
// replaces mode a's frequency; pulse-driven propagation uses it.
Matrix build_hamiltonian(const DeviceSpec& device,
                         std::optional<double> frequency_override_a_ghz = {});

}  // namespace zzsim
