#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zzsim/model.hpp"
#include "zzsim/table.hpp"

namespace zzsim {

struct SpectrumEntry {
  int bare_index = 0;
  std::vector<int> occupations;
  double energy_ghz = 0.0;
  Vector eigenvector;        // unit norm, dominant component real positive
  double overlap_sq = 0.0;   // |<bare|eigenvector>|^2
  bool low_overlap = false;  // overlap_sq < 0.5: labeling is physically ambiguous
  bool tie_broken = false;   // assignment resolved by the lower-energy tie-break
};

// Eigenpairs of the full Hamiltonian, labeled by bare states through an
// optimal one-to-one assignment (maximum total overlap^2). Entries are
// ordered by bare index.
struct LabeledSpectrum {
  std::vector<int> dims;
  std::vector<SpectrumEntry> entries;

  const SpectrumEntry& at(std::span<const int> occupations) const;
  const SpectrumEntry& at(std::initializer_list<int> occupations) const {
    return at(std::span<const int>(occupations.begin(), occupations.size()));
  }
};

enum class ZZMethod { numeric, analytic, perturbative };

struct ZZResult {
  double zeta_mhz = 0.0;  // signed
  ZZMethod method = ZZMethod::numeric;
  bool degenerate_flag = false;
};

LabeledSpectrum eigensolve_labeled(const Matrix& hamiltonian,
                                   const std::vector<int>& dims);

// zeta from the labeled eigenenergies of the full Hamiltonian. Sign
// convention: zeta = (E~01 + E~10) - (E~00 + E~11), which matches the
// closed-form evaluators below.
ZZResult zz_numeric(const DeviceSpec& device);

// Exact two-level treatment of each two-excitation crossing:
// zeta = J*(tan(theta_a/2) - tan(theta_b/2)) with tan(theta_a) = 2J/(Delta+alpha_a),
// tan(theta_b) = 2J/(Delta-alpha_b), J = sqrt(2)*g, theta in (-pi/2, pi/2).
ZZResult zz_analytic(double delta_mhz, double alpha_a_mhz, double alpha_b_mhz,
                     double g_mhz);

// Second-order (dispersive) limit: zeta = J^2/(Delta+alpha_a) - J^2/(Delta-alpha_b).
ZZResult zz_perturbative(double delta_mhz, double alpha_a_mhz,
                         double alpha_b_mhz, double g_mhz);

struct SweepAxis {
  enum class Param { detuning, asymmetry, coupling };
  Param param = Param::detuning;
  double start_mhz = 0.0;
  double stop_mhz = 0.0;
  int points = 0;

  std::vector<double> grid() const;  // throws grid_error when points < 1
};

// Apply one axis value to a device template:
//   detuning:   nu_a = nu_b + delta
//   asymmetry:  alpha_b = sign(alpha_b) * (|alpha_a| + delta_alpha), alpha_a fixed
//   coupling:   g = value (direct topology only)
DeviceSpec apply_axis(const DeviceSpec& device_template, SweepAxis::Param param,
                      double value_mhz);

// Dense row-major sweep table (axis1 outer, axis2 inner). Closed-form
// columns are present for direct coupling only.
Table sweep_zz(const DeviceSpec& device_template, const SweepAxis& axis1,
               std::optional<SweepAxis> axis2 = {}, int threads = 1);

namespace detail {
// Assignment maximizing the total score over one-to-one matchings;
// returns column index per row. score must be square.
std::vector<int> max_score_assignment(const Eigen::MatrixXd& score);
}  // namespace detail

}  // namespace zzsim
