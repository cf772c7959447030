#include "zzsim/spectrum.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>

#include "zzsim/errors.hpp"
#include "zzsim/parallel.hpp"

namespace zzsim {

namespace {

constexpr double kTieTol = 1e-6;       // overlap^2 gap treated as a tie
constexpr double kOptimalTol = 1e-9;   // slack when testing assignment optimality
constexpr double kDegenerateGapGhz = 1e-9;

double assignment_score(const Eigen::MatrixXd& score, const std::vector<int>& a) {
  double s = 0.0;
  for (int i = 0; i < int(a.size()); ++i) s += score(i, a[i]);
  return s;
}

// Lexicographic canonicalization used when the optimal assignment is not
// unique (exact degeneracies, e.g. the triple point). Labels are visited in
// ascending bare-index order; each takes its maximum-overlap eigenvector
// among those that still admit an optimal completion, and overlap ties are
// broken toward lower energy (eigenvectors are energy-sorted).
struct RefinedAssignment {
  std::vector<int> assign;
  std::vector<bool> tie_broken;
};

RefinedAssignment refine_ties(const Eigen::MatrixXd& score, double total) {
  const int d = int(score.rows());
  RefinedAssignment out;
  out.assign.assign(d, -1);
  out.tie_broken.assign(d, false);
  std::vector<bool> used(d, false);
  double fixed = 0.0;
  for (int i = 0; i < d; ++i) {
    std::vector<std::pair<double, int>> options;  // (overlap, eigvec index)
    const std::vector<int> rem_rows = [&] {
      std::vector<int> r;
      for (int j = i + 1; j < d; ++j) r.push_back(j);
      return r;
    }();
    for (int k = 0; k < d; ++k) {
      if (used[k]) continue;
      double completion = 0.0;
      if (!rem_rows.empty()) {
        std::vector<int> rem_cols;
        for (int m = 0; m < d; ++m) {
          if (!used[m] && m != k) rem_cols.push_back(m);
        }
        Eigen::MatrixXd sub(rem_rows.size(), rem_cols.size());
        for (size_t r = 0; r < rem_rows.size(); ++r) {
          for (size_t c = 0; c < rem_cols.size(); ++c) {
            sub(r, c) = score(rem_rows[r], rem_cols[c]);
          }
        }
        completion = assignment_score(sub, detail::max_score_assignment(sub));
      }
      if (fixed + score(i, k) + completion >= total - kOptimalTol) {
        options.emplace_back(score(i, k), k);
      }
    }
    double best = -1.0;
    for (const auto& [ov, k] : options) best = std::max(best, ov);
    int chosen = -1;
    int group_size = 0;
    for (const auto& [ov, k] : options) {
      if (ov >= best - kTieTol) {
        ++group_size;
        if (chosen < 0 || k < chosen) chosen = k;
      }
    }
    out.assign[i] = chosen;
    out.tie_broken[i] = group_size > 1;
    used[chosen] = true;
    fixed += score(i, chosen);
  }
  return out;
}

bool has_possible_tie(const Eigen::MatrixXd& score,
                      const Eigen::VectorXd& energies_ghz) {
  for (int k = 1; k < energies_ghz.size(); ++k) {
    if (energies_ghz[k] - energies_ghz[k - 1] < kDegenerateGapGhz) return true;
  }
  for (int i = 0; i < score.rows(); ++i) {
    const double m = score.row(i).maxCoeff();
    int near = 0;
    for (int k = 0; k < score.cols(); ++k) {
      if (score(i, k) >= m - kTieTol) ++near;
    }
    if (near > 1) return true;
  }
  return false;
}

void fix_phase(Vector& v) {
  int dominant = 0;
  v.cwiseAbs().maxCoeff(&dominant);
  const Complex z = v[dominant];
  if (std::abs(z) > 0.0) v *= std::conj(z) / std::abs(z);
}

double tan_half(double tangent) { return std::tan(0.5 * std::atan(tangent)); }

void check_poles(double denom_a_mhz, double denom_b_mhz) {
  if (std::abs(denom_a_mhz) < 1e-3 || std::abs(denom_b_mhz) < 1e-3) {
    throw pole_error("detuning too close to an anharmonicity pole");
  }
}

}  // namespace

namespace detail {

// Assignment problem by shortest augmenting paths with potentials, O(n^3).
std::vector<int> max_score_assignment(const Eigen::MatrixXd& score) {
  const int n = int(score.rows());
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const int i0 = p[j0];
      int j1 = 0;
      double delta = inf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = -score(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<int> row_to_col(n, -1);
  for (int j = 1; j <= n; ++j) {
    if (p[j] != 0) row_to_col[p[j] - 1] = j - 1;
  }
  return row_to_col;
}

}  // namespace detail

const SpectrumEntry& LabeledSpectrum::at(std::span<const int> occupations) const {
  const BareBasis basis(dims);
  return entries.at(basis.index_of(occupations));
}

LabeledSpectrum eigensolve_labeled(const Matrix& hamiltonian,
                                   const std::vector<int>& dims) {
  const int d = int(hamiltonian.rows());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hamiltonian);
  if (solver.info() != Eigen::Success) {
    throw numeric_error("eigendecomposition failed");
  }
  const Eigen::VectorXd energies = solver.eigenvalues() / two_pi;  // GHz
  const Matrix& vectors = solver.eigenvectors();                   // energy-sorted

  Eigen::MatrixXd overlap(d, d);  // (bare index, eigvec index)
  for (int i = 0; i < d; ++i) {
    for (int k = 0; k < d; ++k) overlap(i, k) = std::norm(vectors(i, k));
  }

  std::vector<int> assign = detail::max_score_assignment(overlap);
  std::vector<bool> tie_broken(d, false);
  if (has_possible_tie(overlap, energies)) {
    auto refined = refine_ties(overlap, assignment_score(overlap, assign));
    assign = std::move(refined.assign);
    tie_broken = std::move(refined.tie_broken);
  }

  const BareBasis basis(dims);
  LabeledSpectrum spectrum;
  spectrum.dims = dims;
  spectrum.entries.resize(d);
  for (int i = 0; i < d; ++i) {
    SpectrumEntry& e = spectrum.entries[i];
    e.bare_index = i;
    e.occupations = basis.occupations_of(i);
    e.energy_ghz = energies[assign[i]];
    e.eigenvector = vectors.col(assign[i]);
    fix_phase(e.eigenvector);
    e.overlap_sq = overlap(i, assign[i]);
    e.low_overlap = e.overlap_sq < 0.5;
    e.tie_broken = tie_broken[i];
  }
  return spectrum;
}

ZZResult zz_numeric(const DeviceSpec& device) {
  const auto spectrum =
      eigensolve_labeled(build_hamiltonian(device), device.level_dims());
  const bool res = device.has_resonator();
  auto energy = [&](int na, int nb) {
    std::vector<int> occ{na, nb};
    if (res) occ.push_back(0);
    return spectrum.at(occ).energy_ghz;
  };
  const double zeta_ghz =
      (energy(0, 1) + energy(1, 0)) - (energy(0, 0) + energy(1, 1));
  std::vector<int> occ11{1, 1};
  if (res) occ11.push_back(0);
  return ZZResult{zeta_ghz * 1e3, ZZMethod::numeric,
                  spectrum.at(occ11).tie_broken};
}

ZZResult zz_analytic(double delta_mhz, double alpha_a_mhz, double alpha_b_mhz,
                     double g_mhz) {
  const double da = delta_mhz + alpha_a_mhz;
  const double db = delta_mhz - alpha_b_mhz;
  check_poles(da, db);
  const double j = std::sqrt(2.0) * g_mhz;
  const double zeta = j * (tan_half(2.0 * j / da) - tan_half(2.0 * j / db));
  return ZZResult{zeta, ZZMethod::analytic, false};
}

ZZResult zz_perturbative(double delta_mhz, double alpha_a_mhz,
                         double alpha_b_mhz, double g_mhz) {
  const double da = delta_mhz + alpha_a_mhz;
  const double db = delta_mhz - alpha_b_mhz;
  check_poles(da, db);
  const double j2 = 2.0 * g_mhz * g_mhz;
  return ZZResult{j2 / da - j2 / db, ZZMethod::perturbative, false};
}

std::vector<double> SweepAxis::grid() const {
  if (points < 1) throw grid_error("sweep axis needs at least one point");
  std::vector<double> values;
  values.reserve(points);
  if (points == 1) {
    values.push_back(start_mhz);
    return values;
  }
  const double step = (stop_mhz - start_mhz) / (points - 1);
  for (int i = 0; i < points; ++i) values.push_back(start_mhz + step * i);
  return values;
}

DeviceSpec apply_axis(const DeviceSpec& device_template, SweepAxis::Param param,
                      double value_mhz) {
  DeviceSpec device = device_template;
  switch (param) {
    case SweepAxis::Param::detuning:
      device.mode_a.frequency_ghz =
          device.mode_b.frequency_ghz + value_mhz * 1e-3;
      break;
    case SweepAxis::Param::asymmetry: {
      // delta_alpha = |alpha_b| - |alpha_a|, realized on mode b
      const double sign_b = device.mode_b.anharmonicity_mhz < 0.0 ? -1.0 : 1.0;
      device.mode_b.anharmonicity_mhz =
          sign_b * (std::abs(device.mode_a.anharmonicity_mhz) + value_mhz);
      break;
    }
    case SweepAxis::Param::coupling: {
      auto* direct = std::get_if<DirectCoupling>(&device.coupling);
      if (!direct) {
        throw grid_error("coupling axis requires a direct-coupling device");
      }
      direct->g_mhz = value_mhz;
      break;
    }
  }
  return device;
}

namespace {

std::string axis_column(SweepAxis::Param param) {
  switch (param) {
    case SweepAxis::Param::detuning: return "delta_mhz";
    case SweepAxis::Param::asymmetry: return "delta_alpha_mhz";
    case SweepAxis::Param::coupling: return "g_mhz";
  }
  return {};
}

}  // namespace

Table sweep_zz(const DeviceSpec& device_template, const SweepAxis& axis1,
               std::optional<SweepAxis> axis2, int threads) {
  device_template.validate();
  const auto grid1 = axis1.grid();
  const std::vector<double> grid2 =
      axis2 ? axis2->grid() : std::vector<double>{};
  const bool closed_forms = !device_template.has_resonator();

  Table table;
  table.columns.push_back(axis_column(axis1.param));
  if (axis2) table.columns.push_back(axis_column(axis2->param));
  table.columns.push_back("zeta_numeric_mhz");
  if (closed_forms) {
    table.columns.push_back("zeta_analytic_mhz");
    table.columns.push_back("zeta_perturbative_mhz");
  }
  table.columns.push_back("degenerate_flag");

  const int n2 = axis2 ? int(grid2.size()) : 1;
  const int total = int(grid1.size()) * n2;
  std::vector<std::vector<Cell>> rows(total);
  parallel_for(total, threads, [&](int idx) {
    const double v1 = grid1[idx / n2];
    DeviceSpec device = apply_axis(device_template, axis1.param, v1);
    std::vector<Cell> row{v1};
    if (axis2) {
      const double v2 = grid2[idx % n2];
      device = apply_axis(device, axis2->param, v2);
      row.push_back(v2);
    }
    const ZZResult numeric = zz_numeric(device);
    row.push_back(numeric.zeta_mhz);
    if (closed_forms) {
      const double g = std::get<DirectCoupling>(device.coupling).g_mhz;
      const double nan = std::numeric_limits<double>::quiet_NaN();
      try {
        row.push_back(zz_analytic(device.detuning_mhz(),
                                  device.mode_a.anharmonicity_mhz,
                                  device.mode_b.anharmonicity_mhz, g)
                          .zeta_mhz);
        row.push_back(zz_perturbative(device.detuning_mhz(),
                                      device.mode_a.anharmonicity_mhz,
                                      device.mode_b.anharmonicity_mhz, g)
                          .zeta_mhz);
      } catch (const pole_error&) {
        while (row.size() + 1 < table.columns.size()) row.push_back(nan);
      }
    }
    row.push_back(numeric.degenerate_flag ? 1.0 : 0.0);
    rows[idx] = std::move(row);
  });
  for (auto& row : rows) table.add_row(std::move(row));
  return table;
}

}  // namespace zzsim
