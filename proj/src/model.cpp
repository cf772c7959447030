#include "zzsim/model.hpp"

#include <cmath>
#include <stdexcept>

#include "zzsim/errors.hpp"

namespace zzsim {

std::vector<int> DeviceSpec::level_dims() const {
  std::vector<int> dims{mode_a.levels, mode_b.levels};
  if (const auto* res = std::get_if<ResonatorCoupling>(&coupling)) {
    dims.push_back(res->resonator_levels);
  }
  return dims;
}

int DeviceSpec::hilbert_dimension() const {
  int d = 1;
  for (int n : level_dims()) d *= n;
  return d;
}

void DeviceSpec::validate() const {
  for (const auto* m : {&mode_a, &mode_b}) {
    if (!(m->frequency_ghz > 0.0)) {
      throw config_error("mode frequency must be positive");
    }
    if (m->levels < 3) {
      throw config_error("mode level count must be at least 3");
    }
    if (!std::isfinite(m->anharmonicity_mhz)) {
      throw config_error("anharmonicity must be finite");
    }
  }
  if (const auto* d = std::get_if<DirectCoupling>(&coupling)) {
    if (!std::isfinite(d->g_mhz)) throw config_error("coupling g must be finite");
  } else {
    const auto& r = std::get<ResonatorCoupling>(coupling);
    if (!(r.resonator_frequency_ghz > 0.0)) {
      throw config_error("resonator frequency must be positive");
    }
    if (!std::isfinite(r.g_a_mhz) || !std::isfinite(r.g_b_mhz)) {
      throw config_error("resonator couplings must be finite");
    }
    if (r.resonator_levels < 2) {
      throw config_error("resonator level count must be at least 2");
    }
  }
}

int BareBasis::dimension() const {
  int d = 1;
  for (int n : dims) d *= n;
  return d;
}

int BareBasis::index_of(std::span<const int> occupations) const {
  if (occupations.size() != dims.size()) {
    throw std::out_of_range("occupation list does not match mode count");
  }
  int idx = 0;
  for (size_t m = 0; m < dims.size(); ++m) {
    if (occupations[m] < 0 || occupations[m] >= dims[m]) {
      throw std::out_of_range("occupation number outside mode level count");
    }
    idx = idx * dims[m] + occupations[m];
  }
  return idx;
}

std::vector<int> BareBasis::occupations_of(int index) const {
  if (index < 0 || index >= dimension()) {
    throw std::out_of_range("bare index outside Hilbert space");
  }
  std::vector<int> occ(dims.size());
  for (size_t m = dims.size(); m-- > 0;) {
    occ[m] = index % dims[m];
    index /= dims[m];
  }
  return occ;
}

int BareBasis::total_excitation(int index) const {
  int n = 0;
  for (int o : occupations_of(index)) n += o;
  return n;
}

Matrix lowering_operator(int levels) {
  if (levels < 2) {
    throw std::invalid_argument("lowering operator needs at least two levels");
  }
  Matrix q = Matrix::Zero(levels, levels);
  for (int n = 1; n < levels; ++n) {
    q(n - 1, n) = std::sqrt(double(n));
  }
  return q;
}

double bare_energy(const ModeSpec& mode, int n) {
  if (n < 0 || n >= mode.levels) {
    throw std::out_of_range("level index outside mode truncation");
  }
  const double alpha_ghz = mode.anharmonicity_mhz * 1e-3;
  return mode.frequency_ghz * n + 0.5 * alpha_ghz * n * (n - 1);
}

double bare_state_energy(const DeviceSpec& device, int bare_index) {
  const BareBasis basis(device);
  const auto occ = basis.occupations_of(bare_index);
  double e = bare_energy(device.mode_a, occ[0]) + bare_energy(device.mode_b, occ[1]);
  if (device.has_resonator()) {
    const auto& r = std::get<ResonatorCoupling>(device.coupling);
    ModeSpec res{r.resonator_frequency_ghz, 0.0, r.resonator_levels};
    e += bare_energy(res, occ[2]);
  }
  return e;
}

namespace {

// kron(A, B) with A acting on the most significant factor
Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix mode_diagonal(const ModeSpec& mode) {
  Matrix h = Matrix::Zero(mode.levels, mode.levels);
  for (int n = 0; n < mode.levels; ++n) h(n, n) = bare_energy(mode, n);
  return h;
}

}  // namespace

Matrix build_hamiltonian(const DeviceSpec& device,
                         std::optional<double> frequency_override_a_ghz) {
  device.validate();
  ModeSpec mode_a = device.mode_a;
  if (frequency_override_a_ghz) mode_a.frequency_ghz = *frequency_override_a_ghz;

  const Matrix qa = lowering_operator(mode_a.levels);
  const Matrix qb = lowering_operator(device.mode_b.levels);
  const Matrix ia = Matrix::Identity(mode_a.levels, mode_a.levels);
  const Matrix ib = Matrix::Identity(device.mode_b.levels, device.mode_b.levels);

  Matrix h;
  if (const auto* dc = std::get_if<DirectCoupling>(&device.coupling)) {
    const double g_ghz = dc->g_mhz * 1e-3;
    h = kron(mode_diagonal(mode_a), ib) + kron(ia, mode_diagonal(device.mode_b));
    const Matrix exchange = kron(qa.adjoint(), qb);
    h += g_ghz * (exchange + exchange.adjoint());
  } else {
    const auto& rc = std::get<ResonatorCoupling>(device.coupling);
    ModeSpec res{rc.resonator_frequency_ghz, 0.0, rc.resonator_levels};
    const Matrix qr = lowering_operator(res.levels);
    const Matrix ir = Matrix::Identity(res.levels, res.levels);
    h = kron(kron(mode_diagonal(mode_a), ib), ir) +
        kron(kron(ia, mode_diagonal(device.mode_b)), ir) +
        kron(kron(ia, ib), mode_diagonal(res));
    const Matrix xa = kron(kron(qa.adjoint(), ib), qr);
    const Matrix xb = kron(kron(ia, qb.adjoint()), qr);
    h += rc.g_a_mhz * 1e-3 * (xa + xa.adjoint());
    h += rc.g_b_mhz * 1e-3 * (xb + xb.adjoint());
  }
  return two_pi * h;
}

}  // namespace zzsim
