#pragma once

#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "errors.h"
#include "grid.h"

namespace frds {

using cplx = std::complex<double>;

// Real nodal values, row-major: index j1*n + j2.
struct PhysicalField {
  GridSpec grid;
  std::vector<double> values;

  PhysicalField(GridSpec g, std::vector<double> v) : grid(g), values(std::move(v)) {
    if (values.size() != grid.node_count()) throw ConfigError("physical field: size mismatch");
  }
  explicit PhysicalField(GridSpec g) : grid(g), values(g.node_count(), 0.0) {}

  double& at(int j1, int j2) { return values[static_cast<std::size_t>(j1) * grid.n() + j2]; }
  double at(int j1, int j2) const { return values[static_cast<std::size_t>(j1) * grid.n() + j2]; }

  bool finite() const noexcept {
    for (double v : values)
      if (!std::isfinite(v)) return false;
    return true;
  }
  double max_abs() const noexcept {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
  }
};

// Modal coefficients u_hat(k,l), stored in native FFT order: storage index
// s1*n + s2 where s_i = grid.storage_of_mode(mode). Scaling convention:
// coefficient (0,0) equals the field mean.
struct SpectralField {
  GridSpec grid;
  std::vector<cplx> coeffs;

  SpectralField(GridSpec g, std::vector<cplx> c) : grid(g), coeffs(std::move(c)) {
    if (coeffs.size() != grid.node_count()) throw ConfigError("spectral field: size mismatch");
  }
  explicit SpectralField(GridSpec g) : grid(g), coeffs(g.node_count(), cplx{}) {}

  cplx& mode(int k, int l) {
    return coeffs[static_cast<std::size_t>(grid.storage_of_mode(k)) * grid.n() +
                  grid.storage_of_mode(l)];
  }
  cplx mode(int k, int l) const {
    return coeffs[static_cast<std::size_t>(grid.storage_of_mode(k)) * grid.n() +
                  grid.storage_of_mode(l)];
  }
};

}  // namespace frds
