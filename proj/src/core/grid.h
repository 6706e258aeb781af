#pragma once

#include <cmath>
#include <cstddef>

#include "errors.h"

namespace frds {

// Periodic rectangle [a1,b1) x [a2,b2) sampled on an n x n nodal grid.
// Node j along an axis sits at a + j*L/n; no duplicated endpoint.
// Fourier modes live on the symmetric band k,l in [-n/2, n/2-1] and the
// physical wavenumber of integer mode k along axis i is (2*pi/L_i)*k.
class GridSpec {
public:
  GridSpec(int n, double a1, double b1, double a2, double b2)
      : n_(n), a1_(a1), b1_(b1), a2_(a2), b2_(b2) {
    if (n < 4 || n % 2 != 0) throw ConfigError("grid: n must be even and >= 4");
    if (!(b1 > a1) || !(b2 > a2)) throw ConfigError("grid: empty axis range");
    if (!std::isfinite(a1) || !std::isfinite(b1) || !std::isfinite(a2) || !std::isfinite(b2))
      throw ConfigError("grid: non-finite bounds");
  }

  int n() const noexcept { return n_; }
  std::size_t node_count() const noexcept { return static_cast<std::size_t>(n_) * n_; }
  double a1() const noexcept { return a1_; }
  double b1() const noexcept { return b1_; }
  double a2() const noexcept { return a2_; }
  double b2() const noexcept { return b2_; }
  double len1() const noexcept { return b1_ - a1_; }
  double len2() const noexcept { return b2_ - a2_; }
  double spacing1() const noexcept { return len1() / n_; }
  double spacing2() const noexcept { return len2() / n_; }
  double scale1() const noexcept { return 2.0 * pi() / len1(); }
  double scale2() const noexcept { return 2.0 * pi() / len2(); }

  double node_x1(int j1) const noexcept { return a1_ + j1 * spacing1(); }
  double node_x2(int j2) const noexcept { return a2_ + j2 * spacing2(); }

  // Storage index (FFT order) <-> mathematical mode index on [-n/2, n/2-1].
  int mode_of_storage(int j) const noexcept { return j < n_ / 2 ? j : j - n_; }
  int storage_of_mode(int k) const noexcept { return k >= 0 ? k : k + n_; }

  bool in_band(int k) const noexcept { return k >= -n_ / 2 && k <= n_ / 2 - 1; }

  bool same_domain(const GridSpec& o, double tol = 1e-12) const noexcept {
    return std::abs(a1_ - o.a1_) <= tol && std::abs(b1_ - o.b1_) <= tol &&
           std::abs(a2_ - o.a2_) <= tol && std::abs(b2_ - o.b2_) <= tol;
  }

  bool operator==(const GridSpec& o) const noexcept {
    return n_ == o.n_ && a1_ == o.a1_ && b1_ == o.b1_ && a2_ == o.a2_ && b2_ == o.b2_;
  }

  static constexpr double pi() noexcept { return 3.141592653589793238462643383279502884; }

private:
  int n_;
  double a1_, b1_, a2_, b2_;
};

}  // namespace frds
