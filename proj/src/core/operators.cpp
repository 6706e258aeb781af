#include "operators.h"

#include <cmath>

namespace frds {

void require_alpha(double alpha) {
  if (!(alpha > 1.0) || !(alpha <= 2.0))
    throw ConfigError("alpha must lie in (1,2], got " + std::to_string(alpha));
}

double multiplier(const GridSpec& grid, int k, int l, double alpha, double k_diff) {
  require_alpha(alpha);
  if (k_diff < 0.0) throw ConfigError("diffusion coefficient must be >= 0");
  if (!grid.in_band(k) || !grid.in_band(l)) throw ConfigError("mode outside grid band");
  if (k == 0 && l == 0) return 0.0;
  const double w1 = grid.scale1() * k;
  const double w2 = grid.scale2() * l;
  return k_diff * std::pow(w1 * w1 + w2 * w2, 0.5 * alpha);
}

std::vector<double> multiplier_table(const GridSpec& grid, double alpha, double k_diff) {
  require_alpha(alpha);
  if (k_diff < 0.0) throw ConfigError("diffusion coefficient must be >= 0");
  const int n = grid.n();
  std::vector<double> table(grid.node_count());
  for (int s1 = 0; s1 < n; ++s1) {
    const double w1 = grid.scale1() * grid.mode_of_storage(s1);
    for (int s2 = 0; s2 < n; ++s2) {
      const double w2 = grid.scale2() * grid.mode_of_storage(s2);
      const double q = w1 * w1 + w2 * w2;
      table[static_cast<std::size_t>(s1) * n + s2] =
          q == 0.0 ? 0.0 : k_diff * std::pow(q, 0.5 * alpha);
    }
  }
  return table;
}

SpectralField apply_fractional_laplacian(const SpectralField& s, double alpha, double k_diff) {
  const std::vector<double> table = multiplier_table(s.grid, alpha, k_diff);
  SpectralField out(s.grid);
  for (std::size_t i = 0; i < table.size(); ++i) out.coeffs[i] = s.coeffs[i] * table[i];
  return out;
}

SpectralField project(const SpectralField& s, int m) {
  const int n = s.grid.n();
  if (m % 2 != 0 || m < 4 || m > n) throw ConfigError("projection band must be even, in [4, n]");
  SpectralField out(s.grid);
  for (int s1 = 0; s1 < n; ++s1) {
    const int k = s.grid.mode_of_storage(s1);
    if (k < -m / 2 || k > m / 2 - 1) continue;
    for (int s2 = 0; s2 < n; ++s2) {
      const int l = s.grid.mode_of_storage(s2);
      if (l < -m / 2 || l > m / 2 - 1) continue;
      const std::size_t i = static_cast<std::size_t>(s1) * n + s2;
      out.coeffs[i] = s.coeffs[i];
    }
  }
  return out;
}

double l2_norm(const SpectralField& s) {
  double sum = 0.0;
  for (const cplx& c : s.coeffs) sum += std::norm(c);
  return std::sqrt(s.grid.len1() * s.grid.len2() * sum);
}

double hr_seminorm(const SpectralField& s, double r) {
  if (r < 0.0) throw ConfigError("seminorm order r must be >= 0");
  const int n = s.grid.n();
  double sum = 0.0;
  for (int s1 = 0; s1 < n; ++s1) {
    const double w1 = s.grid.scale1() * s.grid.mode_of_storage(s1);
    for (int s2 = 0; s2 < n; ++s2) {
      if (s1 == 0 && s2 == 0) continue;
      const double w2 = s.grid.scale2() * s.grid.mode_of_storage(s2);
      const double q = w1 * w1 + w2 * w2;
      sum += std::norm(s.coeffs[static_cast<std::size_t>(s1) * n + s2]) * std::pow(q, r);
    }
  }
  return std::sqrt(s.grid.len1() * s.grid.len2() * sum);
}

}  // namespace frds
