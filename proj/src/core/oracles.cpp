#include "oracles.h"

#include <cmath>

namespace frds {

std::vector<cplx> recurrence_oracle(const StabilityQuery& q, cplx u0, cplx u1, int steps) {
  if (steps < 2) throw ConfigError("recurrence_oracle: need steps >= 2");
  if (q.mu < 0.0 || q.kappa < 0.0 || !(q.tau > 0.0))
    throw ConfigError("recurrence_oracle: invalid query");
  const double a = 1.5 + q.mu * q.tau + q.kappa * q.tau;
  const double b = 2.0 + 2.0 * q.rho * q.tau + 2.0 * q.kappa * q.tau;
  const double c = 0.5 + q.rho * q.tau + q.kappa * q.tau;
  std::vector<cplx> seq(static_cast<std::size_t>(steps) + 1);
  seq[0] = u0;
  seq[1] = u1;
  for (int n = 2; n <= steps; ++n) seq[n] = (b * seq[n - 1] - c * seq[n - 2]) / a;
  return seq;
}

double recurrence_growth_factor(const StabilityQuery& q, int steps) {
  if (steps < 16) throw ConfigError("recurrence_growth_factor: need steps >= 16");
  const double a = 1.5 + q.mu * q.tau + q.kappa * q.tau;
  const double b = 2.0 + 2.0 * q.rho * q.tau + 2.0 * q.kappa * q.tau;
  const double c = 0.5 + q.rho * q.tau + q.kappa * q.tau;

  cplx um(1.0, 0.0), uc(1.0, 0.0);
  const int burn = steps / 2;
  double log_growth = 0.0;
  int counted = 0;
  for (int n = 1; n <= steps; ++n) {
    const cplx un = (b * uc - c * um) / a;
    um = uc;
    uc = un;
    // Renormalize both history levels; the common scale drops out of the
    // linear recurrence, and the per-step factor is what we accumulate.
    const double scale = std::max(std::abs(uc), std::abs(um));
    if (scale > 0.0 && n > burn) {
      log_growth += std::log(scale);
      ++counted;
    }
    if (scale > 0.0) {
      um /= scale;
      uc /= scale;
    } else {
      return 0.0;  // sequence hit exact zero: total decay
    }
  }
  if (counted == 0) return 0.0;
  return std::exp(log_growth / counted);
}

double quadrature_oracle(const PhysicalField& f) {
  if (!f.finite()) throw ComputationError("quadrature_oracle: non-finite field");
  double sum = 0.0;
  for (double v : f.values) sum += v * v;
  return std::sqrt(sum * f.grid.spacing1() * f.grid.spacing2());
}

PhysicalField dense_operator_oracle(const PhysicalField& f, double alpha) {
  const int n = f.grid.n();
  if (n > 16) throw ConfigError("dense_operator_oracle: grids capped at n <= 16");
  if (!(alpha > 1.0) || !(alpha <= 2.0))
    throw ConfigError("dense_operator_oracle: alpha must lie in (1,2]");
  const double s1 = f.grid.scale1();
  const double s2 = f.grid.scale2();
  const double inv_nn = 1.0 / (static_cast<double>(n) * n);

  // Analysis sums: c(k,l) = (1/n^2) sum_j f_j exp(-i(k t1_j + l t2_j)) with
  // t_i the angular coordinate 2*pi*j/n.
  std::vector<cplx> coeff(static_cast<std::size_t>(n) * n);
  for (int k = -n / 2; k <= n / 2 - 1; ++k) {
    for (int l = -n / 2; l <= n / 2 - 1; ++l) {
      cplx acc(0.0, 0.0);
      for (int j1 = 0; j1 < n; ++j1) {
        for (int j2 = 0; j2 < n; ++j2) {
          const double phase =
              -2.0 * GridSpec::pi() * (static_cast<double>(k) * j1 + static_cast<double>(l) * j2) /
              n;
          acc += f.at(j1, j2) * cplx(std::cos(phase), std::sin(phase));
        }
      }
      coeff[static_cast<std::size_t>(k + n / 2) * n + (l + n / 2)] = acc * inv_nn;
    }
  }

  // Synthesis with the symbol ((s1 k)^2 + (s2 l)^2)^(alpha/2).
  PhysicalField out(f.grid);
  for (int j1 = 0; j1 < n; ++j1) {
    for (int j2 = 0; j2 < n; ++j2) {
      cplx acc(0.0, 0.0);
      for (int k = -n / 2; k <= n / 2 - 1; ++k) {
        for (int l = -n / 2; l <= n / 2 - 1; ++l) {
          const double w1 = s1 * k, w2 = s2 * l;
          const double q = w1 * w1 + w2 * w2;
          if (q == 0.0) continue;
          const double phase =
              2.0 * GridSpec::pi() * (static_cast<double>(k) * j1 + static_cast<double>(l) * j2) /
              n;
          acc += coeff[static_cast<std::size_t>(k + n / 2) * n + (l + n / 2)] *
                 std::pow(q, 0.5 * alpha) * cplx(std::cos(phase), std::sin(phase));
        }
      }
      out.at(j1, j2) = acc.real();
    }
  }
  return out;
}

}  // namespace frds
