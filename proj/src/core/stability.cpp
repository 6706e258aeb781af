#include "stability.h"

#include <algorithm>
#include <cmath>

namespace frds {
namespace {

void require_query(const StabilityQuery& q) {
  if (q.mu < 0.0) throw ConfigError("stability: mu must be >= 0");
  if (q.kappa < 0.0) throw ConfigError("stability: kappa must be >= 0");
  if (!(q.tau > 0.0)) throw ConfigError("stability: tau must be > 0");
}

}  // namespace

std::pair<std::complex<double>, std::complex<double>> characteristic_roots(
    const StabilityQuery& q) {
  require_query(q);
  const double a = 1.5 + q.mu * q.tau + q.kappa * q.tau;
  const double b = -(2.0 + 2.0 * q.rho * q.tau + 2.0 * q.kappa * q.tau);
  const double c = 0.5 + q.rho * q.tau + q.kappa * q.tau;
  const double disc = b * b - 4.0 * a * c;
  const std::complex<double> sq = std::sqrt(std::complex<double>(disc, 0.0));
  const std::complex<double> plus = (-b + sq) / (2.0 * a);
  const std::complex<double> minus = (-b - sq) / (2.0 * a);
  return {plus, minus};
}

StabilityReport is_stable(const StabilityQuery& q, double tol) {
  auto [plus, minus] = characteristic_roots(q);
  const double a = 1.5 + q.mu * q.tau + q.kappa * q.tau;
  const double b = -(2.0 + 2.0 * q.rho * q.tau + 2.0 * q.kappa * q.tau);
  const double c = 0.5 + q.rho * q.tau + q.kappa * q.tau;
  StabilityReport r;
  r.root_plus = plus;
  r.root_minus = minus;
  r.discriminant = b * b - 4.0 * a * c;
  r.max_modulus = std::max(std::abs(plus), std::abs(minus));
  if (r.max_modulus < 1.0 - tol)
    r.verdict = Verdict::stable;
  else if (r.max_modulus > 1.0 + tol)
    r.verdict = Verdict::unstable;
  else
    r.verdict = Verdict::marginal;
  return r;
}

double kappa_threshold(double mu, double rho, double tau) {
  if (!(tau > 0.0)) throw ConfigError("kappa_threshold: tau must be > 0");
  return (-mu - 3.0 * rho) / 4.0 - 1.0 / tau;
}

double unconditional_kappa(double rho) { return -3.0 * rho / 4.0; }

double practical_kappa(double rho, double tau_star) {
  if (!(tau_star > 0.0) || tau_star >= 1.0)
    throw ConfigError("practical_kappa: tau_star must lie in (0,1)");
  return -3.0 * rho / 4.0 - 1.0 / tau_star;
}

StabilityMap stability_map(const std::vector<double>& mu_values, double rho, double tau_min,
                           double tau_max, int tau_count, double kappa_min, double kappa_max,
                           int kappa_count, double tol) {
  if (mu_values.empty()) throw ConfigError("stability_map: need at least one mu value");
  if (tau_count < 1 || kappa_count < 1) throw ConfigError("stability_map: empty resolution");
  if (!(tau_min > 0.0) || tau_max < tau_min || kappa_max < kappa_min)
    throw ConfigError("stability_map: bad ranges");

  const double mu_min = *std::min_element(mu_values.begin(), mu_values.end());
  StabilityMap map;
  map.tau_values.resize(tau_count);
  map.kappa_values.resize(kappa_count);
  for (int i = 0; i < tau_count; ++i)
    map.tau_values[i] =
        tau_count == 1 ? tau_min : tau_min + (tau_max - tau_min) * i / (tau_count - 1.0);
  for (int j = 0; j < kappa_count; ++j)
    map.kappa_values[j] =
        kappa_count == 1 ? kappa_min
                         : kappa_min + (kappa_max - kappa_min) * j / (kappa_count - 1.0);

  map.verdicts.resize(static_cast<std::size_t>(tau_count) * kappa_count);
  map.boundary_kappa.resize(tau_count);
  for (int i = 0; i < tau_count; ++i) {
    map.boundary_kappa[i] = kappa_threshold(mu_min, rho, map.tau_values[i]);
    for (int j = 0; j < kappa_count; ++j) {
      Verdict worst = Verdict::stable;
      double worst_mod = -1.0;
      for (double mu : mu_values) {
        StabilityReport r = is_stable({mu, rho, map.kappa_values[j], map.tau_values[i]}, tol);
        if (r.max_modulus > worst_mod) {
          worst_mod = r.max_modulus;
          worst = r.verdict;
        }
      }
      map.verdicts[static_cast<std::size_t>(i) * kappa_count + j] = worst;
    }
  }
  return map;
}

}  // namespace frds
