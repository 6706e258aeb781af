#pragma once

#include <complex>
#include <vector>

#include "errors.h"

namespace frds {

// One linear mode of the scheme: diffusion symbol mu >= 0, linear reaction
// coefficient rho, stabilization kappa >= 0, step size tau > 0.
struct StabilityQuery {
  double mu = 0.0;
  double rho = 0.0;
  double kappa = 0.0;
  double tau = 0.0;
};

enum class Verdict : int { stable = 0, marginal = 1, unstable = 2 };

struct StabilityReport {
  std::complex<double> root_plus;
  std::complex<double> root_minus;
  double max_modulus = 0.0;
  double discriminant = 0.0;
  Verdict verdict = Verdict::marginal;
};

// Roots of (3/2 + mu*tau + kappa*tau) eta^2
//        - (2 + 2*rho*tau + 2*kappa*tau) eta
//        + (1/2 + rho*tau + kappa*tau) = 0,
// computed with a complex square root when the discriminant is negative.
std::pair<std::complex<double>, std::complex<double>> characteristic_roots(
    const StabilityQuery& q);

// Verdict from the root moduli: stable if max < 1 - tol, unstable if
// max > 1 + tol, marginal within the band.
StabilityReport is_stable(const StabilityQuery& q, double tol = 1e-12);

// Stability threshold in kappa for a single mode: (-mu - 3*rho)/4 - 1/tau.
double kappa_threshold(double mu, double rho, double tau);

// Kappa above which the mode is stable for every step size: -3*rho/4.
double unconditional_kappa(double rho);

// Kappa sufficient for all tau in (0, tau_star], tau_star < 1:
// -3*rho/4 - 1/tau_star.
double practical_kappa(double rho, double tau_star);

// Verdict sweep over a (tau, kappa) rectangle; each cell takes the worst
// verdict over the supplied mode symbols. Row-major: cell(i_tau, i_kappa)
// at i_tau*kappa_count + i_kappa. Also reports the closed-form boundary
// kappa_threshold(min mu, rho, tau) per tau sample.
struct StabilityMap {
  std::vector<double> tau_values;
  std::vector<double> kappa_values;
  std::vector<Verdict> verdicts;
  std::vector<double> boundary_kappa;
};

StabilityMap stability_map(const std::vector<double>& mu_values, double rho, double tau_min,
                           double tau_max, int tau_count, double kappa_min, double kappa_max,
                           int kappa_count, double tol = 1e-12);

}  // namespace frds
