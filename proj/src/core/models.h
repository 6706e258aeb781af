#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "field.h"

namespace frds {

// A reaction-diffusion model: one or two components, pointwise reaction
// functions, per-component diffusion coefficients, and optional extras
// (exact solution, pinned alpha) used by benchmark configurations.
struct ReactionModel {
  std::string name;
  int arity = 1;
  GridSpec grid;
  std::array<double, 2> k_diff{0.0, 0.0};
  double linearization_rho = 0.0;
  std::map<std::string, double> params;

  // Vectorized nodal reaction: fills g1 (and g2 for two-component models)
  // from u (and v) at time t. Null pointers where arity says so.
  std::function<void(const double* u, const double* v, double t, double* g1, double* g2,
                     std::size_t count)>
      react;

  // Exact solution evaluator when the model has one, else empty.
  std::function<double(double x1, double x2, double t)> exact;

  // Some models are only meaningful for the alpha they were built with.
  std::optional<double> pinned_alpha;

  explicit ReactionModel(GridSpec g) : grid(g) {}
};

// G(u) = u - u^3. Linearization at the unstable origin: rho = 1.
ReactionModel allen_cahn(double k_alpha, const GridSpec& grid);

// G1 = -u v^2 + F (1-u), G2 = u v^2 - (F + lambda) v.
ReactionModel gray_scott(double k_u, double k_v, double f_rate, double lambda_rate,
                         const GridSpec& grid);

// G1 = u (1-u) (u - mu) - v, G2 = epsilon (beta u - gamma v - delta); K_v = 0.
ReactionModel fitzhugh_nagumo(double k_u, double mu, double epsilon, double beta, double gamma,
                              double delta, const GridSpec& grid);

// Forced scalar model with exact solution u = exp(-t) sin(x1+x2) on (0,2pi)^2:
// G(u,t) = -8 u + exp(-t) (7 + 2^(alpha/2) K) sin(x1+x2). rho = -8.
ReactionModel manufactured(double k_alpha, double alpha, const GridSpec& grid);

// Named nodal initial data; validates that the grid carries the domain the
// data is defined on. Names: ac_case1, ac_case2, gs_disc, fhn_strips.
std::vector<PhysicalField> initial_condition(const std::string& name, const GridSpec& grid);

// One-line-per-model description of the built-ins (for the CLI).
std::string describe_models();

}  // namespace frds
