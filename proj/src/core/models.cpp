#include "models.h"

#include <cmath>
#include <memory>

#include "operators.h"

namespace frds {
namespace {

constexpr double kTwoPi = 2.0 * GridSpec::pi();

void require_domain(const GridSpec& grid, double a1, double b1, double a2, double b2,
                    const std::string& what) {
  const double tol = 1e-9;
  if (std::abs(grid.a1() - a1) > tol || std::abs(grid.b1() - b1) > tol ||
      std::abs(grid.a2() - a2) > tol || std::abs(grid.b2() - b2) > tol)
    throw ConfigError(what + ": grid domain does not match the required rectangle");
}

}  // namespace

ReactionModel allen_cahn(double k_alpha, const GridSpec& grid) {
  if (!(k_alpha > 0.0)) throw ConfigError("allen_cahn: K must be > 0");
  ReactionModel m(grid);
  m.name = "allen_cahn";
  m.arity = 1;
  m.k_diff = {k_alpha, 0.0};
  m.linearization_rho = 1.0;
  m.params["k_alpha"] = k_alpha;
  m.react = [](const double* u, const double*, double, double* g1, double*, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) g1[i] = u[i] - u[i] * u[i] * u[i];
  };
  return m;
}

ReactionModel gray_scott(double k_u, double k_v, double f_rate, double lambda_rate,
                         const GridSpec& grid) {
  if (k_u < 0.0 || k_v < 0.0) throw ConfigError("gray_scott: diffusion must be >= 0");
  if (f_rate < 0.0 || lambda_rate < 0.0) throw ConfigError("gray_scott: rates must be >= 0");
  ReactionModel m(grid);
  m.name = "gray_scott";
  m.arity = 2;
  m.k_diff = {k_u, k_v};
  m.linearization_rho = -f_rate;  // u-equation linear part at the (1,0) state
  m.params = {{"k_u", k_u}, {"k_v", k_v}, {"f_rate", f_rate}, {"lambda_rate", lambda_rate}};
  const double f = f_rate, lam = lambda_rate;
  m.react = [f, lam](const double* u, const double* v, double, double* g1, double* g2,
                     std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
      const double uvv = u[i] * v[i] * v[i];
      g1[i] = -uvv + f * (1.0 - u[i]);
      g2[i] = uvv - (f + lam) * v[i];
    }
  };
  return m;
}

ReactionModel fitzhugh_nagumo(double k_u, double mu, double epsilon, double beta, double gamma,
                              double delta, const GridSpec& grid) {
  if (!(k_u > 0.0)) throw ConfigError("fitzhugh_nagumo: K_u must be > 0");
  ReactionModel m(grid);
  m.name = "fitzhugh_nagumo";
  m.arity = 2;
  m.k_diff = {k_u, 0.0};
  m.linearization_rho = -mu;  // dG1/du at the rest state (0,0)
  m.params = {{"k_u", k_u},   {"mu", mu},       {"epsilon", epsilon},
              {"beta", beta}, {"gamma", gamma}, {"delta", delta}};
  m.react = [mu, epsilon, beta, gamma, delta](const double* u, const double* v, double,
                                              double* g1, double* g2, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
      g1[i] = u[i] * (1.0 - u[i]) * (u[i] - mu) - v[i];
      g2[i] = epsilon * (beta * u[i] - gamma * v[i] - delta);
    }
  };
  return m;
}

ReactionModel manufactured(double k_alpha, double alpha, const GridSpec& grid) {
  if (!(k_alpha > 0.0)) throw ConfigError("manufactured: K must be > 0");
  require_alpha(alpha);
  require_domain(grid, 0.0, kTwoPi, 0.0, kTwoPi, "manufactured");
  ReactionModel m(grid);
  m.name = "manufactured";
  m.arity = 1;
  m.k_diff = {k_alpha, 0.0};
  m.linearization_rho = -8.0;
  m.params = {{"k_alpha", k_alpha}, {"alpha", alpha}};
  m.pinned_alpha = alpha;

  const int n = grid.n();
  auto profile = std::make_shared<std::vector<double>>(grid.node_count());
  for (int j1 = 0; j1 < n; ++j1)
    for (int j2 = 0; j2 < n; ++j2)
      (*profile)[static_cast<std::size_t>(j1) * n + j2] =
          std::sin(grid.node_x1(j1) + grid.node_x2(j2));

  const double force_coef = 7.0 + std::pow(2.0, 0.5 * alpha) * k_alpha;
  m.react = [profile, force_coef](const double* u, const double*, double t, double* g1, double*,
                                  std::size_t count) {
    const double envelope = force_coef * std::exp(-t);
    const double* f = profile->data();
    for (std::size_t i = 0; i < count; ++i) g1[i] = -8.0 * u[i] + envelope * f[i];
  };
  m.exact = [](double x1, double x2, double t) { return std::exp(-t) * std::sin(x1 + x2); };
  return m;
}

std::vector<PhysicalField> initial_condition(const std::string& name, const GridSpec& grid) {
  const int n = grid.n();
  auto fill = [&](auto&& fn) {
    PhysicalField f(grid);
    for (int j1 = 0; j1 < n; ++j1)
      for (int j2 = 0; j2 < n; ++j2) f.at(j1, j2) = fn(grid.node_x1(j1), grid.node_x2(j2));
    return f;
  };

  if (name == "ac_case1") {
    require_domain(grid, 0.0, kTwoPi, 0.0, kTwoPi, "ac_case1");
    std::vector<PhysicalField> out;
    out.push_back(fill([](double x1, double x2) { return std::sin(2 * x1) * std::cos(2 * x2); }));
    return out;
  }
  if (name == "ac_case2") {
    require_domain(grid, -20.0, 20.0, -20.0, 20.0, "ac_case2");
    std::vector<PhysicalField> out;
    out.push_back(fill([](double x1, double x2) { return std::exp(-x1 * x1 - x2 * x2); }));
    return out;
  }
  if (name == "gs_disc") {
    require_domain(grid, -1.0, 2.0, -1.0, 2.0, "gs_disc");
    auto inside = [](double x1, double x2) {
      const double d1 = x1 - 0.5, d2 = x2 - 0.5;
      return d1 * d1 + d2 * d2 <= 0.04 * 0.04;
    };
    std::vector<PhysicalField> out;
    out.push_back(fill([&](double x1, double x2) { return inside(x1, x2) ? 0.5 : 1.0; }));
    out.push_back(fill([&](double x1, double x2) { return inside(x1, x2) ? 0.25 : 0.0; }));
    return out;
  }
  if (name == "fhn_strips") {
    require_domain(grid, 0.0, 2.5, 0.0, 2.5, "fhn_strips");
    std::vector<PhysicalField> out;
    // Interval bounds are taken literally, open/closed as written.
    out.push_back(fill([](double x1, double x2) {
      return (x1 > 0.0 && x1 <= 0.125 && x2 > 0.0 && x2 < 0.125) ? 1.0 : 0.0;
    }));
    out.push_back(fill([](double x1, double x2) {
      return (x1 > 0.0 && x1 < 2.5 && x2 >= 0.125 && x2 < 2.5) ? 0.1 : 0.0;
    }));
    return out;
  }
  throw ConfigError("unknown initial condition: " + name);
}

std::string describe_models() {
  return "allen_cahn        scalar   G = u - u^3; params: k_alpha; ic ac_case1 on (0,2pi)^2 or "
         "ac_case2 on (-20,20)^2\n"
         "gray_scott        2-field  G1 = -u v^2 + F(1-u), G2 = u v^2 - (F+lambda) v; params: "
         "k_u, k_v, f_rate, lambda_rate; ic gs_disc on (-1,2)^2\n"
         "fitzhugh_nagumo   2-field  G1 = u(1-u)(u-mu) - v, G2 = epsilon(beta u - gamma v - "
         "delta); params: k_u, mu, epsilon, beta, gamma, delta; ic fhn_strips on (0,2.5)^2\n"
         "manufactured      scalar   forced benchmark with exact solution exp(-t) sin(x1+x2) on "
         "(0,2pi)^2; params: k_alpha, alpha\n";
}

}  // namespace frds
