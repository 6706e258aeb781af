// Command-line front end for the frds solver library. Talks to the library
// exclusively through the public C interface.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "frds/frds.h"

namespace {

int exit_code(frds_status status) {
  switch (status) {
    case FRDS_OK: return 0;
    case FRDS_ERR_CONFIG: return 1;
    case FRDS_ERR_DIVERGED: return 2;
    default: return 3;  // compute, format, io
  }
}

int fail(frds_status status) {
  std::fprintf(stderr, "error: %s\n", frds_last_error());
  return exit_code(status);
}

int cmd_run(const std::string& config_path, const std::string& out_dir) {
  frds_config* config = nullptr;
  frds_status status = frds_config_load(config_path.c_str(), &config);
  if (status != FRDS_OK) return fail(status);

  frds_result* result = nullptr;
  status = frds_run_config(config, out_dir.empty() ? nullptr : out_dir.c_str(), &result);
  frds_config_destroy(config);
  if (status != FRDS_OK) return fail(status);

  const char* report = frds_result_report(result);
  if (report) std::fputs(report, stdout);
  std::printf("wall_seconds = %.3f\n", frds_result_wall_seconds(result));
  const bool diverged = frds_result_diverged(result) != 0;
  if (diverged)
    std::fprintf(stderr, "run diverged at step %lld\n", frds_result_diverged_step(result));
  frds_result_destroy(result);
  return diverged ? 2 : 0;
}

int cmd_converge(bool temporal, const std::string& config_path, const std::string& csv_path) {
  frds_config* config = nullptr;
  frds_status status = frds_config_load(config_path.c_str(), &config);
  if (status != FRDS_OK) return fail(status);

  frds_table* table = nullptr;
  status = temporal ? frds_temporal_table(config, &table) : frds_spatial_table(config, &table);
  frds_config_destroy(config);
  if (status != FRDS_OK) return fail(status);

  std::fputs(frds_table_csv(table), stdout);
  if (!csv_path.empty()) {
    status = frds_table_write_csv(table, csv_path.c_str());
    if (status != FRDS_OK) {
      frds_table_destroy(table);
      return fail(status);
    }
  }
  frds_table_destroy(table);
  return 0;
}

int cmd_verdict(double mu, double rho, double kappa, double tau, double tol) {
  double pr, pi, mr, mi, max_mod;
  frds_status status = frds_stability_roots(mu, rho, kappa, tau, &pr, &pi, &mr, &mi, &max_mod);
  if (status != FRDS_OK) return fail(status);
  int verdict = 0;
  status = frds_stability_verdict(mu, rho, kappa, tau, tol, &verdict);
  if (status != FRDS_OK) return fail(status);
  static const char* names[3] = {"stable", "marginal", "unstable"};
  std::printf("root_plus = %.16e %+.16e i\n", pr, pi);
  std::printf("root_minus = %.16e %+.16e i\n", mr, mi);
  std::printf("max_modulus = %.16e\n", max_mod);
  std::printf("verdict = %s\n", names[verdict]);
  return 0;
}

int cmd_thresholds(double mu, double rho, double tau, double tau_star) {
  double threshold = 0.0, uncond = 0.0;
  frds_status status = frds_kappa_threshold(mu, rho, tau, &threshold);
  if (status != FRDS_OK) return fail(status);
  status = frds_unconditional_kappa(rho, &uncond);
  if (status != FRDS_OK) return fail(status);
  std::printf("kappa_threshold = %.16e\n", threshold);
  std::printf("unconditional_kappa = %.16e\n", uncond);
  if (tau_star > 0.0) {
    double practical = 0.0;
    status = frds_practical_kappa(rho, tau_star, &practical);
    if (status != FRDS_OK) return fail(status);
    std::printf("practical_kappa = %.16e\n", practical);
  }
  return 0;
}

struct MapArgs {
  std::vector<double> mu{0.0};
  double rho = 0.0;
  double tau_min = 0.01, tau_max = 1.0;
  int tau_count = 20;
  double kappa_min = 0.0, kappa_max = 10.0;
  int kappa_count = 40;
  double tol = 1e-12;
};

int cmd_map(const MapArgs& a) {
  std::vector<int> verdicts(static_cast<size_t>(a.tau_count) * a.kappa_count);
  std::vector<double> boundary(static_cast<size_t>(a.tau_count));
  frds_status status =
      frds_stability_map(a.mu.data(), static_cast<int>(a.mu.size()), a.rho, a.tau_min, a.tau_max,
                         a.tau_count, a.kappa_min, a.kappa_max, a.kappa_count, a.tol,
                         verdicts.data(), boundary.data());
  if (status != FRDS_OK) return fail(status);
  std::printf("# rows: tau from %.6g to %.6g; columns: kappa from %.6g to %.6g\n", a.tau_min,
              a.tau_max, a.kappa_min, a.kappa_max);
  std::printf("# S stable, M marginal, U unstable; boundary column = stability threshold\n");
  static const char symbols[3] = {'S', 'M', 'U'};
  for (int i = 0; i < a.tau_count; ++i) {
    const double tau = a.tau_count == 1
                           ? a.tau_min
                           : a.tau_min + (a.tau_max - a.tau_min) * i / (a.tau_count - 1.0);
    std::printf("tau=%-10.6g ", tau);
    for (int j = 0; j < a.kappa_count; ++j)
      std::putchar(symbols[verdicts[static_cast<size_t>(i) * a.kappa_count + j]]);
    std::printf("  boundary=%.6g\n", boundary[static_cast<size_t>(i)]);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fourier pseudo-spectral solver for space-fractional reaction-diffusion systems"};
  app.set_version_flag("--version", frds_version());
  app.require_subcommand(1);

  std::string config_path, out_dir, csv_path;

  CLI::App* run = app.add_subcommand("run", "integrate a configured problem");
  run->add_option("config", config_path, "configuration file")->required();
  run->add_option("--out", out_dir, "directory for snapshots, heatmaps, and the summary");

  CLI::App* conv_t = app.add_subcommand("converge-time", "temporal refinement study");
  conv_t->add_option("config", config_path, "configuration file")->required();
  conv_t->add_option("--csv", csv_path, "also write the table to this file");

  CLI::App* conv_s = app.add_subcommand("converge-space", "spatial refinement study");
  conv_s->add_option("config", config_path, "configuration file")->required();
  conv_s->add_option("--csv", csv_path, "also write the table to this file");

  CLI::App* stab = app.add_subcommand("stability", "stability analysis of the time stepper");
  stab->require_subcommand(1);

  double mu = 0.0, rho = 0.0, kappa = 0.0, tau = 0.0, tol = 1e-12, tau_star = 0.0;
  CLI::App* verdict = stab->add_subcommand("verdict", "roots and verdict for one mode");
  verdict->add_option("--mu", mu, "diffusion symbol (>= 0)")->required();
  verdict->add_option("--rho", rho, "linear reaction coefficient")->required();
  verdict->add_option("--kappa", kappa, "stabilization shift")->required();
  verdict->add_option("--tau", tau, "step size")->required();
  verdict->add_option("--tol", tol, "marginal band half-width");

  CLI::App* thresholds = stab->add_subcommand("thresholds", "stability thresholds in kappa");
  thresholds->add_option("--mu", mu, "diffusion symbol (>= 0)")->required();
  thresholds->add_option("--rho", rho, "linear reaction coefficient")->required();
  thresholds->add_option("--tau", tau, "step size")->required();
  thresholds->add_option("--tau-star", tau_star, "also report the shift covering (0, tau_star]");

  MapArgs map_args;
  CLI::App* map = stab->add_subcommand("map", "verdict map over a (tau, kappa) rectangle");
  map->add_option("--mu", map_args.mu, "mode symbols to cover (worst case per cell)");
  map->add_option("--rho", map_args.rho, "linear reaction coefficient")->required();
  map->add_option("--tau-min", map_args.tau_min, "smallest tau");
  map->add_option("--tau-max", map_args.tau_max, "largest tau");
  map->add_option("--tau-count", map_args.tau_count, "tau samples");
  map->add_option("--kappa-min", map_args.kappa_min, "smallest kappa");
  map->add_option("--kappa-max", map_args.kappa_max, "largest kappa");
  map->add_option("--kappa-count", map_args.kappa_count, "kappa samples");
  map->add_option("--tol", map_args.tol, "marginal band half-width");

  CLI::App* models = app.add_subcommand("models", "list the built-in models");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Fold CLI11's internal exit codes into the documented buckets:
    // 0 for --help/--version, 1 for any usage error.
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  if (run->parsed()) return cmd_run(config_path, out_dir);
  if (conv_t->parsed()) return cmd_converge(true, config_path, csv_path);
  if (conv_s->parsed()) return cmd_converge(false, config_path, csv_path);
  if (stab->parsed()) {
    if (verdict->parsed()) return cmd_verdict(mu, rho, kappa, tau, tol);
    if (thresholds->parsed()) return cmd_thresholds(mu, rho, tau, tau_star);
    if (map->parsed()) return cmd_map(map_args);
  }
  if (models->parsed()) {
    std::fputs(frds_model_catalog(), stdout);
    return 0;
  }
  return 1;
}
