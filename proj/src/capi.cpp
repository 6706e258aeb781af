#include "frds/frds.h"

#include <cmath>
#include <cstring>
#include <limits>
#include <new>
#include <string>

#include "core/config.h"
#include "core/models.h"
#include "core/operators.h"
#include "core/runner.h"
#include "core/snapshot.h"
#include "core/stability.h"
#include "core/stepper.h"
#include "core/study.h"
#include "core/transform.h"

struct frds_grid {
  frds::GridSpec g;
};

struct frds_model {
  frds::ReactionModel m;
};

struct frds_result {
  frds::RunSummary summary;
  int arity = 1;
  int n = 0;
  std::string report;  // empty when produced by frds_run
};

struct frds_table {
  frds::ErrorTable table;
  std::string csv;
};

struct frds_config {
  frds::Config cfg;
  bool used = false;
};

namespace {

thread_local std::string g_error;
thread_local long long g_error_step = -1;

frds_status status_of(frds::ErrorKind kind) {
  switch (kind) {
    case frds::ErrorKind::config: return FRDS_ERR_CONFIG;
    case frds::ErrorKind::computation: return FRDS_ERR_COMPUTE;
    case frds::ErrorKind::diverged: return FRDS_ERR_DIVERGED;
    case frds::ErrorKind::format: return FRDS_ERR_FORMAT;
    case frds::ErrorKind::io: return FRDS_ERR_IO;
  }
  return FRDS_ERR_COMPUTE;
}

template <typename F>
frds_status guard(F&& body) noexcept {
  try {
    body();
    g_error.clear();
    g_error_step = -1;
    return FRDS_OK;
  } catch (const frds::DivergedError& e) {
    g_error = e.what();
    g_error_step = e.step();
    return FRDS_ERR_DIVERGED;
  } catch (const frds::Error& e) {
    g_error = e.what();
    g_error_step = -1;
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    g_error = "out of memory";
    g_error_step = -1;
    return FRDS_ERR_COMPUTE;
  } catch (const std::exception& e) {
    g_error = e.what();
    g_error_step = -1;
    return FRDS_ERR_COMPUTE;
  }
}

void require(bool cond, const char* msg) {
  if (!cond) throw frds::ConfigError(msg);
}

frds::PhysicalField nodal_field(const frds::GridSpec& grid, const double* values) {
  require(values != nullptr, "null field pointer");
  frds::PhysicalField f(grid);
  std::memcpy(f.values.data(), values, f.values.size() * sizeof(double));
  return f;
}

double nan_value() { return std::numeric_limits<double>::quiet_NaN(); }

frds::Config& claim(frds_config* config) {
  require(config != nullptr, "null config");
  require(!config->used, "config handle already used by a harness call");
  config->used = true;
  return config->cfg;
}

}  // namespace

extern "C" {

const char* frds_version(void) { return "1.0.0"; }

const char* frds_last_error(void) { return g_error.c_str(); }

long long frds_last_error_step(void) { return g_error_step; }

/* ---- grids ---- */

frds_status frds_grid_create(int n, double a1, double b1, double a2, double b2, frds_grid** out) {
  return guard([&] {
    require(out != nullptr, "null output pointer");
    *out = new frds_grid{frds::GridSpec(n, a1, b1, a2, b2)};
  });
}

void frds_grid_destroy(frds_grid* grid) { delete grid; }

int frds_grid_n(const frds_grid* grid) { return grid ? grid->g.n() : 0; }

void frds_grid_bounds(const frds_grid* grid, double out[4]) {
  if (!grid || !out) return;
  out[0] = grid->g.a1();
  out[1] = grid->g.b1();
  out[2] = grid->g.a2();
  out[3] = grid->g.b2();
}

/* ---- spectral field operations ---- */

frds_status frds_l2_norm(const frds_grid* grid, const double* values, double* out) {
  return guard([&] {
    require(grid && out, "null pointer");
    *out = frds::l2_norm(frds::forward_transform(nodal_field(grid->g, values)));
  });
}

frds_status frds_hr_seminorm(const frds_grid* grid, const double* values, double r, double* out) {
  return guard([&] {
    require(grid && out, "null pointer");
    *out = frds::hr_seminorm(frds::forward_transform(nodal_field(grid->g, values)), r);
  });
}

frds_status frds_fractional_laplacian(const frds_grid* grid, const double* in, double alpha,
                                      double k_diff, double* out) {
  return guard([&] {
    require(grid && out, "null pointer");
    frds::SpectralField s = frds::forward_transform(nodal_field(grid->g, in));
    frds::PhysicalField f = frds::inverse_transform(frds::apply_fractional_laplacian(s, alpha, k_diff));
    std::memcpy(out, f.values.data(), f.values.size() * sizeof(double));
  });
}

frds_status frds_project(const frds_grid* grid, const double* in, int m, double* out) {
  return guard([&] {
    require(grid && out, "null pointer");
    frds::SpectralField s = frds::forward_transform(nodal_field(grid->g, in));
    frds::PhysicalField f = frds::inverse_transform(frds::project(s, m));
    std::memcpy(out, f.values.data(), f.values.size() * sizeof(double));
  });
}

frds_status frds_initial_condition(const frds_grid* grid, const char* name, double* u, double* v) {
  return guard([&] {
    require(grid && name && u, "null pointer");
    std::vector<frds::PhysicalField> fields = frds::initial_condition(name, grid->g);
    std::memcpy(u, fields[0].values.data(), fields[0].values.size() * sizeof(double));
    if (fields.size() > 1) {
      require(v != nullptr, "two-component initial data needs a second output buffer");
      std::memcpy(v, fields[1].values.data(), fields[1].values.size() * sizeof(double));
    }
  });
}

/* ---- models ---- */

frds_status frds_model_allen_cahn(const frds_grid* grid, double k_alpha, frds_model** out) {
  return guard([&] {
    require(grid && out, "null pointer");
    *out = new frds_model{frds::allen_cahn(k_alpha, grid->g)};
  });
}

frds_status frds_model_gray_scott(const frds_grid* grid, double k_u, double k_v, double f_rate,
                                  double lambda_rate, frds_model** out) {
  return guard([&] {
    require(grid && out, "null pointer");
    *out = new frds_model{frds::gray_scott(k_u, k_v, f_rate, lambda_rate, grid->g)};
  });
}

frds_status frds_model_fitzhugh_nagumo(const frds_grid* grid, double k_u, double mu,
                                       double epsilon, double beta, double gamma, double delta,
                                       frds_model** out) {
  return guard([&] {
    require(grid && out, "null pointer");
    *out = new frds_model{frds::fitzhugh_nagumo(k_u, mu, epsilon, beta, gamma, delta, grid->g)};
  });
}

frds_status frds_model_manufactured(const frds_grid* grid, double k_alpha, double alpha,
                                    frds_model** out) {
  return guard([&] {
    require(grid && out, "null pointer");
    *out = new frds_model{frds::manufactured(k_alpha, alpha, grid->g)};
  });
}

void frds_model_destroy(frds_model* model) { delete model; }

int frds_model_arity(const frds_model* model) { return model ? model->m.arity : 0; }

double frds_model_rho(const frds_model* model) {
  return model ? model->m.linearization_rho : nan_value();
}

frds_status frds_model_exact(const frds_model* model, double x1, double x2, double t,
                             double* out) {
  return guard([&] {
    require(model && out, "null pointer");
    require(static_cast<bool>(model->m.exact), "model has no closed-form solution");
    *out = model->m.exact(x1, x2, t);
  });
}

const char* frds_model_catalog(void) {
  static const std::string catalog = frds::describe_models();
  return catalog.c_str();
}

/* ---- time integration ---- */

frds_status frds_run(const frds_model* model, const double* u0, const double* v0, double tau,
                     double kappa, double alpha, double t_end, const double* snapshot_times,
                     int snapshot_count, frds_snapshot_cb cb, void* user, int record_divergence,
                     frds_result** out) {
  return guard([&] {
    require(model && u0 && out, "null pointer");
    require(snapshot_count >= 0, "negative snapshot count");
    require(snapshot_count == 0 || snapshot_times != nullptr,
            "snapshot_times is null but snapshot_count is positive");
    const frds::GridSpec& grid = model->m.grid;
    std::vector<frds::PhysicalField> ic;
    ic.push_back(nodal_field(grid, u0));
    if (model->m.arity == 2) {
      require(v0 != nullptr, "two-component model needs v0");
      ic.push_back(nodal_field(grid, v0));
    }

    frds::StepperConfig cfg;
    cfg.tau = tau;
    cfg.kappa = kappa;
    cfg.alpha = alpha;
    cfg.t_end = t_end;
    cfg.snapshot_times.assign(snapshot_times, snapshot_times + snapshot_count);

    frds::SnapshotSink sink = nullptr;
    if (cb) {
      const int arity = model->m.arity;
      const int n = grid.n();
      sink = [cb, user, arity, n](double t, const std::vector<frds::PhysicalField>& fields) {
        const double* u = fields[0].values.data();
        const double* v = arity == 2 ? fields[1].values.data() : nullptr;
        cb(user, t, u, v, n);
      };
    }

    frds::RunSummary summary =
        frds::run(model->m, ic, cfg, sink,
                  record_divergence ? frds::DivergencePolicy::record : frds::DivergencePolicy::raise);
    *out = new frds_result{std::move(summary), model->m.arity, grid.n(), std::string()};
  });
}

void frds_result_destroy(frds_result* result) { delete result; }

int frds_result_arity(const frds_result* result) { return result ? result->arity : 0; }

int frds_result_n(const frds_result* result) { return result ? result->n : 0; }

long long frds_result_steps(const frds_result* result) {
  return result ? result->summary.steps_completed : -1;
}

int frds_result_diverged(const frds_result* result) {
  return result && result->summary.diverged ? 1 : 0;
}

long long frds_result_diverged_step(const frds_result* result) {
  return result ? result->summary.diverged_step : -1;
}

double frds_result_wall_seconds(const frds_result* result) {
  return result ? result->summary.wall_seconds : nan_value();
}

frds_status frds_result_stats(const frds_result* result, int comp, double* min_value,
                              double* max_value, double* max_abs) {
  return guard([&] {
    require(result != nullptr, "null result");
    require(comp >= 0 && comp < static_cast<int>(result->summary.stats.size()),
            "component index out of range");
    const frds::ComponentStats& s = result->summary.stats[static_cast<size_t>(comp)];
    if (min_value) *min_value = s.min_value;
    if (max_value) *max_value = s.max_value;
    if (max_abs) *max_abs = s.max_abs;
  });
}

frds_status frds_result_field(const frds_result* result, int comp, double* out) {
  return guard([&] {
    require(result && out, "null pointer");
    require(comp >= 0 && comp < static_cast<int>(result->summary.final_fields.size()),
            "component index out of range");
    const auto& values = result->summary.final_fields[static_cast<size_t>(comp)].values;
    std::memcpy(out, values.data(), values.size() * sizeof(double));
  });
}

const char* frds_result_report(const frds_result* result) {
  if (!result || result->report.empty()) return nullptr;
  return result->report.c_str();
}

/* ---- stability ---- */

frds_status frds_stability_roots(double mu, double rho, double kappa, double tau,
                                 double* root_plus_re, double* root_plus_im,
                                 double* root_minus_re, double* root_minus_im,
                                 double* max_modulus) {
  return guard([&] {
    frds::StabilityReport r = frds::is_stable({mu, rho, kappa, tau});
    if (root_plus_re) *root_plus_re = r.root_plus.real();
    if (root_plus_im) *root_plus_im = r.root_plus.imag();
    if (root_minus_re) *root_minus_re = r.root_minus.real();
    if (root_minus_im) *root_minus_im = r.root_minus.imag();
    if (max_modulus) *max_modulus = r.max_modulus;
  });
}

frds_status frds_stability_verdict(double mu, double rho, double kappa, double tau, double tol,
                                   int* verdict) {
  return guard([&] {
    require(verdict != nullptr, "null output pointer");
    *verdict = static_cast<int>(frds::is_stable({mu, rho, kappa, tau}, tol).verdict);
  });
}

frds_status frds_kappa_threshold(double mu, double rho, double tau, double* out) {
  return guard([&] {
    require(out != nullptr, "null output pointer");
    *out = frds::kappa_threshold(mu, rho, tau);
  });
}

frds_status frds_unconditional_kappa(double rho, double* out) {
  return guard([&] {
    require(out != nullptr, "null output pointer");
    *out = frds::unconditional_kappa(rho);
  });
}

frds_status frds_practical_kappa(double rho, double tau_star, double* out) {
  return guard([&] {
    require(out != nullptr, "null output pointer");
    *out = frds::practical_kappa(rho, tau_star);
  });
}

frds_status frds_stability_map(const double* mu_values, int mu_count, double rho, double tau_min,
                               double tau_max, int tau_count, double kappa_min, double kappa_max,
                               int kappa_count, double tol, int* verdicts, double* boundary_kappa) {
  return guard([&] {
    require(mu_values && mu_count > 0, "need at least one mu value");
    require(verdicts != nullptr, "null verdict buffer");
    std::vector<double> mus(mu_values, mu_values + mu_count);
    frds::StabilityMap map = frds::stability_map(mus, rho, tau_min, tau_max, tau_count, kappa_min,
                                                 kappa_max, kappa_count, tol);
    for (size_t i = 0; i < map.verdicts.size(); ++i)
      verdicts[i] = static_cast<int>(map.verdicts[i]);
    if (boundary_kappa)
      std::memcpy(boundary_kappa, map.boundary_kappa.data(),
                  map.boundary_kappa.size() * sizeof(double));
  });
}

/* ---- configuration-driven harness ---- */

frds_status frds_config_load(const char* path, frds_config** out) {
  return guard([&] {
    require(path && out, "null pointer");
    *out = new frds_config{frds::Config::from_file(path), false};
  });
}

frds_status frds_config_parse(const char* text, frds_config** out) {
  return guard([&] {
    require(text && out, "null pointer");
    *out = new frds_config{frds::Config::from_text(text), false};
  });
}

void frds_config_destroy(frds_config* config) { delete config; }

frds_status frds_run_config(frds_config* config, const char* out_dir, frds_result** out) {
  return guard([&] {
    require(out != nullptr, "null output pointer");
    frds::RunProducts products =
        frds::run_from_config(claim(config), out_dir ? std::string(out_dir) : std::string());
    std::string report = frds::summary_text(products);
    *out = new frds_result{std::move(products.summary), products.arity, products.grid.n(),
                           std::move(report)};
  });
}

frds_status frds_temporal_table(frds_config* config, frds_table** out) {
  return guard([&] {
    require(out != nullptr, "null output pointer");
    frds::ErrorTable table = frds::temporal_table_from_config(claim(config));
    std::string csv = frds::table_csv_text(table);
    *out = new frds_table{std::move(table), std::move(csv)};
  });
}

frds_status frds_spatial_table(frds_config* config, frds_table** out) {
  return guard([&] {
    require(out != nullptr, "null output pointer");
    frds::ErrorTable table = frds::spatial_table_from_config(claim(config));
    std::string csv = frds::table_csv_text(table);
    *out = new frds_table{std::move(table), std::move(csv)};
  });
}

void frds_table_destroy(frds_table* table) { delete table; }

int frds_table_rows(const frds_table* table) {
  return table ? static_cast<int>(table->table.rows.size()) : 0;
}

frds_status frds_table_row(const frds_table* table, int row, double* refinement, double* error,
                           double* order, int* status) {
  return guard([&] {
    require(table != nullptr, "null table");
    require(row >= 0 && row < static_cast<int>(table->table.rows.size()), "row out of range");
    const frds::ErrorRow& r = table->table.rows[static_cast<size_t>(row)];
    if (refinement) *refinement = r.refinement;
    if (error) *error = r.error.value_or(nan_value());
    if (order) *order = r.order.value_or(nan_value());
    if (status) *status = r.diverged ? 1 : (r.saturated ? 2 : 0);
  });
}

const char* frds_table_csv(const frds_table* table) { return table ? table->csv.c_str() : nullptr; }

frds_status frds_table_write_csv(const frds_table* table, const char* path) {
  return guard([&] {
    require(table && path, "null pointer");
    frds::write_table_csv(table->table, path);
  });
}

/* ---- snapshots and images ---- */

frds_status frds_snapshot_write(const char* path, const frds_grid* grid, double time,
                                const double* values) {
  return guard([&] {
    require(path && grid, "null pointer");
    frds::write_snapshot(path, nodal_field(grid->g, values), time);
  });
}

frds_status frds_snapshot_read(const char* path, frds_grid** grid_out, double* time_out,
                               double** values_out) {
  return guard([&] {
    require(path && grid_out && values_out, "null pointer");
    frds::Snapshot snap = frds::read_snapshot(path);
    const size_t count = snap.field.values.size();
    double* buffer = new double[count];
    std::memcpy(buffer, snap.field.values.data(), count * sizeof(double));
    *grid_out = new frds_grid{snap.field.grid};
    *values_out = buffer;
    if (time_out) *time_out = snap.time;
  });
}

void frds_buffer_free(double* buffer) { delete[] buffer; }

frds_status frds_heatmap_write(const char* path, const frds_grid* grid, const double* values,
                               int use_range, double lo, double hi, int use_crop, double x1_lo,
                               double x1_hi, double x2_lo, double x2_hi) {
  return guard([&] {
    require(path && grid, "null pointer");
    std::optional<std::pair<double, double>> range;
    if (use_range) range = {lo, hi};
    std::optional<frds::CropRect> crop;
    if (use_crop) crop = frds::CropRect{x1_lo, x1_hi, x2_lo, x2_hi};
    frds::write_heatmap(path, nodal_field(grid->g, values), range, crop);
  });
}

}  // extern "C"
