#include "study.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "transform.h"

namespace frds {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

RunSummary run_row(const StudyBase& base, const GridSpec& grid, const StepperConfig& cfg) {
  ReactionModel model = base.model(grid);
  std::vector<PhysicalField> u0 = base.ic(grid);
  return run(model, u0, cfg, nullptr, DivergencePolicy::record);
}

}  // namespace

double error_vs_reference(const SpectralField& a, const SpectralField& b) {
  if (!a.grid.same_domain(b.grid))
    throw ConfigError("error_vs_reference: fields live on different domains");
  const GridSpec& coarse = a.grid.n() <= b.grid.n() ? a.grid : b.grid;
  const int m = coarse.n();
  double sum = 0.0;
  for (int k = -m / 2; k < m / 2; ++k) {
    for (int l = -m / 2; l < m / 2; ++l) {
      const cplx d = a.mode(k, l) - b.mode(k, l);
      sum += std::norm(d);
    }
  }
  return std::sqrt(coarse.len1() * coarse.len2() * sum);
}

double error_vs_exact(const SpectralField& a,
                      const std::function<double(double, double, double)>& exact, double t) {
  if (!exact) throw ConfigError("error_vs_exact: no exact solution supplied");
  PhysicalField f(a.grid);
  const int n = a.grid.n();
  for (int j1 = 0; j1 < n; ++j1) {
    const double x1 = a.grid.node_x1(j1);
    for (int j2 = 0; j2 < n; ++j2) f.at(j1, j2) = exact(x1, a.grid.node_x2(j2), t);
  }
  return error_vs_reference(a, forward_transform(f));
}

std::vector<std::optional<double>> convergence_orders(const std::vector<double>& errors,
                                                      const std::vector<double>& ratios) {
  if (errors.size() != ratios.size() + 1)
    throw ConfigError("convergence_orders: need one ratio per consecutive error pair");
  std::vector<std::optional<double>> orders(ratios.size());
  for (size_t i = 0; i < ratios.size(); ++i) {
    const double e0 = errors[i], e1 = errors[i + 1];
    if (!(ratios[i] > 1.0)) throw ConfigError("convergence_orders: ratios must exceed 1");
    if (e0 > 0.0 && e1 > 0.0 && std::isfinite(e0) && std::isfinite(e1))
      orders[i] = std::log(e0 / e1) / std::log(ratios[i]);
  }
  return orders;
}

namespace {

// Shared tail of both studies: attach errors, orders, and status flags.
void fill_rows(ErrorTable& table, const std::vector<double>& refinements,
               const std::vector<std::optional<double>>& errors,
               const std::vector<bool>& diverged, const std::vector<double>& ratios) {
  table.rows.resize(refinements.size());
  for (size_t i = 0; i < refinements.size(); ++i) {
    ErrorRow& row = table.rows[i];
    row.refinement = refinements[i];
    row.diverged = diverged[i];
    row.error = errors[i];
    row.saturated = errors[i].has_value() && *errors[i] == 0.0;
  }
  for (size_t i = 1; i < refinements.size(); ++i) {
    const ErrorRow& prev = table.rows[i - 1];
    ErrorRow& row = table.rows[i];
    if (!prev.error || !row.error || prev.saturated || row.saturated) continue;
    if (*prev.error <= 0.0 || *row.error <= 0.0) continue;
    row.order = std::log(*prev.error / *row.error) / std::log(ratios[i - 1]);
  }
}

SpectralField reference_field(const StudyBase& base, const ReferencePolicy& ref,
                              const std::vector<double>& taus, const std::vector<int>& ns,
                              bool temporal) {
  if (ref.kind == ReferenceKind::exact) {
    // Sampled lazily against each row's own grid; caller handles this case.
    throw ConfigError("reference_field: exact reference has no precomputed field");
  }
  GridSpec grid = base.grid;
  StepperConfig cfg = base.cfg;
  if (temporal) {
    if (ref.kind != ReferenceKind::fine_tau)
      throw ConfigError("temporal_study: reference must be exact or a finer tau");
    if (!(ref.tau_ref > 0.0) || ref.tau_ref > taus.back())
      throw ConfigError("temporal_study: reference tau must be positive and no larger "
                        "than the finest tau in the list");
    cfg.tau = ref.tau_ref;
  } else {
    if (ref.kind != ReferenceKind::fine_n)
      throw ConfigError("spatial_study: reference must be exact or a finer grid");
    if (ref.n_ref < ns.back())
      throw ConfigError("spatial_study: reference grid must be at least as fine as "
                        "the finest grid in the list");
    grid = GridSpec(ref.n_ref, grid.a1(), grid.b1(), grid.a2(), grid.b2());
  }
  RunSummary summary = run_row(base, grid, cfg);
  if (summary.diverged)
    throw ComputationError("study reference run diverged; refine the reference");
  return summary.final_spectral.at(static_cast<size_t>(base.component));
}

}  // namespace

ErrorTable temporal_study(const StudyBase& base, const std::vector<double>& taus,
                          const ReferencePolicy& ref) {
  if (taus.empty()) throw ConfigError("temporal_study: empty tau list");
  for (size_t i = 0; i < taus.size(); ++i) {
    if (!(taus[i] > 0.0)) throw ConfigError("temporal_study: tau values must be positive");
    if (i > 0 && !(taus[i] < taus[i - 1]))
      throw ConfigError("temporal_study: tau list must be strictly decreasing");
  }
  ReactionModel probe = base.model(base.grid);
  if (base.component < 0 || base.component >= probe.arity)
    throw ConfigError("temporal_study: error component out of range");
  const bool use_exact = ref.kind == ReferenceKind::exact;
  if (use_exact && !probe.exact)
    throw ConfigError("temporal_study: model has no closed-form solution to compare against");

  std::optional<SpectralField> ref_field;
  if (!use_exact) ref_field = reference_field(base, ref, taus, {}, true);

  std::vector<std::optional<double>> errors(taus.size());
  std::vector<bool> diverged(taus.size(), false);
  for (size_t i = 0; i < taus.size(); ++i) {
    StepperConfig cfg = base.cfg;
    cfg.tau = taus[i];
    cfg.snapshot_times.clear();
    RunSummary summary = run_row(base, base.grid, cfg);
    if (summary.diverged) {
      diverged[i] = true;
      continue;
    }
    const SpectralField& field = summary.final_spectral.at(static_cast<size_t>(base.component));
    errors[i] = use_exact ? error_vs_exact(field, probe.exact, cfg.t_end)
                          : error_vs_reference(field, *ref_field);
  }

  std::vector<double> ratios(taus.size() > 0 ? taus.size() - 1 : 0);
  for (size_t i = 1; i < taus.size(); ++i) ratios[i - 1] = taus[i - 1] / taus[i];

  ErrorTable table;
  table.kind = "time";
  table.model = probe.name;
  table.alpha = base.cfg.alpha;
  table.kappa = base.cfg.kappa;
  table.t_end = base.cfg.t_end;
  std::vector<double> refinements(taus.begin(), taus.end());
  fill_rows(table, refinements, errors, diverged, ratios);
  return table;
}

ErrorTable spatial_study(const StudyBase& base, const std::vector<int>& ns,
                         const ReferencePolicy& ref) {
  if (ns.empty()) throw ConfigError("spatial_study: empty grid list");
  for (size_t i = 0; i < ns.size(); ++i) {
    if (i > 0 && ns[i] <= ns[i - 1])
      throw ConfigError("spatial_study: grid list must be strictly increasing");
  }
  ReactionModel probe = base.model(base.grid);
  if (base.component < 0 || base.component >= probe.arity)
    throw ConfigError("spatial_study: error component out of range");
  const bool use_exact = ref.kind == ReferenceKind::exact;
  if (use_exact && !probe.exact)
    throw ConfigError("spatial_study: model has no closed-form solution to compare against");

  std::optional<SpectralField> ref_field;
  if (!use_exact) ref_field = reference_field(base, ref, {}, ns, false);

  std::vector<std::optional<double>> errors(ns.size());
  std::vector<bool> diverged(ns.size(), false);
  for (size_t i = 0; i < ns.size(); ++i) {
    GridSpec grid(ns[i], base.grid.a1(), base.grid.b1(), base.grid.a2(), base.grid.b2());
    StepperConfig cfg = base.cfg;
    cfg.snapshot_times.clear();
    RunSummary summary = run_row(base, grid, cfg);
    if (summary.diverged) {
      diverged[i] = true;
      continue;
    }
    const SpectralField& field = summary.final_spectral.at(static_cast<size_t>(base.component));
    errors[i] = use_exact ? error_vs_exact(field, base.model(grid).exact, cfg.t_end)
                          : error_vs_reference(field, *ref_field);
  }

  std::vector<double> ratios(ns.size() > 0 ? ns.size() - 1 : 0);
  for (size_t i = 1; i < ns.size(); ++i)
    ratios[i - 1] = static_cast<double>(ns[i]) / static_cast<double>(ns[i - 1]);

  ErrorTable table;
  table.kind = "space";
  table.model = probe.name;
  table.alpha = base.cfg.alpha;
  table.kappa = base.cfg.kappa;
  table.t_end = base.cfg.t_end;
  std::vector<double> refinements(ns.begin(), ns.end());
  fill_rows(table, refinements, errors, diverged, ratios);
  return table;
}

std::string table_csv_text(const ErrorTable& table) {
  std::string out;
  out += table.kind == "time" ? "tau" : "n";
  out += ",error,order,status\n";
  for (const ErrorRow& row : table.rows) {
    if (table.kind == "time") {
      out += fmt17(row.refinement);
    } else {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%d", static_cast<int>(std::llround(row.refinement)));
      out += buf;
    }
    out += ',';
    if (row.error) out += fmt17(*row.error);
    out += ',';
    if (row.order) out += fmt17(*row.order);
    out += ',';
    out += row.diverged ? "unstable" : (row.saturated ? "saturated" : "ok");
    out += '\n';
  }
  return out;
}

void write_table_csv(const ErrorTable& table, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open for writing: " + path);
  const std::string text = table_csv_text(table);
  f.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!f) throw IoError("write failed: " + path);
}

}  // namespace frds
