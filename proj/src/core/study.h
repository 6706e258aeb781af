#pragma once

#include <optional>

#include "stepper.h"

namespace frds {

// L2 distance between two modal fields over the coarser of the two bands:
// the finer field is truncated to the coarser band (orthogonal projection)
// and the remaining coefficient differences are measured. Symmetric in its
// arguments; grids must share the physical domain.
double error_vs_reference(const SpectralField& a, const SpectralField& b);

// L2 distance between a modal field and a closed-form solution sampled on
// the field's own grid at time t.
double error_vs_exact(const SpectralField& a,
                      const std::function<double(double, double, double)>& exact, double t);

// order_i = log(e_{i-1}/e_i) / log(ratio_i) with ratio_i the refinement
// ratio > 1 between rows i-1 and i (tau_{i-1}/tau_i in time, N_i/N_{i-1} in
// space). Rows with zero error are saturated and carry no order.
struct ErrorRow {
  double refinement = 0.0;  // tau (time studies) or n (space studies)
  std::optional<double> error;
  std::optional<double> order;
  bool diverged = false;
  bool saturated = false;
};

struct ErrorTable {
  std::string kind;  // "time" | "space"
  std::string model;
  double alpha = 0.0;
  double kappa = 0.0;
  double t_end = 0.0;
  std::vector<ErrorRow> rows;
};

std::vector<std::optional<double>> convergence_orders(const std::vector<double>& errors,
                                                      const std::vector<double>& ratios);

// A study re-creates its model and initial data per grid, so both are
// supplied as factories over the grid.
struct StudyBase {
  std::function<ReactionModel(const GridSpec&)> model;
  std::function<std::vector<PhysicalField>(const GridSpec&)> ic;
  GridSpec grid{4, 0.0, 1.0, 0.0, 1.0};
  StepperConfig cfg;  // tau is overridden per row in temporal studies
  int component = 0;  // component the error is measured on
};

enum class ReferenceKind { exact, fine_tau, fine_n };

struct ReferencePolicy {
  ReferenceKind kind = ReferenceKind::exact;
  double tau_ref = 0.0;  // fine_tau
  int n_ref = 0;         // fine_n
};

// Runs the base configuration at each tau (strictly decreasing list) and
// tabulates errors at t_end against the reference. Diverged rows are marked
// unstable and excluded from order computation.
ErrorTable temporal_study(const StudyBase& base, const std::vector<double>& taus,
                          const ReferencePolicy& ref);

// Runs the base configuration at each n (strictly increasing list) against a
// fine-grid or exact reference.
ErrorTable spatial_study(const StudyBase& base, const std::vector<int>& ns,
                         const ReferencePolicy& ref);

// CSV with 17-significant-digit numbers; columns:
// <tau|n>,error,order,status with status in {ok, unstable, saturated}.
void write_table_csv(const ErrorTable& table, const std::string& path);
std::string table_csv_text(const ErrorTable& table);

}  // namespace frds
