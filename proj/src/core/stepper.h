#pragma once

#include <cstdint>
#include <functional>

#include "models.h"
#include "operators.h"

namespace frds {

struct StepperConfig {
  double tau = 0.0;
  double kappa = 0.0;
  double alpha = 2.0;
  double t_end = 0.0;
  std::vector<double> snapshot_times;

  // Number of steps; t_end/tau must be integral within 1e-9.
  std::int64_t step_count() const;
  void validate() const;
};

// Two-level history for one component: modal fields U^{n-1}, U^{n-2} and the
// modal reaction terms at the same levels.
struct StepperState {
  std::int64_t step_index = 1;  // index of u_prev1
  SpectralField u_prev1;
  SpectralField u_prev2;
  SpectralField g_prev1;
  SpectralField g_prev2;
  double t_prev1 = 0.0;
  double t_prev2 = 0.0;

  StepperState(SpectralField u1, SpectralField u2, SpectralField g1, SpectralField g2,
               double t1, double t2)
      : u_prev1(std::move(u1)), u_prev2(std::move(u2)), g_prev1(std::move(g1)),
        g_prev2(std::move(g2)), t_prev1(t1), t_prev2(t2) {}
};

// Backward differences (u^n - u^{n-1})/tau and (3u^n - 4u^{n-1} + u^{n-2})/(2 tau).
SpectralField d1(const SpectralField& u_n, const SpectralField& u_nm1, double tau);
SpectralField d2(const SpectralField& u_n, const SpectralField& u_nm1, const SpectralField& u_nm2,
                 double tau);

// U^1 = U^0 + tau * (-K (-Lap)^(alpha/2) U^0 + G(U^0, 0)), per component.
// The reaction is evaluated pseudo-spectrally on the nodal values of u0.
std::vector<SpectralField> first_step(const ReactionModel& model,
                                      const std::vector<SpectralField>& u0,
                                      const StepperConfig& cfg);

// One update of the scalar scheme: for each mode,
// u^n = [(2+2tk) u^{n-1} - (1/2+tk) u^{n-2} + t (2 g^{n-1} - g^{n-2})] / (3/2 + t mu + t k).
// Returns the new modal field and advances the state (including the new
// reaction term evaluated at the new time level).
std::pair<SpectralField, StepperState> step(const StepperState& state, const ReactionModel& model,
                                            const StepperConfig& cfg);

// Same update applied component-wise to a two-component model; the reactions
// G1, G2 see the full (u, v) pair at each history level.
std::pair<std::vector<SpectralField>, std::vector<StepperState>> step_system(
    const std::vector<StepperState>& states, const ReactionModel& model,
    const StepperConfig& cfg);

struct ComponentStats {
  double max_abs = 0.0;
  double min_value = 0.0;
  double max_value = 0.0;
};

struct RunSummary {
  std::vector<PhysicalField> final_fields;
  std::vector<SpectralField> final_spectral;
  std::vector<ComponentStats> stats;  // running over the whole trajectory
  std::int64_t steps_completed = 0;
  bool diverged = false;
  std::int64_t diverged_step = -1;
  double wall_seconds = 0.0;
};

using SnapshotSink = std::function<void(double t, const std::vector<PhysicalField>& fields)>;

enum class DivergencePolicy { raise, record };

// Full trajectory driver: first step, then steps 2..K. The sink fires at each
// requested snapshot time, mapped to the nearest step. Divergence (non-finite
// values or max-abs above 1e8) raises DivergedError under `raise`, or is
// recorded in the summary under `record` (final fields then hold the last
// finite state).
RunSummary run(const ReactionModel& model, const std::vector<PhysicalField>& u0,
               const StepperConfig& cfg, const SnapshotSink& sink = nullptr,
               DivergencePolicy policy = DivergencePolicy::raise);

constexpr double kDivergenceCap = 1e8;

}  // namespace frds
