#include "stepper.h"

#include <chrono>
#include <cmath>

namespace frds {
namespace {

void require_same_grid(const GridSpec& a, const GridSpec& b, const char* what) {
  if (!(a == b)) throw ConfigError(std::string(what) + ": grid mismatch");
}

void require_model_grid(const ReactionModel& model, const GridSpec& g, const char* what) {
  if (!(model.grid == g)) throw ConfigError(std::string(what) + ": field not on the model grid");
}

std::vector<SpectralField> eval_reaction_hat(const ReactionModel& model,
                                             const std::vector<PhysicalField>& u, double t) {
  const std::size_t count = model.grid.node_count();
  std::vector<double> g1(count), g2(model.arity == 2 ? count : 0);
  const double* uptr = u[0].values.data();
  const double* vptr = model.arity == 2 ? u[1].values.data() : nullptr;
  model.react(uptr, vptr, t, g1.data(), model.arity == 2 ? g2.data() : nullptr, count);
  std::vector<SpectralField> out;
  out.push_back(forward_transform(PhysicalField(model.grid, std::move(g1))));
  if (model.arity == 2) out.push_back(forward_transform(PhysicalField(model.grid, std::move(g2))));
  return out;
}

void check_cfg_for_model(const ReactionModel& model, const StepperConfig& cfg) {
  cfg.validate();
  if (model.pinned_alpha && std::abs(*model.pinned_alpha - cfg.alpha) > 1e-12)
    throw ConfigError("model was built for alpha = " + std::to_string(*model.pinned_alpha) +
                      " but the run requests alpha = " + std::to_string(cfg.alpha));
}

std::vector<std::vector<double>> symbol_tables(const ReactionModel& model,
                                               const StepperConfig& cfg) {
  std::vector<std::vector<double>> mu;
  for (int c = 0; c < model.arity; ++c)
    mu.push_back(multiplier_table(model.grid, cfg.alpha, model.k_diff[c]));
  return mu;
}

// One scheme update for all components. Returns modal and nodal fields plus
// the advanced states; throws DivergedError on blow-up.
struct Advanced {
  std::vector<SpectralField> hat;
  std::vector<PhysicalField> nodal;
  std::vector<StepperState> states;
};

Advanced advance(const std::vector<StepperState>& states, const ReactionModel& model,
                 const StepperConfig& cfg, const std::vector<std::vector<double>>& mu) {
  if (static_cast<int>(states.size()) != model.arity)
    throw ConfigError("step: state count does not match the model");
  for (const auto& st : states) {
    if (st.step_index < 1) throw ConfigError("step: history not initialized");
    require_model_grid(model, st.u_prev1.grid, "step");
  }

  const double tk = cfg.tau * cfg.kappa;
  const double c1 = 2.0 + 2.0 * tk;
  const double c2 = 0.5 + tk;
  const double t_next = states[0].t_prev1 + cfg.tau;
  const std::int64_t idx_next = states[0].step_index + 1;

  Advanced out;
  for (int c = 0; c < model.arity; ++c) {
    const StepperState& st = states[c];
    SpectralField u_n(model.grid);
    for (std::size_t i = 0; i < u_n.coeffs.size(); ++i) {
      const cplx rhs = c1 * st.u_prev1.coeffs[i] - c2 * st.u_prev2.coeffs[i] +
                       cfg.tau * (2.0 * st.g_prev1.coeffs[i] - st.g_prev2.coeffs[i]);
      u_n.coeffs[i] = rhs / (1.5 + cfg.tau * mu[c][i] + tk);
    }
    PhysicalField ph = inverse_transform(u_n);
    if (!ph.finite() || ph.max_abs() > kDivergenceCap)
      throw DivergedError("trajectory diverged at step " + std::to_string(idx_next), idx_next);
    out.hat.push_back(std::move(u_n));
    out.nodal.push_back(std::move(ph));
  }

  std::vector<SpectralField> ghat = eval_reaction_hat(model, out.nodal, t_next);
  for (int c = 0; c < model.arity; ++c) {
    StepperState st(out.hat[c], states[c].u_prev1, std::move(ghat[c]), states[c].g_prev1, t_next,
                    states[c].t_prev1);
    st.step_index = idx_next;
    out.states.push_back(std::move(st));
  }
  return out;
}

}  // namespace

std::int64_t StepperConfig::step_count() const {
  const double raw = t_end / tau;
  const auto k = static_cast<std::int64_t>(std::llround(raw));
  if (k < 1 || std::abs(raw - static_cast<double>(k)) > 1e-9)
    throw ConfigError("t_end/tau must be a positive integer step count");
  return k;
}

void StepperConfig::validate() const {
  if (!(tau > 0.0)) throw ConfigError("tau must be > 0");
  if (kappa < 0.0) throw ConfigError("kappa must be >= 0");
  require_alpha(alpha);
  if (!(t_end > 0.0)) throw ConfigError("t_end must be > 0");
  (void)step_count();
}

SpectralField d1(const SpectralField& u_n, const SpectralField& u_nm1, double tau) {
  require_same_grid(u_n.grid, u_nm1.grid, "d1");
  if (!(tau > 0.0)) throw ConfigError("d1: tau must be > 0");
  SpectralField out(u_n.grid);
  for (std::size_t i = 0; i < out.coeffs.size(); ++i)
    out.coeffs[i] = (u_n.coeffs[i] - u_nm1.coeffs[i]) / tau;
  return out;
}

SpectralField d2(const SpectralField& u_n, const SpectralField& u_nm1, const SpectralField& u_nm2,
                 double tau) {
  require_same_grid(u_n.grid, u_nm1.grid, "d2");
  require_same_grid(u_n.grid, u_nm2.grid, "d2");
  if (!(tau > 0.0)) throw ConfigError("d2: tau must be > 0");
  SpectralField out(u_n.grid);
  for (std::size_t i = 0; i < out.coeffs.size(); ++i)
    out.coeffs[i] =
        (3.0 * u_n.coeffs[i] - 4.0 * u_nm1.coeffs[i] + u_nm2.coeffs[i]) / (2.0 * tau);
  return out;
}

std::vector<SpectralField> first_step(const ReactionModel& model,
                                      const std::vector<SpectralField>& u0,
                                      const StepperConfig& cfg) {
  check_cfg_for_model(model, cfg);
  if (static_cast<int>(u0.size()) != model.arity)
    throw ConfigError("first_step: component count does not match the model");
  std::vector<PhysicalField> nodal;
  for (const auto& c : u0) {
    require_model_grid(model, c.grid, "first_step");
    nodal.push_back(inverse_transform(c));
  }
  std::vector<SpectralField> ghat = eval_reaction_hat(model, nodal, 0.0);
  std::vector<SpectralField> out;
  for (int c = 0; c < model.arity; ++c) {
    const std::vector<double> mu = multiplier_table(model.grid, cfg.alpha, model.k_diff[c]);
    SpectralField u1(model.grid);
    for (std::size_t i = 0; i < u1.coeffs.size(); ++i)
      u1.coeffs[i] = u0[c].coeffs[i] + cfg.tau * (-mu[i] * u0[c].coeffs[i] + ghat[c].coeffs[i]);
    out.push_back(std::move(u1));
  }
  return out;
}

std::pair<SpectralField, StepperState> step(const StepperState& state, const ReactionModel& model,
                                            const StepperConfig& cfg) {
  if (model.arity != 1) throw ConfigError("step: scalar models only; use step_system");
  check_cfg_for_model(model, cfg);
  Advanced a = advance({state}, model, cfg, symbol_tables(model, cfg));
  return {std::move(a.hat[0]), std::move(a.states[0])};
}

std::pair<std::vector<SpectralField>, std::vector<StepperState>> step_system(
    const std::vector<StepperState>& states, const ReactionModel& model,
    const StepperConfig& cfg) {
  if (model.arity != 2) throw ConfigError("step_system: two-component models only");
  check_cfg_for_model(model, cfg);
  Advanced a = advance(states, model, cfg, symbol_tables(model, cfg));
  return {std::move(a.hat), std::move(a.states)};
}

namespace {

void update_stats(std::vector<ComponentStats>& stats, const std::vector<PhysicalField>& fields,
                  bool first) {
  for (std::size_t c = 0; c < fields.size(); ++c) {
    double lo = fields[c].values[0], hi = fields[c].values[0], big = 0.0;
    for (double v : fields[c].values) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
      big = std::max(big, std::abs(v));
    }
    if (first) {
      stats[c] = {big, lo, hi};
    } else {
      stats[c].max_abs = std::max(stats[c].max_abs, big);
      stats[c].min_value = std::min(stats[c].min_value, lo);
      stats[c].max_value = std::max(stats[c].max_value, hi);
    }
  }
}

}  // namespace

RunSummary run(const ReactionModel& model, const std::vector<PhysicalField>& u0,
               const StepperConfig& cfg, const SnapshotSink& sink, DivergencePolicy policy) {
  const auto t_start = std::chrono::steady_clock::now();
  check_cfg_for_model(model, cfg);
  if (static_cast<int>(u0.size()) != model.arity)
    throw ConfigError("run: component count does not match the model");
  for (const auto& f : u0) {
    require_model_grid(model, f.grid, "run");
    if (!f.finite()) throw ComputationError("run: non-finite initial data");
  }
  const std::int64_t k_steps = cfg.step_count();

  // Each requested snapshot time fires at its nearest step.
  std::vector<std::vector<double>> snaps_at(static_cast<std::size_t>(k_steps) + 1);
  for (double t : cfg.snapshot_times) {
    auto s = static_cast<std::int64_t>(std::llround(t / cfg.tau));
    s = std::max<std::int64_t>(0, std::min(k_steps, s));
    snaps_at[static_cast<std::size_t>(s)].push_back(t);
  }
  auto fire = [&](std::int64_t s, const std::vector<PhysicalField>& fields) {
    if (!sink) return;
    for (std::size_t i = 0; i < snaps_at[static_cast<std::size_t>(s)].size(); ++i)
      sink(static_cast<double>(s) * cfg.tau, fields);
  };

  RunSummary summary;
  summary.stats.resize(model.arity);
  update_stats(summary.stats, u0, true);

  std::vector<SpectralField> u0hat;
  for (const auto& f : u0) u0hat.push_back(forward_transform(f));
  fire(0, u0);

  auto finish = [&](std::vector<SpectralField> spec, std::vector<PhysicalField> nodal,
                    std::int64_t done) {
    summary.final_spectral = std::move(spec);
    summary.final_fields = std::move(nodal);
    summary.steps_completed = done;
    summary.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return summary;
  };

  // First step.
  std::vector<SpectralField> u1hat = first_step(model, u0hat, cfg);
  std::vector<PhysicalField> u1;
  for (int c = 0; c < model.arity; ++c) {
    PhysicalField ph = inverse_transform(u1hat[c]);
    if (!ph.finite() || ph.max_abs() > kDivergenceCap) {
      summary.diverged = true;
      summary.diverged_step = 1;
      if (policy == DivergencePolicy::raise)
        throw DivergedError("trajectory diverged at step 1", 1);
      return finish(std::move(u0hat), u0, 0);
    }
    u1.push_back(std::move(ph));
  }
  update_stats(summary.stats, u1, false);
  fire(1, u1);
  if (k_steps == 1) return finish(std::move(u1hat), std::move(u1), 1);

  std::vector<SpectralField> g0hat = eval_reaction_hat(model, u0, 0.0);
  std::vector<SpectralField> g1hat = eval_reaction_hat(model, u1, cfg.tau);
  std::vector<StepperState> states;
  for (int c = 0; c < model.arity; ++c)
    states.emplace_back(u1hat[c], u0hat[c], g1hat[c], g0hat[c], cfg.tau, 0.0);

  const std::vector<std::vector<double>> mu = symbol_tables(model, cfg);
  std::vector<SpectralField> cur_hat = std::move(u1hat);
  std::vector<PhysicalField> cur = std::move(u1);
  for (std::int64_t s = 2; s <= k_steps; ++s) {
    try {
      Advanced a = advance(states, model, cfg, mu);
      cur_hat = std::move(a.hat);
      cur = std::move(a.nodal);
      states = std::move(a.states);
    } catch (const DivergedError& e) {
      summary.diverged = true;
      summary.diverged_step = e.step();
      if (policy == DivergencePolicy::raise) throw;
      return finish(std::move(cur_hat), std::move(cur), s - 1);
    }
    update_stats(summary.stats, cur, false);
    fire(s, cur);
  }
  return finish(std::move(cur_hat), std::move(cur), k_steps);
}

}  // namespace frds
