#include "runner.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "models.h"

namespace frds {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

std::string fmt_label(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

enum class Mode { run, time_study, space_study };

struct ProblemSetup {
  StudyBase base{nullptr, nullptr, GridSpec(4, 0.0, 1.0, 0.0, 1.0), StepperConfig{}, 0};
  std::string model_name;
  int arity = 1;
};

struct DomainDefaults {
  double a1, b1, a2, b2;
};

DomainDefaults default_domain(const std::string& model) {
  if (model == "gray_scott") return {-1.0, 2.0, -1.0, 2.0};
  if (model == "fitzhugh_nagumo") return {0.0, 2.5, 0.0, 2.5};
  const double two_pi = 2.0 * GridSpec::pi();
  return {0.0, two_pi, 0.0, two_pi};  // manufactured, allen_cahn
}

std::string default_ic(const std::string& model) {
  if (model == "manufactured") return "exact_t0";
  if (model == "allen_cahn") return "ac_case1";
  if (model == "gray_scott") return "gs_disc";
  return "fhn_strips";
}

ProblemSetup setup_from_config(Config& cfg, Mode mode) {
  ProblemSetup setup;
  setup.model_name = cfg.get_string("model");
  const std::string& name = setup.model_name;
  if (name != "manufactured" && name != "allen_cahn" && name != "gray_scott" &&
      name != "fitzhugh_nagumo")
    throw ConfigError("unknown model '" + name + "'");
  setup.arity = (name == "gray_scott" || name == "fitzhugh_nagumo") ? 2 : 1;

  const DomainDefaults dom = default_domain(name);
  const int n = cfg.get_int("n");
  setup.base.grid = GridSpec(n, cfg.get_double("x1_min", dom.a1), cfg.get_double("x1_max", dom.b1),
                             cfg.get_double("x2_min", dom.a2), cfg.get_double("x2_max", dom.b2));

  StepperConfig& sc = setup.base.cfg;
  sc.alpha = cfg.get_double("alpha");
  sc.kappa = cfg.get_double("kappa", 0.0);
  sc.t_end = cfg.get_double("t_end");
  if (mode != Mode::time_study) sc.tau = cfg.get_double("tau");

  // Model factory over the grid so grid-refinement studies can rebuild it.
  std::function<ReactionModel(const GridSpec&)> factory;
  if (name == "manufactured") {
    const double k_alpha = cfg.get_double("k_alpha", 1.0);
    const double alpha = sc.alpha;
    factory = [k_alpha, alpha](const GridSpec& g) { return manufactured(k_alpha, alpha, g); };
  } else if (name == "allen_cahn") {
    const double k_alpha = cfg.get_double("k_alpha");
    factory = [k_alpha](const GridSpec& g) { return allen_cahn(k_alpha, g); };
  } else if (name == "gray_scott") {
    const double k_u = cfg.get_double("k_u");
    const double k_v = cfg.get_double("k_v");
    const double f_rate = cfg.get_double("f_rate");
    const double lambda_rate = cfg.get_double("lambda_rate");
    factory = [k_u, k_v, f_rate, lambda_rate](const GridSpec& g) {
      return gray_scott(k_u, k_v, f_rate, lambda_rate, g);
    };
  } else {
    const double k_u = cfg.get_double("k_u");
    const double mu = cfg.get_double("mu", 0.1);
    const double epsilon = cfg.get_double("epsilon", 0.01);
    const double beta = cfg.get_double("beta", 0.5);
    const double gamma = cfg.get_double("gamma", 1.0);
    const double delta = cfg.get_double("delta", 0.0);
    factory = [k_u, mu, epsilon, beta, gamma, delta](const GridSpec& g) {
      return fitzhugh_nagumo(k_u, mu, epsilon, beta, gamma, delta, g);
    };
  }
  setup.base.model = factory;

  const std::string ic_name = cfg.get_string("ic", default_ic(name));
  if (ic_name == "exact_t0") {
    if (setup.arity != 1)
      throw ConfigError("ic exact_t0 needs a single-component model with an exact solution");
    setup.base.ic = [factory](const GridSpec& g) {
      ReactionModel m = factory(g);
      if (!m.exact) throw ConfigError("ic exact_t0: model has no exact solution");
      PhysicalField f(g);
      for (int j1 = 0; j1 < g.n(); ++j1)
        for (int j2 = 0; j2 < g.n(); ++j2)
          f.at(j1, j2) = m.exact(g.node_x1(j1), g.node_x2(j2), 0.0);
      return std::vector<PhysicalField>{std::move(f)};
    };
  } else {
    const int arity = setup.arity;
    setup.base.ic = [ic_name, arity](const GridSpec& g) {
      std::vector<PhysicalField> fields = initial_condition(ic_name, g);
      if (static_cast<int>(fields.size()) != arity)
        throw ConfigError("ic '" + ic_name + "' has the wrong number of components");
      return fields;
    };
  }

  if (mode != Mode::run) setup.base.component = cfg.get_int("error_component", 0);
  return setup;
}

ReferencePolicy reference_from_config(Config& cfg, Mode mode) {
  const std::string ref = cfg.get_string("reference");
  ReferencePolicy policy;
  if (ref == "exact") {
    policy.kind = ReferenceKind::exact;
  } else if (mode == Mode::time_study) {
    policy.kind = ReferenceKind::fine_tau;
    policy.tau_ref = Config::parse_number(ref);
  } else {
    policy.kind = ReferenceKind::fine_n;
    const double v = Config::parse_number(ref);
    policy.n_ref = static_cast<int>(std::nearbyint(v));
    if (std::abs(v - policy.n_ref) > 1e-9)
      throw ConfigError("reference grid size must be an integer");
  }
  return policy;
}

}  // namespace

RunProducts run_from_config(Config& cfg, const std::string& out_dir) {
  ProblemSetup setup = setup_from_config(cfg, Mode::run);

  if (cfg.has("snapshot_times"))
    setup.base.cfg.snapshot_times = cfg.get_double_list("snapshot_times");

  const std::string heatmap = cfg.get_string("heatmap", "none");
  if (heatmap != "none" && heatmap != "final" && heatmap != "snapshots")
    throw ConfigError("heatmap must be none, final, or snapshots");

  std::optional<std::pair<double, double>> range;
  const bool has_min = cfg.has("heatmap_min"), has_max = cfg.has("heatmap_max");
  if (has_min != has_max) throw ConfigError("heatmap_min and heatmap_max go together");
  if (has_min) range = {cfg.get_double("heatmap_min"), cfg.get_double("heatmap_max")};

  std::optional<CropRect> crop;
  if (cfg.has("heatmap_crop")) {
    std::vector<double> c = cfg.get_double_list("heatmap_crop");
    if (c.size() != 4)
      throw ConfigError("heatmap_crop needs four values: x1_lo x1_hi x2_lo x2_hi");
    crop = CropRect{c[0], c[1], c[2], c[3]};
  }
  cfg.reject_unknown();

  RunProducts products;
  products.arity = setup.arity;
  products.model_name = setup.model_name;
  products.grid = setup.base.grid;
  products.cfg = setup.base.cfg;

  const bool emit = !out_dir.empty();
  if (emit) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create output directory: " + out_dir);
  }

  static const char* comp_names[2] = {"u", "v"};
  SnapshotSink sink = nullptr;
  if (emit) {
    RunProducts* prod = &products;
    const std::string dir = out_dir;
    const bool maps = heatmap == "snapshots";
    sink = [prod, dir, maps, range, crop](double t, const std::vector<PhysicalField>& fields) {
      for (size_t c = 0; c < fields.size(); ++c) {
        const std::string stem = std::string(comp_names[c]) + "_t" + fmt_label(t);
        const std::string snap_path = dir + "/snap_" + stem + ".bin";
        write_snapshot(snap_path, fields[c], t);
        prod->files.push_back(snap_path);
        if (maps) {
          const std::string map_path = dir + "/map_" + stem + ".pgm";
          write_heatmap(map_path, fields[c], range, crop);
          prod->files.push_back(map_path);
        }
      }
    };
  }

  ReactionModel model = setup.base.model(setup.base.grid);
  std::vector<PhysicalField> u0 = setup.base.ic(setup.base.grid);
  products.summary = run(model, u0, setup.base.cfg, sink, DivergencePolicy::record);

  if (emit) {
    const double t_final = products.summary.steps_completed * setup.base.cfg.tau;
    for (size_t c = 0; c < products.summary.final_fields.size(); ++c) {
      const std::string snap_path = out_dir + "/final_" + comp_names[c] + ".bin";
      write_snapshot(snap_path, products.summary.final_fields[c], t_final);
      products.files.push_back(snap_path);
      if (heatmap == "final" || heatmap == "snapshots") {
        const std::string map_path = out_dir + "/map_" + comp_names[c] + "_final.pgm";
        write_heatmap(map_path, products.summary.final_fields[c], range, crop);
        products.files.push_back(map_path);
      }
    }
    const std::string summary_path = out_dir + "/summary.txt";
    std::ofstream f(summary_path, std::ios::binary);
    if (!f) throw IoError("cannot open for writing: " + summary_path);
    const std::string text = summary_text(products);
    f.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!f) throw IoError("write failed: " + summary_path);
    products.files.push_back(summary_path);
  }
  return products;
}

ErrorTable temporal_table_from_config(Config& cfg) {
  ProblemSetup setup = setup_from_config(cfg, Mode::time_study);
  std::vector<double> taus = cfg.get_double_list("tau_list");
  ReferencePolicy policy = reference_from_config(cfg, Mode::time_study);
  cfg.reject_unknown();
  return temporal_study(setup.base, taus, policy);
}

ErrorTable spatial_table_from_config(Config& cfg) {
  ProblemSetup setup = setup_from_config(cfg, Mode::space_study);
  std::vector<int> ns = cfg.get_int_list("n_list");
  ReferencePolicy policy = reference_from_config(cfg, Mode::space_study);
  cfg.reject_unknown();
  return spatial_study(setup.base, ns, policy);
}

std::string summary_text(const RunProducts& products) {
  const RunSummary& s = products.summary;
  std::string out;
  out += "model = " + products.model_name + "\n";
  out += "n = " + std::to_string(products.grid.n()) + "\n";
  out += "alpha = " + fmt17(products.cfg.alpha) + "\n";
  out += "kappa = " + fmt17(products.cfg.kappa) + "\n";
  out += "tau = " + fmt17(products.cfg.tau) + "\n";
  out += "t_end = " + fmt17(products.cfg.t_end) + "\n";
  out += "steps_completed = " + std::to_string(s.steps_completed) + "\n";
  out += "diverged = " + std::string(s.diverged ? "1" : "0") + "\n";
  if (s.diverged) out += "diverged_step = " + std::to_string(s.diverged_step) + "\n";
  static const char* comp_names[2] = {"u", "v"};
  for (size_t c = 0; c < s.stats.size(); ++c) {
    out += std::string("component ") + comp_names[c] + ": min = " + fmt17(s.stats[c].min_value) +
           " max = " + fmt17(s.stats[c].max_value) + " max_abs = " + fmt17(s.stats[c].max_abs) +
           "\n";
  }
  return out;
}

}  // namespace frds
